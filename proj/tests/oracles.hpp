#pragma once

// Independent reference computations used only by the tests.

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "padorb/dynamics.hpp"
#include "padorb/poly.hpp"
#include "padorb/ring.hpp"
#include "padorb/series.hpp"

namespace oracle {

/// Finite field of order q in {2, 3, 4, 5, 7}: prime fields by modular
/// arithmetic, F_4 = F_2[w]/(w^2 + w + 1) with elements b0 + b1 w encoded as b0 + 2 b1.
struct SmallField {
    int q;

    int add(int a, int b) const {
        if (q == 4) return a ^ b;
        return (a + b) % q;
    }
    int mul(int a, int b) const {
        if (q != 4) return (a * b) % q;
        // (a0 + a1 w)(b0 + b1 w) with w^2 = w + 1
        int a0 = a & 1, a1 = a >> 1, b0 = b & 1, b1 = b >> 1;
        int c0 = (a0 & b0) ^ (a1 & b1);
        int c1 = (a0 & b1) ^ (a1 & b0) ^ (a1 & b1);
        return c0 | (c1 << 1);
    }
    int neg(int a) const { return q == 4 ? a : (q - a) % q; }
};

/// Counts invertible g x g matrices over F_q by enumerating every matrix
/// and testing the determinant by cofactor expansion.
inline std::uint64_t count_invertible(int g, int q) {
    SmallField F{q};
    std::function<int(const std::vector<std::vector<int>>&)> det = [&](const std::vector<std::vector<int>>& m) {
        const std::size_t n = m.size();
        if (n == 1) return m[0][0];
        int acc = 0;
        for (std::size_t c = 0; c < n; ++c) {
            std::vector<std::vector<int>> minor;
            for (std::size_t r = 1; r < n; ++r) {
                std::vector<int> row;
                for (std::size_t k = 0; k < n; ++k)
                    if (k != c) row.push_back(m[r][k]);
                minor.push_back(row);
            }
            int term = F.mul(m[0][c], det(minor));
            acc = F.add(acc, c % 2 ? F.neg(term) : term);
        }
        return acc;
    };
    const int cells = g * g;
    std::uint64_t total = 1;
    for (int i = 0; i < cells; ++i) total *= static_cast<std::uint64_t>(q);
    std::uint64_t count = 0;
    for (std::uint64_t code = 0; code < total; ++code) {
        std::vector<std::vector<int>> m(static_cast<std::size_t>(g), std::vector<int>(static_cast<std::size_t>(g)));
        std::uint64_t c = code;
        for (int i = 0; i < cells; ++i) {
            m[static_cast<std::size_t>(i / g)][static_cast<std::size_t>(i % g)] = static_cast<int>(c % static_cast<std::uint64_t>(q));
            c /= static_cast<std::uint64_t>(q);
        }
        if (det(m) != 0) ++count;
    }
    return count;
}

/// Untruncated multivariate polynomials over o/p^N, keyed by exponent vector.
using Poly = std::map<std::vector<int>, padorb::PadicScalar>;

inline void poly_add(Poly& acc, const std::vector<int>& e, const padorb::PadicScalar& c) {
    auto it = acc.find(e);
    if (it == acc.end()) {
        if (!c.is_zero()) acc.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) acc.erase(it);
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            std::vector<int> e(ea);
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            poly_add(out, e, ca * cb);
        }
    return out;
}

inline std::vector<Poly> to_polys(const padorb::SeriesTuple& F) {
    std::vector<Poly> out(static_cast<std::size_t>(F.dimension()));
    for (int i = 0; i < F.dimension(); ++i)
        for (const auto& [m, c] : F.component(i).terms()) {
            std::vector<int> e;
            for (int k = 0; k < F.dimension(); ++k) e.push_back(m.exps[static_cast<std::size_t>(k)]);
            out[static_cast<std::size_t>(i)].emplace(e, c);
        }
    return out;
}

/// Exact polynomial composition F(G) with no truncation at any stage.
inline std::vector<Poly> compose_exact(const std::vector<Poly>& F, const std::vector<Poly>& G,
                                       const padorb::RingParams& R) {
    const std::size_t g = G.size();
    std::vector<Poly> out;
    for (const auto& f : F) {
        Poly acc;
        for (const auto& [e, c] : f) {
            Poly term;
            term.emplace(std::vector<int>(g, 0), c);
            for (std::size_t v = 0; v < g; ++v)
                for (int k = 0; k < e[v]; ++k) term = poly_mul(term, G[v]);
            for (const auto& [te, tc] : term) poly_add(acc, te, tc);
        }
        (void)R;
        out.push_back(acc);
    }
    return out;
}

/// Builds a polynomial from [coefficient, exponents] pairs.
inline padorb::IntPoly poly(int g, std::initializer_list<std::pair<long, padorb::Exponents>> terms) {
    padorb::IntPoly f(g);
    for (const auto& [c, e] : terms) f.add_term(c, e);
    return f;
}

/// One step of the map on residues, through exact integer evaluation.
inline padorb::ResiduePoint step_mod(const std::vector<padorb::IntPoly>& F, const padorb::ResiduePoint& x,
                                     std::uint64_t m) {
    std::vector<mpz_class> big(x.begin(), x.end());
    padorb::ResiduePoint out;
    for (const auto& f : F) {
        mpz_class v = f.evaluate(big);
        v %= mpz_class(static_cast<unsigned long>(m));
        if (v < 0) v += static_cast<unsigned long>(m);
        out.push_back(v.get_ui());
    }
    return out;
}

/// Minimal (tail, cycle) by storing the whole orbit and rescanning it.
inline std::pair<std::uint64_t, std::uint64_t> orbit_rescan(const std::vector<padorb::IntPoly>& F,
                                                            padorb::ResiduePoint x, std::uint64_t m,
                                                            std::uint64_t states) {
    std::vector<padorb::ResiduePoint> seq{x};
    for (std::uint64_t i = 0; i < states; ++i) seq.push_back(step_mod(F, seq.back(), m));
    for (std::uint64_t j = 1; j < seq.size(); ++j)
        for (std::uint64_t i = 0; i < j; ++i)
            if (seq[i] == seq[j]) return {i, j - i};
    return {0, 0};
}

}  // namespace oracle
