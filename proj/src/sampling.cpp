#include "padorb/sampling.hpp"

#include <array>

namespace padorb {

Rng make_rng(std::uint64_t seed, std::uint64_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    return Rng(seq);
}

std::uint64_t uniform_below(Rng& rng, std::uint64_t n) {
    if (n == 0) throw ParameterError("empty range");
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % n;
}

std::int64_t uniform_between(Rng& rng, std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(uniform_below(rng, static_cast<std::uint64_t>(hi - lo) + 1));
}

PadicScalar random_scalar(Rng& rng, const RingParams& params) {
    std::array<std::uint64_t, kMaxRamification> c{};
    for (int i = 0; i < params.e; ++i) c[static_cast<std::size_t>(i)] = uniform_below(rng, params.modulus());
    return PadicScalar::from_coefficients(std::span(c.data(), static_cast<std::size_t>(params.e)), params);
}

PadicScalar random_unit(Rng& rng, const RingParams& params) {
    const auto p = static_cast<std::uint64_t>(params.p);
    PadicScalar x = random_scalar(rng, params);
    // Force the leading digit to be nonzero mod p.
    const std::uint64_t a0 = x.coefficient(0);
    const std::uint64_t fix = 1 + uniform_below(rng, p - 1);
    return x + PadicScalar(static_cast<std::int64_t>(fix), params) -
           PadicScalar(static_cast<std::int64_t>(a0 % p), params);
}

PadicScalar random_with_valuation(Rng& rng, const RingParams& params, int v) {
    if (v >= params.precision()) return PadicScalar::zero(params);
    return PadicScalar::uniformizer(params).pow(static_cast<std::uint64_t>(v)) * random_unit(rng, params);
}

ModMatrix random_gl_matrix(Rng& rng, int g, std::uint64_t p) {
    ModMatrix m(static_cast<std::size_t>(g), std::vector<std::uint64_t>(static_cast<std::size_t>(g)));
    do {
        for (auto& row : m)
            for (auto& x : row) x = uniform_below(rng, p);
    } while (det_mod_prime(m, p) == 0);
    return m;
}

namespace {

void enumerate_monomials(int g, int d, int var, Monomial& cur, std::vector<Monomial>& out) {
    if (var == g - 1) {
        cur.exps[static_cast<std::size_t>(var)] = static_cast<std::uint8_t>(d);
        out.push_back(cur);
        cur.exps[static_cast<std::size_t>(var)] = 0;
        return;
    }
    for (int k = 0; k <= d; ++k) {
        cur.exps[static_cast<std::size_t>(var)] = static_cast<std::uint8_t>(k);
        enumerate_monomials(g, d - k, var + 1, cur, out);
    }
    cur.exps[static_cast<std::size_t>(var)] = 0;
}

}  // namespace

SeriesTuple random_scaled_tuple(Rng& rng, const RingParams& params, int g, int D, LinearMode mode) {
    SeriesTuple F(params, g, D);
    const PadicScalar pi = PadicScalar::uniformizer(params);
    const auto p = static_cast<std::uint64_t>(params.p);
    const ModMatrix L = mode == LinearMode::general ? random_gl_matrix(rng, g, p) : ModMatrix{};
    for (int i = 0; i < g; ++i) {
        const PadicScalar c = random_scalar(rng, params);
        F.set(i, Monomial{}, mode == LinearMode::general ? c : pi * c);
        for (int j = 0; j < g; ++j) {
            std::int64_t lifted = 0;
            if (mode == LinearMode::general)
                lifted = static_cast<std::int64_t>(L[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
            else
                lifted = i == j ? 1 : 0;
            F.set(i, Monomial::unit(j), PadicScalar(lifted, params) + pi * random_scalar(rng, params));
        }
        for (int d = 2; d <= D; ++d) {
            std::vector<Monomial> ms;
            Monomial cur;
            enumerate_monomials(g, d, 0, cur, ms);
            for (const auto& m : ms)
                if (uniform_below(rng, 2) == 0) F.set(i, m, random_with_valuation(rng, params, d - 1));
        }
    }
    return F;
}

namespace {

// Random polynomial in the given variables with total degree in [1, degree]
// and coefficients in [-3, 3].
IntPoly random_poly(Rng& rng, int g, const std::vector<int>& vars, int degree) {
    IntPoly f(g);
    if (vars.empty()) return f;
    const int terms = 1 + static_cast<int>(uniform_below(rng, 3));
    for (int t = 0; t < terms; ++t) {
        Exponents e(static_cast<std::size_t>(g), 0);
        const int d = 1 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(degree)));
        for (int k = 0; k < d; ++k) e[static_cast<std::size_t>(vars[uniform_below(rng, vars.size())])]++;
        f.add_term(uniform_between(rng, -3, 3), std::move(e));
    }
    return f;
}

}  // namespace

EtaleInstance random_etale_map(Rng& rng, int p, int g, int k, const EtaleMapOptions& options) {
    const auto up = static_cast<std::uint64_t>(p);
    const mpz_class P = p;
    std::vector<int> all(static_cast<std::size_t>(g));
    for (int i = 0; i < g; ++i) all[static_cast<std::size_t>(i)] = i;

    IntPoint center;
    for (int i = 0; i < g; ++i) center.emplace_back(uniform_between(rng, -5, 5));
    if (options.invariant_hyperplane) center.back() = 0;

    std::vector<IntPoly> polys;
    for (int i = 0; i < g; ++i) {
        const long unit = static_cast<long>(1 + uniform_below(rng, up - 1)) + p * uniform_between(rng, -1, 1);
        IntPoly f = IntPoly::variable(g, i).scaled(unit);
        if (options.invariant_hyperplane && i == g - 1) {
            // x_{g-1} (unit + p w(x)) keeps x_{g-1} = 0 invariant.
            f = f + IntPoly::variable(g, i) * random_poly(rng, g, all, options.degree - 1 > 0 ? options.degree - 1 : 1).scaled(P);
            polys.push_back(f);
            continue;
        }
        std::vector<int> later;
        for (int j = i + 1; j < g; ++j) later.push_back(j);
        f = f + random_poly(rng, g, later, options.degree);
        f = f + random_poly(rng, g, all, options.degree).scaled(P);
        polys.push_back(f);
    }

    // Constants making the residue of the center fixed.
    const ResiduePoint a = reduce_point(center, up);
    for (int i = 0; i < g; ++i) {
        if (options.invariant_hyperplane && i == g - 1) continue;
        auto& f = polys[static_cast<std::size_t>(i)];
        const std::uint64_t image = f.evaluate_mod(a, up);
        const std::uint64_t shift = sub_mod(a[static_cast<std::size_t>(i)], image, up);
        f = f + IntPoly::constant(g, mpz_class(static_cast<unsigned long>(shift)) + P * uniform_between(rng, -2, 2));
    }
    return {PolySelfMap(std::move(polys), std::nullopt, p, k), std::move(center)};
}

}  // namespace padorb
