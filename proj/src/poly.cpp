#include "padorb/poly.hpp"

#include <algorithm>
#include <sstream>

#include "padorb/modular.hpp"

namespace padorb {

PadicScalar to_scalar(const mpz_class& n, const RingParams& params) {
    mpz_class r;
    mpz_class m;
    mpz_set_ui(m.get_mpz_t(), params.modulus());
    mpz_fdiv_r(r.get_mpz_t(), n.get_mpz_t(), m.get_mpz_t());
    return PadicScalar(static_cast<std::int64_t>(r.get_ui()), params);
}

IntPoly IntPoly::constant(int g, const mpz_class& c) {
    IntPoly p(g);
    p.add_term(c, Exponents(static_cast<std::size_t>(g), 0));
    return p;
}

IntPoly IntPoly::variable(int g, int i) {
    IntPoly p(g);
    Exponents e(static_cast<std::size_t>(g), 0);
    e.at(static_cast<std::size_t>(i)) = 1;
    p.add_term(1, std::move(e));
    return p;
}

int IntPoly::degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (auto x : e) s += static_cast<int>(x);
        d = std::max(d, s);
    }
    return d;
}

void IntPoly::add_term(const mpz_class& c, Exponents exps) {
    if (exps.size() != static_cast<std::size_t>(g_))
        throw ParameterError("exponent vector has " + std::to_string(exps.size()) + " entries, expected " +
                             std::to_string(g_));
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(std::move(exps), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

IntPoly IntPoly::operator+(const IntPoly& b) const {
    if (b.g_ != g_) throw ParameterError("polynomials in different numbers of variables");
    IntPoly r = *this;
    for (const auto& [e, c] : b.terms_) r.add_term(c, e);
    return r;
}

IntPoly IntPoly::operator-(const IntPoly& b) const { return *this + b.scaled(-1); }

IntPoly IntPoly::operator*(const IntPoly& b) const {
    if (b.g_ != g_) throw ParameterError("polynomials in different numbers of variables");
    IntPoly r(g_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : b.terms_) {
            Exponents e(ea);
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            r.add_term(ca * cb, std::move(e));
        }
    return r;
}

IntPoly IntPoly::scaled(const mpz_class& k) const {
    IntPoly r(g_);
    if (k == 0) return r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, c * k);
    return r;
}

IntPoly IntPoly::derivative(int var) const {
    IntPoly r(g_);
    const auto v = static_cast<std::size_t>(var);
    for (const auto& [e, c] : terms_) {
        if (e.at(v) == 0) continue;
        Exponents d(e);
        d[v]--;
        r.add_term(c * e[v], std::move(d));
    }
    return r;
}

IntPoly IntPoly::substitute(std::span<const IntPoly> values) const {
    if (values.size() != static_cast<std::size_t>(g_)) throw ParameterError("wrong number of substitutions");
    const int h = values.empty() ? 1 : values[0].g_;
    // powers[i][k] = values[i]^k, extended on demand.
    std::vector<std::vector<IntPoly>> powers(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) powers[i].push_back(constant(h, 1));
    IntPoly result(h);
    for (const auto& [e, c] : terms_) {
        IntPoly term = constant(h, c);
        for (std::size_t i = 0; i < e.size(); ++i) {
            auto& pw = powers[i];
            while (pw.size() <= e[i]) pw.push_back(pw.back() * values[i]);
            if (e[i]) term = term * pw[e[i]];
        }
        result = result + term;
    }
    return result;
}

mpz_class IntPoly::evaluate(std::span<const mpz_class> x) const {
    if (x.size() != static_cast<std::size_t>(g_)) throw ParameterError("point has the wrong dimension");
    mpz_class acc = 0;
    mpz_class t;
    mpz_class pw;
    for (const auto& [e, c] : terms_) {
        t = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (!e[i]) continue;
            mpz_pow_ui(pw.get_mpz_t(), x[i].get_mpz_t(), e[i]);
            t *= pw;
        }
        acc += t;
    }
    return acc;
}

std::uint64_t IntPoly::evaluate_mod(std::span<const std::uint64_t> x, std::uint64_t modulus) const {
    if (x.size() != static_cast<std::size_t>(g_)) throw ParameterError("point has the wrong dimension");
    mpz_class m;
    mpz_set_ui(m.get_mpz_t(), modulus);
    std::uint64_t acc = 0;
    mpz_class r;
    for (const auto& [e, c] : terms_) {
        mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
        std::uint64_t t = r.get_ui();
        for (std::size_t i = 0; i < e.size() && t; ++i)
            if (e[i]) t = mul_mod(t, pow_mod(x[i], e[i], modulus), modulus);
        acc = add_mod(acc, t, modulus);
    }
    return acc;
}

PadicScalar IntPoly::evaluate(std::span<const PadicScalar> x, const RingParams& params) const {
    if (x.size() != static_cast<std::size_t>(g_)) throw ParameterError("point has the wrong dimension");
    PadicScalar acc = PadicScalar::zero(params);
    for (const auto& [e, c] : terms_) {
        PadicScalar t = to_scalar(c, params);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i]) t *= x[i].pow(e[i]);
        acc += t;
    }
    return acc;
}

IntPoly IntPoly::divided_exactly(const mpz_class& d) const {
    IntPoly r(g_);
    for (const auto& [e, c] : terms_) {
        if (!mpz_divisible_p(c.get_mpz_t(), d.get_mpz_t()))
            throw InternalError("inexact division of " + c.get_str() + " by " + d.get_str());
        mpz_class q;
        mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
        r.terms_.emplace(e, q);
    }
    return r;
}

std::string IntPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.get_str();
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i]) os << "*x" << i << (e[i] > 1 ? "^" + std::to_string(e[i]) : "");
    }
    return os.str();
}

SeriesTuple to_series(std::span<const IntPoly> polys, const RingParams& params, int D) {
    const int g = static_cast<int>(polys.size());
    SeriesTuple F(params, g, D);
    for (int i = 0; i < g; ++i) {
        if (polys[static_cast<std::size_t>(i)].variables() != g)
            throw ParameterError("polynomial map is not a self-map of affine g-space");
        for (const auto& [e, c] : polys[static_cast<std::size_t>(i)].terms()) {
            Monomial m;
            for (std::size_t k = 0; k < e.size(); ++k) {
                if (e[k] > 255) throw ParameterError("exponent too large for a series");
                m.exps[k] = static_cast<std::uint8_t>(e[k]);
            }
            F.add(i, m, to_scalar(c, params));
        }
    }
    return F;
}

}  // namespace padorb
