#include "padorb/bounds.hpp"

#include <string>

#include "padorb/errors.hpp"
#include "padorb/ring.hpp"

namespace padorb {

namespace {

void require_odd_prime(int p) {
    if (p < 3 || !is_prime(static_cast<std::uint64_t>(p)))
        throw ParameterError("p must be an odd prime, got " + std::to_string(p));
}

bool is_positive_power(const mpz_class& q, int p) {
    if (q < p) return false;
    mpz_class x = q;
    while (x % p == 0) x /= p;
    return x == 1;
}

}  // namespace

void BoundInput::validate() const {
    require_odd_prime(p);
    if (e < 1) throw ParameterError("ramification index must be positive");
    if (g < 1) throw ParameterError("dimension must be positive");
    if (!is_positive_power(q, p))
        throw ParameterError("q must be a positive power of p, got " + q.get_str());
    if (n_points < 1) throw ParameterError("point count must be positive");
}

int r_exponent(int p, int e) {
    require_odd_prime(p);
    if (e < 1) throw ParameterError("ramification index must be positive");
    int r = 0;
    mpz_class lhs = p - 1;
    while (lhs <= e) {
        lhs *= 2;
        ++r;
    }
    return r;
}

mpz_class gl_order(int g, const mpz_class& q) {
    if (g < 1) throw ParameterError("dimension must be positive");
    if (q < 2) throw ParameterError("field order must be at least 2");
    mpz_class qg;
    mpz_pow_ui(qg.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(g));
    mpz_class result = 1;
    mpz_class qi = 1;
    for (int i = 0; i < g; ++i) {
        result *= qg - qi;
        qi *= q;
    }
    return result;
}

int congruence_threshold(int p, int e) {
    require_odd_prime(p);
    if (e < 1) throw ParameterError("ramification index must be positive");
    return e / (p - 1) + 1;
}

mpz_class iteration_count(int p, int e, int g, const mpz_class& q) {
    mpz_class pp;
    mpz_ui_pow_ui(pp.get_mpz_t(), static_cast<unsigned long>(p),
                  static_cast<unsigned long>(1 + r_exponent(p, e)));
    return pp * gl_order(g, q);
}

mpz_class orbit_length_bound(const BoundInput& in) {
    in.validate();
    return iteration_count(in.p, in.e, in.g, in.q) * in.n_points;
}

mpz_class torsion_group_bound(const BoundInput& in) {
    in.validate();
    mpz_class binom;
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(in.g + in.e + 1),
                 static_cast<unsigned long>(in.g));
    mpz_class exponent = binom * in.g * (1 + in.e);
    if (!exponent.fits_ulong_p()) throw ParameterError("torsion bound exponent is too large");
    mpz_class qpow;
    mpz_pow_ui(qpow.get_mpz_t(), in.q.get_mpz_t(), exponent.get_ui());
    return qpow * gl_order(in.g, in.q) * in.n_points;
}

BoundReport bound_report(const BoundInput& in) {
    in.validate();
    BoundReport rep;
    rep.r = r_exponent(in.p, in.e);
    rep.t = congruence_threshold(in.p, in.e);
    rep.gl = gl_order(in.g, in.q);
    rep.m = iteration_count(in.p, in.e, in.g, in.q);
    rep.orbit_bound = orbit_length_bound(in);
    rep.torsion_bound = torsion_group_bound(in);
    return rep;
}

}  // namespace padorb
