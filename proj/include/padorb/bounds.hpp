#pragma once

// Closed-form orbit-length and torsion bounds.  All large quantities are
// exact GMP integers.

#include <gmpxx.h>

namespace padorb {

struct BoundInput {
    int p = 3;
    int e = 1;
    int g = 1;
    mpz_class q = 3;        ///< order of the residue field, a power of p
    mpz_class n_points = 1; ///< number of points of the special fiber

    /// Throws ParameterError unless p is an odd prime, q a positive power of p
    /// and every field is positive.
    void validate() const;
};

struct BoundReport {
    int r = 0;
    mpz_class m;
    int t = 1;
    mpz_class gl;
    mpz_class orbit_bound;
    mpz_class torsion_bound;
};

/// Smallest r >= 0 with 2^r (p - 1) > e.
int r_exponent(int p, int e);

/// #GL_g(F_q) = prod_{i<g} (q^g - q^i).
mpz_class gl_order(int g, const mpz_class& q);

/// Least t with t / e > 1 / (p - 1), i.e. floor(e / (p - 1)) + 1.
int congruence_threshold(int p, int e);

/// p^{1+r} * #GL_g(F_q).
mpz_class iteration_count(int p, int e, int g, const mpz_class& q);

/// p^{1+r} * #GL_g(k) * #special-fiber points.
mpz_class orbit_length_bound(const BoundInput& in);

/// q^{g(1+e) binom(g+e+1, g)} * #GL_g(k) * #special-fiber points.
mpz_class torsion_group_bound(const BoundInput& in);

BoundReport bound_report(const BoundInput& in);

}  // namespace padorb
