#pragma once

// Short Weierstrass curves y^2 = x^3 + a x + b over Q with the exact
// chord-tangent group law.

#include <gmpxx.h>

#include <cstdint>
#include <optional>

namespace padorb {

struct EcPoint {
    bool infinity = true;
    mpq_class x;
    mpq_class y;

    static EcPoint at_infinity() { return {}; }
    static EcPoint affine(mpq_class x, mpq_class y) { return {false, std::move(x), std::move(y)}; }

    friend bool operator==(const EcPoint& a, const EcPoint& b) {
        if (a.infinity || b.infinity) return a.infinity == b.infinity;
        return a.x == b.x && a.y == b.y;
    }
};

class EllipticCurve {
public:
    /// Throws DomainError for a singular curve.
    EllipticCurve(mpz_class a, mpz_class b);

    const mpz_class& a() const { return a_; }
    const mpz_class& b() const { return b_; }
    /// -16 (4 a^3 + 27 b^2).
    mpz_class discriminant() const;

    bool contains(const EcPoint& P) const;
    EcPoint negate(const EcPoint& P) const;
    EcPoint add(const EcPoint& P, const EcPoint& Q) const;
    EcPoint multiply(const EcPoint& P, std::uint64_t n) const;

    bool has_good_reduction(int p) const;

private:
    mpz_class a_;
    mpz_class b_;
};

/// Smallest n <= cutoff with nP = O, or nullopt.  Throws DomainError when P
/// is not on the curve.
std::optional<std::uint64_t> ec_order_of_point(const EllipticCurve& E, const EcPoint& P,
                                               std::uint64_t cutoff);

/// #E(F_p) including the point at infinity.  Throws DomainError at bad reduction.
std::uint64_t ec_count_mod_p(const EllipticCurve& E, int p);

}  // namespace padorb
