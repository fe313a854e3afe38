#include "padorb/elliptic.hpp"

#include <string>

#include "padorb/errors.hpp"
#include "padorb/modular.hpp"
#include "padorb/ring.hpp"

namespace padorb {

EllipticCurve::EllipticCurve(mpz_class a, mpz_class b) : a_(std::move(a)), b_(std::move(b)) {
    if (discriminant() == 0) throw DomainError("singular curve: discriminant is zero");
}

mpz_class EllipticCurve::discriminant() const { return -16 * (4 * a_ * a_ * a_ + 27 * b_ * b_); }

bool EllipticCurve::contains(const EcPoint& P) const {
    if (P.infinity) return true;
    return P.y * P.y == P.x * P.x * P.x + mpq_class(a_) * P.x + mpq_class(b_);
}

EcPoint EllipticCurve::negate(const EcPoint& P) const {
    if (P.infinity) return P;
    return EcPoint::affine(P.x, -P.y);
}

EcPoint EllipticCurve::add(const EcPoint& P, const EcPoint& Q) const {
    if (P.infinity) return Q;
    if (Q.infinity) return P;
    mpq_class lambda;
    if (P.x == Q.x) {
        if (P.y != Q.y || P.y == 0) return EcPoint::at_infinity();
        lambda = (3 * P.x * P.x + mpq_class(a_)) / (2 * P.y);
    } else {
        lambda = (Q.y - P.y) / (Q.x - P.x);
    }
    mpq_class x3 = lambda * lambda - P.x - Q.x;
    mpq_class y3 = lambda * (P.x - x3) - P.y;
    return EcPoint::affine(std::move(x3), std::move(y3));
}

EcPoint EllipticCurve::multiply(const EcPoint& P, std::uint64_t n) const {
    EcPoint result = EcPoint::at_infinity();
    EcPoint base = P;
    while (n > 0) {
        if (n & 1) result = add(result, base);
        base = add(base, base);
        n >>= 1;
    }
    return result;
}

bool EllipticCurve::has_good_reduction(int p) const {
    return mpz_divisible_ui_p(discriminant().get_mpz_t(), static_cast<unsigned long>(p)) == 0;
}

std::optional<std::uint64_t> ec_order_of_point(const EllipticCurve& E, const EcPoint& P, std::uint64_t cutoff) {
    if (!E.contains(P)) throw DomainError("point is not on the curve");
    EcPoint cur = P;
    for (std::uint64_t n = 1; n <= cutoff; ++n) {
        if (cur.infinity) return n;
        cur = E.add(cur, P);
    }
    return std::nullopt;
}

std::uint64_t ec_count_mod_p(const EllipticCurve& E, int p) {
    if (p < 3 || !is_prime(static_cast<std::uint64_t>(p))) throw ParameterError("p must be an odd prime");
    if (!E.has_good_reduction(p)) throw DomainError("bad reduction at p = " + std::to_string(p));
    const auto up = static_cast<std::uint64_t>(p);
    auto red = [&](const mpz_class& c) {
        mpz_class r;
        mpz_fdiv_r_ui(r.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(p));
        return r.get_ui();
    };
    const std::uint64_t a = red(E.a()), b = red(E.b());
    std::uint64_t count = 1;
    for (std::uint64_t x = 0; x < up; ++x) {
        const std::uint64_t rhs = add_mod(add_mod(mul_mod(mul_mod(x, x, up), x, up), mul_mod(a, x, up), up), b, up);
        for (std::uint64_t y = 0; y < up; ++y)
            if (mul_mod(y, y, up) == rhs) ++count;
    }
    return count;
}

}  // namespace padorb
