#include "padorb/ring.hpp"

#include "padorb/modular.hpp"

#include <ostream>
#include <sstream>

namespace padorb {

namespace {

std::uint64_t reduce_signed(std::int64_t n, std::uint64_t m) {
    auto r = static_cast<std::int64_t>(static_cast<__int128>(n) % static_cast<__int128>(m));
    return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(m) : r);
}

// Largest k <= cap with p^k | a, treating a = 0 as divisible to the cap.
int p_valuation(std::uint64_t a, std::uint64_t p, int cap) {
    if (a == 0) return cap;
    int k = 0;
    while (a % p == 0 && k < cap) {
        a /= p;
        ++k;
    }
    return k;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::uint64_t checked_pow(std::uint64_t p, unsigned k) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < k; ++i) {
        if (r > UINT64_MAX / p) throw ParameterError("integer power overflows 64 bits");
        r *= p;
    }
    return r;
}

RingParams RingParams::make(int p, int e, int N) {
    if (p < 3 || !is_prime(static_cast<std::uint64_t>(p)))
        throw ParameterError("p must be an odd prime, got " + std::to_string(p));
    if (e < 1 || e > kMaxRamification)
        throw ParameterError("ramification index must lie in [1, " +
                             std::to_string(kMaxRamification) + "], got " + std::to_string(e));
    if (N < 1) throw ParameterError("precision N must be positive");
    std::uint64_t m = checked_pow(static_cast<std::uint64_t>(p), static_cast<unsigned>(N));
    if (m >= (std::uint64_t{1} << 62)) throw ParameterError("p^N must be below 2^62");
    RingParams r;
    r.p = p;
    r.e = e;
    r.N = N;
    r.modulus_ = m;
    return r;
}

PadicScalar::PadicScalar(std::int64_t n, const RingParams& params) : params_(params) {
    coeffs_[0] = reduce_signed(n, params.modulus());
}

PadicScalar PadicScalar::uniformizer(const RingParams& params) {
    PadicScalar x(0, params);
    if (params.e == 1)
        x.coeffs_[0] = static_cast<std::uint64_t>(params.p) % params.modulus();
    else
        x.coeffs_[1] = 1;
    return x;
}

PadicScalar PadicScalar::from_coefficients(std::span<const std::uint64_t> coeffs,
                                           const RingParams& params) {
    if (coeffs.size() > static_cast<std::size_t>(params.e))
        throw ParameterError("more pi-adic digits than the ramification index");
    PadicScalar x(0, params);
    for (std::size_t i = 0; i < coeffs.size(); ++i) x.coeffs_[i] = coeffs[i] % params.modulus();
    return x;
}

void PadicScalar::require_same_ring(const PadicScalar& b) const {
    if (!(params_ == b.params_)) throw ParameterError("scalars belong to different rings");
}

PadicScalar PadicScalar::operator+(const PadicScalar& b) const {
    PadicScalar r = *this;
    r += b;
    return r;
}

PadicScalar PadicScalar::operator-(const PadicScalar& b) const {
    PadicScalar r = *this;
    r -= b;
    return r;
}

PadicScalar PadicScalar::operator-() const {
    PadicScalar r = *this;
    const std::uint64_t m = params_.modulus();
    for (int i = 0; i < params_.e; ++i) r.coeffs_[i] = coeffs_[i] == 0 ? 0 : m - coeffs_[i];
    return r;
}

PadicScalar& PadicScalar::operator+=(const PadicScalar& b) {
    require_same_ring(b);
    const std::uint64_t m = params_.modulus();
    for (int i = 0; i < params_.e; ++i) coeffs_[i] = add_mod(coeffs_[i], b.coeffs_[i], m);
    return *this;
}

PadicScalar& PadicScalar::operator-=(const PadicScalar& b) {
    require_same_ring(b);
    const std::uint64_t m = params_.modulus();
    for (int i = 0; i < params_.e; ++i)
        coeffs_[i] = add_mod(coeffs_[i], b.coeffs_[i] == 0 ? 0 : m - b.coeffs_[i], m);
    return *this;
}

PadicScalar PadicScalar::operator*(const PadicScalar& b) const {
    require_same_ring(b);
    const int e = params_.e;
    const std::uint64_t m = params_.modulus();
    PadicScalar r(0, params_);
    if (e == 1) {
        r.coeffs_[0] = mul_mod(coeffs_[0], b.coeffs_[0], m);
        return r;
    }
    // Product as a polynomial in pi of degree <= 2e-2, then pi^{e+j} = p pi^j.
    std::array<std::uint64_t, 2 * kMaxRamification> prod{};
    for (int i = 0; i < e; ++i) {
        if (coeffs_[i] == 0) continue;
        for (int j = 0; j < e; ++j)
            prod[i + j] = add_mod(prod[i + j], mul_mod(coeffs_[i], b.coeffs_[j], m), m);
    }
    const std::uint64_t p = static_cast<std::uint64_t>(params_.p);
    for (int i = 0; i < e; ++i) r.coeffs_[i] = add_mod(prod[i], mul_mod(prod[i + e], p, m), m);
    return r;
}

PadicScalar& PadicScalar::operator*=(const PadicScalar& b) { return *this = *this * b; }

PadicScalar PadicScalar::scaled(std::int64_t k) const {
    return *this * PadicScalar(k, params_);
}

PadicScalar PadicScalar::pow(std::uint64_t k) const {
    PadicScalar result = one(params_);
    PadicScalar base = *this;
    while (k > 0) {
        if (k & 1) result *= base;
        base *= base;
        k >>= 1;
    }
    return result;
}

bool PadicScalar::is_zero() const {
    for (int i = 0; i < params_.e; ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

int PadicScalar::valuation() const {
    const int e = params_.e;
    const int cap = params_.precision();
    int v = cap;
    // Digits a_i pi^i have valuations e*v_p(a_i) + i, pairwise distinct mod e.
    for (int i = 0; i < e; ++i) {
        int vi = e * p_valuation(coeffs_[i], static_cast<std::uint64_t>(params_.p), params_.N) + i;
        if (vi < v) v = vi;
    }
    return v;
}

PadicScalar PadicScalar::reduced_mod_pi(int t) const {
    const int e = params_.e;
    if (t >= params_.precision()) return *this;
    PadicScalar r(0, params_);
    if (t <= 0) return r;
    const std::uint64_t p = static_cast<std::uint64_t>(params_.p);
    for (int i = 0; i < e && i < t; ++i) {
        // p^k pi^i survives iff e*k + i < t.
        unsigned keep = static_cast<unsigned>((t - i + e - 1) / e);
        r.coeffs_[i] = coeffs_[i] % checked_pow(p, keep);
    }
    return r;
}

PadicScalar PadicScalar::inverse() const {
    if (valuation() > 0) throw NonUnitError("cannot invert a non-unit: " + to_string());
    const std::uint64_t m = params_.modulus();
    const std::uint64_t p = static_cast<std::uint64_t>(params_.p);
    // Seed with the inverse of a_0 mod p, then Newton: b <- b(2 - ab).
    std::uint64_t a0 = coeffs_[0] % p;
    std::uint64_t seed = 1;
    while (mul_mod(a0, seed, p) != 1) ++seed;
    PadicScalar b(static_cast<std::int64_t>(seed % m), params_);
    const PadicScalar two(2, params_);
    int correct = 1;
    while (correct < params_.precision()) {
        b = b * (two - *this * b);
        correct *= 2;
    }
    return b;
}

std::string PadicScalar::to_string() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const PadicScalar& x) {
    const int e = x.params().e;
    if (e == 1) return os << x.coefficient(0);
    os << '[';
    for (int i = 0; i < e; ++i) os << (i ? ", " : "") << x.coefficient(i);
    return os << ']';
}

}  // namespace padorb
