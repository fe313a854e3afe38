#pragma once

// Finite-precision arithmetic in o = Z_p[pi]/(pi^e - p), truncated at p^N.
//
// An element is stored as a_0 + a_1 pi + ... + a_{e-1} pi^{e-1} with every
// a_i reduced mod p^N, so the ring has p^{eN} elements and pi-adic
// precision eN.  For e = 1 this is plain Z/p^N.

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>

#include "padorb/errors.hpp"

namespace padorb {

/// Largest supported ramification index for arithmetic.
inline constexpr int kMaxRamification = 8;

bool is_prime(std::uint64_t n);

/// Exact p^k, throwing ParameterError on 64-bit overflow.
std::uint64_t checked_pow(std::uint64_t p, unsigned k);

struct RingParams {
    int p = 3;
    int e = 1;
    int N = 1;

    /// Throws ParameterError unless p is an odd prime, 1 <= e <= kMaxRamification,
    /// N >= 1 and p^N < 2^62.
    static RingParams make(int p, int e, int N);

    std::uint64_t modulus() const { return modulus_; }
    /// pi-adic precision: valuations are capped here.
    int precision() const { return e * N; }

    friend bool operator==(const RingParams& a, const RingParams& b) {
        return a.p == b.p && a.e == b.e && a.N == b.N;
    }

private:
    std::uint64_t modulus_ = 3;
};

class PadicScalar {
public:
    PadicScalar() = default;

    /// Image of the integer n.
    PadicScalar(std::int64_t n, const RingParams& params);

    static PadicScalar zero(const RingParams& params) { return PadicScalar(0, params); }
    static PadicScalar one(const RingParams& params) { return PadicScalar(1, params); }
    static PadicScalar uniformizer(const RingParams& params);
    /// Element with the given pi-adic digits a_0..a_{e-1} (reduced mod p^N).
    static PadicScalar from_coefficients(std::span<const std::uint64_t> coeffs,
                                         const RingParams& params);

    const RingParams& params() const { return params_; }
    std::uint64_t coefficient(int i) const { return coeffs_[static_cast<std::size_t>(i)]; }

    PadicScalar operator+(const PadicScalar& b) const;
    PadicScalar operator-(const PadicScalar& b) const;
    PadicScalar operator-() const;
    PadicScalar operator*(const PadicScalar& b) const;
    PadicScalar& operator+=(const PadicScalar& b);
    PadicScalar& operator-=(const PadicScalar& b);
    PadicScalar& operator*=(const PadicScalar& b);

    /// Multiplication by an ordinary integer.
    PadicScalar scaled(std::int64_t k) const;
    PadicScalar pow(std::uint64_t k) const;

    bool is_zero() const;
    /// pi-adic valuation; zero has valuation eN.
    int valuation() const;
    /// Image in the residue field F_p.
    std::uint64_t residue() const { return coeffs_[0] % static_cast<std::uint64_t>(params_.p); }
    /// Canonical representative of the class modulo pi^t (t is clamped to [0, eN]).
    PadicScalar reduced_mod_pi(int t) const;

    /// Inverse of a unit; throws NonUnitError when valuation() > 0.
    PadicScalar inverse() const;

    friend bool operator==(const PadicScalar& a, const PadicScalar& b) {
        return a.params_ == b.params_ && a.coeffs_ == b.coeffs_;
    }

    std::string to_string() const;

private:
    void require_same_ring(const PadicScalar& b) const;

    RingParams params_{};
    std::array<std::uint64_t, kMaxRamification> coeffs_{};
};

std::ostream& operator<<(std::ostream& os, const PadicScalar& x);

inline PadicScalar make_scalar(std::int64_t n, const RingParams& params) { return {n, params}; }

}  // namespace padorb
