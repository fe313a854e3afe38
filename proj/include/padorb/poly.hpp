#pragma once

// Sparse multivariate polynomials with exact integer coefficients.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "padorb/ring.hpp"
#include "padorb/series.hpp"

namespace padorb {

using Exponents = std::vector<unsigned>;

/// Image of an arbitrary integer in o / p^N.
PadicScalar to_scalar(const mpz_class& n, const RingParams& params);

class IntPoly {
public:
    explicit IntPoly(int g = 1) : g_(g) {}

    static IntPoly constant(int g, const mpz_class& c);
    static IntPoly variable(int g, int i);

    int variables() const { return g_; }
    const std::map<Exponents, mpz_class>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const;

    void add_term(const mpz_class& c, Exponents exps);

    IntPoly operator+(const IntPoly& b) const;
    IntPoly operator-(const IntPoly& b) const;
    IntPoly operator*(const IntPoly& b) const;
    IntPoly scaled(const mpz_class& c) const;

    IntPoly derivative(int var) const;

    /// Substitutes polynomials (all in the same number of variables) for the variables.
    IntPoly substitute(std::span<const IntPoly> values) const;

    mpz_class evaluate(std::span<const mpz_class> x) const;
    std::uint64_t evaluate_mod(std::span<const std::uint64_t> x, std::uint64_t modulus) const;
    PadicScalar evaluate(std::span<const PadicScalar> x, const RingParams& params) const;

    /// Exact division of every coefficient; throws InternalError if inexact.
    IntPoly divided_exactly(const mpz_class& d) const;

    friend bool operator==(const IntPoly&, const IntPoly&) = default;

    std::string to_string() const;

private:
    int g_;
    std::map<Exponents, mpz_class> terms_;  // nonzero coefficients only
};

/// Reduces a polynomial map with integer coefficients to a SeriesTuple over o / p^N.
SeriesTuple to_series(std::span<const IntPoly> polys, const RingParams& params, int D);

}  // namespace padorb
