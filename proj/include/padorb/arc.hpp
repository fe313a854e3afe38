#pragma once

// Mahler-basis interpolation of orbits n |-> G^{s n}(beta) of a tuple
// G congruent to the identity, zero counting for one-variable series, and
// vanishing of polynomials along an interpolated orbit.

#include <cstdint>
#include <span>
#include <vector>

#include "padorb/poly.hpp"
#include "padorb/series.hpp"

namespace padorb {

using PadicVector = std::vector<PadicScalar>;

struct MahlerArc {
    RingParams params;
    PadicVector base;
    /// coefficients[j] is the j-th Mahler coefficient (a g-vector), j = 0..J.
    std::vector<PadicVector> coefficients;
    std::uint64_t stride = 1;
    /// Least j0 with coefficients[j] = 0 for every j0 <= j <= J.
    int vanishing_index = 0;

    int length() const { return static_cast<int>(coefficients.size()) - 1; }
};

/// Number of Mahler coefficients used when the caller has no preference: (p - 1) N + 8.
int default_mahler_length(const RingParams& params);

/// Forward differences a_j = sum_i (-1)^{j-i} C(j, i) v_i of a sequence of vectors.
std::vector<PadicVector> forward_differences(std::span<const PadicVector> values);

/// Mahler coefficients of n |-> (G^stride)^n(beta) for n = 0..J.  Throws
/// DomainError unless G^stride is congruent to the identity mod pi^t with t
/// the analyticity threshold, or when the coefficients have not vanished by J.
MahlerArc mahler_coefficients(const SeriesTuple& G, std::span<const PadicScalar> beta, int J,
                              std::uint64_t stride = 1);

/// sum_j a_j C(n, j).
PadicVector evaluate_arc(const MahlerArc& arc, std::uint64_t n);

/// Largest index attaining the minimal valuation among the coefficients;
/// bounds the number of zeros in o of the series sum c_i x^i.
int strassmann_bound(std::span<const PadicScalar> coeffs);

/// True iff every Mahler coefficient of n |-> H(arc(n)) vanishes at working
/// precision.  Coefficients are checked up to max(J, deg H * (j0 - 1)).
bool vanishing_propagation(const IntPoly& H, const MahlerArc& arc);

}  // namespace padorb
