#pragma once

// Polynomial self-maps of affine g-space with integer coefficients, and the
// finite computations the orbit bounds are checked against.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "padorb/poly.hpp"
#include "padorb/series.hpp"

namespace padorb {

using IntPoint = std::vector<mpz_class>;
using ResiduePoint = std::vector<std::uint64_t>;

IntPoint int_point(std::initializer_list<long> coords);
/// Coordinates reduced into [0, modulus).
ResiduePoint reduce_point(std::span<const mpz_class> x, std::uint64_t modulus);

class PolySelfMap {
public:
    /// Throws ParameterError unless every polynomial (and inverse component)
    /// lives in g variables, p is an odd prime, k >= 1 and p^k < 2^62.
    PolySelfMap(std::vector<IntPoly> polynomials, std::optional<std::vector<IntPoly>> inverse, int p,
                int k);

    int dimension() const { return static_cast<int>(polys_.size()); }
    int p() const { return p_; }
    int k() const { return k_; }
    std::uint64_t modulus() const;
    const std::vector<IntPoly>& polynomials() const { return polys_; }
    const std::optional<std::vector<IntPoly>>& inverse() const { return inverse_; }

    IntPoint apply(std::span<const mpz_class> x) const;
    ResiduePoint apply_mod(std::span<const std::uint64_t> x, std::uint64_t modulus) const;
    ResiduePoint apply_inverse_mod(std::span<const std::uint64_t> x, std::uint64_t modulus) const;

    /// Same map with a different modulus p^k.
    PolySelfMap with_modulus(int p, int k) const;

private:
    std::vector<IntPoly> polys_;
    std::optional<std::vector<IntPoly>> inverse_;
    int p_;
    int k_;
};

struct EtaleCertificate {
    bool etale = false;
    int p = 0;
    /// A point of F_p^g where the Jacobian determinant vanishes.
    std::optional<ResiduePoint> witness;
};

/// Checks that det(Jacobian) is nonzero mod p at every point of F_p^g.
EtaleCertificate check_etale(const PolySelfMap& map);
EtaleCertificate check_etale(const PolySelfMap& map, int p);

/// Common zeros of the generators in F_p^g (all p^g points when there are none).
std::uint64_t count_special_fiber_points(std::span<const IntPoly> generators, int g, int p);

struct OrbitReport {
    std::uint64_t tail = 0;
    std::uint64_t cycle = 1;
    ResiduePoint start;
    std::uint64_t modulus = 1;
};

/// Minimal tail and cycle of x under the map reduced mod p^k.
OrbitReport orbit_of_point(const PolySelfMap& map, std::span<const mpz_class> x, int k,
                           std::uint64_t max_steps = std::uint64_t{1} << 26);

/// orbit_of_point at k = 1; tail + cycle never exceeds p^g.
OrbitReport residue_cycle(const PolySelfMap& map, std::span<const mpz_class> x);

/// The residue-disk model G(z) = (map(a + p z) - a) / p over Z_p / p^N.
/// The degree cap defaults to max(deg map, N).  Throws DomainError when
/// map(a) is not congruent to a mod p.
SeriesTuple disk_linearization(const PolySelfMap& map, std::span<const mpz_class> a, int N, int D = -1);

/// True iff map^n(x) = x exactly and map^j(x) != x for 0 < j < n.
bool certify_exact_period(const PolySelfMap& map, std::span<const mpz_class> x, std::uint64_t n);

struct PeriodBoundReport {
    std::uint64_t period = 0;
    int p = 0;
    mpz_class bound;
    bool pass = false;
};

/// Compares a certified exact period against p * #GL_g(F_p) * p^g.
/// Throws DomainError if the period is not certified or the map is not etale at p.
PeriodBoundReport verify_period_bound(const PolySelfMap& map, std::span<const mpz_class> x,
                                      std::uint64_t n, int p);

class SubvarietyModel {
public:
    /// Throws DomainError unless every generator vanishes at the sample point.
    SubvarietyModel(std::vector<IntPoly> generators, IntPoint sample);

    const std::vector<IntPoly>& generators() const { return generators_; }
    const IntPoint& sample() const { return sample_; }

private:
    std::vector<IntPoly> generators_;
    IntPoint sample_;
};

struct SubvarietyOrbitReport {
    bool detected = false;
    std::uint64_t tail = 0;
    std::uint64_t cycle = 0;
    std::uint64_t modulus = 1;
    std::uint64_t n_max = 0;
    /// Number of points of the zero set of Y mod p^k.
    std::uint64_t zero_set_size = 0;
};

/// Orbit of the zero set Z_n = map^n(Y) over (Z/p^k)^g, computed through the
/// inverse, with minimal tail and cycle up to n_max.  Throws ParameterError
/// without an inverse, ResourceError when p^{kg} exceeds the budget, and
/// DomainError when the inverse does not invert the map mod p^k.
SubvarietyOrbitReport subvariety_orbit(const PolySelfMap& map, const SubvarietyModel& Y, int k,
                                       std::uint64_t n_max,
                                       std::uint64_t budget = std::uint64_t{1} << 22);

}  // namespace padorb
