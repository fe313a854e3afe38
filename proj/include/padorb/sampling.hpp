#pragma once

// Seeded random instances.  Everything is driven by std::mt19937_64 seeded
// through std::seed_seq, and bounded draws use rejection sampling, so a seed
// produces the same instances on every platform.

#include <cstdint>
#include <random>

#include "padorb/dynamics.hpp"
#include "padorb/modular.hpp"
#include "padorb/series.hpp"

namespace padorb {

using Rng = std::mt19937_64;

Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0);

/// Uniform integer in [0, n).
std::uint64_t uniform_below(Rng& rng, std::uint64_t n);
/// Uniform integer in [lo, hi].
std::int64_t uniform_between(Rng& rng, std::int64_t lo, std::int64_t hi);

PadicScalar random_scalar(Rng& rng, const RingParams& params);
PadicScalar random_unit(Rng& rng, const RingParams& params);
/// pi^v times a random unit (zero when v >= eN).
PadicScalar random_with_valuation(Rng& rng, const RingParams& params, int v);

/// Uniform element of GL_g(F_p).
ModMatrix random_gl_matrix(Rng& rng, int g, std::uint64_t p);

enum class LinearMode {
    /// Any translation; linear part a lift of a uniform element of GL_g(F_p).
    general,
    /// Translation in pi o and linear part congruent to the identity mod pi.
    identity_mod_pi,
};

/// A tuple whose degree-d terms (d >= 2) are present with probability 1/2 and
/// carry coefficients of valuation exactly d - 1.
SeriesTuple random_scaled_tuple(Rng& rng, const RingParams& params, int g, int D, LinearMode mode);

struct EtaleMapOptions {
    int degree = 2;
    /// Make the hyperplane x_{g-1} = 0 invariant and put the center on it.
    bool invariant_hyperplane = false;
};

struct EtaleInstance {
    PolySelfMap map;
    /// Integer point whose residue is fixed by the map.
    IntPoint center;
};

/// A polynomial self-map whose Jacobian is constant and invertible mod p,
/// built from a triangular map plus p-divisible perturbations.
EtaleInstance random_etale_map(Rng& rng, int p, int g, int k, const EtaleMapOptions& options = {});

}  // namespace padorb
