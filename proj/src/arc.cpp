#include "padorb/arc.hpp"

#include <algorithm>
#include <string>

#include "padorb/bounds.hpp"

namespace padorb {

namespace {

PadicScalar binomial(std::uint64_t n, std::uint64_t j, const RingParams& params) {
    if (j > n) return PadicScalar::zero(params);
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), n, j);
    return to_scalar(c, params);
}

bool all_zero(const PadicVector& v) {
    return std::all_of(v.begin(), v.end(), [](const PadicScalar& x) { return x.is_zero(); });
}

}  // namespace

int default_mahler_length(const RingParams& params) { return (params.p - 1) * params.N + 8; }

std::vector<PadicVector> forward_differences(std::span<const PadicVector> values) {
    std::vector<PadicVector> row(values.begin(), values.end());
    std::vector<PadicVector> out;
    out.reserve(row.size());
    while (!row.empty()) {
        out.push_back(row.front());
        for (std::size_t i = 0; i + 1 < row.size(); ++i)
            for (std::size_t c = 0; c < row[i].size(); ++c) row[i][c] = row[i + 1][c] - row[i][c];
        row.pop_back();
    }
    return out;
}

MahlerArc mahler_coefficients(const SeriesTuple& G, std::span<const PadicScalar> beta, int J,
                              std::uint64_t stride) {
    if (J < 1) throw ParameterError("need at least two Mahler coefficients");
    if (stride < 1) throw ParameterError("stride must be positive");
    const RingParams& params = G.params();
    if (beta.size() != static_cast<std::size_t>(G.dimension())) throw ParameterError("base point has the wrong dimension");

    const SeriesTuple step = stride == 1 ? G : iterate(G, stride);
    const int t = congruence_threshold(params.p, params.e);
    if (!congruent_mod(step, SeriesTuple::identity(params, G.dimension(), G.degree_cap()), t))
        throw DomainError("the map is not congruent to the identity mod pi^" + std::to_string(t) +
                          "; its orbit need not be analytic");

    std::vector<PadicVector> orbit;
    orbit.reserve(static_cast<std::size_t>(J) + 1);
    orbit.emplace_back(beta.begin(), beta.end());
    for (int i = 1; i <= J; ++i) orbit.push_back(step.evaluate(orbit.back()));

    MahlerArc arc;
    arc.params = params;
    arc.base = orbit.front();
    arc.stride = stride;
    arc.coefficients = forward_differences(orbit);
    int j0 = J + 1;
    while (j0 > 0 && all_zero(arc.coefficients[static_cast<std::size_t>(j0 - 1)])) --j0;
    arc.vanishing_index = j0;
    if (j0 > J)
        throw DomainError("Mahler coefficients have not vanished at precision by J = " + std::to_string(J));
    return arc;
}

PadicVector evaluate_arc(const MahlerArc& arc, std::uint64_t n) {
    PadicVector out(arc.base.size(), PadicScalar::zero(arc.params));
    const std::uint64_t top = std::min<std::uint64_t>(n, static_cast<std::uint64_t>(arc.length()));
    for (std::uint64_t j = 0; j <= top; ++j) {
        const auto& a = arc.coefficients[static_cast<std::size_t>(j)];
        if (all_zero(a)) continue;
        const PadicScalar c = binomial(n, j, arc.params);
        for (std::size_t i = 0; i < out.size(); ++i) out[i] += a[i] * c;
    }
    return out;
}

int strassmann_bound(std::span<const PadicScalar> coeffs) {
    int best = -1;
    int best_val = 0;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i].is_zero()) continue;
        const int v = coeffs[i].valuation();
        if (best < 0 || v <= best_val) {
            best = static_cast<int>(i);
            best_val = v;
        }
    }
    if (best < 0) throw DomainError("the zero series has no Strassmann bound");
    return best;
}

bool vanishing_propagation(const IntPoly& H, const MahlerArc& arc) {
    if (H.variables() != static_cast<int>(arc.base.size()))
        throw ParameterError("polynomial and arc differ in dimension");
    // H(arc(n)) is a combination of C(n, j) with j <= deg H * (j0 - 1), so
    // checking that many differences decides vanishing for every n.
    const int top = std::max(arc.length(), std::max(H.degree(), 0) * std::max(arc.vanishing_index - 1, 0));
    std::vector<PadicVector> values;
    for (int n = 0; n <= top; ++n)
        values.push_back({H.evaluate(evaluate_arc(arc, static_cast<std::uint64_t>(n)), arc.params)});
    const auto diffs = forward_differences(values);
    return std::all_of(diffs.begin(), diffs.end(), all_zero);
}

}  // namespace padorb
