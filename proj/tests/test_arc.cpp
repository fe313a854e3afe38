#include <doctest.h>

#include "oracles.hpp"
#include "padorb/arc.hpp"
#include "padorb/bounds.hpp"
#include "padorb/errors.hpp"
#include "padorb/sampling.hpp"

using namespace padorb;
using oracle::poly;

namespace {

SeriesTuple affine1(const RingParams& R, int D, std::int64_t c, std::int64_t l) {
    SeriesTuple G(R, 1, D);
    G.set(0, Monomial::of({0}), PadicScalar(c, R));
    G.set(0, Monomial::of({1}), PadicScalar(l, R));
    return G;
}

std::vector<PadicScalar> scalars(const RingParams& R, std::initializer_list<std::int64_t> v) {
    std::vector<PadicScalar> out;
    for (auto x : v) out.emplace_back(x, R);
    return out;
}

struct Instance {
    SeriesTuple G;
    PadicVector beta;
    std::uint64_t stride;
};

// A disk model of a random etale map, with the stride that makes it
// congruent to the identity, and a random base point in the disk.
Instance random_instance(Rng& rng, int p, int g, int N, bool hyperplane) {
    const auto inst = random_etale_map(rng, p, g, N + 1, {.degree = 2, .invariant_hyperplane = hyperplane});
    auto G = disk_linearization(inst.map, inst.center, N, N);
    const auto stride = iteration_count(p, 1, g, p).get_ui();
    PadicVector beta;
    for (int i = 0; i < g; ++i) beta.push_back(random_scalar(rng, G.params()));
    if (hyperplane) beta.back() = PadicScalar::zero(G.params());
    return {std::move(G), std::move(beta), stride};
}

PadicVector iterate_pointwise(const SeriesTuple& G, PadicVector x, std::uint64_t n) {
    for (std::uint64_t i = 0; i < n; ++i) x = G.evaluate(x);
    return x;
}

}  // namespace

TEST_CASE("default Mahler length") {
    CHECK(default_mahler_length(RingParams::make(5, 1, 6)) == 32);
    CHECK(default_mahler_length(RingParams::make(3, 2, 4)) == 16);
}

TEST_CASE("Mahler coefficients of simple maps") {
    const auto R = RingParams::make(5, 1, 6);
    const auto beta = scalars(R, {7});

    auto arc = mahler_coefficients(SeriesTuple::identity(R, 1, 6), beta, 10);
    CHECK(arc.coefficients[0] == beta);
    for (int j = 1; j <= 10; ++j) CHECK(arc.coefficients[static_cast<std::size_t>(j)][0].is_zero());
    CHECK(arc.vanishing_index == 1);

    arc = mahler_coefficients(affine1(R, 6, 5, 1), beta, 10);
    CHECK(arc.coefficients[1][0] == PadicScalar(5, R));
    for (int j = 2; j <= 10; ++j) CHECK(arc.coefficients[static_cast<std::size_t>(j)][0].is_zero());
    CHECK(evaluate_arc(arc, 0) == beta);
    CHECK(evaluate_arc(arc, 7)[0] == PadicScalar(7 + 35, R));

    arc = mahler_coefficients(affine1(R, 6, 0, 6), beta, 10);
    PadicScalar pj = PadicScalar::one(R);
    for (int j = 0; j <= 10; ++j) {
        CHECK(arc.coefficients[static_cast<std::size_t>(j)][0] == beta[0] * pj);
        pj *= PadicScalar(5, R);
    }
    CHECK(arc.vanishing_index == 6);
}

TEST_CASE("Mahler coefficients reject maps far from the identity") {
    const auto R = RingParams::make(5, 1, 4);
    CHECK_THROWS_AS(mahler_coefficients(affine1(R, 4, 1, 1), scalars(R, {0}), 10), DomainError);
    CHECK_THROWS_AS(mahler_coefficients(affine1(R, 4, 0, 2), scalars(R, {1}), 10), DomainError);
    // 2^4 = 1 mod 5, so the stride-4 iterate is admissible.
    CHECK_NOTHROW(mahler_coefficients(affine1(R, 4, 0, 2), scalars(R, {1}), 10, 4));
    // Too few coefficients to reach zero.
    CHECK_THROWS_AS(mahler_coefficients(affine1(R, 4, 0, 6), scalars(R, {1}), 2), DomainError);
    CHECK_THROWS_AS(mahler_coefficients(affine1(R, 4, 5, 1), scalars(R, {1, 2}), 10), ParameterError);
}

TEST_CASE("arc interpolation matches direct iteration") {
    auto rng = make_rng(4);
    for (int trial = 0; trial < 8; ++trial) {
        const int p = trial % 2 ? 3 : 5;
        const int g = 1 + trial / 4;
        const auto in = random_instance(rng, p, g, 6, false);
        const auto arc = mahler_coefficients(in.G, in.beta, 24, in.stride);
        CHECK(arc.vanishing_index <= 24);
        CHECK(arc.coefficients[0] == in.beta);
        // Coefficients decay with the index.
        for (int j = 1; j <= 24; ++j)
            for (const auto& c : arc.coefficients[static_cast<std::size_t>(j)]) CHECK(c.valuation() >= std::min(j, 6));

        PadicVector x = in.beta;
        for (std::uint64_t n = 0; n <= 48; ++n) {
            CHECK(evaluate_arc(arc, n) == x);
            x = iterate_pointwise(in.G, x, in.stride);
        }
    }
}

TEST_CASE("forward differences round trip") {
    auto rng = make_rng(8);
    const auto R = RingParams::make(3, 2, 4);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<PadicVector> values;
        for (int n = 0; n <= 15; ++n) values.push_back({random_scalar(rng, R), random_scalar(rng, R)});
        MahlerArc arc;
        arc.params = R;
        arc.base = values[0];
        arc.coefficients = forward_differences(values);
        for (int n = 0; n <= 15; ++n) CHECK(evaluate_arc(arc, static_cast<std::uint64_t>(n)) == values[static_cast<std::size_t>(n)]);
        std::vector<PadicVector> again;
        for (int n = 0; n <= 15; ++n) again.push_back(evaluate_arc(arc, static_cast<std::uint64_t>(n)));
        CHECK(forward_differences(again) == arc.coefficients);
    }
}

TEST_CASE("strassmann_bound examples") {
    const auto R = RingParams::make(5, 1, 4);
    CHECK(strassmann_bound(scalars(R, {0, -1, 1})) == 2);
    CHECK(strassmann_bound(scalars(R, {5, 1})) == 1);
    CHECK(strassmann_bound(scalars(R, {0, 5, 1, 5, 25})) == 2);
    CHECK(strassmann_bound(scalars(R, {1})) == 0);
    CHECK_THROWS_AS(strassmann_bound(scalars(R, {0, 625})), DomainError);
}

TEST_CASE("strassmann bound dominates lifted simple roots") {
    auto rng = make_rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        const int p = trial % 3 == 0 ? 3 : (trial % 3 == 1 ? 5 : 7);
        const auto R = RingParams::make(p, 1, 5);
        std::vector<long> c(5);
        for (auto& x : c) x = uniform_between(rng, -30, 30);
        // Build some polynomials with many integer roots.
        if (trial % 4 == 0) {
            const long r1 = uniform_between(rng, -6, 6), r2 = uniform_between(rng, -6, 6);
            c = {r1 * r2, -(r1 + r2), 1, 0, 0};
        }
        std::vector<PadicScalar> coeffs;
        for (long x : c) coeffs.emplace_back(x, R);
        if (std::all_of(coeffs.begin(), coeffs.end(), [](const PadicScalar& s) { return s.is_zero(); })) continue;

        // Simple roots mod p lift to distinct roots in Z_p.
        int simple = 0;
        for (long x = 0; x < p; ++x) {
            long f = 0, df = 0, xp = 1;
            for (std::size_t i = 0; i < c.size(); ++i) {
                f += c[i] * xp;
                if (i + 1 < c.size()) df += static_cast<long>(i + 1) * c[i + 1] * xp;
                xp *= x;
            }
            if (f % p == 0 && df % p != 0) ++simple;
        }
        CHECK(simple <= strassmann_bound(coeffs));
    }
}

TEST_CASE("vanishing_propagation examples") {
    const auto R = RingParams::make(5, 1, 4);
    const auto beta = scalars(R, {3});
    const IntPoly H = poly(1, {{1, {1}}, {-3, {0}}});
    CHECK(vanishing_propagation(H, mahler_coefficients(SeriesTuple::identity(R, 1, 4), beta, 8)));
    CHECK_FALSE(vanishing_propagation(H, mahler_coefficients(affine1(R, 4, 5, 1), beta, 8)));
    // p^{N-2} (x - beta) still sees the step of size p; p^{N-1} (x - beta) does not.
    CHECK_FALSE(vanishing_propagation(H.scaled(25), mahler_coefficients(affine1(R, 4, 5, 1), beta, 8)));
    CHECK(vanishing_propagation(H.scaled(125), mahler_coefficients(affine1(R, 4, 5, 1), beta, 8)));
}

TEST_CASE("vanishing needs coefficients past J for high-degree H") {
    // The arc n |-> 5 n with J = J0 = 2.  H(x) = x (x - 5) (x - 10) gives
    // 750 C(n, 3), zero for n <= J but not at n = 3.
    const auto R = RingParams::make(5, 1, 4);
    const auto arc = mahler_coefficients(affine1(R, 4, 5, 1), scalars(R, {0}), 2);
    CHECK(arc.vanishing_index == 2);
    CHECK_FALSE(vanishing_propagation(poly(1, {{1, {3}}, {-15, {2}}, {50, {1}}}), arc));
}

TEST_CASE("vanishing_propagation agrees with direct iteration") {
    auto rng = make_rng(77);
    int vanishing = 0;
    for (int trial = 0; trial < 16; ++trial) {
        const int p = trial % 2 ? 3 : 5;
        const int g = 1 + (trial / 2) % 2;
        const int N = 4;
        const bool hyper = trial % 4 < 2;
        const auto in = random_instance(rng, p, g, N, hyper);
        const auto arc = mahler_coefficients(in.G, in.beta, default_mahler_length(in.G.params()), in.stride);

        IntPoly H(g);
        if (hyper) {
            Exponents e(static_cast<std::size_t>(g), 0);
            e.back() = 1;
            H = poly(g, {{1, e}}) * poly(g, {{1, Exponents(static_cast<std::size_t>(g), 0)}, {static_cast<long>(uniform_below(rng, 9)), Exponents(static_cast<std::size_t>(g), 1)}});
        } else {
            for (int t = 0; t < 3; ++t) {
                Exponents e(static_cast<std::size_t>(g), 0);
                e[uniform_below(rng, static_cast<std::uint64_t>(g))] = static_cast<unsigned>(uniform_below(rng, 3));
                H.add_term(uniform_between(rng, -9, 9), e);
            }
        }
        bool direct = true;
        PadicVector x = in.beta;
        for (int n = 0; n <= 10 * arc.length(); ++n) {
            direct = direct && H.evaluate(x, in.G.params()).is_zero();
            x = iterate_pointwise(in.G, x, in.stride);
        }
        CHECK(vanishing_propagation(H, arc) == direct);
        vanishing += direct;
    }
    CHECK(vanishing >= 8);
}
