#include <doctest.h>

#include "padorb/ring.hpp"
#include "padorb/sampling.hpp"

using namespace padorb;

TEST_CASE("make_scalar embeds integers") {
    const auto R = RingParams::make(5, 1, 3);
    CHECK(make_scalar(7, R).coefficient(0) == 7);
    CHECK(make_scalar(-1, R).coefficient(0) == 124);

    const auto zero = make_scalar(0, R);
    CHECK(zero.is_zero());
    CHECK(zero.valuation() == 3);
    CHECK(make_scalar(25, R).valuation() == 2);
}

TEST_CASE("invalid ring parameters are rejected") {
    CHECK_THROWS_AS(RingParams::make(2, 1, 3), ParameterError);
    CHECK_THROWS_AS(RingParams::make(9, 1, 3), ParameterError);
    CHECK_THROWS_AS(RingParams::make(5, 0, 3), ParameterError);
    CHECK_THROWS_AS(RingParams::make(5, 1, 0), ParameterError);
    CHECK_THROWS_AS(RingParams::make(5, kMaxRamification + 1, 3), ParameterError);
    CHECK_THROWS_AS(RingParams::make(3, 1, 60), ParameterError);
}

TEST_CASE("mixing rings is a parameter error") {
    const auto a = make_scalar(1, RingParams::make(5, 1, 3));
    const auto b = make_scalar(1, RingParams::make(5, 1, 4));
    CHECK_THROWS_AS(a + b, ParameterError);
    CHECK_THROWS_AS(a * b, ParameterError);
}

TEST_CASE("the uniformizer squares to p when e = 2") {
    const auto R = RingParams::make(3, 2, 4);
    const auto pi = PadicScalar::uniformizer(R);
    CHECK(pi * pi == make_scalar(3, R));
    CHECK(pi.valuation() == 1);
    CHECK(make_scalar(3, R).valuation() == 2);
    CHECK(pi.residue() == 0);
    // pi^(eN) = p^N = 0
    CHECK(pi.pow(8).is_zero());
    CHECK(pi.pow(7).valuation() == 7);
}

TEST_CASE("basic arithmetic") {
    const auto R = RingParams::make(5, 1, 2);
    CHECK(make_scalar(2, R) * make_scalar(3, R) == make_scalar(6, R));
    const auto x = make_scalar(17, R);
    CHECK((x + (-x)).is_zero());
    CHECK((x - x).is_zero());
    CHECK(make_scalar(7, RingParams::make(5, 1, 3)).residue() == 2);
    CHECK(make_scalar(0, R).residue() == 0);
}

TEST_CASE("unit inversion") {
    const auto R = RingParams::make(5, 1, 2);
    CHECK(make_scalar(1, R).inverse() == make_scalar(1, R));
    CHECK(make_scalar(2, R).inverse() == make_scalar(13, R));
    CHECK_THROWS_AS(make_scalar(5, R).inverse(), NonUnitError);
    CHECK_THROWS_AS(PadicScalar::uniformizer(RingParams::make(3, 2, 3)).inverse(), NonUnitError);
}

TEST_CASE("reduction mod pi^t keeps the low pi-adic digits") {
    const auto R = RingParams::make(3, 2, 3);
    const auto pi = PadicScalar::uniformizer(R);
    // 1 + pi + 3 + 3 pi = 1 + pi + pi^2 + pi^3
    const auto x = make_scalar(4, R) + pi.scaled(4);
    CHECK(x.reduced_mod_pi(1) == make_scalar(1, R));
    CHECK(x.reduced_mod_pi(2) == make_scalar(1, R) + pi);
    CHECK(x.reduced_mod_pi(3) == make_scalar(4, R) + pi);
    CHECK(x.reduced_mod_pi(4) == x);
    CHECK((x - x.reduced_mod_pi(3)).valuation() >= 3);
}

TEST_CASE("ring axioms and valuation laws on sampled elements") {
    for (int p : {3, 5, 7}) {
        for (int e : {1, 2, 3}) {
            const auto R = RingParams::make(p, e, 4);
            Rng rng = make_rng(1234, static_cast<std::uint64_t>(p * 10 + e));
            for (int trial = 0; trial < 60; ++trial) {
                const auto a = random_with_valuation(rng, R, static_cast<int>(uniform_below(rng, 5)));
                const auto b = random_with_valuation(rng, R, static_cast<int>(uniform_below(rng, 5)));
                const auto c = random_scalar(rng, R);
                CHECK((a + b) + c == a + (b + c));
                CHECK(a * (b + c) == a * b + a * c);
                CHECK((a * b) * c == a * (b * c));
                CHECK(a * b == b * a);
                CHECK((a * b).valuation() == std::min(a.valuation() + b.valuation(), R.precision()));
                CHECK((a * b).residue() == (a.residue() * b.residue()) % static_cast<std::uint64_t>(p));
            }
        }
    }
}

TEST_CASE("inverse recovers one on 100 sampled units") {
    const auto R = RingParams::make(5, 3, 5);
    Rng rng = make_rng(99);
    for (int i = 0; i < 100; ++i) {
        const auto u = random_unit(rng, R);
        CHECK(u.valuation() == 0);
        CHECK(u * u.inverse() == PadicScalar::one(R));
    }
}
