#include <doctest.h>

#include <random>

#include "curve.hpp"
#include "points.hpp"

using namespace ecfac;

namespace {

const Int N5 = 5;  // y^2 = x^3 - 10x

Rat rat(long n, long d = 1) { return Rat(Int(n), Int(d)); }

// x-coordinate of [2]P from the closed duplication formula with rD = N.
Rat duplication_x(const Rat& x, const Int& N) {
    const Rat n(N);
    const Rat x2 = x * x;
    return (x2 * x2 + Rat(4) * n * x2 + Rat(4) * n * n) / (Rat(4) * x2 * x - Rat(8) * n * x);
}

} // namespace

TEST_CASE("identity, inverse and translation on y^2 = x^3 - 10x") {
    const Curve E = Curve::E(N5);
    const CurvePoint P(rat(-1), rat(3));
    REQUIRE(E.contains(P));
    CHECK(E.add(P, CurvePoint::infinity()) == P);
    CHECK(E.add(CurvePoint::infinity(), P) == P);
    CHECK(E.add(P, E.negate(P)).is_infinity());
    const CurvePoint PT = E.add(P, CurvePoint(rat(0), rat(0)));
    CHECK(PT.x() == rat(10));
    CHECK(E.contains(PT));
    CHECK(E.translate_T(P) == PT);
    CHECK_THROWS_AS(E.translate_T(CurvePoint(rat(0), rat(0))), InvalidArgument);
    CHECK_THROWS_AS(E.translate_T(CurvePoint::infinity()), InvalidArgument);
}

TEST_CASE("doubling") {
    const Curve E = Curve::E(N5);
    const CurvePoint P(rat(-1), rat(3));
    const CurvePoint P2 = E.dbl(P);
    CHECK(P2.x() == rat(121, 36));
    CHECK(P2 == E.add(P, P));
    CHECK(E.dbl(CurvePoint(rat(0), rat(0))).is_infinity());
    CHECK(E.dbl(CurvePoint::infinity()).is_infinity());
    CHECK(E.translate_T(P2).x() == rat(-360, 121));
    CHECK(P2.x() * E.translate_T(P2).x() == rat(-10));
}

TEST_CASE("scalar multiples") {
    const Curve E = Curve::E(N5);
    const CurvePoint P(rat(-1), rat(3));
    CHECK(E.mul(0, P).is_infinity());
    CHECK(E.mul(1, P) == P);
    CHECK(E.mul(2, P) == E.dbl(P));
    CHECK(E.mul(-3, P) == E.negate(E.mul(3, P)));
    CHECK(E.mul(5, P) == E.add(E.mul(2, P), E.mul(3, P)));
    CHECK(E.mul(2, CurvePoint(rat(0), rat(0))).is_infinity());
}

TEST_CASE("isogenies on y^2 = x^3 - 10x") {
    const CurvePoint P(rat(-1), rat(3));
    const CurvePoint Pp = phi(N5, P);
    CHECK(Pp == CurvePoint(rat(9), rat(-33)));
    CHECK(Curve::E_prime(N5).contains(Pp));
    CHECK(phi(N5, CurvePoint(rat(0), rat(0))).is_infinity());
    CHECK(phihat(N5, Pp) == Curve::E(N5).dbl(P));
    CHECK(phihat(N5, Pp).x() == rat(121, 36));
}

TEST_CASE("torsion") {
    for (long N : {5L, 195L, 273L}) {
        const Curve E = Curve::E(N);
        const auto t = E.torsion();
        REQUIRE(t.size() == 2);
        CHECK(t[0].is_infinity());
        CHECK(t[1] == CurvePoint(rat(0), rat(0)));
        CHECK(E.is_torsion(t[1]));
    }
}

TEST_CASE("off-curve input") {
    const Curve E = Curve::E(N5);
    CHECK_FALSE(E.contains(CurvePoint(rat(1), rat(1))));
    CHECK_THROWS(CurvePoint::infinity().x());
    CHECK_THROWS_AS(Curve(0), InvalidArgument);
}

TEST_CASE("point_with_x") {
    const Curve E = Curve::E(N5);
    auto P = E.point_with_x(rat(-1));
    REQUIRE(P);
    CHECK(P->y() == rat(3));
    CHECK_FALSE(E.point_with_x(rat(1)).has_value());
}

TEST_CASE("group law properties on search-found points") {
    for (long N : {5L, 195L, 273L, 385L, 165L, 1887L}) {
        const Curve E = Curve::E(N);
        const Curve Ep = Curve::E_prime(N);
        auto pts = naive_search(N, 20000);
        std::vector<CurvePoint> sample;
        for (const auto& P : pts)
            if (!E.is_torsion(P)) sample.push_back(P);
        // Multiples widen the sample to at least 20 points per curve.
        const std::size_t base = sample.size();
        REQUIRE(base > 0);
        for (long k = 2; sample.size() < 24; ++k)
            for (std::size_t i = 0; i < base && sample.size() < 24; ++i) sample.push_back(E.mul(k, sample[i]));
        INFO("N = " << N);
        for (std::size_t i = 0; i < sample.size(); ++i) {
            const CurvePoint& P = sample[i];
            const CurvePoint& Q = sample[(i + 1) % sample.size()];
            const CurvePoint& R = sample[(i + 5) % sample.size()];
            REQUIRE(E.contains(P));
            REQUIRE(E.add(E.add(P, Q), R) == E.add(P, E.add(Q, R)));
            REQUIRE(E.add(P, Q) == E.add(Q, P));
            REQUIRE(E.dbl(P) == E.add(P, P));
            REQUIRE(E.dbl(P).x() == duplication_x(P.x(), Int(N)));
            REQUIRE(phihat(N, phi(N, P)) == E.dbl(P));
            const CurvePoint Pp = phi(N, P);
            REQUIRE(Ep.contains(Pp));
            REQUIRE(phi(N, phihat(N, Pp)) == Ep.dbl(Pp));
            REQUIRE(P.x() * E.translate_T(P).x() == Rat(Int(-2 * N)));
        }
    }
}
