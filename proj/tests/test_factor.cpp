#include <doctest.h>

#include "factor.hpp"
#include "oracles.hpp"

using namespace ecfac;

namespace {

Rat rat(long n, long d = 1) { return Rat(Int(n), Int(d)); }

struct Fixture {
    long p, q, r;
    long x, y;
};

// Generators found by the point search on the corpus curves.
const Fixture kCorpus[] = {
    {3, 5, 13, 40, 220}, {3, 7, 13, -14, 70}, {5, 7, 11, 56, 364}, {3, 11, 5, -6, 42}, {17, 3, 37, 3400, 198220},
};

} // namespace

TEST_CASE("extract examples") {
    auto a = extract(15, rat(27, 4));
    REQUIRE(a);
    CHECK(a->g == 3);
    CHECK(a->source == GcdSource::numerator);
    CHECK(a->p_out == 3);
    CHECK(a->q_out == 5);
    auto b = extract(15, rat(121, 36));
    REQUIRE(b);
    CHECK(b->source == GcdSource::denominator);
    CHECK(b->g == 3);
    CHECK_FALSE(extract(15, rat(7, 4)).has_value());
    CHECK_FALSE(extract(15, rat(15, 4)).has_value());
    CHECK_THROWS_AS(extract(16, rat(3)), InvalidArgument);
}

TEST_CASE("valuation tables on the corpus generators") {
    for (const auto& f : kCorpus) {
        const CurveParams params(f.p, f.q, f.r);
        const CurvePoint Q(rat(f.x), rat(f.y));
        REQUIRE(Curve::E(params.N()).contains(Q));
        const auto rep = pattern_check(params, Q, 5);
        INFO("p=" << f.p << " q=" << f.q);
        CHECK(rep.passed());
        for (const auto& v : rep.violations) MESSAGE(v);
        CHECK(rep.identity_checks > 0);
        for (const auto& e : rep.entries) {
            const bool even = e.multiplier % 2 == 0;
            if (even && !e.plus_T) CHECK(e.value % 2 == 0);
            if (even && e.plus_T) CHECK(e.value % 2 != 0);
            // Independent recomputation of every recorded valuation.
            CurvePoint R = Curve::E(params.N()).mul(e.multiplier, Q);
            if (e.plus_T) R = Curve::E(params.N()).translate_T(R);
            const long vn = oracle::valuation(R.x().num(), e.t), vd = oracle::valuation(R.x().den(), e.t);
            CHECK(e.value == vn - vd);
        }
    }
}

TEST_CASE("asymmetry") {
    for (const auto& f : kCorpus) {
        const CurveParams params(f.p, f.q, f.r);
        CHECK(asymmetry_check(params, CurvePoint(rat(f.x), rat(f.y)), {-5, -3, -1, 1, 3, 5}));
    }
    const CurveParams params(3, 5, 13);
    CHECK_THROWS_AS(asymmetry_check(params, CurvePoint(rat(40), rat(220)), {2}), InvalidArgument);
    // Negative control: a fabricated pair with v_3(x) = v_5(x) = 0.
    CHECK_FALSE(asymmetry_check(params, CurvePoint(rat(1), rat(1)), {1}));
}

TEST_CASE("odd multiples always split D") {
    for (const auto& f : kCorpus) {
        const CurveParams params(f.p, f.q, f.r);
        const Curve E = Curve::E(params.N());
        const CurvePoint Q(rat(f.x), rat(f.y));
        for (long k = -9; k <= 9; k += 2) {
            const CurvePoint R = E.mul(k, Q);
            auto a = extract(params.D(), R.x());
            auto b = extract(params.D(), E.translate_T(R).x());
            INFO("p=" << f.p << " q=" << f.q << " k=" << k);
            REQUIRE((a || b));
            const auto& got = a ? *a : *b;
            CHECK(got.p_out * got.q_out == params.D());
            CHECK(got.p_out == std::min(f.p, f.q));
        }
    }
}
