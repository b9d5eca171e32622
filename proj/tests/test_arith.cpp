#include <doctest.h>

#include <random>

#include "arith.hpp"
#include "oracles.hpp"

using namespace ecfac;

TEST_CASE("jacobi symbol examples") {
    CHECK(jacobi(2, 13) == -1);
    CHECK(jacobi(15, 13) == -1);
    for (long n = 1; n < 200; n += 2) CHECK(jacobi(1, n) == 1);
    CHECK_THROWS_AS(jacobi(3, 8), InvalidArgument);
    CHECK_THROWS_AS(jacobi(3, -5), InvalidArgument);
    CHECK_THROWS_AS(jacobi(3, 0), InvalidArgument);
}

TEST_CASE("jacobi symbol agrees with Euler's criterion over factorizations") {
    for (long n = 1; n < 400; n += 2)
        for (long a = -60; a <= 60; ++a) REQUIRE(jacobi(a, n) == oracle::jacobi(a, n));
    std::mt19937_64 rng(7);
    for (int i = 0; i < 300; ++i) {
        const long n = static_cast<long>(rng() % 50000) * 2 + 1;
        const long a = static_cast<long>(rng() % 2000000) - 1000000;
        REQUIRE(jacobi(a, n) == oracle::jacobi(a, n));
    }
}

TEST_CASE("quadratic reciprocity for odd primes below 1000") {
    const auto primes = primes_up_to(1000);
    for (auto p : primes) {
        if (p == 2) continue;
        for (auto q : primes) {
            if (q <= p) continue;
            const int lhs = legendre(Int(p), Int(q)) * legendre(Int(q), Int(p));
            const int rhs = ((p - 1) / 2 * ((q - 1) / 2)) % 2 == 0 ? 1 : -1;
            REQUIRE(lhs == rhs);
        }
    }
}

TEST_CASE("jacobi is multiplicative in both arguments") {
    for (long a = 1; a < 40; ++a)
        for (long b = 1; b < 40; ++b)
            for (long n = 3; n < 60; n += 2) {
                REQUIRE(jacobi(a * b, n) == jacobi(a, n) * jacobi(b, n));
                if (b % 2 == 1) REQUIRE(jacobi(a, n * b) == jacobi(a, n) * jacobi(a, b));
            }
}

TEST_CASE("legendre requires a prime modulus") {
    CHECK(legendre(2, 7) == 1);
    CHECK_THROWS_AS(legendre(2, 9), InvalidArgument);
}

TEST_CASE("valuations") {
    const Rat x(121, 36);
    CHECK(val(x, 3) == -2);
    CHECK(val(x, 11) == 2);
    CHECK(val(x, 2) == -2);
    CHECK(val(Rat(1), 7) == 0);
    CHECK(val(Rat(0), 5) == kInfiniteValuation);
    CHECK(val(Int(0), 5) == kInfiniteValuation);
}

TEST_CASE("valuation laws on random rationals") {
    std::mt19937_64 rng(11);
    auto draw = [&] {
        Int n = static_cast<long>(rng() % 100000) - 50000;
        if (n == 0) n = 1;
        return Rat(n, Int(static_cast<long>(rng() % 5000 + 1)));
    };
    for (int i = 0; i < 500; ++i) {
        const Rat x = draw(), y = draw();
        for (long t : {2L, 3L, 5L, 7L}) {
            REQUIRE(val(x * y, t) == val(x, t) + val(y, t));
            REQUIRE(val(x.num(), t) == oracle::valuation(x.num(), t));
            const Rat s = x + y;
            if (s.is_zero()) continue;
            REQUIRE(val(s, t) >= std::min(val(x, t), val(y, t)));
            if (val(x, t) != val(y, t)) REQUIRE(val(s, t) == std::min(val(x, t), val(y, t)));
        }
    }
}

TEST_CASE("rational arithmetic keeps lowest terms") {
    const Rat a(Int(6), Int(-4));
    CHECK(a.num() == -3);
    CHECK(a.den() == 2);
    CHECK(Rat(0).den() == 1);
    CHECK_THROWS_AS(Rat(Int(1), Int(0)), InvalidArgument);
    CHECK_THROWS_AS(Rat(1) / Rat(0), InvalidArgument);
    for (long n = -20; n <= 20; ++n)
        for (long d = 1; d <= 20; ++d) {
            if (n == 0) continue;
            REQUIRE(Rat(Int(n), Int(d)) * Rat(Int(d), Int(n)) == Rat(1));
        }
    CHECK(Rat::parse("-10/4") == Rat(Int(-5), Int(2)));
    CHECK(Rat::parse("7") == Rat(7));
    CHECK_THROWS_AS(Rat::parse("1/0"), InvalidArgument);
    CHECK_THROWS_AS(Rat::parse("abc"), InvalidArgument);
}

TEST_CASE("primality") {
    CHECK(is_prime(13));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(8051));
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(-7));
    for (long n = 0; n < 5000; ++n) REQUIRE(is_prime(n) == oracle::trial_prime(n));
    // Strong pseudoprimes to several small bases.
    CHECK_FALSE(is_prime(Int("3215031751")));
    CHECK_FALSE(is_prime(Int("3825123056546413051")));
    CHECK(is_prime(Int("18446744073709551557")));
    CHECK(is_prime(Int("170141183460469231731687303715884105727")));
    CHECK_FALSE(is_prime(Int("170141183460469231731687303715884105729")));
}

TEST_CASE("squarefreeness and factoring") {
    CHECK(is_squarefree(390));
    CHECK_FALSE(is_squarefree(4));
    CHECK_FALSE(is_squarefree(5070));
    for (long n = 1; n < 3000; ++n) REQUIRE(is_squarefree(n) == oracle::squarefree(n));
    const auto f = factor(Int(2 * 2 * 3 * 13 * 13 * 13));
    REQUIRE(f.size() == 3);
    CHECK(f[0] == PrimePower{2, 2});
    CHECK(f[1] == PrimePower{3, 1});
    CHECK(f[2] == PrimePower{13, 3});
    // A cofactor above the trial bound needs the known primes.
    const Int big = Int("1000003") * Int("1000033");
    CHECK_THROWS_AS(factor(big), IncompleteFactorization);
    const std::vector<Int> known{Int("1000003")};
    CHECK(factor(big, known).size() == 2);
    CHECK(squarefree_part(Int(-72)) == -2);
    CHECK(squarefree_part(Int(45)) == 5);
}

TEST_CASE("square roots") {
    CHECK(exact_sqrt(Int(144)) == Int(12));
    CHECK_FALSE(exact_sqrt(Int(145)).has_value());
    CHECK_FALSE(exact_sqrt(Int(-4)).has_value());
    CHECK(exact_sqrt(Rat(Int(121), Int(36))) == Rat(Int(11), Int(6)));
    CHECK_FALSE(exact_sqrt(Rat(Int(2), Int(9))).has_value());
    CHECK(isqrt(Int(99)) == 9);
}

TEST_CASE("log_abs handles huge integers") {
    Int big = 1;
    for (int i = 0; i < 5000; ++i) big *= 10;
    CHECK(static_cast<double>(log_abs(big)) == doctest::Approx(5000 * std::log(10.0)).epsilon(1e-12));
    CHECK(static_cast<double>(log_abs(Int(-1))) == doctest::Approx(0.0));
}

TEST_CASE("prime sieve") {
    const auto p = primes_up_to(100);
    CHECK(p.size() == 25);
    CHECK(p.front() == 2);
    CHECK(p.back() == 97);
}
