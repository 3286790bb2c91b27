#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <cstdint>

#include "zetalab/arith.hpp"
#include "zetalab/errors.hpp"

using namespace zetalab::arith;

TEST_CASE("prime table and primality") {
    const auto& primes = small_primes();
    CHECK(primes.size() == 78498);  // pi(10^6)
    CHECK(primes.front() == 2);
    CHECK(primes.back() == 999983);

    CHECK(is_prime(2));
    CHECK(is_prime(1000003));
    CHECK(is_prime(999999999989ULL));
    CHECK(is_prime(9007199254740881ULL));  // largest prime below 2^53
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(1000001));  // 101 * 9901
    CHECK_FALSE(is_prime(3215031751ULL));  // strong pseudoprime to 2,3,5,7
    CHECK_THROWS_AS(is_prime(20000000000000001ULL), zetalab::OutOfRange);
}

TEST_CASE("factorization and multiplicative functions") {
    auto f = factorize(720);
    REQUIRE(f.size() == 3);
    CHECK(f[0] == std::pair<u64, int>{2, 4});
    CHECK(f[1] == std::pair<u64, int>{3, 2});
    CHECK(f[2] == std::pair<u64, int>{5, 1});

    CHECK(vonmangoldt(8) == doctest::Approx(std::log(2.0)).epsilon(1e-14));
    CHECK(vonmangoldt(7) == doctest::Approx(std::log(7.0)).epsilon(1e-14));
    CHECK(vonmangoldt(6) == 0.0);
    CHECK(vonmangoldt(1) == 0.0);

    CHECK(divisor_count(1) == 1);
    CHECK(divisor_count(5040) == 60);
    CHECK(moebius(1) == 1);
    CHECK(moebius(30) == -1);
    CHECK(moebius(12) == 0);
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(100) == 40);
    CHECK(euler_phi(101) == 100);
}

TEST_CASE("primes_in and divisor sieve") {
    auto p = primes_in(10, 30);
    CHECK(p == std::vector<u64>{11, 13, 17, 19, 23, 29});
    CHECK(primes_in(24, 28).empty());

    auto d = divisor_sieve(1000);
    REQUIRE(d.size() >= 1001);
    for (u64 n = 1; n <= 1000; ++n) CHECK(d[n] == divisor_count(n));
}

TEST_CASE("coefficient families: identities and prefix consistency") {
    // pair_unit with zero twist degenerates to the divisor function
    CoefficientFamily pair0{CoefficientFamily::Kind::pair_unit, 0.0, 0.0};
    for (u64 n : {1ULL, 2ULL, 36ULL, 97ULL, 720ULL}) {
        auto b = coefficient(pair0, n);
        CHECK(std::abs(b - cplx(double(divisor_count(n)), 0.0)) <= 1e-12);
    }
    // triple_lambda with zero twists collapses to (1/2) d(n) log n
    CoefficientFamily triple0{CoefficientFamily::Kind::triple_lambda, 0.0, 0.0};
    for (u64 n = 2; n <= 60; ++n) {
        auto b = coefficient(triple0, n);
        double want = 0.5 * double(divisor_count(n)) * std::log(double(n));
        CHECK(std::abs(b - cplx(want, 0.0)) <= 1e-10 * (1.0 + want));
    }
    // prefix agrees with the one-shot evaluator, including complex twists
    CoefficientFamily twisted{CoefficientFamily::Kind::triple_lambda, 0.7, -0.4};
    auto prefix = coefficient_prefix(twisted, 200);
    REQUIRE(prefix.size() == 201);
    for (u64 n = 1; n <= 200; ++n)
        CHECK(std::abs(prefix[n] - coefficient(twisted, n)) <= 1e-11);
    // unit family
    CoefficientFamily unit{CoefficientFamily::Kind::unit, 0.0, 0.0};
    CHECK(std::abs(coefficient(unit, 123) - cplx(1.0, 0.0)) <= 1e-15);
}

TEST_CASE("triple convolution prefix against direct enumeration") {
    const double th1 = 0.3, th2 = -1.1, th3 = 0.9;
    auto conv = triple_conv_prefix(120, th1, th2, th3);
    for (u64 n = 2; n <= 120; ++n) {
        cplx want(0.0, 0.0);
        for (u64 a = 1; a <= n; ++a) {
            if (n % a != 0 || vonmangoldt(a) == 0.0) continue;
            for (u64 b = 1; b <= n / a; ++b) {
                if ((n / a) % b != 0) continue;
                u64 c = n / a / b;
                double la = std::log(double(a)), lb = std::log(double(b)),
                       lc = std::log(double(c));
                want += vonmangoldt(a) *
                        std::exp(cplx(0.0, th1 * la + th2 * lb + th3 * lc));
            }
        }
        CHECK(std::abs(conv[n] - want) <= 1e-10 * (1.0 + std::abs(want)));
    }
}

TEST_CASE("divisor summatory: exact values and the smooth deviation") {
    auto d = divisor_sieve(10000);
    u64 running = 0;
    for (u64 n = 1; n <= 10000; ++n) running += d[n];
    auto big = divisor_summatory(10000.0);
    CHECK(big.value == running);

    auto small = divisor_summatory(100.0);
    CHECK(small.value == 482);
    // Voronoi-scale deviation: |error| should be far below X at X = 10^8
    auto huge = divisor_summatory(1e8);
    CHECK(std::abs(huge.voronoi_error) <= 1e5);
    double smooth = 1e8 * std::log(1e8) + (2.0 * EULER_GAMMA - 1.0) * 1e8;
    CHECK(std::abs(double(huge.value) - smooth - huge.voronoi_error) <= 1.0);
    CHECK_THROWS_AS(divisor_summatory(1e13), zetalab::OutOfRange);
}

TEST_CASE("twisted triple sum: scope split and direct replication") {
    const u64 limit = 60, x = 7;
    const double y1 = 1.0, y2 = 2.0;
    auto all = k_exponential_sum(limit, x, y1, y2, KScope::all);
    auto cop = k_exponential_sum(limit, x, y1, y2, KScope::coprime);
    auto mul = k_exponential_sum(limit, x, y1, y2, KScope::multiples);
    CHECK(std::abs(all.value - (cop.value + mul.value)) <= 1e-10);
    CHECK(all.terms_total == cop.terms_total + mul.terms_total);
    CHECK(all.terms_multiple == mul.terms_total);
    CHECK(mul.terms_multiple == mul.terms_total);
    CHECK(cop.terms_multiple == 0);

    // direct triple loop
    cplx want(0.0, 0.0);
    u64 count = 0;
    const double TWO_PI = 6.283185307179586476925;
    for (u64 a = 2; a <= limit; ++a) {
        if (vonmangoldt(a) == 0.0) continue;
        for (u64 b = 1; a * b <= limit; ++b)
            for (u64 c = 1; a * b * c <= limit; ++c) {
                ++count;
                double phase = y2 * std::log(double(a)) +
                               (y2 - y1) * std::log(double(b)) -
                               TWO_PI * double(a * b * c % x) / double(x);
                want += vonmangoldt(a) * std::exp(cplx(0.0, phase));
            }
    }
    CHECK(count == all.terms_total);
    CHECK(std::abs(all.value - want) <= 1e-9 * (1.0 + std::abs(want)));
}
