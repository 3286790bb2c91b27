#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <cstdint>

#include "zetalab/arith.hpp"
#include "zetalab/characters.hpp"
#include "zetalab/errors.hpp"

using namespace zetalab::chars;

namespace {
const double TWO_PI = 6.283185307179586476925286766559;
}

TEST_CASE("character table structure mod 7") {
    auto table = build_characters(7);
    CHECK(table.modulus == 7);
    CHECK(table.generator == 3);  // smallest primitive root mod 7
    REQUIRE(table.characters.size() == 6);
    REQUIRE(table.gauss_sums.size() == 6);

    // index-k character on powers of the generator is the k-th root twist
    for (u64 k = 0; k < 6; ++k) {
        const auto& chi = table.characters[k];
        CHECK(chi.modulus == 7);
        CHECK(chi.index == k);
        CHECK(chi.principal() == (k == 0));
        CHECK(std::abs(chi(0)) == 0.0);  // non-coprime residue maps to 0
        u64 p = 1;
        for (u64 j = 0; j < 6; ++j) {
            cplx want = std::exp(cplx(0.0, TWO_PI * double(k * j) / 6.0));
            CHECK(std::abs(chi(p) - want) <= 1e-12);
            p = p * 3 % 7;
        }
    }
}

TEST_CASE("orthogonality relations mod 11") {
    auto table = build_characters(11);
    REQUIRE(table.characters.size() == 10);
    // row orthogonality: sum over n of chi_k(n) conj(chi_l(n)) = phi(x) [k=l]
    for (u64 k = 0; k < 10; ++k)
        for (u64 l = 0; l < 10; ++l) {
            cplx s(0.0, 0.0);
            for (u64 n = 0; n < 11; ++n)
                s += table.characters[k](n) * std::conj(table.characters[l](n));
            double want = (k == l) ? 10.0 : 0.0;
            CHECK(std::abs(s - cplx(want, 0.0)) <= 1e-10);
        }
    // column orthogonality: sum over chi of chi(n) = phi(x) [n = 1 mod x]
    for (u64 n = 1; n < 11; ++n) {
        cplx s(0.0, 0.0);
        for (u64 k = 0; k < 10; ++k) s += table.characters[k](n);
        double want = (n == 1) ? 10.0 : 0.0;
        CHECK(std::abs(s - cplx(want, 0.0)) <= 1e-10);
    }
}

TEST_CASE("conjugate pairing") {
    auto table = build_characters(13);
    for (u64 k = 0; k < 12; ++k) {
        const auto& conj_chi = table.conjugate_of(k);
        for (u64 n = 0; n < 13; ++n)
            CHECK(std::abs(conj_chi(n) - std::conj(table.characters[k](n))) <=
                  1e-12);
    }
}

TEST_CASE("gauss sums: magnitude, principal value, reflection") {
    for (u64 x : {5ULL, 7ULL, 11ULL, 31ULL, 101ULL}) {
        auto table = build_characters(x);
        const double sqrt_x = std::sqrt(double(x));
        for (u64 k = 1; k < table.gauss_sums.size(); ++k)
            CHECK(std::abs(std::abs(table.gauss_sums[k]) - sqrt_x) <= 1e-10);
        // tau(chi0) = mu(x) = -1 for prime x
        CHECK(std::abs(table.gauss_sums[0] - cplx(-1.0, 0.0)) <= 1e-12);
        // tau(chi) tau(conj chi) = chi(-1) x for non-principal chi
        for (u64 k = 1; k < table.characters.size(); ++k) {
            u64 kc = table.conjugate_of(k).index;
            cplx lhs = table.gauss_sums[k] * table.gauss_sums[kc];
            cplx rhs = table.characters[k](x - 1) * double(x);
            CHECK(std::abs(lhs - rhs) <= 1e-9);
        }
    }
}

TEST_CASE("gauss sum against the defining exponential sum") {
    auto table = build_characters(11);
    for (u64 k : {0ULL, 1ULL, 5ULL, 7ULL}) {
        cplx direct(0.0, 0.0);
        for (u64 a = 1; a < 11; ++a)
            direct += table.characters[k](a) *
                      std::exp(cplx(0.0, TWO_PI * double(a) / 11.0));
        CHECK(std::abs(direct - table.gauss_sums[k]) <= 1e-11);
    }
}

TEST_CASE("additive twist decomposes through the character basis") {
    for (u64 x : {7ULL, 11ULL, 31ULL})
        for (u64 n = 1; n < x; ++n)
            CHECK(additive_to_multiplicative_check(x, n) <= 1e-12);
    CHECK_THROWS_AS(additive_to_multiplicative_check(7, 14),
                    zetalab::NotCoprime);
}

TEST_CASE("construction guards") {
    CHECK_THROWS_AS(build_characters(9), zetalab::NotPrime);
    CHECK_THROWS_AS(build_characters(2), zetalab::NotPrime);
    CHECK_THROWS_AS(build_characters(103), zetalab::OutOfRange);
}

TEST_CASE("triple-sum additive/multiplicative decomposition") {
    auto kd = k_decomposition_check(7, 40.0, 1.0, 2.0);
    CHECK(kd.residual <= 1e-8 * (1.0 + std::abs(kd.lhs)));
    CHECK(std::abs(kd.lhs) > 0.0);
    auto kd2 = k_decomposition_check(11, 25.0, 0.5, 1.7);
    CHECK(kd2.residual <= 1e-8 * (1.0 + std::abs(kd2.lhs)));
}
