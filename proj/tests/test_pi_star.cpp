#include <doctest.h>

#include <numeric>
#include <random>

#include "pistar/arith.hpp"
#include "pistar/bounds.hpp"
#include "pistar/errors.hpp"
#include "pistar/pi_star.hpp"
#include "pistar/primes.hpp"

using namespace pistar;

namespace {

std::uint64_t fast(std::uint64_t a, std::uint64_t b) { return pi_star_fast(SemigroupPair::make(a, b)).pi_star; }

}  // namespace

TEST_CASE("point values") {
    CHECK(fast(2, 3) == 0);
    CHECK(fast(2, 5) == 1);
    CHECK(fast(3, 5) == 2);
    CHECK(fast(3, 4) == 2);
    CHECK(fast(2, 7) == 2);
    CHECK(fast(5, 7) == 5);
    CHECK(fast(4, 5) == 4);
    CHECK(fast(4, 9) == 7);
    CHECK(fast(3, 7) == 3);
    for (std::uint64_t b = 1; b <= 100; ++b) CHECK(fast(1, b) == 0);

    const auto r = pi_star_fast(SemigroupPair::make(3, 5));
    CHECK(r.pi_s == 4);
    CHECK(r.method == Method::Fast);
    CHECK(*r.ratio_to_pi_s() == doctest::Approx(0.5));
    CHECK_FALSE(pi_star_fast(SemigroupPair::make(1, 7)).ratio_to_pi_s());
}

TEST_CASE("large single pair") {
    const auto r = pi_star_fast(SemigroupPair::make(3, 1'000'001));
    CHECK(r.pi_star == 113678);
}

TEST_CASE("residue sum") {
    CHECK(pi_star_residue_sum(SemigroupPair::make(3, 5)).pi_star == 2);
    CHECK(pi_star_residue_sum(SemigroupPair::make(4, 5)).pi_star == fast(4, 5));
    CHECK_THROWS_AS(pi_star_residue_sum(SemigroupPair::make(1, 5)), DomainError);
    for (std::uint64_t b = 5; b <= 10001; b += 2)
        REQUIRE(pi_star_residue_sum(SemigroupPair::make(2, b)).pi_star == primes::pi(b - 2) - 1);
}

TEST_CASE("brute force") {
    CHECK(pi_star_bruteforce(SemigroupPair::make(3, 4)).pi_star == 2);
    CHECK(pi_star_bruteforce(SemigroupPair::make(2, 3)).pi_star == 0);
    CHECK(pi_star_bruteforce(SemigroupPair::make(1, 3)).pi_star == 0);
    CHECK_THROWS_AS(pi_star_bruteforce(SemigroupPair::make(1000, 1001), 1000), LimitExceeded);
}

TEST_CASE("closed forms") {
    CHECK(pi_star_closed_small(1, 10)->pi_star == 0);
    CHECK(pi_star_closed_small(2, 7)->pi_star == 2);
    CHECK_FALSE(pi_star_closed_small(3, 5));
    for (std::uint64_t b = 1; b <= 10000; ++b) {
        const auto c = pi_star_closed_small(1, b);
        REQUIRE(c);
        REQUIRE(c->pi_star == fast(1, b));
        if (b % 2 == 1 && b >= 3) {
            const auto c2 = pi_star_closed_small(2, b);
            REQUIRE(c2);
            REQUIRE(c2->pi_star == fast(2, b));
            REQUIRE(c2->method == Method::ClosedForm);
        }
    }
}

TEST_CASE("methods agree and pi* is symmetric") {
    for (std::uint64_t a = 2; a <= 60; ++a) {
        for (std::uint64_t b = a + 1; b <= 150; ++b) {
            if (std::gcd(a, b) != 1) continue;
            const auto pair = SemigroupPair::make(a, b);
            const auto f = pi_star_fast(pair);
            REQUIRE(pi_star_residue_sum(pair).pi_star == f.pi_star);
            REQUIRE(pi_star_bruteforce(pair).pi_star == f.pi_star);
            REQUIRE(pi_star_fast(SemigroupPair::make(b, a)).pi_star == f.pi_star);
        }
    }
    std::mt19937_64 rng(17);
    int done = 0;
    while (done < 100) {
        const std::uint64_t a = 2 + rng() % 700;
        const std::uint64_t b = a + 1 + rng() % 2000;
        if (std::gcd(a, b) != 1 || a * b - a - b > 1'000'000) continue;
        ++done;
        const auto pair = SemigroupPair::make(a, b);
        const auto f = pi_star_fast(pair).pi_star;
        REQUIRE(pi_star_residue_sum(pair).pi_star == f);
        REQUIRE(pi_star_bruteforce(pair).pi_star == f);
        REQUIRE(pi_star_residue_sum(SemigroupPair::make(b, a)).pi_star == f);
    }
}

TEST_CASE("pi* and members below S split pi(S)") {
    CHECK(primes_in_semigroup_below_s(SemigroupPair::make(3, 5)) == 2);
    CHECK(primes_in_semigroup_below_s(SemigroupPair::make(2, 3)) == 0);
    CHECK(primes_in_semigroup_below_s(SemigroupPair::make(5, 7)) == 4);
    for (std::uint64_t a = 2; a <= 30; ++a) {
        for (std::uint64_t b = a + 1; b <= 300; ++b) {
            if (std::gcd(a, b) != 1) continue;
            const auto pair = SemigroupPair::make(a, b);
            const auto f = pi_star_fast(pair);
            REQUIRE(f.pi_star <= f.pi_s);
            REQUIRE(f.pi_star + primes_in_semigroup_below_s(pair) == f.pi_s);
            if (a >= 3) REQUIRE(f.pi_star <= bounds::thm2_upper_decomposition(pair));
        }
    }
}

TEST_CASE("pi* from a shared prime table") {
    const auto table = primes::base_primes(5000);
    for (std::uint64_t b = 8; b < 2000; ++b) {
        if (std::gcd<std::uint64_t>(7, b) != 1) continue;
        const auto pair = SemigroupPair::make(7, b);
        REQUIRE(pi_star_from_primes(pair, *table, 20000).pi_star == fast(7, b));
    }
    CHECK_THROWS_AS(pi_star_from_primes(SemigroupPair::make(7, 5000), *table, 100), DomainError);
}
