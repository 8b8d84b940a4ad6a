#include <doctest.h>

#include <numeric>
#include <random>

#include "pistar/errors.hpp"
#include "pistar/primes.hpp"

using namespace pistar;
using namespace pistar::primes;

namespace {

bool trial(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

TEST_CASE("is_prime") {
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(1));
    CHECK(is_prime(2));
    CHECK(is_prime(1'000'000'007));
    CHECK(is_prime(18446744073709551557ULL));
    CHECK_FALSE(is_prime(18446744073709551555ULL));
    CHECK_FALSE(is_prime(3215031751ULL));       // strong pseudoprime to 2, 3, 5, 7
    CHECK_FALSE(is_prime(3825123056546413051ULL));  // strong pseudoprime to bases up to 23
    for (std::uint64_t n = 0; n < 100000; ++n) REQUIRE(is_prime(n) == trial(n));
}

TEST_CASE("sieve segments") {
    CHECK(primes_in(0, 2).empty());
    CHECK(primes_in(10, 20) == std::vector<std::uint64_t>{11, 13, 17, 19});
    CHECK(primes_in(1'000'000, 1'000'100) ==
          std::vector<std::uint64_t>{1000003, 1000033, 1000037, 1000039, 1000081, 1000099});
    CHECK(primes_in(0, 3) == std::vector<std::uint64_t>{2});

    SieveSegment seg(100, 200);
    CHECK(seg.test(101));
    CHECK_FALSE(seg.test(102));
    CHECK_FALSE(seg.test(111));
    CHECK_THROWS_AS(seg.test(200), DomainError);
    CHECK_THROWS_AS(seg.test(99), DomainError);
    CHECK(seg.count() == 21);

    std::mt19937_64 rng(5);
    for (int i = 0; i < 200; ++i) {
        const std::uint64_t lo = rng() % 10'000'000;
        const std::uint64_t hi = lo + rng() % 3000;
        std::vector<std::uint64_t> expect;
        for (std::uint64_t n = lo; n < hi; ++n)
            if (is_prime(n)) expect.push_back(n);
        REQUIRE(primes_in(lo, hi) == expect);
    }
}

TEST_CASE("pi") {
    CHECK(pi(0) == 0);
    CHECK(pi(1) == 0);
    CHECK(pi(2) == 1);
    CHECK(pi(7) == 4);
    CHECK(pi(1'000'000) == 78498);
    CHECK(pi(10'000'000) == 664579);

    std::uint64_t running = 0;
    for (std::uint64_t x = 0; x <= 20000; ++x) {
        running += is_prime(x);
        REQUIRE(pi(x) == running);
    }
}

TEST_CASE("window size does not change counts") {
    std::mt19937_64 rng(9);
    for (int i = 0; i < 20; ++i) {
        const std::uint64_t x = rng() % 3'000'000;
        CHECK(pi(x, 1 << 10) == pi(x, 1 << 20));
        CHECK(pi(x, 1 << 10) == pi(x, 1000));
    }
}

TEST_CASE("pi_ap") {
    CHECK(pi_ap({10, 1, 0}) == 4);
    CHECK(pi_ap({20, 4, 1}) == 3);
    CHECK(pi_ap({100, 2, 0}) == 1);
    CHECK(pi_ap({1000, 4, 1}) == 80);
    CHECK_THROWS_AS(pi_ap({10, 0, 0}), DomainError);
    CHECK_THROWS_AS(pi_ap({10, 4, 4}), DomainError);
}

TEST_CASE("pi_ap classes partition pi") {
    std::mt19937_64 rng(13);
    for (std::uint64_t m = 1; m <= 200; m += (m < 20 ? 1 : 17)) {
        const std::uint64_t x = rng() % 1'000'001;
        const auto counts = pi_ap_all(x, m);
        REQUIRE(counts.size() == m);
        CHECK(std::accumulate(counts.begin(), counts.end(), std::uint64_t{0}) == pi(x));
    }
}

TEST_CASE("non-coprime classes hold only prime divisors of m") {
    for (std::uint64_t m = 2; m <= 50; ++m) {
        const auto counts = pi_ap_all(100000, m);
        for (std::uint64_t l = 0; l < m; ++l) {
            if (std::gcd(l, m) == 1) continue;
            std::uint64_t expect = 0;
            for (std::uint64_t p = 2; p <= m; ++p) expect += is_prime(p) && m % p == 0 && p % m == l;
            REQUIRE(counts[l] == expect);
        }
    }
}

TEST_CASE("pi_ap_batch keeps input order") {
    std::vector<ApCountQuery> qs;
    std::mt19937_64 rng(21);
    for (int i = 0; i < 300; ++i) {
        const std::uint64_t x = rng() % 200000;
        qs.push_back({x, 12, rng() % 12});
    }
    const auto got = pi_ap_batch(12, qs);
    REQUIRE(got.size() == qs.size());
    for (std::size_t i = 0; i < qs.size(); i += 7) CHECK(got[i] == pi_ap(qs[i]));
}

TEST_CASE("base prime table is shared and grows") {
    const auto small = base_primes(100);
    REQUIRE(small->size() >= 25);
    CHECK((*small)[24] == 97);
    const auto big = base_primes(100000);
    CHECK(big->size() >= 9592);
}
