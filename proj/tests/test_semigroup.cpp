#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "pistar/errors.hpp"
#include "pistar/semigroup.hpp"

using namespace pistar;

namespace {

// Representability by closure from 0 under +a and +b.
std::vector<bool> representable(std::uint64_t a, std::uint64_t b, std::uint64_t limit) {
    std::vector<bool> rep(limit + 1, false);
    rep[0] = true;
    for (std::uint64_t n = 0; n <= limit; ++n) {
        if (!rep[n]) continue;
        if (n + a <= limit) rep[n + a] = true;
        if (n + b <= limit) rep[n + b] = true;
    }
    return rep;
}

}  // namespace

TEST_CASE("construction") {
    CHECK(SemigroupPair::make(3, 5).frobenius() == 7);
    CHECK(SemigroupPair::make(1, 9).frobenius() == -1);
    CHECK(SemigroupPair::make(9, 1).frobenius() == -1);
    for (std::uint64_t b = 3; b < 200; b += 2) CHECK(SemigroupPair::make(2, b).frobenius() == std::int64_t(b) - 2);
    CHECK(SemigroupPair::make(3, 5).b_inv_mod_a() == 2);
    CHECK_THROWS_AS(SemigroupPair::make(4, 6), NotCoprime);
    CHECK_THROWS_AS(SemigroupPair::make(0, 5), DomainError);
    CHECK_THROWS_AS(SemigroupPair::make(4294967311ULL, 4294967357ULL * 3), DomainError);
    const auto big = SemigroupPair::make(3'000'000'019ULL, 3'000'000'021ULL);
    CHECK(big.frobenius() > 0);
}

TEST_CASE("membership") {
    const auto p = SemigroupPair::make(3, 5);
    CHECK(p.contains(0));
    CHECK_FALSE(p.contains(7));
    CHECK(p.contains(8));
    CHECK(SemigroupPair::make(1, 5).contains(0));
    CHECK(SemigroupPair::make(1, 5).contains(3));

    for (std::uint64_t a = 2; a <= 30; ++a) {
        for (std::uint64_t b = a + 1; b <= 100; ++b) {
            if (std::gcd(a, b) != 1) continue;
            const auto pair = SemigroupPair::make(a, b);
            const auto s = static_cast<std::uint64_t>(pair.frobenius());
            const auto rep = representable(a, b, s + a * b);
            for (std::uint64_t n = 0; n <= s + a * b; ++n) REQUIRE(pair.contains(n) == rep[n]);
        }
    }
}

TEST_CASE("gaps") {
    CHECK(gaps(SemigroupPair::make(3, 5)) == std::vector<std::uint64_t>{1, 2, 4, 7});
    CHECK(gaps(SemigroupPair::make(2, 5)) == std::vector<std::uint64_t>{1, 3});
    CHECK(gaps(SemigroupPair::make(3, 4)) == std::vector<std::uint64_t>{1, 2, 5});
    CHECK(gaps(SemigroupPair::make(2, 7)) == std::vector<std::uint64_t>{1, 3, 5});
    CHECK(gaps(SemigroupPair::make(5, 7)) ==
          std::vector<std::uint64_t>{1, 2, 3, 4, 6, 8, 9, 11, 13, 16, 18, 23});
    CHECK(gaps(SemigroupPair::make(1, 5)).empty());
    CHECK(gaps(SemigroupPair::make(2, 3)) == std::vector<std::uint64_t>{1});
}

TEST_CASE("gap count, maximum and symmetry") {
    for (std::uint64_t a = 2; a <= 200; ++a) {
        for (std::uint64_t b = a + 1; b <= 200; ++b) {
            if (std::gcd(a, b) != 1) continue;
            const auto pair = SemigroupPair::make(a, b);
            const auto g = gaps(pair);
            REQUIRE(g.size() == (a - 1) * (b - 1) / 2);
            REQUIRE(g.back() == static_cast<std::uint64_t>(pair.frobenius()));
            REQUIRE(g == gaps(SemigroupPair::make(b, a)));
            if (a <= 40 && b <= 80) {
                const std::set<std::uint64_t> gs(g.begin(), g.end());
                const auto s = g.back();
                for (std::uint64_t n = 0; n <= s; ++n) REQUIRE(gs.contains(n) != gs.contains(s - n));
            }
        }
    }
}

TEST_CASE("apery set") {
    CHECK(apery_set(SemigroupPair::make(3, 5)) == std::vector<std::uint64_t>{0, 5, 10});
    CHECK(apery_set(SemigroupPair::make(5, 7)) == std::vector<std::uint64_t>{0, 7, 14, 21, 28});
    CHECK_THROWS_AS(apery_set(SemigroupPair::make(1, 7)), DomainError);
    for (std::uint64_t a = 2; a <= 40; ++a) {
        for (std::uint64_t b = a + 1; b <= 120; ++b) {
            if (std::gcd(a, b) != 1) continue;
            std::vector<std::uint64_t> residues;
            for (auto w : apery_set(SemigroupPair::make(a, b))) residues.push_back(w % a);
            std::sort(residues.begin(), residues.end());
            std::vector<std::uint64_t> all(a);
            std::iota(all.begin(), all.end(), 0);
            REQUIRE(residues == all);
        }
    }
}
