#include "pistar/pi_star.hpp"

#include <algorithm>
#include <vector>

#include "pistar/errors.hpp"
#include "pistar/primes.hpp"

namespace pistar {

std::string_view to_string(Method m) {
    switch (m) {
        case Method::Fast: return "fast";
        case Method::ResidueSum: return "residue";
        case Method::BruteForce: return "brute";
        case Method::ClosedForm: return "closed";
    }
    return "unknown";
}

namespace {

std::uint64_t frobenius_or_zero(const SemigroupPair& pair) {
    return pair.frobenius() > 0 ? static_cast<std::uint64_t>(pair.frobenius()) : 0;
}

}  // namespace

PiStarResult pi_star_fast(const SemigroupPair& pair) {
    const std::uint64_t s = frobenius_or_zero(pair);
    std::uint64_t gaps = 0;
    std::uint64_t all = 0;
    if (s >= 2) {
        primes::for_each_prime(2, s + 1, [&](std::uint64_t p) {
            ++all;
            if (!pair.contains(p)) ++gaps;
        });
    }
    return {pair, gaps, all, Method::Fast};
}

PiStarResult pi_star_from_primes(const SemigroupPair& pair, std::span<const std::uint32_t> primes,
                                 std::uint64_t limit) {
    const std::uint64_t s = frobenius_or_zero(pair);
    if (s > limit) throw DomainError("pi_star_from_primes: prime list stops below S");
    std::uint64_t gaps = 0;
    std::uint64_t all = 0;
    for (std::uint32_t p : primes) {
        if (p > s) break;
        ++all;
        if (!pair.contains(p)) ++gaps;
    }
    return {pair, gaps, all, Method::Fast};
}

PiStarResult pi_star_residue_sum(const SemigroupPair& pair) {
    const std::uint64_t a = pair.a();
    const std::uint64_t b = pair.b();
    if (a < 2) throw DomainError("pi_star_residue_sum requires a >= 2");
    // Class v contributes primes strictly below b*v, i.e. p <= b*v - 1.
    std::vector<primes::ApCountQuery> queries;
    queries.reserve(a - 1);
    for (std::uint64_t v = 1; v < a; ++v) queries.push_back({b * v - 1, a, (b % a) * v % a});
    std::uint64_t total = 0;
    for (std::uint64_t c : primes::pi_ap_batch(a, queries)) total += c;
    return {pair, total, primes::pi(frobenius_or_zero(pair)), Method::ResidueSum};
}

PiStarResult pi_star_bruteforce(const SemigroupPair& pair, std::uint64_t cap) {
    if (pair.frobenius() > 0 && static_cast<std::uint64_t>(pair.frobenius()) > cap) {
        throw LimitExceeded("brute force: S = " + std::to_string(pair.frobenius()) + " exceeds cap " +
                            std::to_string(cap));
    }
    const std::uint64_t s = frobenius_or_zero(pair);
    if (s < 2) return {pair, 0, 0, Method::BruteForce};

    std::vector<char> representable(s + 1, 0);
    for (std::uint64_t bv = 0; bv <= s; bv += pair.b())
        for (std::uint64_t n = bv; n <= s; n += pair.a()) representable[n] = 1;

    std::vector<char> composite(s + 1, 0);
    std::uint64_t gaps = 0;
    std::uint64_t all = 0;
    for (std::uint64_t n = 2; n <= s; ++n) {
        if (composite[n]) continue;
        for (std::uint64_t m = n * n; m <= s; m += n) composite[m] = 1;
        ++all;
        if (!representable[n]) ++gaps;
    }
    return {pair, gaps, all, Method::BruteForce};
}

std::optional<PiStarResult> pi_star_closed_small(std::uint64_t a, std::uint64_t b) {
    const auto pair = SemigroupPair::make(a, b);
    const std::uint64_t small = std::min(a, b);
    const std::uint64_t large = std::max(a, b);
    if (small == 1) return PiStarResult{pair, 0, 0, Method::ClosedForm};
    if (small != 2) return std::nullopt;
    if (large == 3) return PiStarResult{pair, 0, 0, Method::ClosedForm};
    const std::uint64_t pi_s = primes::pi(large - 2);
    return PiStarResult{pair, pi_s - 1, pi_s, Method::ClosedForm};
}

std::uint64_t primes_in_semigroup_below_s(const SemigroupPair& pair) {
    const std::uint64_t s = frobenius_or_zero(pair);
    std::uint64_t members = 0;
    if (s > 2) {
        primes::for_each_prime(2, s, [&](std::uint64_t p) {
            if (pair.contains(p)) ++members;
        });
    }
    return members;
}

}  // namespace pistar
