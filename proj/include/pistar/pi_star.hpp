#pragma once

// pi*(a, b): the number of primes that are gaps of <a, b>.
//
// Three independent evaluations are provided and must always agree:
//   fast         one sieve pass over [2, S] with the O(1) Apery membership test
//   residue_sum  sum over v in [1, a-1] of #{p < b*v : p = b*v (mod a)}, via
//                batched prime counting in progressions (no membership test)
//   bruteforce   explicit representability array over [0, S] and a plain
//                unsegmented sieve; the ground-truth oracle
// plus the closed forms for a <= 2.

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

#include "pistar/semigroup.hpp"

namespace pistar {

enum class Method { Fast, ResidueSum, BruteForce, ClosedForm };

std::string_view to_string(Method m);

inline constexpr std::uint64_t kDefaultBruteCap = 10'000'000;

struct PiStarResult {
    SemigroupPair pair;
    std::uint64_t pi_star;
    std::uint64_t pi_s;  // pi(S), 0 when S < 2
    Method method;

    // pi_star / pi_s; empty when pi_s == 0.
    std::optional<double> ratio_to_pi_s() const {
        if (pi_s == 0) return std::nullopt;
        return static_cast<double>(pi_star) / static_cast<double>(pi_s);
    }
};

PiStarResult pi_star_fast(const SemigroupPair& pair);

// Counts from a caller-owned list holding every prime <= limit, ascending.
// Used by sweeps that share one list across every b for a fixed a.
// Throws DomainError when limit < S.
PiStarResult pi_star_from_primes(const SemigroupPair& pair, std::span<const std::uint32_t> primes,
                                 std::uint64_t limit);

// Requires a >= 2 (DomainError otherwise).
PiStarResult pi_star_residue_sum(const SemigroupPair& pair);

// Throws LimitExceeded when S > cap.
PiStarResult pi_star_bruteforce(const SemigroupPair& pair, std::uint64_t cap = kDefaultBruteCap);

// Closed form when min(a, b) <= 2, in either argument position:
// pi*(1, b) = 0, pi*(2, 3) = 0, pi*(2, b) = pi(b - 2) - 1 for odd b > 3.
std::optional<PiStarResult> pi_star_closed_small(std::uint64_t a, std::uint64_t b);

// Primes p < S with p in <a, b>.
std::uint64_t primes_in_semigroup_below_s(const SemigroupPair& pair);

}  // namespace pistar
