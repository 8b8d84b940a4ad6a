#pragma once

// Checkers for the pi* inequalities and conjectures, and the finite
// computations that establish them for small a.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pistar/pi_star.hpp"
#include "pistar/record.hpp"
#include "pistar/sweep.hpp"

namespace pistar::verify {

using Pair = std::pair<std::uint64_t, std::uint64_t>;

struct CheckOptions {
    bool cross_check = false;
    std::uint64_t brute_cap = kDefaultBruteCap;
};

// Throws NotCoprime. With cross_check, all three pi* methods must agree
// (brute force only when S <= brute_cap) or MethodMismatch is thrown.
VerificationRecord check_pair(std::uint64_t a, std::uint64_t b, const CheckOptions& opts = {});

// Pairs a_min <= a <= a_max, a < b <= rule limit, where the log-bound
// inequality fails. Requires a_min >= 3.
std::vector<Pair> scan_coj2_exceptions(std::uint64_t a_min, std::uint64_t a_max, const BRule& rule,
                                       unsigned threads = 1);

struct Coj1Scan {
    std::vector<Pair> equalities;  // excludes a = 1
    std::vector<Pair> failures;    // 2 pi* < pi(S)
    std::size_t checked = 0;
    // Present when a = 1 is in range: every sampled (1, b) was an equality.
    std::optional<bool> a1_family_equal;
};

Coj1Scan scan_coj1_equalities(std::uint64_t a_min, std::uint64_t a_max, const BRule& rule, unsigned threads = 1);

// One finite claim: what was checked, what was flagged, what the claim
// predicts would be flagged.
struct ClauseResult {
    std::string name;
    std::size_t checked = 0;
    std::vector<Pair> found;
    std::vector<Pair> expected;
    std::size_t violations = 0;  // for threshold clauses
    std::optional<double> extremum;
    std::optional<Pair> extremum_at;  // (a, b), or (a, 0) for per-a clauses
    bool passed = false;
};

struct ProofReport {
    std::string title;
    std::vector<ClauseResult> clauses;

    bool passed() const;
};

// For 3 <= a <= 10:
//  eq1    log-bound inequality on a < b <= 50a^2; failures only at
//         (3,4), (3,5), (3,7)
//  eq4    pi* > pi(S)/2 for a < b up to the per-a threshold; failure only
//         at (3,5)
//  eq3a   (a = 9, 10) pi(S) < (S / log S)(1 + 1/(a-1)) for every S(a, b)
//         in (18595, e^12] resp. (60180, e^13.5]
ProofReport reproduce_thm3(std::uint64_t a, unsigned threads = 1);

// Finite parts of the pi* >= 0.04 pi(S) argument, by case:
//  1  a > 6*10^4: delta(0.1, a, a^2-a-1) > 0.0445 and its supporting
//     constants, on `case1_samples` log-spaced a in (6*10^4, 10^7]
//  2  181 <= a <= 6*10^4: delta(0.0904, a, a^2-a-1) > 0.0401
//  3  16 <= a <= 180: delta(0.095, a, 1000a-1001) > 0.0425, and for
//     b <= 1000: pi(S/20) - #{members <= S/20} > 0.0663 pi(S)
//  4  3 <= a <= 15: case4_constant > 0.05334, and for b <= 180:
//     pi* >= pi(S)/2
ProofReport reproduce_thm1_case(int case_id, unsigned threads = 1, std::size_t case1_samples = 200);

// pi* log S / S, the quantity whose limit is 1/2 + 1/(2(a-1)).
double normalized_pi_star(const PiStarResult& r);

}  // namespace pistar::verify
