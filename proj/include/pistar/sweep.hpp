#pragma once

// Parallel, resumable evaluation of check_pair over a grid of (a, b).
//
// Work is split by a, then into chunks of b. For each a one prime list up
// to the largest S of that a is built once and shared read-only by its
// chunks. Records reach the checkpoint log and the on_record callback
// through a single lock in completion order; the returned record set is
// sorted by (a, b) and does not depend on the thread count.

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <stop_token>
#include <utility>
#include <vector>

#include "pistar/errors.hpp"
#include "pistar/pi_star.hpp"
#include "pistar/record.hpp"

namespace pistar::verify {

// Which b accompany a given a: always a < b <= b_limit(a).
struct BRule {
    enum class Kind {
        UpTo,         // b <= bound
        FiftyASquared,  // b <= 50 a^2
        ExpThreshold,   // b < e^{3(a-1)/2}/(a-1) + 2; 2325 for a = 9, 6687 for a = 10
    };
    Kind kind = Kind::FiftyASquared;
    std::uint64_t bound = 0;  // UpTo only

    static BRule up_to(std::uint64_t b) { return {Kind::UpTo, b}; }
    static BRule fifty_a_squared() { return {Kind::FiftyASquared, 0}; }
    static BRule exp_threshold() { return {Kind::ExpThreshold, 0}; }
};

// The a = 1 family has no exponential threshold; it is sampled up to here.
inline constexpr std::uint64_t kA1FamilySample = 1000;

// Inclusive upper limit for b under the rule.
std::uint64_t b_limit(const BRule& rule, std::uint64_t a);

struct SweepConfig {
    std::uint64_t a_min = 3;
    std::uint64_t a_max = 10;
    BRule b_rule;
    // When set, b >= b_limit(*b_from, a) as well (e.g. b >= 50 a^2).
    std::optional<BRule> b_from;
    // Recompute pi* by residue sum and brute force (when S <= brute_cap) and
    // fail on any disagreement.
    bool cross_check = false;
    std::uint64_t brute_cap = kDefaultBruteCap;
    unsigned threads = 1;
    std::optional<std::filesystem::path> checkpoint_path;
    // Record per-pair wall time in ms; off keeps output byte-reproducible.
    bool timing = false;
    // Called once per newly computed record, serialized, completion order.
    std::function<void(const VerificationRecord&)> on_record;
    std::stop_token stop;
};

struct SweepSummary {
    std::size_t pairs = 0;     // records in the final set
    std::size_t computed = 0;  // evaluated in this run
    std::size_t resumed = 0;   // taken from the checkpoint
    std::size_t thm1_failures = 0;
    std::size_t coj1_strict = 0;
    std::size_t coj1_equality = 0;
    std::size_t coj1_fail = 0;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> coj2_exceptions;
    bool interrupted = false;
};

struct SweepResult {
    std::vector<VerificationRecord> records;  // sorted by (a, b)
    SweepSummary summary;
};

// Thrown when cross-checking finds two methods disagreeing.
class MethodMismatch : public Error {
public:
    using Error::Error;
};

// Recomputes pi* by residue sum (a >= 2) and brute force (S <= brute_cap)
// and throws MethodMismatch if either differs from `fast`.
void cross_check_methods(const SemigroupPair& pair, const PiStarResult& fast, std::uint64_t brute_cap);

SweepResult sweep(const SweepConfig& cfg);

}  // namespace pistar::verify
