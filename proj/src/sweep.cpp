#include "pistar/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <thread>

#include "pistar/arith.hpp"
#include "pistar/checkpoint.hpp"
#include "pistar/errors.hpp"
#include "pistar/primes.hpp"

namespace pistar::verify {

namespace {

// Above this S a shared per-a prime list is not materialized.
constexpr std::uint64_t kSharedListLimit = std::uint64_t{1} << 28;
constexpr std::uint64_t kChunk = 512;

using PairKey = std::pair<std::uint64_t, std::uint64_t>;

struct AState {
    std::uint64_t a = 0;
    std::uint64_t b_max = 0;
    std::uint64_t max_s = 0;
    bool shared = false;
    std::once_flag once;
    std::vector<std::uint32_t> primes;
    std::atomic<std::size_t> pending{0};
};

struct Task {
    AState* state;
    std::uint64_t b_lo;
    std::uint64_t b_hi;
};

std::uint64_t b_floor(const SweepConfig& cfg, std::uint64_t a) {
    const std::uint64_t lo = cfg.b_from ? b_limit(*cfg.b_from, a) : 0;
    return std::max(lo, a + 1);
}

bool in_grid(const SweepConfig& cfg, std::uint64_t a, std::uint64_t b) {
    return a >= cfg.a_min && a <= cfg.a_max && b > a && b >= b_floor(cfg, a) && b <= b_limit(cfg.b_rule, a) &&
           arith::gcd(a, b) == 1;
}

}  // namespace

std::uint64_t b_limit(const BRule& rule, std::uint64_t a) {
    switch (rule.kind) {
        case BRule::Kind::UpTo: return rule.bound;
        case BRule::Kind::FiftyASquared: return 50 * a * a;
        case BRule::Kind::ExpThreshold: {
            if (a == 1) return kA1FamilySample;
            if (a == 9) return 2325;
            if (a == 10) return 6687;
            const double t = std::exp(1.5 * double(a - 1)) / double(a - 1) + 2.0;
            if (t > 1e15) throw DomainError("exp-threshold b limit too large for a = " + std::to_string(a));
            // b < t; t is never an integer.
            return static_cast<std::uint64_t>(std::ceil(t)) - 1;
        }
    }
    return 0;
}

void cross_check_methods(const SemigroupPair& pair, const PiStarResult& fast, std::uint64_t brute_cap) {
    auto compare = [&](const PiStarResult& other) {
        if (other.pi_star != fast.pi_star || other.pi_s != fast.pi_s) {
            throw MethodMismatch("pi*(" + std::to_string(pair.a()) + ", " + std::to_string(pair.b()) +
                                 "): fast=" + std::to_string(fast.pi_star) + " " + std::string(to_string(other.method)) +
                                 "=" + std::to_string(other.pi_star));
        }
    };
    if (pair.a() >= 2) compare(pi_star_residue_sum(pair));
    if (pair.frobenius() <= static_cast<std::int64_t>(brute_cap)) compare(pi_star_bruteforce(pair, brute_cap));
}

SweepResult sweep(const SweepConfig& cfg) {
    if (cfg.a_min < 1 || cfg.a_max < cfg.a_min) throw DomainError("sweep: require 1 <= a_min <= a_max");

    std::optional<CheckpointLog> log;
    std::map<PairKey, VerificationRecord> done;
    if (cfg.checkpoint_path) {
        log.emplace(*cfg.checkpoint_path);
        for (const auto& r : log->loaded())
            if (in_grid(cfg, r.a, r.b)) done.emplace(PairKey{r.a, r.b}, r);
    }
    const std::size_t resumed = done.size();

    std::vector<std::unique_ptr<AState>> states;
    std::vector<Task> tasks;
    for (std::uint64_t a = cfg.a_min; a <= cfg.a_max; ++a) {
        const std::uint64_t b_max = b_limit(cfg.b_rule, a);
        if (b_max < b_floor(cfg, a)) continue;
        auto st = std::make_unique<AState>();
        st->a = a;
        st->b_max = b_max;
        const __int128 s = static_cast<__int128>(a) * b_max - a - b_max;
        st->max_s = s > 0 ? static_cast<std::uint64_t>(s) : 0;
        st->shared = st->max_s <= kSharedListLimit;
        for (std::uint64_t lo = b_floor(cfg, a); lo <= b_max; lo += kChunk) {
            tasks.push_back({st.get(), lo, std::min(b_max, lo + kChunk - 1)});
            ++st->pending;
        }
        states.push_back(std::move(st));
    }

    std::mutex out_mu;
    std::vector<VerificationRecord> fresh;
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::atomic<bool> stopped{false};
    std::exception_ptr error;

    auto worker = [&] {
        try {
            for (;;) {
                if (failed || cfg.stop.stop_requested()) {
                    if (cfg.stop.stop_requested()) stopped = true;
                    return;
                }
                const std::size_t i = next.fetch_add(1);
                if (i >= tasks.size()) return;
                const Task& task = tasks[i];
                AState& st = *task.state;
                if (st.shared) {
                    std::call_once(st.once, [&st] {
                        primes::for_each_prime(2, st.max_s + 1,
                                               [&](std::uint64_t p) { st.primes.push_back(static_cast<std::uint32_t>(p)); });
                    });
                }
                for (std::uint64_t b = task.b_lo; b <= task.b_hi; ++b) {
                    if (cfg.stop.stop_requested()) {
                        stopped = true;
                        return;
                    }
                    if (arith::gcd(st.a, b) != 1 || done.contains(PairKey{st.a, b})) continue;
                    const auto t0 = std::chrono::steady_clock::now();
                    const auto pair = SemigroupPair::make(st.a, b);
                    const PiStarResult res = st.shared ? pi_star_from_primes(pair, st.primes, st.max_s) : pi_star_fast(pair);
                    if (cfg.cross_check) cross_check_methods(pair, res, cfg.brute_cap);
                    std::uint64_t ms = 0;
                    if (cfg.timing) {
                        ms = static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                                            std::chrono::steady_clock::now() - t0)
                                                            .count());
                    }
                    const VerificationRecord rec = make_record(pair, res.pi_star, res.pi_s, ms);
                    std::lock_guard lock(out_mu);
                    if (log) log->append(rec);
                    if (cfg.on_record) cfg.on_record(rec);
                    fresh.push_back(rec);
                }
                if (--st.pending == 0) std::vector<std::uint32_t>().swap(st.primes);
            }
        } catch (...) {
            std::lock_guard lock(out_mu);
            if (!error) error = std::current_exception();
            failed = true;
        }
    };

    const unsigned n_threads = std::max(1u, cfg.threads);
    if (n_threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    }
    if (error) std::rethrow_exception(error);

    SweepResult result;
    result.records.reserve(done.size() + fresh.size());
    for (auto& [_, r] : done) result.records.push_back(r);
    result.records.insert(result.records.end(), fresh.begin(), fresh.end());
    std::sort(result.records.begin(), result.records.end(),
              [](const VerificationRecord& x, const VerificationRecord& y) { return std::pair{x.a, x.b} < std::pair{y.a, y.b}; });

    auto& sum = result.summary;
    sum.pairs = result.records.size();
    sum.computed = fresh.size();
    sum.resumed = resumed;
    sum.interrupted = stopped;
    for (const auto& r : result.records) {
        if (!r.thm1_holds) ++sum.thm1_failures;
        switch (r.coj1) {
            case Coj1Status::Strict: ++sum.coj1_strict; break;
            case Coj1Status::Equality: ++sum.coj1_equality; break;
            case Coj1Status::Fail: ++sum.coj1_fail; break;
        }
        if (r.coj2 == Coj2Status::Exception) sum.coj2_exceptions.emplace_back(r.a, r.b);
    }
    return result;
}

}  // namespace pistar::verify
