#include "pistar/verify.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pistar/arith.hpp"
#include "pistar/bounds.hpp"
#include "pistar/errors.hpp"
#include "pistar/primes.hpp"

namespace pistar::verify {

namespace {

SweepResult run(std::uint64_t a_min, std::uint64_t a_max, const BRule& rule, unsigned threads,
                std::optional<BRule> from = std::nullopt) {
    SweepConfig cfg;
    cfg.a_min = a_min;
    cfg.a_max = a_max;
    cfg.b_rule = rule;
    cfg.b_from = from;
    cfg.threads = threads;
    return sweep(cfg);
}

// Feeds a report into a threshold clause: counts violations and tracks the
// smallest lhs (the value closest to failing).
void absorb(ClauseResult& c, const bounds::BoundReport& r, std::uint64_t at) {
    ++c.checked;
    if (!r.holds) ++c.violations;
    if (!c.extremum || r.lhs < *c.extremum) {
        c.extremum = r.lhs;
        c.extremum_at = Pair{at, 0};
    }
}

ClauseResult delta_clause(std::string name, bounds::Fraction d, bounds::Fraction threshold,
                          const std::vector<std::uint64_t>& as, std::uint64_t (*worst_s)(std::uint64_t)) {
    ClauseResult c;
    c.name = std::move(name);
    for (std::uint64_t a : as) absorb(c, bounds::check_delta(d, a, worst_s(a), threshold), a);
    c.passed = c.checked > 0 && c.violations == 0;
    return c;
}

std::vector<std::uint64_t> range(std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t a = lo; a <= hi; ++a) out.push_back(a);
    return out;
}

// Case 1 supporting constants at one a: the inclusion-exclusion estimate,
// the 2^omega/phi estimate and the two log ratios at S = h(a).
void case1_constants(std::uint64_t a, ClauseResult& incl, ClauseResult& omega, ClauseResult& ratio_log,
                     ClauseResult& ratio_tail) {
    const auto fa = arith::factor(a);
    const double phi = double(arith::euler_phi(fa));
    const double root = std::sqrt(30.0 / double(a));
    const double count = double(arith::coprime_count_through(a / 10, fa));

    ++incl.checked;
    const double share = count / phi;
    if (!(share <= 0.1 + root && 0.1 + root < 0.122362)) ++incl.violations;
    if (!incl.extremum || share > *incl.extremum) {
        incl.extremum = share;
        incl.extremum_at = Pair{a, 0};
    }

    ++omega.checked;
    const double w = std::ldexp(1.0, static_cast<int>(arith::omega(fa))) / phi;
    if (!(w <= root)) ++omega.violations;
    if (!omega.extremum || w / root > *omega.extremum) {
        omega.extremum = w / root;
        omega.extremum_at = Pair{a, 0};
    }

    const double ds = 0.1 * double(bounds::h_worst_s(a));
    const double r3 = std::log(double(a)) / std::log(ds);
    const double r4 = std::log(ds) / ds;
    ++ratio_log.checked;
    if (!(r3 < 0.558438)) ++ratio_log.violations;
    if (!ratio_log.extremum || r3 > *ratio_log.extremum) {
        ratio_log.extremum = r3;
        ratio_log.extremum_at = Pair{a, 0};
    }
    ++ratio_tail.checked;
    if (!(r4 < 5.5e-8)) ++ratio_tail.violations;
    if (!ratio_tail.extremum || r4 > *ratio_tail.extremum) {
        ratio_tail.extremum = r4;
        ratio_tail.extremum_at = Pair{a, 0};
    }
}

ClauseResult clause(std::string name) {
    ClauseResult c;
    c.name = std::move(name);
    return c;
}

void finish(ClauseResult& c) { c.passed = c.checked > 0 && c.violations == 0; }

}  // namespace

bool ProofReport::passed() const {
    return !clauses.empty() && std::all_of(clauses.begin(), clauses.end(), [](const auto& c) { return c.passed; });
}

VerificationRecord check_pair(std::uint64_t a, std::uint64_t b, const CheckOptions& opts) {
    const auto pair = SemigroupPair::make(a, b);
    const auto res = pi_star_fast(pair);
    if (opts.cross_check) cross_check_methods(pair, res, opts.brute_cap);
    return make_record(pair, res.pi_star, res.pi_s);
}

std::vector<Pair> scan_coj2_exceptions(std::uint64_t a_min, std::uint64_t a_max, const BRule& rule, unsigned threads) {
    if (a_min < 3) throw DomainError("scan_coj2_exceptions: require a_min >= 3");
    return run(a_min, a_max, rule, threads).summary.coj2_exceptions;
}

Coj1Scan scan_coj1_equalities(std::uint64_t a_min, std::uint64_t a_max, const BRule& rule, unsigned threads) {
    const auto result = run(a_min, a_max, rule, threads);
    Coj1Scan out;
    out.checked = result.records.size();
    for (const auto& r : result.records) {
        if (r.a == 1) {
            const bool eq = r.coj1 == Coj1Status::Equality;
            out.a1_family_equal = out.a1_family_equal.value_or(true) && eq;
            if (!eq) out.failures.emplace_back(r.a, r.b);
            continue;
        }
        if (r.coj1 == Coj1Status::Equality) out.equalities.emplace_back(r.a, r.b);
        if (r.coj1 == Coj1Status::Fail) out.failures.emplace_back(r.a, r.b);
    }
    return out;
}

ProofReport reproduce_thm3(std::uint64_t a, unsigned threads) {
    if (a < 3 || a > 10) throw DomainError("reproduce_thm3: require 3 <= a <= 10");
    ProofReport report;
    report.title = "pi* >= pi(S)/2 and the log bound for a = " + std::to_string(a);

    {
        ClauseResult c;
        c.name = "eq1: log bound on a < b <= 50a^2";
        const auto res = run(a, a, BRule::fifty_a_squared(), threads);
        c.checked = res.records.size();
        c.found = res.summary.coj2_exceptions;
        if (a == 3) c.expected = {{3, 4}, {3, 5}, {3, 7}};
        c.passed = c.found == c.expected;
        report.clauses.push_back(std::move(c));
    }
    {
        ClauseResult c;
        c.name = "eq4: pi* > pi(S)/2 for a < b <= " + std::to_string(b_limit(BRule::exp_threshold(), a));
        const auto res = run(a, a, BRule::exp_threshold(), threads);
        c.checked = res.records.size();
        bool only_equalities = true;
        for (const auto& r : res.records) {
            if (r.coj1 == Coj1Status::Strict) continue;
            c.found.emplace_back(r.a, r.b);
            if (r.coj1 == Coj1Status::Fail) only_equalities = false;
        }
        if (a == 3) c.expected = {{3, 5}};
        c.passed = only_equalities && c.found == c.expected;
        report.clauses.push_back(std::move(c));
    }
    if (a == 9 || a == 10) {
        ClauseResult c;
        const std::uint64_t lower = (a == 9) ? 18595 : 60180;
        const auto upper = static_cast<std::uint64_t>(std::floor(std::exp(1.5 * double(a - 1))));
        c.name = "eq3a: pi(S) < (S/log S)(1 + 1/(a-1)) for " + std::to_string(lower) + " < S <= e^{3(a-1)/2}";
        std::vector<primes::ApCountQuery> queries;
        std::vector<std::uint64_t> bs;
        for (std::uint64_t b = a + 1;; ++b) {
            const std::uint64_t s = a * b - a - b;
            if (s > upper) break;
            if (s <= lower || arith::gcd(a, b) != 1) continue;
            queries.push_back({s, 1, 0});
            bs.push_back(b);
        }
        const auto counts = primes::pi_ap_batch(1, queries);
        for (std::size_t i = 0; i < queries.size(); ++i) {
            const auto r = bounds::check_pi_upper_a(queries[i].x, a, counts[i]);
            ++c.checked;
            if (!r.holds) {
                ++c.violations;
                c.found.emplace_back(a, bs[i]);
            }
            if (!c.extremum || r.margin < *c.extremum) {
                c.extremum = r.margin;
                c.extremum_at = Pair{a, bs[i]};
            }
        }
        finish(c);
        report.clauses.push_back(std::move(c));
    }
    return report;
}

ProofReport reproduce_thm1_case(int case_id, unsigned threads, std::size_t case1_samples) {
    ProofReport report;
    switch (case_id) {
        case 1: {
            report.title = "case 1: a > 6*10^4";
            const auto as = bounds::log_spaced(60001, 10'000'000, case1_samples);
            report.clauses.push_back(delta_clause("delta(0.1, a, h(a)) > 0.0445", {1, 10}, {445, 10000}, as,
                                                  bounds::h_worst_s));
            ClauseResult incl = clause("coprime share <= 0.1 + sqrt(30/a) < 0.122362");
            ClauseResult omega = clause("2^omega(a)/phi(a) <= sqrt(30/a)");
            ClauseResult r3 = clause("log a / log(0.1 h(a)) < 0.558438");
            ClauseResult r4 = clause("log(0.1 h(a)) / (0.1 h(a)) < 5.5e-8");
            for (std::uint64_t a : as) case1_constants(a, incl, omega, r3, r4);
            for (auto* c : {&incl, &omega, &r3, &r4}) {
                finish(*c);
                report.clauses.push_back(std::move(*c));
            }
            break;
        }
        case 2: {
            report.title = "case 2: 181 <= a <= 6*10^4";
            report.clauses.push_back(delta_clause("delta(0.0904, a, h(a)) > 0.0401", {904, 10000}, {401, 10000},
                                                  range(181, 60000), bounds::h_worst_s));
            break;
        }
        case 3: {
            report.title = "case 3: 16 <= a <= 180";
            report.clauses.push_back(delta_clause("delta(0.095, a, g(a)) > 0.0425", {95, 1000}, {425, 10000},
                                                  range(16, 180), bounds::g_worst_s));
            ClauseResult c = clause("pi(S/20) - #{members <= S/20} > 0.0663 pi(S), b <= 1000");
            const std::uint64_t max_s = 180 * 1000 - 180 - 1000;
            std::vector<std::uint32_t> table;
            primes::for_each_prime(2, max_s + 1, [&](std::uint64_t p) { table.push_back(static_cast<std::uint32_t>(p)); });
            for (std::uint64_t a = 16; a <= 180; ++a) {
                for (std::uint64_t b = a + 1; b <= 1000; ++b) {
                    if (arith::gcd(a, b) != 1) continue;
                    const auto pair = SemigroupPair::make(a, b);
                    const auto s = static_cast<std::uint64_t>(pair.frobenius());
                    const std::uint64_t x = s / 20;
                    const auto pi_s = static_cast<std::uint64_t>(std::upper_bound(table.begin(), table.end(), s) - table.begin());
                    const auto end_x = std::upper_bound(table.begin(), table.end(), x);
                    const auto pi_x = static_cast<std::uint64_t>(end_x - table.begin());
                    std::uint64_t members = 0;
                    for (auto it = table.begin(); it != end_x; ++it)
                        if (pair.contains(*it)) ++members;
                    const std::uint64_t left = pi_x - members;
                    ++c.checked;
                    if (!(10000 * left > 663 * pi_s)) {
                        ++c.violations;
                        c.found.emplace_back(a, b);
                    }
                    const double share = double(left) / double(pi_s);
                    if (!c.extremum || share < *c.extremum) {
                        c.extremum = share;
                        c.extremum_at = Pair{a, b};
                    }
                }
            }
            finish(c);
            report.clauses.push_back(std::move(c));
            break;
        }
        case 4: {
            report.title = "case 4: 3 <= a <= 15";
            ClauseResult k = clause("case4_constant(a) > 0.05334");
            for (std::uint64_t a = 3; a <= 15; ++a) absorb(k, bounds::check_case4(a, {5334, 100000}), a);
            finish(k);
            report.clauses.push_back(std::move(k));

            ClauseResult c = clause("pi* >= pi(S)/2 for a < b <= 180");
            const auto res = run(3, 15, BRule::up_to(180), threads);
            c.checked = res.records.size();
            for (const auto& r : res.records)
                if (r.coj1 == Coj1Status::Fail) c.found.emplace_back(r.a, r.b);
            c.violations = c.found.size();
            finish(c);
            report.clauses.push_back(std::move(c));
            break;
        }
        default: throw DomainError("reproduce_thm1_case: case id must be 1..4");
    }
    return report;
}

double normalized_pi_star(const PiStarResult& r) {
    const auto s = r.pair.frobenius();
    if (s < 2) throw DomainError("normalized_pi_star: require S >= 2");
    return double(r.pi_star) * std::log(double(s)) / double(s);
}

}  // namespace pistar::verify
