// pistar: command-line driver for pi*(a, b) computation and verification.
//
// Exit codes: 0 pass, 1 violation, 2 bad input, 3 resource cap,
// 4 checkpoint corruption.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pistar/arith.hpp"
#include "pistar/bounds.hpp"
#include "pistar/errors.hpp"
#include "pistar/pi_star.hpp"
#include "pistar/primes.hpp"
#include "pistar/record.hpp"
#include "pistar/semigroup.hpp"
#include "pistar/sweep.hpp"
#include "pistar/verify.hpp"

namespace {

using namespace pistar;
using verify::Pair;

enum Exit : int { kPass = 0, kViolation = 1, kBadInput = 2, kResourceCap = 3, kCorrupt = 4 };

struct Options {
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    std::string a_range;
    std::uint64_t a_max = 0;
    std::uint64_t b_max = 0;
    std::string b_rule;
    std::string method = "fast";
    std::string format = "table";
    std::string out;
    std::string resume;
    unsigned threads = 1;
    std::uint64_t brute_cap = kDefaultBruteCap;
    bool cross_check = false;
    bool timing = false;
    bool exact_margins = false;
    int case_id = 0;
    std::string check = "all";
    double x_max = 1e7;
    std::size_t samples = 0;
    std::uint64_t seed = 1;
    std::uint64_t m_max = 50;
};

std::pair<std::uint64_t, std::uint64_t> a_bounds(const Options& o, std::uint64_t lo, std::uint64_t hi) {
    if (!o.a_range.empty()) {
        const auto colon = o.a_range.find(':');
        if (colon == std::string::npos) throw DomainError("--a-range must be MIN:MAX");
        try {
            lo = std::stoull(o.a_range.substr(0, colon));
            hi = std::stoull(o.a_range.substr(colon + 1));
        } catch (const std::exception&) {
            throw DomainError("--a-range must be MIN:MAX with integers");
        }
    } else if (o.a != 0) {
        lo = hi = o.a;
    }
    if (o.a_max != 0) hi = o.a_max;
    if (lo < 1 || hi < lo) throw DomainError("empty or invalid a range");
    return {lo, hi};
}

verify::BRule parse_rule(const Options& o, verify::BRule fallback) {
    if (o.b_rule.empty()) return o.b_max ? verify::BRule::up_to(o.b_max) : fallback;
    if (o.b_rule == "upto") {
        if (o.b_max == 0) throw DomainError("--b-rule upto needs --b-max");
        return verify::BRule::up_to(o.b_max);
    }
    if (o.b_rule == "50a2") return verify::BRule::fifty_a_squared();
    if (o.b_rule == "exp-threshold") return verify::BRule::exp_threshold();
    throw DomainError("unknown --b-rule " + o.b_rule);
}

std::string pairs_str(const std::vector<Pair>& ps) {
    std::string s = "{";
    for (std::size_t i = 0; i < ps.size(); ++i)
        s += (i ? "," : "") + std::string("(") + std::to_string(ps[i].first) + "," + std::to_string(ps[i].second) + ")";
    return s + "}";
}

// Records go to --out, or to stdout in csv/jsonl mode. Returns the stream
// that side reports should use.
std::ostream& emit_records(const Options& o, const std::vector<VerificationRecord>& records) {
    const bool to_file = !o.out.empty();
    const std::string fmt = (to_file && o.format == "table") ? "csv" : o.format;
    if (!to_file && fmt == "table") return std::cout;
    std::ofstream file;
    if (to_file) {
        file.open(o.out, std::ios::binary | std::ios::trunc);
        if (!file) throw IoError("cannot write " + o.out);
    }
    std::ostream& os = to_file ? static_cast<std::ostream&>(file) : std::cout;
    if (fmt == "csv") {
        os << kCsvHeader << '\n';
        for (const auto& r : records) os << to_csv_row(r) << '\n';
    } else {
        for (const auto& r : records) os << to_json_line(r) << '\n';
    }
    os.flush();
    if (!os) throw IoError("write failed");
    return to_file ? std::cout : std::cerr;
}

// Prints expected/unexpected/missing lines; returns true when they match.
bool diff_sets(std::ostream& os, const std::string& what, const std::vector<Pair>& found,
               const std::vector<Pair>& expected) {
    const std::set<Pair> f(found.begin(), found.end());
    const std::set<Pair> e(expected.begin(), expected.end());
    bool same = true;
    for (const auto& p : f) {
        os << (e.contains(p) ? "expected," : "unexpected,") << what << ',' << p.first << ',' << p.second << '\n';
        same = same && e.contains(p);
    }
    for (const auto& p : e) {
        if (f.contains(p)) continue;
        os << "missing," << what << ',' << p.first << ',' << p.second << '\n';
        same = false;
    }
    return same;
}

verify::SweepConfig sweep_config(const Options& o, std::uint64_t a_lo, std::uint64_t a_hi, verify::BRule rule) {
    verify::SweepConfig cfg;
    cfg.a_min = a_lo;
    cfg.a_max = a_hi;
    cfg.b_rule = rule;
    cfg.cross_check = o.cross_check;
    cfg.brute_cap = o.brute_cap;
    cfg.threads = o.threads;
    cfg.timing = o.timing;
    if (!o.resume.empty()) cfg.checkpoint_path = o.resume;
    return cfg;
}

void print_summary(std::ostream& os, const verify::SweepSummary& s) {
    os << "pairs=" << s.pairs << " computed=" << s.computed << " resumed=" << s.resumed
       << " thm1_failures=" << s.thm1_failures << " coj1_strict=" << s.coj1_strict
       << " coj1_equality=" << s.coj1_equality << " coj1_fail=" << s.coj1_fail
       << " coj2_exceptions=" << s.coj2_exceptions.size() << '\n';
}

void print_report(std::ostream& os, const verify::ProofReport& r) {
    os << "== " << r.title << '\n';
    for (const auto& c : r.clauses) {
        os << (c.passed ? "[PASS] " : "[FAIL] ") << c.name << "  checked=" << c.checked;
        if (c.violations) os << " violations=" << c.violations;
        if (!c.found.empty() || !c.expected.empty())
            os << " found=" << pairs_str(c.found) << " expected=" << pairs_str(c.expected);
        if (c.extremum) {
            os << " extremum=" << format_real(*c.extremum);
            if (c.extremum_at) os << " at=(" << c.extremum_at->first << "," << c.extremum_at->second << ")";
        }
        os << '\n';
    }
}

int cmd_compute(const Options& o) {
    const auto pair = SemigroupPair::make(o.a, o.b);
    std::vector<PiStarResult> results;
    if (o.method == "fast" || o.method == "all") results.push_back(pi_star_fast(pair));
    if (o.method == "residue" || (o.method == "all" && pair.a() >= 2)) results.push_back(pi_star_residue_sum(pair));
    if (o.method == "brute" || o.method == "all") results.push_back(pi_star_bruteforce(pair, o.brute_cap));
    if (results.empty()) throw DomainError("unknown --method " + o.method);

    if (o.format == "csv") std::cout << "method,a,b,s,pi_star,pi_s,ratio\n";
    for (const auto& r : results) {
        const auto ratio = r.ratio_to_pi_s();
        const std::string ratio_s = ratio ? format_real(*ratio) : "na";
        if (o.format == "csv") {
            std::cout << to_string(r.method) << ',' << o.a << ',' << o.b << ',' << pair.frobenius() << ','
                      << r.pi_star << ',' << r.pi_s << ',' << ratio_s << '\n';
        } else if (o.format == "jsonl") {
            nlohmann::json j = {{"method", std::string(to_string(r.method))},
                                {"a", o.a},
                                {"b", o.b},
                                {"s", pair.frobenius()},
                                {"pi_star", r.pi_star},
                                {"pi_s", r.pi_s},
                                {"ratio", ratio ? nlohmann::json(*ratio) : nlohmann::json(nullptr)}};
            std::cout << j.dump() << '\n';
        } else {
            std::cout << "method=" << to_string(r.method) << " a=" << o.a << " b=" << o.b << " s=" << pair.frobenius()
                      << " pi_star=" << r.pi_star << " pi_s=" << r.pi_s << " ratio=" << ratio_s << '\n';
        }
    }
    const bool agree = std::all_of(results.begin(), results.end(), [&](const PiStarResult& r) {
        return r.pi_star == results.front().pi_star && r.pi_s == results.front().pi_s;
    });
    if (!agree) std::cerr << "methods disagree\n";
    return agree ? kPass : kViolation;
}

int cmd_gaps(const Options& o) {
    const auto pair = SemigroupPair::make(o.a, o.b);
    const auto gs = gaps(pair);
    if (o.format == "csv") std::cout << "n,prime\n";
    for (std::uint64_t n : gs) {
        const bool p = primes::is_prime(n);
        if (o.format == "csv") std::cout << n << ',' << (p ? 1 : 0) << '\n';
        else std::cout << n << '\t' << (p ? "prime" : "-") << '\n';
    }
    return kPass;
}

int cmd_verify_coj2(const Options& o) {
    const auto [lo, hi] = a_bounds(o, 3, 10);
    if (lo < 3) throw DomainError("coj2 needs a >= 3");
    const auto res = verify::sweep(sweep_config(o, lo, hi, parse_rule(o, verify::BRule::fifty_a_squared())));
    std::ostream& os = emit_records(o, res.records);
    print_summary(os, res.summary);
    std::vector<Pair> expected;
    for (const auto& r : res.records)
        if (r.a == 3 && (r.b == 4 || r.b == 5 || r.b == 7)) expected.emplace_back(r.a, r.b);
    const bool ok = diff_sets(os, "coj2_exception", res.summary.coj2_exceptions, expected);
    return ok && res.summary.thm1_failures == 0 ? kPass : kViolation;
}

int cmd_verify_coj1(const Options& o) {
    const auto [lo, hi] = a_bounds(o, 1, 10);
    const auto res = verify::sweep(sweep_config(o, lo, hi, parse_rule(o, verify::BRule::exp_threshold())));
    std::ostream& os = emit_records(o, res.records);
    print_summary(os, res.summary);
    std::vector<Pair> found;
    std::vector<Pair> expected;
    bool family_ok = true;
    std::size_t family = 0;
    for (const auto& r : res.records) {
        if (r.a == 1) {
            ++family;
            family_ok = family_ok && r.coj1 == Coj1Status::Equality;
            continue;
        }
        if (r.coj1 != Coj1Status::Strict) found.emplace_back(r.a, r.b);
        if ((r.a == 2 && (r.b == 3 || r.b == 5)) || (r.a == 3 && r.b == 5)) expected.emplace_back(r.a, r.b);
    }
    if (family) os << "a1_family," << (family_ok ? "equality" : "broken") << ',' << family << '\n';
    const bool ok = diff_sets(os, "coj1_equality", found, expected) && res.summary.coj1_fail == 0 && family_ok;
    return ok ? kPass : kViolation;
}

int cmd_verify_thm2(const Options& o) {
    const auto [lo, hi] = a_bounds(o, 3, 10);
    if (lo < 3 || hi > 1200) throw DomainError("thm2 verification covers 3 <= a <= 1200");
    auto cfg = sweep_config(o, lo, hi, verify::BRule::up_to(o.b_max ? o.b_max : 50 * hi * hi + 1000));
    cfg.b_from = verify::BRule::fifty_a_squared();
    const auto res = verify::sweep(cfg);
    std::ostream& os = emit_records(o, res.records);
    print_summary(os, res.summary);
    std::vector<Pair> failures;
    for (const auto& r : res.records)
        if (!r.thm2_holds.value_or(false)) failures.emplace_back(r.a, r.b);
    return diff_sets(os, "thm2_failure", failures, {}) ? kPass : kViolation;
}

int cmd_verify_thm3(const Options& o) {
    const auto [lo, hi] = a_bounds(o, 3, 10);
    bool ok = true;
    for (std::uint64_t a = lo; a <= hi; ++a) {
        const auto rep = verify::reproduce_thm3(a, o.threads);
        print_report(std::cout, rep);
        ok = ok && rep.passed();
    }
    return ok ? kPass : kViolation;
}

int cmd_verify_thm1(const Options& o) {
    bool ok = true;
    for (int c = 1; c <= 4; ++c) {
        if (o.case_id != 0 && o.case_id != c) continue;
        const auto rep = verify::reproduce_thm1_case(c, o.threads, o.samples ? o.samples : 200);
        print_report(std::cout, rep);
        ok = ok && rep.passed();
    }
    return ok ? kPass : kViolation;
}

void print_envelope(const bounds::EnvelopeSummary& s, bool exact_margins) {
    std::cout << (s.ok() ? "[PASS] " : "[FAIL] ") << s.name << "  checked=" << s.checked
              << " violations=" << s.violations << " escalations=" << s.escalations;
    if (s.tightest) {
        std::cout << " tightest=" << s.tightest->name << "(";
        for (std::size_t i = 0; i < s.tightest->inputs.size(); ++i)
            std::cout << (i ? "," : "") << s.tightest->inputs[i].first << "=" << format_real(s.tightest->inputs[i].second);
        std::cout << ") margin=" << format_real(s.tightest->margin);
        if (exact_margins) std::cout << " exact=" << s.tightest->exact_margin(256).str(30);
    }
    std::cout << '\n';
    for (const auto& f : s.failures) {
        std::cout << "violation," << f.name;
        for (const auto& [k, v] : f.inputs) std::cout << ',' << k << '=' << format_real(v);
        std::cout << ",lhs=" << format_real(f.lhs) << ",rhs=" << format_real(f.rhs) << '\n';
    }
}

int cmd_verify_bounds(const Options& o) {
    static const std::set<std::string> kChecks = {"rs", "ap", "mv", "delta", "case4", "all"};
    if (!kChecks.contains(o.check)) throw DomainError("unknown --check " + o.check);
    if (!(o.x_max >= 17)) throw DomainError("--x-max must be >= 17");
    const auto x_max = static_cast<std::uint64_t>(o.x_max);
    const bool all = o.check == "all";
    bool ok = true;
    auto report = [&](const bounds::EnvelopeSummary& s) {
        print_envelope(s, o.exact_margins);
        ok = ok && s.ok();
    };

    if (all || o.check == "rs") {
        const auto xs = bounds::log_spaced(17, x_max, o.samples ? o.samples : 200);
        report(bounds::validate_rs_envelope(xs));
    }
    if (all || o.check == "ap") {
        bounds::EnvelopeSummary merged;
        merged.name = "ap_fixed_range";
        for (std::uint64_t m = 1; m <= o.m_max; ++m) {
            if (50 * m * m > x_max) break;
            const auto part = bounds::validate_ap_envelope(m, bounds::log_spaced(50 * m * m, x_max, 20));
            merged.checked += part.checked;
            merged.violations += part.violations;
            merged.escalations += part.escalations;
            if (part.tightest && (!merged.tightest || part.tightest->margin < merged.tightest->margin))
                merged.tightest = part.tightest;
            merged.failures.insert(merged.failures.end(), part.failures.begin(), part.failures.end());
        }
        report(merged);
    }
    if (all || o.check == "mv") {
        std::mt19937_64 rng(o.seed);
        const std::uint64_t y_top = std::min<std::uint64_t>(1'000'000, x_max);
        std::vector<bounds::MvSample> samples;
        const std::size_t n = o.samples ? o.samples : 10'000;
        for (std::size_t i = 0; i < n; ++i) {
            const std::uint64_t k = std::uniform_int_distribution<std::uint64_t>(1, std::min<std::uint64_t>(2000, y_top - 1))(rng);
            const double ly = std::uniform_real_distribution<double>(std::log(double(k + 1)), std::log(double(y_top)))(rng);
            const std::uint64_t y = std::clamp<std::uint64_t>(static_cast<std::uint64_t>(std::exp(ly)), k + 1, y_top);
            const std::uint64_t x = std::uniform_int_distribution<std::uint64_t>(1, y_top)(rng);
            const std::uint64_t l = std::uniform_int_distribution<std::uint64_t>(0, k - 1)(rng);
            samples.push_back({x, y, k, l});
        }
        report(bounds::validate_mv(samples));
    }
    if (all || o.check == "delta") {
        bounds::EnvelopeSummary s;
        s.name = "delta_thresholds";
        for (std::uint64_t a : bounds::log_spaced(60001, 10'000'000, 200))
            s.add(bounds::check_delta({1, 10}, a, bounds::h_worst_s(a), {445, 10000}));
        for (std::uint64_t a = 181; a <= 60000; ++a)
            s.add(bounds::check_delta({904, 10000}, a, bounds::h_worst_s(a), {401, 10000}));
        for (std::uint64_t a = 16; a <= 180; ++a)
            s.add(bounds::check_delta({95, 1000}, a, bounds::g_worst_s(a), {425, 10000}));
        report(s);
    }
    if (all || o.check == "case4") {
        bounds::EnvelopeSummary s;
        s.name = "case4_constant";
        for (std::uint64_t a = 3; a <= 15; ++a) s.add(bounds::check_case4(a, {5334, 100000}));
        report(s);
    }
    return ok ? kPass : kViolation;
}

void add_sweep_flags(CLI::App* sub, Options& o) {
    sub->add_option("--a", o.a, "Single a");
    sub->add_option("--a-range", o.a_range, "a range MIN:MAX");
    sub->add_option("--a-max", o.a_max, "Largest a");
    sub->add_option("--b-max", o.b_max, "Largest b");
    sub->add_option("--b-rule", o.b_rule, "b limit rule")->check(CLI::IsMember({"upto", "50a2", "exp-threshold"}));
    sub->add_option("--format", o.format, "Record format")->check(CLI::IsMember({"table", "csv", "jsonl"}));
    sub->add_option("--out", o.out, "Write records to PATH");
    sub->add_option("--resume", o.resume, "Checkpoint log to resume from and append to");
    sub->add_option("--threads", o.threads, "Worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--brute-cap", o.brute_cap, "Largest S for brute force");
    sub->add_flag("--cross-check", o.cross_check, "Recompute pi* with every method");
    sub->add_flag("--timing", o.timing, "Record per-pair wall time in the ms column");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pi*(a, b): primes that are gaps of the numerical semigroup <a, b>"};
    app.require_subcommand(1);
    Options o;

    auto* compute = app.add_subcommand("compute", "Compute pi*(a, b) and pi(S)");
    compute->add_option("--a", o.a, "First generator")->required();
    compute->add_option("--b", o.b, "Second generator")->required();
    compute->add_option("--method", o.method, "Method")->check(CLI::IsMember({"fast", "residue", "brute", "all"}));
    compute->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"table", "csv", "jsonl"}));
    compute->add_option("--brute-cap", o.brute_cap, "Largest S for brute force");

    auto* gaps_cmd = app.add_subcommand("gaps", "List the gaps of <a, b>, flagging primes");
    gaps_cmd->add_option("--a", o.a, "First generator")->required();
    gaps_cmd->add_option("--b", o.b, "Second generator")->required();
    gaps_cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"table", "csv"}));

    auto* verify_cmd = app.add_subcommand("verify", "Reproduce the finite verifications");
    verify_cmd->require_subcommand(1);
    auto* v_thm1 = verify_cmd->add_subcommand("thm1", "Finite cases of pi* >= 0.04 pi(S)");
    v_thm1->add_option("--case", o.case_id, "Case 1..4 (default all)")->check(CLI::Range(1, 4));
    v_thm1->add_option("--samples", o.samples, "Case 1 sample count");
    v_thm1->add_option("--threads", o.threads, "Worker threads")->check(CLI::PositiveNumber);
    auto* v_thm2 = verify_cmd->add_subcommand("thm2", "Log bound for b >= 50 a^2");
    add_sweep_flags(v_thm2, o);
    auto* v_thm3 = verify_cmd->add_subcommand("thm3", "Half-pi(S) and log bounds for 3 <= a <= 10");
    v_thm3->add_option("--a", o.a, "Single a");
    v_thm3->add_option("--a-range", o.a_range, "a range MIN:MAX");
    v_thm3->add_option("--threads", o.threads, "Worker threads")->check(CLI::PositiveNumber);
    auto* v_coj1 = verify_cmd->add_subcommand("coj1", "pi* >= pi(S)/2 and its equality cases");
    add_sweep_flags(v_coj1, o);
    auto* v_coj2 = verify_cmd->add_subcommand("coj2", "Log-bound exception scan");
    add_sweep_flags(v_coj2, o);
    auto* v_bounds = verify_cmd->add_subcommand("bounds", "Empirical checks of the explicit bounds");
    v_bounds->add_option("--check", o.check, "Which bound")->check(CLI::IsMember({"rs", "ap", "mv", "delta", "case4", "all"}));
    v_bounds->add_option("--x-max", o.x_max, "Largest x for sieve envelopes");
    v_bounds->add_option("--samples", o.samples, "Sample count");
    v_bounds->add_option("--seed", o.seed, "RNG seed for mv samples");
    v_bounds->add_option("--m-max", o.m_max, "Largest modulus for the ap envelope");
    v_bounds->add_option("--threads", o.threads, "Worker threads")->check(CLI::PositiveNumber);
    v_bounds->add_flag("--exact-margins", o.exact_margins, "Print rational enclosures of the tightest margins");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kPass : kBadInput;
    }

    try {
        if (*compute) return cmd_compute(o);
        if (*gaps_cmd) return cmd_gaps(o);
        if (*v_thm1) return cmd_verify_thm1(o);
        if (*v_thm2) return cmd_verify_thm2(o);
        if (*v_thm3) return cmd_verify_thm3(o);
        if (*v_coj1) return cmd_verify_coj1(o);
        if (*v_coj2) return cmd_verify_coj2(o);
        if (*v_bounds) return cmd_verify_bounds(o);
    } catch (const CheckpointCorrupt& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kCorrupt;
    } catch (const LimitExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kResourceCap;
    } catch (const verify::MethodMismatch& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kViolation;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kBadInput;
    }
    return kBadInput;
}
