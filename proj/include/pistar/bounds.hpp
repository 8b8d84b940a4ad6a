#pragma once

// Explicit bound functions and the constants of the pi* lower-bound
// argument, each evaluated in double precision with an exact interval
// re-check when an inequality is too close to call.
//
// All logarithms are natural.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pistar/exact.hpp"
#include "pistar/semigroup.hpp"

namespace pistar::bounds {

// An exact decimal parameter such as delta = 0.0904 = 904/10000.
struct Fraction {
    std::int64_t num;
    std::int64_t den;

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

enum class Direction {
    Greater,  // holds iff lhs > rhs
    Less,     // holds iff lhs < rhs
};

struct BoundReport {
    std::string name;
    std::vector<std::pair<std::string, double>> inputs;
    double lhs = 0;
    double rhs = 0;
    Direction direction = Direction::Greater;
    bool holds = false;
    // lhs - rhs for Greater, rhs - lhs for Less; positive iff holds (up to the
    // guard, which may overrule a sub-1e-9 double margin).
    double margin = 0;
    bool escalated = false;
    // Encloses the margin exactly at the given precision in bits.
    std::function<exact::Interval(unsigned)> exact_margin;
};

// (1/2 + 1/(2(a-1))) * s / log s. Requires a >= 3, s >= 2.
double thm2_rhs(std::uint64_t a, std::int64_t s);

// 2y / (phi(k) log(y/k)), the Brun-Titchmarsh form of Montgomery and
// Vaughan. x and l do not enter the value. Requires 1 <= k < y.
double mv_upper(double x, double y, std::uint64_t k, std::int64_t l);

// x / log x for x >= 17.
double rs_pi_lower(double x);
// (x / log x)(1 + 3 / (2 log x)) for x > 1.
double rs_pi_upper(double x);

// Envelope for pi(x; m, l), gcd(l, m) = 1, valid for 1 <= m <= 1200 and
// x >= 50 m^2: x/(phi(m) log x) and that times (1 + 5/(2 log x)).
std::pair<double, double> ap_fixed_range_bounds(double x, std::uint64_t m);

// The density function of the pi* >= c*pi(S) argument:
//   (1 - (2/phi(a)) * C * (1 - log a / log(dS))^{-1} - log(dS)/(dS)) * d
// with C = #{1 <= v <= d*a : gcd(v, a) = 1} counted exactly.
// Requires 0 < d <= 1, d*S >= 17 and a < d*S.
double delta(Fraction d, std::uint64_t a, std::uint64_t s);

// sum_{1 <= v <= a-1, gcd(v, a) = 1} pi(b v; a, b v) + omega(a); an exact
// upper bound for pi*(a, b). Requires a >= 3.
std::uint64_t thm2_upper_decomposition(const SemigroupPair& pair);

// (1/a - log t / t)(1 + 3/(2 log t))^{-1} with t = 180a - 181, 3 <= a <= 15.
double case4_constant(std::uint64_t a);

// h(a) = a^2 - a - 1 and g(a) = 1000a - 1001: the smallest S reachable in
// the two density cases.
std::uint64_t h_worst_s(std::uint64_t a);
std::uint64_t g_worst_s(std::uint64_t a);

// Guarded checks. Each returns holds exactly as the inequality is stated;
// near-ties are settled by the interval path.
BoundReport check_thm2(std::uint64_t pi_star, std::uint64_t a, std::int64_t s);
BoundReport check_rs_lower(std::uint64_t x, std::uint64_t pi_x);
BoundReport check_rs_upper(std::uint64_t x, std::uint64_t pi_x);
BoundReport check_ap_lower(std::uint64_t x, std::uint64_t m, std::uint64_t l, std::uint64_t count);
BoundReport check_ap_upper(std::uint64_t x, std::uint64_t m, std::uint64_t l, std::uint64_t count);
BoundReport check_mv(std::uint64_t x, std::uint64_t y, std::uint64_t k, std::uint64_t l, std::uint64_t count);
// pi(x) < (x / log x)(1 + 1/(a-1)): with the log bound on pi* this gives
// pi* > pi(S)/2 directly. Requires a >= 2, x >= 2.
BoundReport check_pi_upper_a(std::uint64_t x, std::uint64_t a, std::uint64_t pi_x);
BoundReport check_delta(Fraction d, std::uint64_t a, std::uint64_t s, Fraction threshold);
BoundReport check_case4(std::uint64_t a, Fraction threshold);

// Aggregated outcome of a batch of checks of one kind.
struct EnvelopeSummary {
    std::string name;
    std::size_t checked = 0;
    std::size_t violations = 0;
    std::size_t escalations = 0;
    std::optional<BoundReport> tightest;  // smallest margin seen
    std::vector<BoundReport> failures;    // first few violations

    void add(const BoundReport& r);
    bool ok() const { return checked > 0 && violations == 0; }
};

// Rosser-Schoenfeld bracket of sieve-counted pi(x) at each x (x >= 17).
EnvelopeSummary validate_rs_envelope(std::span<const std::uint64_t> xs);

// Fixed-range progression bracket for every l coprime to m at each x.
// Points with x < 50 m^2 are rejected with DomainError.
EnvelopeSummary validate_ap_envelope(std::uint64_t m, std::span<const std::uint64_t> xs);

struct MvSample {
    std::uint64_t x;
    std::uint64_t y;
    std::uint64_t k;
    std::uint64_t l;
};

// Sieve-counted pi(x + y; k, l) - pi(x; k, l) against mv_upper.
EnvelopeSummary validate_mv(std::span<const MvSample> samples);

// `count` integers spread geometrically over [lo, hi], deduplicated.
std::vector<std::uint64_t> log_spaced(std::uint64_t lo, std::uint64_t hi, std::size_t count);

}  // namespace pistar::bounds
