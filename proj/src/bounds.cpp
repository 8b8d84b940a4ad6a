#include "pistar/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pistar/arith.hpp"
#include "pistar/errors.hpp"
#include "pistar/exact.hpp"
#include "pistar/primes.hpp"

namespace pistar::bounds {

namespace {

using exact::DoubleField;
using exact::IntervalField;

std::int64_t as_signed(std::uint64_t v) { return static_cast<std::int64_t>(v); }

// Bound formulas, written once over a number field.

template <class F>
auto thm2_rhs_expr(const F& f, std::uint64_t a, std::int64_t s) {
    using std::log;
    const auto sv = f.integer(s);
    return f.ratio(as_signed(a), 2 * as_signed(a - 1)) * sv / log(sv);
}

template <class F>
auto mv_expr(const F& f, double y, std::uint64_t k, std::uint64_t phi_k) {
    using std::log;
    const auto yv = f.real(y);
    return f.integer(2) * yv / (f.integer(as_signed(phi_k)) * log(yv / f.integer(as_signed(k))));
}

template <class F>
auto rs_lower_expr(const F& f, double x) {
    using std::log;
    const auto xv = f.real(x);
    return xv / log(xv);
}

template <class F>
auto rs_upper_expr(const F& f, double x) {
    using std::log;
    const auto xv = f.real(x);
    const auto lx = log(xv);
    return xv / lx * (f.integer(1) + f.integer(3) / (f.integer(2) * lx));
}

template <class F>
auto ap_lower_expr(const F& f, double x, std::uint64_t phi_m) {
    using std::log;
    const auto xv = f.real(x);
    return xv / (f.integer(as_signed(phi_m)) * log(xv));
}

template <class F>
auto ap_upper_expr(const F& f, double x, std::uint64_t phi_m) {
    using std::log;
    const auto xv = f.real(x);
    const auto lx = log(xv);
    return xv / (f.integer(as_signed(phi_m)) * lx) * (f.integer(1) + f.integer(5) / (f.integer(2) * lx));
}

template <class F>
auto delta_expr(const F& f, Fraction d, std::uint64_t a, std::uint64_t s, std::uint64_t phi_a,
                std::uint64_t coprime_count) {
    using std::log;
    const auto dv = f.ratio(d.num, d.den);
    const auto ds = dv * f.integer(as_signed(s));
    const auto log_ds = log(ds);
    const auto one = f.integer(1);
    const auto density = f.integer(2) * f.integer(as_signed(coprime_count)) / f.integer(as_signed(phi_a));
    const auto inflation = one / (one - log(f.integer(as_signed(a))) / log_ds);
    return (one - density * inflation - log_ds / ds) * dv;
}

template <class F>
auto case4_expr(const F& f, std::uint64_t a) {
    using std::log;
    const auto t = f.integer(as_signed(180 * a - 181));
    const auto lt = log(t);
    const auto one = f.integer(1);
    return (one / f.integer(as_signed(a)) - lt / t) / (one + f.integer(3) / (f.integer(2) * lt));
}

template <class L, class R>
BoundReport evaluate(std::string name, std::vector<std::pair<std::string, double>> inputs, Direction dir,
                     L lhs_expr, R rhs_expr) {
    BoundReport r;
    r.name = std::move(name);
    r.inputs = std::move(inputs);
    r.direction = dir;
    const DoubleField df;
    r.lhs = static_cast<double>(lhs_expr(df));
    r.rhs = static_cast<double>(rhs_expr(df));
    const auto diff = [lhs_expr, rhs_expr, dir](unsigned bits) {
        const IntervalField f{bits};
        const exact::Interval l = lhs_expr(f);
        const exact::Interval rr = rhs_expr(f);
        return dir == Direction::Greater ? l - rr : rr - l;
    };
    const auto verdict = (dir == Direction::Greater) ? exact::guarded_greater(r.lhs, r.rhs, diff)
                                                     : exact::guarded_greater(r.rhs, r.lhs, diff);
    r.holds = verdict.holds;
    r.escalated = verdict.escalated;
    r.margin = (dir == Direction::Greater) ? r.lhs - r.rhs : r.rhs - r.lhs;
    r.exact_margin = diff;
    return r;
}

auto constant(std::uint64_t v) {
    return [v](const auto& f) { return f.integer(static_cast<std::int64_t>(v)); };
}

void require_delta_domain(Fraction d, std::uint64_t a, std::uint64_t s) {
    if (d.den <= 0 || d.num <= 0 || d.num > d.den) throw DomainError("delta: require 0 < d <= 1");
    const auto ds_scaled = static_cast<unsigned __int128>(d.num) * s;  // d*S*den
    const auto den = static_cast<unsigned __int128>(d.den);
    if (ds_scaled < 17 * den) throw DomainError("delta: require d*S >= 17");
    if (static_cast<unsigned __int128>(a) * den >= ds_scaled) throw DomainError("delta: require a < d*S");
}

}  // namespace

double thm2_rhs(std::uint64_t a, std::int64_t s) {
    if (a < 3) throw DomainError("thm2_rhs: require a >= 3");
    if (s < 2) throw DomainError("thm2_rhs: require S >= 2");
    return thm2_rhs_expr(DoubleField{}, a, s);
}

double mv_upper(double /*x*/, double y, std::uint64_t k, std::int64_t /*l*/) {
    if (k < 1 || !(static_cast<double>(k) < y)) throw DomainError("mv_upper: require 1 <= k < y");
    return mv_expr(DoubleField{}, y, k, arith::euler_phi(k));
}

double rs_pi_lower(double x) {
    if (!(x >= 17)) throw DomainError("rs_pi_lower: require x >= 17");
    return rs_lower_expr(DoubleField{}, x);
}

double rs_pi_upper(double x) {
    if (!(x > 1)) throw DomainError("rs_pi_upper: require x > 1");
    return rs_upper_expr(DoubleField{}, x);
}

std::pair<double, double> ap_fixed_range_bounds(double x, std::uint64_t m) {
    if (m < 1 || m > 1200) throw DomainError("ap_fixed_range_bounds: require 1 <= m <= 1200");
    if (!(x >= 50.0 * static_cast<double>(m * m))) throw DomainError("ap_fixed_range_bounds: require x >= 50 m^2");
    const auto phi = arith::euler_phi(m);
    return {ap_lower_expr(DoubleField{}, x, phi), ap_upper_expr(DoubleField{}, x, phi)};
}

double delta(Fraction d, std::uint64_t a, std::uint64_t s) {
    require_delta_domain(d, a, s);
    const auto fa = arith::factor(a);
    const auto floor_da = static_cast<std::uint64_t>(static_cast<unsigned __int128>(d.num) * a / d.den);
    return delta_expr(DoubleField{}, d, a, s, arith::euler_phi(fa), arith::coprime_count_through(floor_da, fa));
}

std::uint64_t thm2_upper_decomposition(const SemigroupPair& pair) {
    const std::uint64_t a = pair.a();
    const std::uint64_t b = pair.b();
    if (a < 3) throw DomainError("thm2_upper_decomposition: require a >= 3");
    std::vector<primes::ApCountQuery> queries;
    for (std::uint64_t v = 1; v < a; ++v) {
        if (arith::gcd(v, a) != 1) continue;
        queries.push_back({b * v, a, (b % a) * v % a});
    }
    std::uint64_t total = arith::omega(a);
    for (std::uint64_t c : primes::pi_ap_batch(a, queries)) total += c;
    return total;
}

double case4_constant(std::uint64_t a) {
    if (a < 3 || a > 15) throw DomainError("case4_constant: require 3 <= a <= 15");
    return case4_expr(DoubleField{}, a);
}

std::uint64_t h_worst_s(std::uint64_t a) { return a * a - a - 1; }
std::uint64_t g_worst_s(std::uint64_t a) { return 1000 * a - 1001; }

BoundReport check_thm2(std::uint64_t pi_star, std::uint64_t a, std::int64_t s) {
    if (a < 3 || s < 2) throw DomainError("check_thm2: require a >= 3 and S >= 2");
    return evaluate("thm2", {{"a", double(a)}, {"s", double(s)}}, Direction::Greater, constant(pi_star),
                    [=](const auto& f) { return thm2_rhs_expr(f, a, s); });
}

BoundReport check_rs_lower(std::uint64_t x, std::uint64_t pi_x) {
    if (x < 17) throw DomainError("check_rs_lower: require x >= 17");
    return evaluate("rs_lower", {{"x", double(x)}}, Direction::Greater, constant(pi_x),
                    [=](const auto& f) { return rs_lower_expr(f, double(x)); });
}

BoundReport check_rs_upper(std::uint64_t x, std::uint64_t pi_x) {
    if (x < 2) throw DomainError("check_rs_upper: require x > 1");
    return evaluate("rs_upper", {{"x", double(x)}}, Direction::Less, constant(pi_x),
                    [=](const auto& f) { return rs_upper_expr(f, double(x)); });
}

BoundReport check_ap_lower(std::uint64_t x, std::uint64_t m, std::uint64_t l, std::uint64_t count) {
    ap_fixed_range_bounds(double(x), m);  // domain
    const auto phi = arith::euler_phi(m);
    return evaluate("ap_lower", {{"x", double(x)}, {"m", double(m)}, {"l", double(l)}}, Direction::Greater,
                    constant(count), [=](const auto& f) { return ap_lower_expr(f, double(x), phi); });
}

BoundReport check_ap_upper(std::uint64_t x, std::uint64_t m, std::uint64_t l, std::uint64_t count) {
    ap_fixed_range_bounds(double(x), m);
    const auto phi = arith::euler_phi(m);
    return evaluate("ap_upper", {{"x", double(x)}, {"m", double(m)}, {"l", double(l)}}, Direction::Less,
                    constant(count), [=](const auto& f) { return ap_upper_expr(f, double(x), phi); });
}

BoundReport check_mv(std::uint64_t x, std::uint64_t y, std::uint64_t k, std::uint64_t l, std::uint64_t count) {
    if (k < 1 || k >= y) throw DomainError("check_mv: require 1 <= k < y");
    const auto phi = arith::euler_phi(k);
    return evaluate("mv", {{"x", double(x)}, {"y", double(y)}, {"k", double(k)}, {"l", double(l)}}, Direction::Less,
                    constant(count), [=](const auto& f) { return mv_expr(f, double(y), k, phi); });
}

BoundReport check_pi_upper_a(std::uint64_t x, std::uint64_t a, std::uint64_t pi_x) {
    if (a < 2 || x < 2) throw DomainError("check_pi_upper_a: require a >= 2, x >= 2");
    return evaluate("pi_upper_a", {{"x", double(x)}, {"a", double(a)}}, Direction::Less, constant(pi_x),
                    [=](const auto& f) {
                        using std::log;
                        const auto xv = f.integer(as_signed(x));
                        return xv / log(xv) * f.ratio(as_signed(a), as_signed(a - 1));
                    });
}

BoundReport check_delta(Fraction d, std::uint64_t a, std::uint64_t s, Fraction threshold) {
    require_delta_domain(d, a, s);
    const auto fa = arith::factor(a);
    const auto phi = arith::euler_phi(fa);
    const auto floor_da = static_cast<std::uint64_t>(static_cast<unsigned __int128>(d.num) * a / d.den);
    const auto count = arith::coprime_count_through(floor_da, fa);
    return evaluate("delta", {{"d", d.value()}, {"a", double(a)}, {"s", double(s)}}, Direction::Greater,
                    [=](const auto& f) { return delta_expr(f, d, a, s, phi, count); },
                    [=](const auto& f) { return f.ratio(threshold.num, threshold.den); });
}

BoundReport check_case4(std::uint64_t a, Fraction threshold) {
    if (a < 3 || a > 15) throw DomainError("check_case4: require 3 <= a <= 15");
    return evaluate("case4", {{"a", double(a)}}, Direction::Greater, [=](const auto& f) { return case4_expr(f, a); },
                    [=](const auto& f) { return f.ratio(threshold.num, threshold.den); });
}

void EnvelopeSummary::add(const BoundReport& r) {
    ++checked;
    if (r.escalated) ++escalations;
    if (!r.holds) {
        ++violations;
        if (failures.size() < 16) failures.push_back(r);
    }
    if (!tightest || r.margin < tightest->margin) tightest = r;
}

EnvelopeSummary validate_rs_envelope(std::span<const std::uint64_t> xs) {
    EnvelopeSummary out;
    out.name = "rosser_schoenfeld";
    std::vector<primes::ApCountQuery> queries;
    for (auto x : xs) {
        if (x < 17) throw DomainError("validate_rs_envelope: require x >= 17");
        queries.push_back({x, 1, 0});
    }
    const auto counts = primes::pi_ap_batch(1, queries);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        out.add(check_rs_lower(xs[i], counts[i]));
        out.add(check_rs_upper(xs[i], counts[i]));
    }
    return out;
}

EnvelopeSummary validate_ap_envelope(std::uint64_t m, std::span<const std::uint64_t> xs) {
    EnvelopeSummary out;
    out.name = "ap_fixed_range";
    std::vector<primes::ApCountQuery> queries;
    for (auto x : xs) {
        ap_fixed_range_bounds(double(x), m);
        for (std::uint64_t l = 0; l < m; ++l)
            if (arith::gcd(l, m) == 1) queries.push_back({x, m, l});
    }
    const auto counts = primes::pi_ap_batch(m, queries);
    for (std::size_t i = 0; i < queries.size(); ++i) {
        out.add(check_ap_lower(queries[i].x, m, queries[i].l, counts[i]));
        out.add(check_ap_upper(queries[i].x, m, queries[i].l, counts[i]));
    }
    return out;
}

EnvelopeSummary validate_mv(std::span<const MvSample> samples) {
    EnvelopeSummary out;
    out.name = "montgomery_vaughan";
    std::uint64_t top = 0;
    for (const auto& s : samples) top = std::max(top, s.x + s.y);
    const auto table = primes::primes_in(0, top + 1);
    for (const auto& s : samples) {
        // Primes p with x < p <= x + y.
        auto first = std::upper_bound(table.begin(), table.end(), s.x);
        auto last = std::upper_bound(first, table.end(), s.x + s.y);
        std::uint64_t count = 0;
        const std::uint64_t l = s.l % s.k;
        for (auto it = first; it != last; ++it)
            if (*it % s.k == l) ++count;
        out.add(check_mv(s.x, s.y, s.k, s.l, count));
    }
    return out;
}

std::vector<std::uint64_t> log_spaced(std::uint64_t lo, std::uint64_t hi, std::size_t count) {
    if (lo < 1 || hi < lo || count == 0) throw DomainError("log_spaced: require 1 <= lo <= hi, count >= 1");
    std::vector<std::uint64_t> out;
    const double llo = std::log(double(lo));
    const double lhi = std::log(double(hi));
    for (std::size_t i = 0; i < count; ++i) {
        const double t = (count == 1) ? 0.0 : double(i) / double(count - 1);
        auto v = static_cast<std::uint64_t>(std::llround(std::exp(llo + t * (lhi - llo))));
        out.push_back(std::clamp(v, lo, hi));
    }
    out.front() = lo;
    out.back() = hi;
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace pistar::bounds
