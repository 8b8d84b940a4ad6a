#pragma once

// Outward-rounded rational interval arithmetic, used to re-decide strict
// inequalities whose double-precision margin is too thin to trust.
//
// Endpoints are dyadic rationals rounded outward to `bits` fractional bits
// after every operation, so every true value stays enclosed. log() is
// evaluated by the atanh series with an explicit tail bound.

#include <cstdint>
#include <functional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace pistar::exact {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// The exact value of a finite double.
Rational from_double(double x);

class Interval {
public:
    Interval(const Rational& point, unsigned bits);
    Interval(const Rational& lo, const Rational& hi, unsigned bits);

    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }
    unsigned bits() const { return bits_; }

    bool positive() const { return lo_ > 0; }
    bool negative() const { return hi_ < 0; }
    bool is_zero() const { return lo_ == 0 && hi_ == 0; }

    friend Interval operator+(const Interval& x, const Interval& y);
    friend Interval operator-(const Interval& x, const Interval& y);
    friend Interval operator*(const Interval& x, const Interval& y);
    // Throws DomainError when y contains zero.
    friend Interval operator/(const Interval& x, const Interval& y);
    friend Interval operator-(const Interval& x);

    // Natural log; throws DomainError unless lo > 0.
    friend Interval log(const Interval& x);

    // Decimal rendering of both endpoints, `digits` after the point.
    std::string str(int digits = 20) const;

private:
    Rational lo_;
    Rational hi_;
    unsigned bits_;
};

// Number field adaptors so a bound formula can be written once and
// evaluated both in double and in interval arithmetic.
struct DoubleField {
    using value_type = double;
    double integer(std::int64_t v) const { return static_cast<double>(v); }
    double ratio(std::int64_t num, std::int64_t den) const {
        return static_cast<double>(num) / static_cast<double>(den);
    }
    double real(double x) const { return x; }
};

struct IntervalField {
    using value_type = Interval;
    unsigned bits;
    Interval integer(std::int64_t v) const { return Interval(Rational(v), bits); }
    Interval ratio(std::int64_t num, std::int64_t den) const { return Interval(Rational(num, den), bits); }
    Interval real(double x) const { return Interval(from_double(x), bits); }
};

// Inequality margins closer than this (relative) are re-decided exactly.
inline constexpr double kGuardRelativeMargin = 1e-9;

struct GuardedVerdict {
    bool holds;
    bool escalated;  // true when the exact path decided
};

// Decides lhs > rhs. When the doubles are separated by at least
// kGuardRelativeMargin (relative to the larger magnitude) they decide;
// otherwise `exact_diff(bits)` must return an interval enclosing lhs - rhs,
// and precision doubles until its sign is known. An exact zero means the
// strict inequality fails. Throws std::runtime_error if 8192 bits do not
// settle the sign.
GuardedVerdict guarded_greater(double lhs, double rhs, const std::function<Interval(unsigned)>& exact_diff);

}  // namespace pistar::exact
