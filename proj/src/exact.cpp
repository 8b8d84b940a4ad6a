#include "pistar/exact.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "pistar/errors.hpp"

namespace pistar::exact {

namespace {

BigInt floor_div(const BigInt& n, const BigInt& d) {
    // d > 0
    BigInt q = n / d;
    if (n < 0 && q * d != n) --q;
    return q;
}

BigInt ceil_div(const BigInt& n, const BigInt& d) { return -floor_div(-n, d); }

Rational round_down(const Rational& r, unsigned bits) {
    const BigInt scale = BigInt(1) << bits;
    const BigInt num = floor_div(boost::multiprecision::numerator(r) * scale, boost::multiprecision::denominator(r));
    return Rational(num, scale);
}

Rational round_up(const Rational& r, unsigned bits) {
    const BigInt scale = BigInt(1) << bits;
    const BigInt num = ceil_div(boost::multiprecision::numerator(r) * scale, boost::multiprecision::denominator(r));
    return Rational(num, scale);
}

Rational pow2(int k) {
    if (k >= 0) return Rational(BigInt(1) << k);
    return Rational(BigInt(1), BigInt(1) << (-k));
}

// Enclosure of 2*atanh(z) = log((1+z)/(1-z)) for rational 0 <= z <= 1/3.
std::pair<Rational, Rational> two_atanh(const Rational& z, unsigned bits) {
    const unsigned work = bits + 16;
    if (z == 0) return {Rational(0), Rational(0)};
    const Rational z2 = z * z;
    // Running power z^(2n+1) kept as an outward-rounded enclosure.
    Rational pow_lo = z;
    Rational pow_hi = z;
    Rational sum_lo = 0;
    Rational sum_hi = 0;
    const Rational eps = pow2(-static_cast<int>(work));
    for (unsigned n = 0;; ++n) {
        const unsigned odd = 2 * n + 1;
        sum_lo += round_down(pow_lo / odd, work);
        sum_hi += round_up(pow_hi / odd, work);
        pow_lo = round_down(pow_lo * z2, work);
        pow_hi = round_up(pow_hi * z2, work);
        // Remaining terms are bounded by z^(2n+3) / (2n+3) / (1 - z^2).
        const Rational tail = round_up(pow_hi / (odd + 2) / (1 - z2), work);
        if (tail < eps || n > 20000) {
            sum_hi += tail;
            break;
        }
    }
    return {round_down(2 * sum_lo, bits), round_up(2 * sum_hi, bits)};
}

// Enclosure of log(x) for rational x > 0.
std::pair<Rational, Rational> log_enclosure(const Rational& x, unsigned bits) {
    // x = y * 2^k with y in [1, 2).
    int k = 0;
    Rational y = x;
    {
        const BigInt& num = boost::multiprecision::numerator(x);
        const BigInt& den = boost::multiprecision::denominator(x);
        k = static_cast<int>(boost::multiprecision::msb(num)) - static_cast<int>(boost::multiprecision::msb(den));
        y = x / pow2(k);
        while (y >= 2) {
            y /= 2;
            ++k;
        }
        while (y < 1) {
            y *= 2;
            --k;
        }
    }
    // Both atanh arguments are at most 1/3.
    // |k| < 2^64, so 72 extra bits absorb the scaling of ln 2.
    const unsigned inner = bits + 72;
    const auto [ln2_lo, ln2_hi] = two_atanh(Rational(1, 3), inner);
    const auto [ly_lo, ly_hi] = two_atanh((y - 1) / (y + 1), inner);
    Rational lo = ly_lo;
    Rational hi = ly_hi;
    if (k >= 0) {
        lo += k * ln2_lo;
        hi += k * ln2_hi;
    } else {
        lo += k * ln2_hi;
        hi += k * ln2_lo;
    }
    return {round_down(lo, bits), round_up(hi, bits)};
}

}  // namespace

Rational from_double(double x) {
    if (!std::isfinite(x)) throw DomainError("from_double: non-finite value");
    if (x == 0) return Rational(0);
    int exp = 0;
    const double mant = std::frexp(x, &exp);  // x = mant * 2^exp, 0.5 <= |mant| < 1
    const auto scaled = static_cast<std::int64_t>(std::ldexp(mant, 53));
    return Rational(scaled) * pow2(exp - 53);
}

Interval::Interval(const Rational& point, unsigned bits)
    : lo_(round_down(point, bits)), hi_(round_up(point, bits)), bits_(bits) {}

Interval::Interval(const Rational& lo, const Rational& hi, unsigned bits)
    : lo_(round_down(lo, bits)), hi_(round_up(hi, bits)), bits_(bits) {
    if (lo > hi) throw DomainError("Interval: lo > hi");
}

Interval operator+(const Interval& x, const Interval& y) {
    return Interval(x.lo_ + y.lo_, x.hi_ + y.hi_, std::max(x.bits_, y.bits_));
}

Interval operator-(const Interval& x, const Interval& y) {
    return Interval(x.lo_ - y.hi_, x.hi_ - y.lo_, std::max(x.bits_, y.bits_));
}

Interval operator-(const Interval& x) { return Interval(-x.hi_, -x.lo_, x.bits_); }

Interval operator*(const Interval& x, const Interval& y) {
    const Rational p[] = {x.lo_ * y.lo_, x.lo_ * y.hi_, x.hi_ * y.lo_, x.hi_ * y.hi_};
    return Interval(*std::min_element(std::begin(p), std::end(p)), *std::max_element(std::begin(p), std::end(p)),
                    std::max(x.bits_, y.bits_));
}

Interval operator/(const Interval& x, const Interval& y) {
    if (y.lo_ <= 0 && y.hi_ >= 0) throw DomainError("Interval division by an interval containing zero");
    const unsigned bits = std::max(x.bits_, y.bits_);
    // 1/y is exact here; rounding happens once in the product.
    const Rational q[] = {x.lo_ / y.lo_, x.lo_ / y.hi_, x.hi_ / y.lo_, x.hi_ / y.hi_};
    return Interval(*std::min_element(std::begin(q), std::end(q)), *std::max_element(std::begin(q), std::end(q)), bits);
}

Interval log(const Interval& x) {
    if (x.lo_ <= 0) throw DomainError("log of an interval that is not strictly positive");
    const auto lo = log_enclosure(x.lo_, x.bits_).first;
    const auto hi = log_enclosure(x.hi_, x.bits_).second;
    return Interval(lo, hi, x.bits_);
}

std::string Interval::str(int digits) const {
    auto render = [digits](const Rational& r, bool up) {
        const BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(digits));
        const BigInt n = boost::multiprecision::numerator(r) * scale;
        const BigInt d = boost::multiprecision::denominator(r);
        const BigInt q = up ? ceil_div(n, d) : floor_div(n, d);
        BigInt mag = q < 0 ? BigInt(-q) : q;
        std::string s = mag.str();
        if (s.size() <= static_cast<std::size_t>(digits)) s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
        s.insert(s.size() - static_cast<std::size_t>(digits), ".");
        return (q < 0 ? "-" : "") + s;
    };
    return "[" + render(lo_, false) + ", " + render(hi_, true) + "]";
}

GuardedVerdict guarded_greater(double lhs, double rhs, const std::function<Interval(unsigned)>& exact_diff) {
    const double scale = std::max(std::abs(lhs), std::abs(rhs));
    if (std::isfinite(lhs) && std::isfinite(rhs) && std::abs(lhs - rhs) > kGuardRelativeMargin * scale) {
        return {lhs > rhs, false};
    }
    for (unsigned bits = 128; bits <= 8192; bits *= 2) {
        const Interval d = exact_diff(bits);
        if (d.positive()) return {true, true};
        if (d.negative() || d.is_zero()) return {false, true};
    }
    throw std::runtime_error("guarded_greater: sign undecided at 8192 bits");
}

}  // namespace pistar::exact
