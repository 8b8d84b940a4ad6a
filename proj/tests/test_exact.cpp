#include <doctest.h>

#include <cmath>

#include "pistar/errors.hpp"
#include "pistar/exact.hpp"

using namespace pistar;
using namespace pistar::exact;

TEST_CASE("from_double is exact") {
    CHECK(from_double(0.5) == Rational(1, 2));
    CHECK(from_double(-3.25) == Rational(-13, 4));
    CHECK(from_double(0.1) != Rational(1, 10));
    CHECK(static_cast<double>(from_double(0.1)) == 0.1);
}

TEST_CASE("interval arithmetic encloses") {
    const Interval third(Rational(1, 3), 64);
    CHECK(third.lo() <= Rational(1, 3));
    CHECK(third.hi() >= Rational(1, 3));
    const auto sum = third + third + third;
    CHECK(sum.lo() <= 1);
    CHECK(sum.hi() >= 1);
    CHECK((third - third).lo() <= 0);
    CHECK((third * Interval(Rational(3), 64)).hi() >= 1);
    CHECK((-third).negative());
    CHECK(Interval(Rational(0), 64).is_zero());
    CHECK_THROWS_AS(Interval(Rational(1), 64) / Interval(Rational(-1), Rational(1), 64), DomainError);
}

TEST_CASE("log enclosures") {
    for (double x : {1.0, 1.5, 2.0, 10.0, 11.0, 1e6, 123456789.0, 0.25}) {
        const auto l = log(Interval(from_double(x), 200));
        const double d = std::log(x);
        CHECK(static_cast<double>(l.lo()) <= d + 1e-15 * std::max(1.0, std::abs(d)));
        CHECK(static_cast<double>(l.hi()) >= d - 1e-15 * std::max(1.0, std::abs(d)));
        CHECK(static_cast<double>(l.hi() - l.lo()) < 1e-40);
    }
    CHECK(log(Interval(Rational(1), 128)).lo() <= 0);
    CHECK(log(Interval(Rational(1), 128)).hi() >= 0);
    CHECK_THROWS_AS(log(Interval(Rational(0), 64)), DomainError);
}

TEST_CASE("guarded comparisons") {
    const auto clear = guarded_greater(2.0, 1.0, [](unsigned) -> Interval { throw std::logic_error("unused"); });
    CHECK(clear.holds);
    CHECK_FALSE(clear.escalated);

    // ln 2 + ln 3 - ln 6 is exactly zero but evaluates near 1e-16 in doubles.
    const double lhs = std::log(2.0) + std::log(3.0);
    const double rhs = std::log(6.0);
    const auto tie = guarded_greater(lhs, rhs, [](unsigned bits) {
        const Interval two(Rational(2), bits);
        const Interval three(Rational(3), bits);
        const Interval six(Rational(6), bits);
        return log(two) + log(three) - log(six) + Interval(Rational(1, 1'000'000'000'000LL), bits);
    });
    CHECK(tie.escalated);
    CHECK(tie.holds);

    const auto below = guarded_greater(1.0, 1.0 + 1e-12, [](unsigned bits) {
        return Interval(Rational(-1, 1'000'000'000'000LL), bits);
    });
    CHECK(below.escalated);
    CHECK_FALSE(below.holds);
}
