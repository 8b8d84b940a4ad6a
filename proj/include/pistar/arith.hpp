#pragma once

// Elementary arithmetic: gcd, modular inverse, factorization and the
// multiplicative functions built on it (phi, omega, mu), plus the
// coprime counting sums used by the density bounds.

#include <cstdint>
#include <vector>

namespace pistar::arith {

struct PrimePower {
    std::uint64_t prime;
    unsigned exponent;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// n together with its prime factorization, primes strictly increasing.
class FactoredInteger {
public:
    FactoredInteger(std::uint64_t n, std::vector<PrimePower> factors);

    std::uint64_t value() const { return n_; }
    const std::vector<PrimePower>& factors() const { return factors_; }

private:
    std::uint64_t n_;
    std::vector<PrimePower> factors_;
};

std::uint64_t gcd(std::uint64_t x, std::uint64_t y);

// y in [1, m-1] with x*y = 1 (mod m). Throws NotInvertible when gcd(x, m) > 1.
std::uint64_t mod_inverse(std::int64_t x, std::uint64_t m);

// Trial division over a precomputed table of primes below 2^16, then odd
// candidates. Intended for inputs up to ~10^12; exact for any 64-bit n.
FactoredInteger factor(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);
std::uint64_t euler_phi(const FactoredInteger& f);
unsigned omega(std::uint64_t n);
unsigned omega(const FactoredInteger& f);
int mobius(std::uint64_t n);
int mobius(const FactoredInteger& f);

// #{1 <= v <= n : gcd(v, a) = 1} via sum_{d | a} mu(d) floor(n / d).
std::uint64_t coprime_count_through(std::uint64_t n, std::uint64_t a);
std::uint64_t coprime_count_through(std::uint64_t n, const FactoredInteger& a);

// Same count with a real bound t >= 0; floor is applied internally.
std::uint64_t coprime_count_up_to(double t, std::uint64_t a);

// Sum of v in [1, a-1] coprime to a. Evaluated as a*phi(a)/2 (a >= 2).
std::uint64_t coprime_sum(std::uint64_t a);

// Small primes below 2^16, ascending.
const std::vector<std::uint32_t>& small_primes();

}  // namespace pistar::arith
