#pragma once

// Segmented sieve of Eratosthenes over odd numbers, with prime counting
// pi(x) and pi(x; m, l), and a deterministic 64-bit primality test for
// one-off membership queries.

#include <bit>
#include <cmath>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace pistar::primes {

// Numbers (not bits) covered by one sieve window.
inline constexpr std::uint64_t kDefaultWindow = std::uint64_t{1} << 20;

// Deterministic Miller-Rabin with the first twelve prime bases; exact for
// every n < 2^64.
bool is_prime(std::uint64_t n);

// All primes <= limit, by a plain (unsegmented) sieve. Shared and immutable;
// the table grows monotonically under a lock and old snapshots stay valid.
std::shared_ptr<const std::vector<std::uint32_t>> base_primes(std::uint64_t limit);

// Primality bitmap for [lo, hi). Only odd numbers are stored; 2 is handled
// explicitly.
class SieveSegment {
public:
    SieveSegment(std::uint64_t lo, std::uint64_t hi);
    // Sieves with a caller-supplied base table covering sqrt(hi - 1).
    SieveSegment(std::uint64_t lo, std::uint64_t hi, std::span<const std::uint32_t> base);

    std::uint64_t lo() const { return lo_; }
    std::uint64_t hi() const { return hi_; }

    // n must lie in [lo, hi).
    bool test(std::uint64_t n) const;
    std::uint64_t count() const;

    template <class F>
    void for_each(F&& f) const {
        if (has_two_) f(std::uint64_t{2});
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits != 0) {
                const auto i = static_cast<std::uint64_t>(w * 64 + std::countr_zero(bits));
                f(first_odd_ + 2 * i);
                bits &= bits - 1;
            }
        }
    }

private:
    void sieve(std::span<const std::uint32_t> base);

    std::uint64_t lo_;
    std::uint64_t hi_;
    std::uint64_t first_odd_;
    std::uint64_t odd_count_;
    bool has_two_;
    std::vector<std::uint64_t> words_;
};

// Calls f(p) for every prime p in [lo, hi), ascending, one window at a time.
template <class F>
void for_each_prime(std::uint64_t lo, std::uint64_t hi, F&& f, std::uint64_t window = kDefaultWindow) {
    if (hi <= lo) return;
    const auto base = base_primes(static_cast<std::uint64_t>(std::sqrt(static_cast<double>(hi))) + 2);
    for (std::uint64_t start = lo; start < hi;) {
        const std::uint64_t end = (hi - start > window) ? start + window : hi;
        SieveSegment(start, end, *base).for_each(f);
        start = end;
    }
}

std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi);

// Number of primes <= x.
std::uint64_t pi(std::uint64_t x, std::uint64_t window = kDefaultWindow);

struct ApCountQuery {
    std::uint64_t x;
    std::uint64_t m;
    std::uint64_t l;
};

// Primes p <= x with p = l (mod m). Requires m >= 1 and l < m.
std::uint64_t pi_ap(const ApCountQuery& q);

// counts[l] = pi(x; m, l) for every l in [0, m).
std::vector<std::uint64_t> pi_ap_all(std::uint64_t x, std::uint64_t m);

// Answers many queries sharing one modulus in a single streaming pass.
// Result order matches the input order.
std::vector<std::uint64_t> pi_ap_batch(std::uint64_t m, std::span<const ApCountQuery> queries);

}  // namespace pistar::primes
