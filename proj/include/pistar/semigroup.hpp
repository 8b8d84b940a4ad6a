#pragma once

// The numerical semigroup <a, b> = {a*u + b*v : u, v >= 0} for coprime a, b.
//
// Membership uses the Apery criterion with respect to a: the smallest element
// of <a, b> in residue class r (mod a) is b*v0 where v0 = r * b^{-1} mod a,
// so n is a member iff n >= b * ((n * b^{-1}) mod a). The pair is kept in the
// order given; the formula always treats the first generator as the modulus.

#include <cstdint>
#include <vector>

namespace pistar {

class SemigroupPair {
public:
    // Throws NotCoprime when gcd(a, b) > 1, DomainError when a or b is zero
    // or a*b does not fit the 63-bit range.
    static SemigroupPair make(std::uint64_t a, std::uint64_t b);

    std::uint64_t a() const { return a_; }
    std::uint64_t b() const { return b_; }
    // Frobenius number a*b - a - b; -1 when either generator is 1.
    std::int64_t frobenius() const { return s_; }
    // b^{-1} mod a; 0 when a == 1.
    std::uint64_t b_inv_mod_a() const { return b_inv_; }

    bool contains(std::uint64_t n) const {
        if (a_ == 1) return true;
        const std::uint64_t v0 =
            static_cast<std::uint64_t>(static_cast<unsigned __int128>(n % a_) * b_inv_ % a_);
        return static_cast<unsigned __int128>(n) >= static_cast<unsigned __int128>(b_) * v0;
    }

    friend bool operator==(const SemigroupPair&, const SemigroupPair&) = default;

private:
    SemigroupPair(std::uint64_t a, std::uint64_t b, std::int64_t s, std::uint64_t b_inv)
        : a_(a), b_(b), s_(s), b_inv_(b_inv) {}

    std::uint64_t a_;
    std::uint64_t b_;
    std::int64_t s_;
    std::uint64_t b_inv_;
};

// Positive integers not in <a, b>, ascending. Empty when S < 1.
std::vector<std::uint64_t> gaps(const SemigroupPair& pair);

// [b*v for v = 0..a-1]: the least member of each residue class mod a.
std::vector<std::uint64_t> apery_set(const SemigroupPair& pair);

}  // namespace pistar
