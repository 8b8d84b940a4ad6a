#include "pistar/arith.hpp"

#include <cmath>
#include <numeric>
#include <string>
#include <tuple>
#include <utility>

#include "pistar/errors.hpp"

namespace pistar::arith {

namespace {

std::vector<std::uint32_t> build_small_primes() {
    constexpr std::uint32_t limit = 1u << 16;
    std::vector<bool> composite(limit, false);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i < limit; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        for (std::uint64_t j = std::uint64_t{i} * i; j < limit; j += i) composite[j] = true;
    }
    return out;
}

// Squarefree divisors of a as (d, mu(d)) pairs.
std::vector<std::pair<std::uint64_t, int>> squarefree_divisors(const FactoredInteger& f) {
    std::vector<std::pair<std::uint64_t, int>> divs{{1, 1}};
    for (const auto& pp : f.factors()) {
        const auto n = divs.size();
        for (std::size_t i = 0; i < n; ++i) divs.emplace_back(divs[i].first * pp.prime, -divs[i].second);
    }
    return divs;
}

}  // namespace

FactoredInteger::FactoredInteger(std::uint64_t n, std::vector<PrimePower> factors)
    : n_(n), factors_(std::move(factors)) {}

const std::vector<std::uint32_t>& small_primes() {
    static const std::vector<std::uint32_t> table = build_small_primes();
    return table;
}

std::uint64_t gcd(std::uint64_t x, std::uint64_t y) { return std::gcd(x, y); }

std::uint64_t mod_inverse(std::int64_t x, std::uint64_t m) {
    if (m < 2) throw DomainError("mod_inverse: modulus must be >= 2");
    const auto mm = static_cast<__int128>(m);
    __int128 r0 = mm;
    __int128 r1 = ((static_cast<__int128>(x) % mm) + mm) % mm;
    __int128 t0 = 0;
    __int128 t1 = 1;
    while (r1 != 0) {
        const __int128 q = r0 / r1;
        std::tie(r0, r1) = std::pair{r1, r0 - q * r1};
        std::tie(t0, t1) = std::pair{t1, t0 - q * t1};
    }
    if (r0 != 1) {
        throw NotInvertible("mod_inverse: " + std::to_string(x) + " is not invertible mod " +
                            std::to_string(m));
    }
    if (t0 < 0) t0 += mm;
    return static_cast<std::uint64_t>(t0);
}

FactoredInteger factor(std::uint64_t n) {
    std::vector<PrimePower> out;
    std::uint64_t rest = n;
    auto strip = [&](std::uint64_t p) {
        unsigned k = 0;
        while (rest % p == 0) {
            rest /= p;
            ++k;
        }
        if (k > 0) out.push_back({p, k});
    };
    for (std::uint32_t p : small_primes()) {
        if (std::uint64_t{p} * p > rest) break;
        strip(p);
    }
    // Past the table every prime factor left is >= 2^16.
    for (std::uint64_t d = (1u << 16) + 1; d <= rest / d; d += 2) strip(d);
    if (rest > 1) out.push_back({rest, 1});
    return FactoredInteger(n, std::move(out));
}

std::uint64_t euler_phi(const FactoredInteger& f) {
    std::uint64_t phi = f.value();
    for (const auto& pp : f.factors()) phi = phi / pp.prime * (pp.prime - 1);
    return phi;
}
std::uint64_t euler_phi(std::uint64_t n) { return euler_phi(factor(n)); }

unsigned omega(const FactoredInteger& f) { return static_cast<unsigned>(f.factors().size()); }
unsigned omega(std::uint64_t n) { return omega(factor(n)); }

int mobius(const FactoredInteger& f) {
    for (const auto& pp : f.factors())
        if (pp.exponent > 1) return 0;
    return f.factors().size() % 2 == 0 ? 1 : -1;
}
int mobius(std::uint64_t n) { return mobius(factor(n)); }

std::uint64_t coprime_count_through(std::uint64_t n, const FactoredInteger& a) {
    std::int64_t total = 0;
    for (const auto& [d, mu] : squarefree_divisors(a)) total += mu * static_cast<std::int64_t>(n / d);
    return static_cast<std::uint64_t>(total);
}

std::uint64_t coprime_count_through(std::uint64_t n, std::uint64_t a) {
    return coprime_count_through(n, factor(a));
}

std::uint64_t coprime_count_up_to(double t, std::uint64_t a) {
    if (!(t >= 0)) throw DomainError("coprime_count_up_to: t must be >= 0");
    return coprime_count_through(static_cast<std::uint64_t>(std::floor(t)), a);
}

std::uint64_t coprime_sum(std::uint64_t a) {
    if (a < 2) throw DomainError("coprime_sum: a must be >= 2");
    // phi(a) is even for a >= 3; a = 2 gives 2*1/2.
    const auto wide = static_cast<unsigned __int128>(a) * euler_phi(a) / 2;
    return static_cast<std::uint64_t>(wide);
}

}  // namespace pistar::arith
