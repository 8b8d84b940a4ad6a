#include "pistar/semigroup.hpp"

#include <limits>
#include <string>

#include "pistar/arith.hpp"
#include "pistar/errors.hpp"

namespace pistar {

SemigroupPair SemigroupPair::make(std::uint64_t a, std::uint64_t b) {
    if (a == 0 || b == 0) throw DomainError("semigroup generators must be positive");
    if (arith::gcd(a, b) != 1) {
        throw NotCoprime("gcd(" + std::to_string(a) + ", " + std::to_string(b) +
                         ") = " + std::to_string(arith::gcd(a, b)));
    }
    const __int128 s = static_cast<__int128>(a) * b - a - b;
    if (s > std::numeric_limits<std::int64_t>::max()) {
        throw DomainError("Frobenius number of (" + std::to_string(a) + ", " + std::to_string(b) +
                          ") exceeds 63 bits");
    }
    const std::uint64_t b_inv = (a >= 2) ? arith::mod_inverse(static_cast<std::int64_t>(b % a), a) : 0;
    return SemigroupPair(a, b, static_cast<std::int64_t>(s), b_inv);
}

std::vector<std::uint64_t> gaps(const SemigroupPair& pair) {
    std::vector<std::uint64_t> out;
    if (pair.frobenius() < 1) return out;
    const auto s = static_cast<std::uint64_t>(pair.frobenius());
    out.reserve(static_cast<std::size_t>((pair.a() - 1) * (pair.b() - 1) / 2));
    for (std::uint64_t n = 1; n <= s; ++n)
        if (!pair.contains(n)) out.push_back(n);
    return out;
}

std::vector<std::uint64_t> apery_set(const SemigroupPair& pair) {
    if (pair.a() < 2) throw DomainError("apery_set requires a >= 2");
    std::vector<std::uint64_t> out(pair.a());
    for (std::uint64_t v = 0; v < pair.a(); ++v) out[v] = pair.b() * v;
    return out;
}

}  // namespace pistar
