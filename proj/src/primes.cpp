#include "pistar/primes.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

#include "pistar/errors.hpp"

namespace pistar::primes {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

std::vector<std::uint32_t> simple_sieve(std::uint64_t limit) {
    std::vector<bool> composite(limit + 1, false);
    std::vector<std::uint32_t> out;
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        out.push_back(static_cast<std::uint32_t>(i));
        for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
    }
    return out;
}

struct BaseTable {
    std::mutex mu;
    std::uint64_t limit = 0;
    std::shared_ptr<const std::vector<std::uint32_t>> primes = std::make_shared<std::vector<std::uint32_t>>();
};

BaseTable& base_table() {
    static BaseTable table;
    return table;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    static constexpr std::uint64_t kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (std::uint64_t p : kBases) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    std::uint64_t d = n - 1;
    unsigned r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    for (std::uint64_t a : kBases) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (unsigned i = 1; i < r; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

std::shared_ptr<const std::vector<std::uint32_t>> base_primes(std::uint64_t limit) {
    auto& table = base_table();
    std::lock_guard lock(table.mu);
    if (limit > table.limit) {
        // Grow geometrically so repeated small extensions stay cheap.
        const std::uint64_t target = std::max<std::uint64_t>({limit, 2 * table.limit, 1u << 16});
        table.primes = std::make_shared<const std::vector<std::uint32_t>>(simple_sieve(target));
        table.limit = target;
    }
    return table.primes;
}

SieveSegment::SieveSegment(std::uint64_t lo, std::uint64_t hi)
    : SieveSegment(lo, hi, std::span<const std::uint32_t>{}) {}

SieveSegment::SieveSegment(std::uint64_t lo, std::uint64_t hi, std::span<const std::uint32_t> base)
    : lo_(lo), hi_(hi) {
    if (hi <= lo) throw DomainError("SieveSegment: empty range");
    first_odd_ = (lo <= 3) ? 3 : (lo | 1);
    odd_count_ = (hi > first_odd_) ? (hi - first_odd_ + 1) / 2 : 0;
    has_two_ = lo <= 2 && hi > 2;
    words_.assign((odd_count_ + 63) / 64, ~std::uint64_t{0});
    if (odd_count_ % 64 != 0) words_.back() &= (std::uint64_t{1} << (odd_count_ % 64)) - 1;
    if (base.empty()) {
        const auto owned = base_primes(static_cast<std::uint64_t>(std::sqrt(static_cast<double>(hi))) + 2);
        sieve(*owned);
    } else {
        sieve(base);
    }
}

void SieveSegment::sieve(std::span<const std::uint32_t> base) {
    if (odd_count_ == 0) return;
    for (std::uint32_t p32 : base) {
        const std::uint64_t p = p32;
        if (p == 2) continue;
        if (p * p >= hi_) break;
        std::uint64_t start = std::max(p * p, (first_odd_ + p - 1) / p * p);
        if (start % 2 == 0) start += p;
        for (std::uint64_t i = (start - first_odd_) / 2; i < odd_count_; i += p) {
            words_[i / 64] &= ~(std::uint64_t{1} << (i % 64));
        }
    }
}

bool SieveSegment::test(std::uint64_t n) const {
    if (n < lo_ || n >= hi_) throw DomainError("SieveSegment::test: n outside segment");
    if (n == 2) return true;
    if (n < 3 || n % 2 == 0) return false;
    const std::uint64_t i = (n - first_odd_) / 2;
    return (words_[i / 64] >> (i % 64)) & 1;
}

std::uint64_t SieveSegment::count() const {
    std::uint64_t total = has_two_ ? 1 : 0;
    for (std::uint64_t w : words_) total += static_cast<std::uint64_t>(std::popcount(w));
    return total;
}

std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::uint64_t> out;
    for_each_prime(lo, hi, [&](std::uint64_t p) { out.push_back(p); });
    return out;
}

std::uint64_t pi(std::uint64_t x, std::uint64_t window) {
    if (x < 2) return 0;
    if (window < 2) throw DomainError("pi: window must be >= 2");
    const std::uint64_t hi = x + 1;
    const auto base = base_primes(static_cast<std::uint64_t>(std::sqrt(static_cast<double>(hi))) + 2);
    std::uint64_t total = 0;
    for (std::uint64_t start = 0; start < hi;) {
        const std::uint64_t end = (hi - start > window) ? start + window : hi;
        total += SieveSegment(start, end, *base).count();
        start = end;
    }
    return total;
}

std::uint64_t pi_ap(const ApCountQuery& q) {
    if (q.m == 0 || q.l >= q.m) throw DomainError("pi_ap: require m >= 1 and 0 <= l < m");
    std::uint64_t total = 0;
    if (q.x < 2) return 0;
    for_each_prime(0, q.x + 1, [&](std::uint64_t p) {
        if (p % q.m == q.l) ++total;
    });
    return total;
}

std::vector<std::uint64_t> pi_ap_all(std::uint64_t x, std::uint64_t m) {
    if (m == 0) throw DomainError("pi_ap_all: m must be >= 1");
    std::vector<std::uint64_t> counts(m, 0);
    if (x < 2) return counts;
    for_each_prime(0, x + 1, [&](std::uint64_t p) { ++counts[p % m]; });
    return counts;
}

std::vector<std::uint64_t> pi_ap_batch(std::uint64_t m, std::span<const ApCountQuery> queries) {
    if (m == 0) throw DomainError("pi_ap_batch: m must be >= 1");
    for (const auto& q : queries) {
        if (q.m != m || q.l >= m) throw DomainError("pi_ap_batch: query modulus or residue mismatch");
    }
    std::vector<std::size_t> order(queries.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return queries[i].x < queries[j].x; });

    std::vector<std::uint64_t> result(queries.size(), 0);
    std::vector<std::uint64_t> running(m, 0);
    std::size_t next = 0;
    auto settle_below = [&](std::uint64_t p) {
        // Every query with x < p is final once p is reached.
        while (next < order.size() && queries[order[next]].x < p) {
            result[order[next]] = running[queries[order[next]].l];
            ++next;
        }
    };
    if (!queries.empty()) {
        const std::uint64_t max_x = queries[order.back()].x;
        if (max_x >= 2) {
            for_each_prime(0, max_x + 1, [&](std::uint64_t p) {
                settle_below(p);
                ++running[p % m];
            });
        }
    }
    for (; next < order.size(); ++next) result[order[next]] = running[queries[order[next]].l];
    return result;
}

}  // namespace pistar::primes
