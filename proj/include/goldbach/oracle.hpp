#pragma once

// Trusted reference implementations. Nothing in here depends on the Wilson
// machinery, so every other module can be validated against it.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "goldbach/caps.hpp"
#include "goldbach/error.hpp"

namespace goldbach::oracle {

/// Flat Eratosthenes bit table: bit j is set iff j is prime, 0 <= j <= limit.
class PrimeTable {
public:
    PrimeTable() = default;

    std::uint64_t limit() const noexcept { return limit_; }

    bool is_prime(std::uint64_t j) const {
        if (j > limit_) {
            throw DomainError("prime table queried at " + std::to_string(j) +
                              " beyond its limit " + std::to_string(limit_));
        }
        return test(j);
    }

    bool operator[](std::uint64_t j) const { return is_prime(j); }

    /// Unchecked access for hot loops; j must be <= limit().
    bool test(std::uint64_t j) const noexcept { return (words_[j >> 6] >> (j & 63)) & 1u; }

    std::uint64_t count() const noexcept {
        std::uint64_t total = 0;
        for (auto w : words_) total += static_cast<std::uint64_t>(__builtin_popcountll(w));
        return total;
    }

    /// Primes in ascending order.
    std::vector<std::uint64_t> primes() const {
        std::vector<std::uint64_t> out;
        for (std::uint64_t j = 2; j <= limit_; ++j)
            if (test(j)) out.push_back(j);
        return out;
    }

    std::optional<std::uint64_t> largest() const {
        for (std::uint64_t j = limit_ + 1; j-- > 2;)
            if (test(j)) return j;
        return std::nullopt;
    }

private:
    friend PrimeTable build_sieve(std::uint64_t, const Caps&);

    std::uint64_t limit_ = 0;
    std::vector<std::uint64_t> words_;
};

inline PrimeTable build_sieve(std::uint64_t limit, const Caps& caps = {}) {
    if (limit < 2) throw DomainError("sieve limit must be >= 2, got " + std::to_string(limit));
    if (limit > caps.sieve_cap) {
        throw CapExceeded("sieve limit " + std::to_string(limit) + " exceeds cap " +
                          std::to_string(caps.sieve_cap));
    }
    PrimeTable table;
    table.limit_ = limit;
    table.words_.assign(limit / 64 + 1, ~std::uint64_t{0});
    auto clear = [&](std::uint64_t j) { table.words_[j >> 6] &= ~(std::uint64_t{1} << (j & 63)); };
    clear(0);
    clear(1);
    for (std::uint64_t p = 2; p * p <= limit; ++p) {
        if (!table.test(p)) continue;
        for (std::uint64_t m = p * p; m <= limit; m += p) clear(m);
    }
    // Bits past the limit in the final word stay meaningless; mask them off
    // so count() is exact.
    const auto tail = (limit + 1) & 63;
    if (tail != 0) table.words_.back() &= (std::uint64_t{1} << tail) - 1;
    return table;
}

/// Trial division. Exact over the full 64-bit range.
constexpr bool is_prime(std::uint64_t j) noexcept {
    if (j < 2) return false;
    if (j < 4) return true;
    if (j % 2 == 0 || j % 3 == 0) return false;
    for (std::uint64_t d = 5; d <= j / d; d += 6) {
        if (j % d == 0 || j % (d + 2) == 0) return false;
    }
    return true;
}

/// Number of p in [3, two_n/2] with p and two_n - p both prime.
inline std::uint64_t count_bruteforce(std::uint64_t two_n) {
    if (two_n < 6 || two_n % 2 != 0) {
        throw DomainError("expected an even number >= 6, got " + std::to_string(two_n));
    }
    std::uint64_t count = 0;
    for (std::uint64_t p = 3; p <= two_n / 2; p += 2) {
        if (is_prime(p) && is_prime(two_n - p)) ++count;
    }
    return count;
}

/// Smallest prime p with lo < p <= hi that does not divide `excluding_divisor_of`
/// (when given). Returns nullopt if no such prime exists.
inline std::optional<std::uint64_t> prime_in_range(std::uint64_t lo, std::uint64_t hi,
                                                   std::optional<std::uint64_t> excluding_divisor_of = {}) {
    if (lo > hi) throw DomainError("prime_in_range requires lo <= hi");
    for (std::uint64_t p = lo + 1; p <= hi && p > lo; ++p) {
        if (!is_prime(p)) continue;
        if (excluding_divisor_of && *excluding_divisor_of % p == 0) continue;
        return p;
    }
    return std::nullopt;
}

} // namespace goldbach::oracle
