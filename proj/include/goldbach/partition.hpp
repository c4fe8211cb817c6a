#pragma once

// Goldbach partition counts |B_n|: the Wilson dot product, a sieve two-pointer
// scan, and a shifted-bitset sweep for whole ranges.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "goldbach/caps.hpp"
#include "goldbach/detail/popcount.hpp"
#include "goldbach/error.hpp"
#include "goldbach/oracle.hpp"
#include "goldbach/sequences.hpp"
#include "goldbach/wilson.hpp"

namespace goldbach {

enum class Backend { wilson_exact, sieve_twopointer, bitset_sweep, brute_force };

inline std::string_view to_string(Backend backend) {
    switch (backend) {
    case Backend::wilson_exact: return "wilson_exact";
    case Backend::sieve_twopointer: return "sieve_twopointer";
    case Backend::bitset_sweep: return "bitset_sweep";
    case Backend::brute_force: return "brute_force";
    }
    return "unknown";
}

/// Prime indicators of the upper (descending) and lower (ascending) pair members.
struct BooleanVectors {
    std::uint64_t n = 3;
    std::vector<std::uint8_t> upper_bits;
    std::vector<std::uint8_t> lower_bits;

    /// Dot product of the two vectors.
    std::uint64_t dot() const noexcept {
        std::uint64_t sum = 0;
        for (std::size_t i = 0; i < upper_bits.size(); ++i) sum += upper_bits[i] & lower_bits[i];
        return sum;
    }
};

struct PartitionCount {
    std::uint64_t two_n = 6;
    std::uint64_t count = 0;
    Backend backend = Backend::sieve_twopointer;

    friend bool operator==(const PartitionCount&, const PartitionCount&) = default;
};

namespace detail {

inline void require_even_target(std::uint64_t two_n) {
    if (two_n < 6 || two_n % 2 != 0) {
        throw DomainError("expected an even number >= 6, got " + std::to_string(two_n));
    }
}

inline void require_wilson_cap(std::uint64_t two_n, const Caps& caps) {
    if (two_n > caps.wilson_count_cap) {
        throw CapExceeded("2n = " + std::to_string(two_n) + " exceeds the Wilson backend cap " +
                          std::to_string(caps.wilson_count_cap));
    }
}

} // namespace detail

inline BooleanVectors boolean_vectors(std::uint64_t n, const Caps& caps = {}) {
    const auto size = pair_count(n);
    detail::require_wilson_cap(2 * n, caps);
    BooleanVectors out;
    out.n = n;
    out.upper_bits.reserve(size);
    out.lower_bits.reserve(size);
    for (auto label : upper_sequence(n)) out.upper_bits.push_back(wilson_indicator(label).indicator);
    for (auto label : lower_sequence(n)) out.lower_bits.push_back(wilson_indicator(label).indicator);
    return out;
}

/// Sum over i of F(2i+1) F(2(n-1-i)+1) using a precomputed indicator table.
inline PartitionCount count_wilson(std::uint64_t n, const WilsonTable& table) {
    const auto size = pair_count(n);
    std::uint64_t count = 0;
    for (std::uint64_t i = 1; i <= size; ++i) {
        count += table(2 * i + 1) && table(2 * (n - 1 - i) + 1);
    }
    return {2 * n, count, Backend::wilson_exact};
}

inline PartitionCount count_wilson(std::uint64_t n, const Caps& caps = {}) {
    const auto vectors = boolean_vectors(n, caps);
    return {2 * n, vectors.dot(), Backend::wilson_exact};
}

/// Two-pointer scan over an ascending list of primes that covers [3, two_n - 3].
/// The prime 2 may be present; it is skipped.
inline std::uint64_t count_twopointer(std::uint64_t two_n, std::span<const std::uint64_t> primes) {
    auto first = std::lower_bound(primes.begin(), primes.end(), std::uint64_t{3});
    auto last = std::upper_bound(first, primes.end(), two_n - 3);
    if (first == last) return 0;
    const auto* lo = &*first;
    const auto* hi = &*(last - 1);
    std::uint64_t count = 0;
    while (lo <= hi) {
        const auto sum = *lo + *hi;
        count += sum == two_n;
        lo += sum <= two_n;
        hi -= sum >= two_n;
    }
    return count;
}

/// Sieve table plus its ascending prime list, reusable across many targets.
///
/// count() walks the ascending pointer over primes p <= n and resolves the
/// descending side 2n - p with a direct table lookup instead of a second
/// pointer; the loop has no data-dependent branches.
class SieveIndex {
public:
    explicit SieveIndex(std::uint64_t limit, const Caps& caps = {})
        : table_(oracle::build_sieve(limit, caps)), primes_(table_.primes()) {}

    std::uint64_t limit() const noexcept { return table_.limit(); }
    const oracle::PrimeTable& table() const noexcept { return table_; }
    std::span<const std::uint64_t> primes() const noexcept { return primes_; }

    PartitionCount count(std::uint64_t two_n) const {
        detail::require_even_target(two_n);
        if (two_n > limit()) throw DomainError("sieve index does not cover " + std::to_string(two_n));
        std::uint64_t count = 0;
        // primes_[0] == 2 is skipped: only odd primes take part.
        for (std::size_t k = 1; k < primes_.size() && primes_[k] <= two_n / 2; ++k) {
            count += table_.test(two_n - primes_[k]);
        }
        return {two_n, count, Backend::sieve_twopointer};
    }

private:
    oracle::PrimeTable table_;
    std::vector<std::uint64_t> primes_;
};

inline PartitionCount count_sieve(std::uint64_t two_n, const Caps& caps = {}) {
    detail::require_even_target(two_n);
    return SieveIndex(two_n, caps).count(two_n);
}

/// Odd-only prime bits: bit k is set iff 2k+1 is prime, for 2k+1 <= limit.
class OddPrimeBits {
public:
    explicit OddPrimeBits(std::uint64_t limit) : bits_((limit + 1) / 2) {
        words_.assign(bits_ / 64 + 2, 0);
        for (std::uint64_t k = 1; k < bits_; ++k) set(k);
        for (std::uint64_t p = 3; bits_ > 0 && p * p <= 2 * bits_ - 1; p += 2) {
            if (!test((p - 1) / 2)) continue;
            for (std::uint64_t m = p * p; m <= 2 * bits_ - 1; m += 2 * p) clear((m - 1) / 2);
        }
    }

    std::uint64_t bits() const noexcept { return bits_; }
    std::span<const std::uint64_t> words() const noexcept { return words_; }
    bool test(std::uint64_t k) const noexcept { return (words_[k >> 6] >> (k & 63)) & 1u; }

private:
    void set(std::uint64_t k) noexcept { words_[k >> 6] |= std::uint64_t{1} << (k & 63); }
    void clear(std::uint64_t k) noexcept { words_[k >> 6] &= ~(std::uint64_t{1} << (k & 63)); }

    std::uint64_t bits_;
    std::vector<std::uint64_t> words_;
};

namespace detail {

inline void require_sweep_range(std::uint64_t lo, std::uint64_t hi, const Caps& caps) {
    require_even_target(lo);
    if (hi % 2 != 0 || hi < lo) {
        throw DomainError("sweep bounds must be even with lo <= hi, got [" + std::to_string(lo) + ", " +
                          std::to_string(hi) + "]");
    }
    if (hi > caps.sweep_cap) {
        throw CapExceeded("sweep bound " + std::to_string(hi) + " exceeds cap " + std::to_string(caps.sweep_cap));
    }
}

/// Runs body(index) for index in [0, count) on `jobs` threads.
template <class Body>
void parallel_for(std::size_t count, unsigned jobs, Body&& body) {
    if (jobs <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    constexpr std::size_t chunk = 16;
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const auto begin = next.fetch_add(chunk, std::memory_order_relaxed);
            if (begin >= count) return;
            const auto end = std::min(count, begin + chunk);
            for (auto i = begin; i < end; ++i) body(i);
        }
    };
    std::vector<std::jthread> pool;
    const auto threads = std::min<std::size_t>(jobs, (count + chunk - 1) / chunk);
    for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
}

} // namespace detail

/// Counts for every even number in [lo, hi] with the shifted-bitset backend.
///
/// With O the odd prime bits up to hi (K bits) and R the reversal R[m] = O[K-1-m],
/// the partner of bit k for target 2n is R[k + s] with s = K - n. Targets are
/// grouped by s mod 64 so one pre-shifted copy of R serves a whole group and the
/// inner loop is a word-aligned AND + popcount.
inline std::vector<PartitionCount> sweep_counts(std::uint64_t lo, std::uint64_t hi, const Caps& caps = {},
                                                unsigned jobs = 1) {
    detail::require_sweep_range(lo, hi, caps);
    const OddPrimeBits odd(hi);
    const auto bits = odd.bits();
    const auto source = odd.words();
    const std::size_t words = source.size();

    std::vector<std::uint64_t> reversed(words + 1, 0);
    for (std::uint64_t m = 0; m < bits; ++m) {
        if (odd.test(bits - 1 - m)) reversed[m >> 6] |= std::uint64_t{1} << (m & 63);
    }

    std::vector<PartitionCount> out((hi - lo) / 2 + 1);
    for (std::size_t idx = 0; idx < out.size(); ++idx) {
        out[idx] = {lo + 2 * idx, 0, Backend::bitset_sweep};
    }

    const std::uint64_t n_lo = lo / 2;
    const std::uint64_t n_hi = hi / 2;
    std::vector<std::uint64_t> shifted(words, 0);
    std::vector<std::uint64_t> group;
    for (unsigned t = 0; t < 64; ++t) {
        group.clear();
        // s = bits - n; n ranges over [n_lo, n_hi] and bits == n_hi.
        for (std::uint64_t s = t; s <= bits - n_lo; s += 64) group.push_back(bits - s);
        if (group.empty()) continue;

        for (std::size_t w = 0; w < words; ++w) {
            shifted[w] = t == 0 ? reversed[w] : (reversed[w] >> t) | (reversed[w + 1] << (64 - t));
        }

        detail::parallel_for(group.size(), jobs, [&](std::size_t g) {
            const auto n = group[g];
            const auto size = (n - 2 + n % 2) / 2;
            const auto offset = static_cast<std::size_t>((bits - n) >> 6);
            const auto full = static_cast<std::size_t>(size >> 6);
            const auto* a = source.data();
            const auto* b = shifted.data() + offset;
            std::uint64_t count = detail::and_popcount(a, b, full);
            const auto tail_bits = (size & 63) + 1;
            const auto mask = tail_bits == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << tail_bits) - 1;
            count += static_cast<std::uint64_t>(std::popcount(a[full] & b[full] & mask));
            out[n - n_lo].count = count;
        });
    }
    return out;
}

/// First even number in [lo, hi] with zero partitions, if any.
inline std::optional<std::uint64_t> min_count_check(std::uint64_t lo, std::uint64_t hi, const Caps& caps = {},
                                                    unsigned jobs = 1) {
    for (const auto& row : sweep_counts(lo, hi, caps, jobs)) {
        if (row.count == 0) return row.two_n;
    }
    return std::nullopt;
}

} // namespace goldbach
