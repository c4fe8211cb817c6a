#include <gtest/gtest.h>

#include <cstdint>
#include <vector>

#include "goldbach/oracle.hpp"
#include "goldbach/partition.hpp"

using namespace goldbach;

namespace {

std::uint64_t enumerate_prime_pairs(std::uint64_t two_n) {
    std::uint64_t count = 0;
    for (std::uint64_t p = 3; 2 * p <= two_n; p += 2) count += oracle::is_prime(p) && oracle::is_prime(two_n - p);
    return count;
}

std::vector<std::uint64_t> counts_of(const std::vector<PartitionCount>& rows) {
    std::vector<std::uint64_t> out;
    for (const auto& r : rows) out.push_back(r.count);
    return out;
}

} // namespace

TEST(BooleanVectors, Examples) {
    const auto v = boolean_vectors(16);
    EXPECT_EQ(v.lower_bits, (std::vector<std::uint8_t>{1, 1, 1, 0, 1, 1, 0}));
    EXPECT_EQ(v.upper_bits, (std::vector<std::uint8_t>{1, 0, 0, 1, 0, 1, 1}));
    EXPECT_EQ(v.dot(), 2u);
    const auto three = boolean_vectors(3);
    EXPECT_EQ(three.lower_bits, (std::vector<std::uint8_t>{1}));
    EXPECT_EQ(three.upper_bits, (std::vector<std::uint8_t>{1}));
}

TEST(BooleanVectors, CapAndDomain) {
    EXPECT_THROW(boolean_vectors(2), DomainError);
    EXPECT_THROW(boolean_vectors(5001), CapExceeded);
}

TEST(CountWilson, Examples) {
    EXPECT_EQ(count_wilson(16).count, 2u);
    EXPECT_EQ(count_wilson(3).count, 1u);
    EXPECT_EQ(count_wilson(50).count, 6u);
    EXPECT_EQ(count_wilson(50).backend, Backend::wilson_exact);
    EXPECT_EQ(count_wilson(50).two_n, 100u);
    EXPECT_THROW(count_wilson(5001), CapExceeded);
}

TEST(CountWilson, TableOverloadMatchesDirect) {
    const WilsonTable table(2000);
    for (std::uint64_t n = 3; n <= 1000; ++n) ASSERT_EQ(count_wilson(n, table), count_wilson(n)) << n;
}

TEST(CountSieve, Examples) {
    EXPECT_EQ(count_sieve(32).count, 2u);
    EXPECT_EQ(count_sieve(14).count, 2u);
    EXPECT_EQ(count_sieve(6).count, 1u);
    EXPECT_EQ(count_sieve(6).backend, Backend::sieve_twopointer);
    EXPECT_THROW(count_sieve(7), DomainError);
    EXPECT_THROW(count_sieve(4), DomainError);
}

TEST(CountSieve, IndexAndTwoPointerAgreeWithEnumeration) {
    const SieveIndex index(20'000);
    for (std::uint64_t t = 6; t <= 20'000; t += 2) {
        const auto expected = enumerate_prime_pairs(t);
        ASSERT_EQ(index.count(t).count, expected) << t;
        ASSERT_EQ(count_twopointer(t, index.primes()), expected) << t;
    }
    EXPECT_THROW(index.count(20'002), DomainError);
}

TEST(CountSieve, CountNeverExceedsPairCount) {
    const SieveIndex index(10'000);
    for (std::uint64_t t = 6; t <= 10'000; t += 2) ASSERT_LE(index.count(t).count, pair_count(t / 2));
}

TEST(CountWilson, EqualsNumberOfMaximaInIndexSpace) {
    for (std::uint64_t n = 3; n <= 300; ++n) {
        std::uint64_t maxima = 0;
        for (std::uint64_t i = 1; i <= pair_count(n); ++i) {
            const auto p = pair_at(n, i);
            maxima += max_condition(p.lower, p.upper);
        }
        ASSERT_EQ(count_wilson(n).count, maxima) << n;
    }
}

TEST(CountWilson, ReindexingSymmetry) {
    // Summing over i' = |I_n| + 1 - i visits the same pairs.
    for (std::uint64_t n = 3; n <= 400; ++n) {
        const auto v = boolean_vectors(n);
        const auto size = v.lower_bits.size();
        std::uint64_t reversed = 0;
        for (std::size_t k = 0; k < size; ++k) reversed += v.lower_bits[size - 1 - k] & v.upper_bits[size - 1 - k];
        ASSERT_EQ(reversed, v.dot()) << n;
    }
}

TEST(SweepCounts, Examples) {
    EXPECT_EQ(counts_of(sweep_counts(6, 12)), (std::vector<std::uint64_t>{1, 1, 2, 1}));
    EXPECT_EQ(counts_of(sweep_counts(32, 32)), (std::vector<std::uint64_t>{2}));
    EXPECT_EQ(counts_of(sweep_counts(6, 6)), (std::vector<std::uint64_t>{1}));
    const auto rows = sweep_counts(6, 12);
    EXPECT_EQ(rows[2].two_n, 10u);
    EXPECT_EQ(rows[2].backend, Backend::bitset_sweep);
}

TEST(SweepCounts, Errors) {
    EXPECT_THROW(sweep_counts(4, 10), DomainError);
    EXPECT_THROW(sweep_counts(7, 10), DomainError);
    EXPECT_THROW(sweep_counts(10, 8), DomainError);
    EXPECT_THROW(sweep_counts(6, 11), DomainError);
    Caps caps;
    caps.sweep_cap = 100;
    EXPECT_THROW(sweep_counts(6, 102, caps), CapExceeded);
    EXPECT_NO_THROW(sweep_counts(6, 100, caps));
}

TEST(SweepCounts, MatchesSieveIndexAcrossWordBoundaries) {
    // Ranges whose hi lands on and around multiples of 128 exercise every shift group.
    const SieveIndex index(5000);
    for (std::uint64_t hi : {126u, 128u, 130u, 254u, 256u, 258u, 1000u, 4998u, 5000u}) {
        for (std::uint64_t lo : {6u, 8u, 64u, 126u}) {
            if (lo > hi) continue;
            const auto rows = sweep_counts(lo, hi);
            ASSERT_EQ(rows.size(), (hi - lo) / 2 + 1);
            for (const auto& r : rows) ASSERT_EQ(r.count, index.count(r.two_n).count) << lo << ".." << hi << " @ " << r.two_n;
        }
    }
}

TEST(SweepCounts, ParallelResultIsIdentical) {
    const auto serial = sweep_counts(6, 200'000, {}, 1);
    const auto parallel = sweep_counts(6, 200'000, {}, 4);
    EXPECT_EQ(serial, parallel);
}

TEST(MinCountCheck, Examples) {
    EXPECT_FALSE(min_count_check(6, 1'000'000).has_value());
    EXPECT_FALSE(min_count_check(32, 32).has_value());
    EXPECT_FALSE(min_count_check(6, 6).has_value());
    EXPECT_THROW(min_count_check(6, 5), DomainError);
}

TEST(OddPrimeBits, Layout) {
    const OddPrimeBits bits(31);
    EXPECT_EQ(bits.bits(), 16u);
    EXPECT_FALSE(bits.test(0)); // 1
    EXPECT_TRUE(bits.test(1));  // 3
    EXPECT_FALSE(bits.test(4)); // 9
    EXPECT_TRUE(bits.test(15)); // 31
}
