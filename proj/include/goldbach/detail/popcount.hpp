#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>

#if defined(__AVX2__)
#include <immintrin.h>
#endif

namespace goldbach::detail {

inline std::uint64_t and_popcount_scalar(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) noexcept {
    std::uint64_t c0 = 0, c1 = 0, c2 = 0, c3 = 0;
    std::size_t w = 0;
    for (; w + 4 <= words; w += 4) {
        c0 += static_cast<std::uint64_t>(std::popcount(a[w] & b[w]));
        c1 += static_cast<std::uint64_t>(std::popcount(a[w + 1] & b[w + 1]));
        c2 += static_cast<std::uint64_t>(std::popcount(a[w + 2] & b[w + 2]));
        c3 += static_cast<std::uint64_t>(std::popcount(a[w + 3] & b[w + 3]));
    }
    for (; w < words; ++w) c0 += static_cast<std::uint64_t>(std::popcount(a[w] & b[w]));
    return c0 + c1 + c2 + c3;
}

#if defined(__AVX2__)
// Nibble-lookup popcount (pshufb) with byte counters flushed through psadbw.
inline std::uint64_t and_popcount_avx2(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) noexcept {
    const __m256i lookup = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                            0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low_mask = _mm256_set1_epi8(0x0f);
    __m256i total = _mm256_setzero_si256();

    auto count_bytes = [&](__m256i v) {
        const __m256i lo = _mm256_shuffle_epi8(lookup, _mm256_and_si256(v, low_mask));
        const __m256i hi = _mm256_shuffle_epi8(lookup, _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask));
        return _mm256_add_epi8(lo, hi);
    };
    auto load_and = [&](std::size_t w) {
        const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + w));
        const __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + w));
        return _mm256_and_si256(x, y);
    };

    std::size_t w = 0;
    // Each byte counter grows by at most 8 per vector; 8 vectors stay below 256.
    for (; w + 32 <= words; w += 32) {
        __m256i acc = count_bytes(load_and(w));
        acc = _mm256_add_epi8(acc, count_bytes(load_and(w + 4)));
        acc = _mm256_add_epi8(acc, count_bytes(load_and(w + 8)));
        acc = _mm256_add_epi8(acc, count_bytes(load_and(w + 12)));
        acc = _mm256_add_epi8(acc, count_bytes(load_and(w + 16)));
        acc = _mm256_add_epi8(acc, count_bytes(load_and(w + 20)));
        acc = _mm256_add_epi8(acc, count_bytes(load_and(w + 24)));
        acc = _mm256_add_epi8(acc, count_bytes(load_and(w + 28)));
        total = _mm256_add_epi64(total, _mm256_sad_epu8(acc, _mm256_setzero_si256()));
    }
    for (; w + 4 <= words; w += 4) {
        total = _mm256_add_epi64(total, _mm256_sad_epu8(count_bytes(load_and(w)), _mm256_setzero_si256()));
    }
    alignas(32) std::uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), total);
    return lanes[0] + lanes[1] + lanes[2] + lanes[3] + and_popcount_scalar(a + w, b + w, words - w);
}
#endif

/// popcount(a & b) over `words` 64-bit words.
inline std::uint64_t and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) noexcept {
#if defined(__AVX2__)
    return and_popcount_avx2(a, b, words);
#else
    return and_popcount_scalar(a, b, words);
#endif
}

} // namespace goldbach::detail
