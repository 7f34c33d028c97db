// AVX2 variants. Compiled with -mavx2; callers must check avx2::available()
// before routing here (the dispatcher in kernels.cpp does).

#if defined(__x86_64__) || defined(_M_X64)

#include "isodisc/kernels.hpp"

#include <immintrin.h>

namespace isodisc::kernels::avx2 {

// Bytes are 0/1, so a horizontal byte sum is the count. _mm256_sad_epu8
// against zero accumulates 32 bytes into four u64 lanes without overflow.
std::size_t count_ones(const std::uint8_t* p, std::size_t n) {
    const __m256i zero = _mm256_setzero_si256();
    __m256i acc = zero;
    std::size_t i = 0;
    for (; i + 32 <= n; i += 32) {
        __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p + i));
        acc = _mm256_add_epi64(acc, _mm256_sad_epu8(v, zero));
    }
    alignas(32) std::uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    std::size_t total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
    for (; i < n; ++i) total += p[i];
    return total;
}

std::size_t count_andnot(const std::uint8_t* a, const std::uint8_t* b, std::size_t n) {
    const __m256i zero = _mm256_setzero_si256();
    __m256i acc = zero;
    std::size_t i = 0;
    for (; i + 32 <= n; i += 32) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        // ~b & a; for 0/1 bytes each result byte is again 0 or 1.
        __m256i d = _mm256_andnot_si256(vb, va);
        acc = _mm256_add_epi64(acc, _mm256_sad_epu8(d, zero));
    }
    alignas(32) std::uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    std::size_t total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
    for (; i < n; ++i) total += static_cast<std::size_t>(a[i] & (b[i] ^ 1u));
    return total;
}

}  // namespace isodisc::kernels::avx2

#endif  // x86-64
