// NEON variants for aarch64, where NEON is baseline.

#if defined(__aarch64__)

#include "isodisc/kernels.hpp"

#include <arm_neon.h>

namespace isodisc::kernels::neon {

std::size_t count_ones(const std::uint8_t* p, std::size_t n) {
    std::size_t total = 0;
    std::size_t i = 0;
    for (; i + 16 <= n; i += 16) {
        uint8x16_t v = vld1q_u8(p + i);
        total += vaddvq_u8(v);  // 16 bytes of 0/1 sum to at most 16
    }
    for (; i < n; ++i) total += p[i];
    return total;
}

std::size_t count_andnot(const std::uint8_t* a, const std::uint8_t* b, std::size_t n) {
    std::size_t total = 0;
    std::size_t i = 0;
    for (; i + 16 <= n; i += 16) {
        uint8x16_t va = vld1q_u8(a + i);
        uint8x16_t vb = vld1q_u8(b + i);
        total += vaddvq_u8(vbicq_u8(va, vb));  // a & ~b
    }
    for (; i < n; ++i) total += static_cast<std::size_t>(a[i] & (b[i] ^ 1u));
    return total;
}

}  // namespace isodisc::kernels::neon

#endif  // aarch64
