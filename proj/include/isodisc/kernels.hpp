#pragma once

#include <cstddef>
#include <cstdint>

// Byte kernels for 0/1 buffers. All counting loops in the library go through
// these; a scalar reference implementation always exists and SIMD variants
// (AVX2 on x86-64, NEON on aarch64) are selected at runtime. The environment
// variable ISODISC_KERNEL=scalar|avx2|neon forces a backend; an unavailable
// choice falls back to scalar.
//
// Inputs must contain only the byte values 0 and 1.

namespace isodisc::kernels {

// Number of ones in p[0..n).
std::size_t count_ones(const std::uint8_t* p, std::size_t n);

// Number of positions i with a[i] == 1 and b[i] == 0.
std::size_t count_andnot(const std::uint8_t* a, const std::uint8_t* b, std::size_t n);

// Name of the backend the dispatcher settled on: "scalar", "avx2" or "neon".
const char* active_backend();

namespace scalar {
std::size_t count_ones(const std::uint8_t* p, std::size_t n);
std::size_t count_andnot(const std::uint8_t* a, const std::uint8_t* b, std::size_t n);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
namespace avx2 {
bool available();
std::size_t count_ones(const std::uint8_t* p, std::size_t n);
std::size_t count_andnot(const std::uint8_t* a, const std::uint8_t* b, std::size_t n);
}  // namespace avx2
#endif

#if defined(__aarch64__)
namespace neon {
std::size_t count_ones(const std::uint8_t* p, std::size_t n);
std::size_t count_andnot(const std::uint8_t* a, const std::uint8_t* b, std::size_t n);
}  // namespace neon
#endif

}  // namespace isodisc::kernels
