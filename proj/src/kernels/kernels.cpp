#include "isodisc/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace isodisc::kernels {

namespace scalar {

std::size_t count_ones(const std::uint8_t* p, std::size_t n) {
    std::size_t acc = 0;
    for (std::size_t i = 0; i < n; ++i) acc += p[i];
    return acc;
}

std::size_t count_andnot(const std::uint8_t* a, const std::uint8_t* b, std::size_t n) {
    std::size_t acc = 0;
    for (std::size_t i = 0; i < n; ++i) acc += static_cast<std::size_t>(a[i] & (b[i] ^ 1u));
    return acc;
}

}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
namespace avx2 {
bool available() {
#if defined(__GNUC__) || defined(__clang__)
    return __builtin_cpu_supports("avx2") != 0;
#else
    return false;
#endif
}
}  // namespace avx2
#endif

namespace {

using OnesFn = std::size_t (*)(const std::uint8_t*, std::size_t);
using AndnotFn = std::size_t (*)(const std::uint8_t*, const std::uint8_t*, std::size_t);

struct Backend {
    OnesFn ones;
    AndnotFn andnot;
    const char* name;
};

Backend select_backend() {
    const char* forced = std::getenv("ISODISC_KERNEL");
    if (forced != nullptr) {
        if (std::strcmp(forced, "scalar") == 0)
            return {scalar::count_ones, scalar::count_andnot, "scalar"};
#if defined(__x86_64__) || defined(_M_X64)
        if (std::strcmp(forced, "avx2") == 0 && avx2::available())
            return {avx2::count_ones, avx2::count_andnot, "avx2"};
#endif
#if defined(__aarch64__)
        if (std::strcmp(forced, "neon") == 0)
            return {neon::count_ones, neon::count_andnot, "neon"};
#endif
        return {scalar::count_ones, scalar::count_andnot, "scalar"};
    }
#if defined(__x86_64__) || defined(_M_X64)
    if (avx2::available()) return {avx2::count_ones, avx2::count_andnot, "avx2"};
#endif
#if defined(__aarch64__)
    return {neon::count_ones, neon::count_andnot, "neon"};
#endif
    return {scalar::count_ones, scalar::count_andnot, "scalar"};
}

const Backend& backend() {
    static const Backend b = select_backend();
    return b;
}

}  // namespace

std::size_t count_ones(const std::uint8_t* p, std::size_t n) {
    return backend().ones(p, n);
}

std::size_t count_andnot(const std::uint8_t* a, const std::uint8_t* b, std::size_t n) {
    return backend().andnot(a, b, n);
}

const char* active_backend() { return backend().name; }

}  // namespace isodisc::kernels
