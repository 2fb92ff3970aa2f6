#include "mmcc/kernels.hpp"

#include <bit>
#include <cstdlib>

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>
#endif
#if defined(__aarch64__) || defined(_M_ARM64)
#include <arm_neon.h>
#endif

namespace mmcc::kernels {

std::uint64_t and_popcount_scalar(const std::uint64_t* a, const std::uint64_t* b, std::size_t nwords) {
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < nwords; ++i)
        total += static_cast<std::uint64_t>(std::popcount(a[i] & b[i]));
    return total;
}

#if defined(__x86_64__) || defined(_M_X64)

// Nibble-LUT popcount (vpshufb) with per-256-bit lane sums via vpsadbw.
__attribute__((target("avx2")))
static inline __m256i popcount256(__m256i v) {
    const __m256i lookup = _mm256_setr_epi8(
        0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
        0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low_mask = _mm256_set1_epi8(0x0f);
    __m256i lo = _mm256_and_si256(v, low_mask);
    __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
    __m256i cnt = _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo),
                                  _mm256_shuffle_epi8(lookup, hi));
    return _mm256_sad_epu8(cnt, _mm256_setzero_si256());
}

__attribute__((target("avx2")))
std::uint64_t and_popcount_avx2(const std::uint64_t* a, const std::uint64_t* b, std::size_t nwords) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= nwords; i += 4) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        acc = _mm256_add_epi64(acc, popcount256(_mm256_and_si256(va, vb)));
    }
    alignas(32) std::uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    std::uint64_t total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
    for (; i < nwords; ++i)
        total += static_cast<std::uint64_t>(std::popcount(a[i] & b[i]));
    return total;
}

static bool avx2_supported() {
    return __builtin_cpu_supports("avx2") != 0;
}

#endif  // x86-64

#if defined(__aarch64__) || defined(_M_ARM64)

std::uint64_t and_popcount_neon(const std::uint64_t* a, const std::uint64_t* b, std::size_t nwords) {
    uint64x2_t acc = vdupq_n_u64(0);
    std::size_t i = 0;
    for (; i + 2 <= nwords; i += 2) {
        uint64x2_t va = vld1q_u64(a + i);
        uint64x2_t vb = vld1q_u64(b + i);
        uint8x16_t cnt = vcntq_u8(vreinterpretq_u8_u64(vandq_u64(va, vb)));
        acc = vaddq_u64(acc, vpaddlq_u32(vpaddlq_u16(vpaddlq_u8(cnt))));
    }
    std::uint64_t total = vgetq_lane_u64(acc, 0) + vgetq_lane_u64(acc, 1);
    for (; i < nwords; ++i)
        total += static_cast<std::uint64_t>(std::popcount(a[i] & b[i]));
    return total;
}

#endif  // arm64

namespace {

struct Selected {
    AndPopcountFn fn;
    std::string name;
};

Selected select() {
    const char* forced = std::getenv("MMCC_KERNEL");
    std::string want = forced ? forced : "";
#if defined(__x86_64__) || defined(_M_X64)
    if (want == "avx2" && avx2_supported()) return {and_popcount_avx2, "avx2"};
    if (want.empty() && avx2_supported()) return {and_popcount_avx2, "avx2"};
#endif
#if defined(__aarch64__) || defined(_M_ARM64)
    if (want == "neon" || want.empty()) return {and_popcount_neon, "neon"};
#endif
    return {and_popcount_scalar, "scalar"};
}

const Selected& selected() {
    static const Selected s = select();
    return s;
}

}  // namespace

std::uint64_t and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t nwords) {
    return selected().fn(a, b, nwords);
}

const std::string& active_kernel() {
    return selected().name;
}

std::vector<std::pair<std::string, AndPopcountFn>> available_kernels() {
    std::vector<std::pair<std::string, AndPopcountFn>> out;
    out.emplace_back("scalar", and_popcount_scalar);
#if defined(__x86_64__) || defined(_M_X64)
    if (avx2_supported()) out.emplace_back("avx2", and_popcount_avx2);
#endif
#if defined(__aarch64__) || defined(_M_ARM64)
    out.emplace_back("neon", and_popcount_neon);
#endif
    return out;
}

}  // namespace mmcc::kernels
