#pragma once

// Bit-vector intersection kernels. The hot loop of the exact metric and the
// sampling estimators is popcount(a AND b) over packed 64-bit words; a scalar
// reference implementation and SIMD variants (AVX2 on x86-64, NEON on arm64)
// share one signature and are selected once at startup. The environment
// variable MMCC_KERNEL={scalar,avx2,neon} forces a variant; an unsupported
// request falls back to scalar.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace mmcc::kernels {

using AndPopcountFn = std::uint64_t (*)(const std::uint64_t*, const std::uint64_t*, std::size_t);

std::uint64_t and_popcount_scalar(const std::uint64_t* a, const std::uint64_t* b, std::size_t nwords);

#if defined(__x86_64__) || defined(_M_X64)
std::uint64_t and_popcount_avx2(const std::uint64_t* a, const std::uint64_t* b, std::size_t nwords);
#endif
#if defined(__aarch64__) || defined(_M_ARM64)
std::uint64_t and_popcount_neon(const std::uint64_t* a, const std::uint64_t* b, std::size_t nwords);
#endif

// Dispatched entry point used by the rest of the library.
std::uint64_t and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t nwords);

// Name of the variant behind and_popcount ("scalar", "avx2", "neon").
const std::string& active_kernel();

// Variants usable on this machine, scalar first.
std::vector<std::pair<std::string, AndPopcountFn>> available_kernels();

}  // namespace mmcc::kernels
