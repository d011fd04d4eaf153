#include <cstdlib>
#include <string_view>

#include "vpower/simd/kernels.hpp"

namespace vpower::simd {

#ifndef VPOWER_HAVE_AVX2
const KernelSet* avx2_kernels() { return nullptr; }
#endif

bool cpu_has_avx2() {
#if defined(VPOWER_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

namespace {

const KernelSet& select() {
  if (const char* forced = std::getenv("VPOWER_KERNELS");
      forced != nullptr && std::string_view(forced) == "scalar") {
    return scalar_kernels();
  }
  if (const KernelSet* avx2 = avx2_kernels(); avx2 != nullptr && cpu_has_avx2()) return *avx2;
  return scalar_kernels();
}

}  // namespace

const KernelSet& active_kernels() {
  static const KernelSet& chosen = select();
  return chosen;
}

}  // namespace vpower::simd
