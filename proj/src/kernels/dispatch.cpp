#include <cstdlib>
#include <stdexcept>
#include <string>

#include "kernels_impl.hpp"
#include "turan/simd.hpp"

namespace turan::simd {

namespace {

constexpr Kernels kScalar{Isa::Scalar, detail::and_popcount_scalar, detail::rotate_scalar};
#if defined(TURAN_HAVE_AVX2)
constexpr Kernels kAvx2{Isa::Avx2, detail::and_popcount_avx2, detail::rotate_avx2};
#endif
#if defined(TURAN_HAVE_NEON)
constexpr Kernels kNeon{Isa::Neon, detail::and_popcount_neon, detail::rotate_neon};
#endif

bool cpu_supports(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
#if defined(TURAN_HAVE_AVX2)
      __builtin_cpu_init();
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
      return false;
#endif
    case Isa::Neon:
#if defined(TURAN_HAVE_NEON)
      return true;
#else
      return false;
#endif
  }
  return false;
}

const Kernels& select_kernels() {
  if (const char* forced = std::getenv("TURAN_SIMD"); forced && std::string(forced) == "scalar") {
    return kScalar;
  }
  const auto isas = available_isas();
  return kernels_for(isas.back());
}

}  // namespace

std::string_view isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar:
      return "scalar";
    case Isa::Avx2:
      return "avx2";
    case Isa::Neon:
      return "neon";
  }
  return "unknown";
}

const Kernels& scalar_kernels() noexcept { return kScalar; }

std::vector<Isa> available_isas() {
  std::vector<Isa> out;
  for (Isa isa : {Isa::Scalar, Isa::Avx2, Isa::Neon}) {
    if (cpu_supports(isa)) out.push_back(isa);
  }
  return out;
}

const Kernels& kernels_for(Isa isa) {
  if (!cpu_supports(isa)) {
    throw std::invalid_argument("kernels for " + std::string(isa_name(isa)) + " unavailable");
  }
  switch (isa) {
#if defined(TURAN_HAVE_AVX2)
    case Isa::Avx2:
      return kAvx2;
#endif
#if defined(TURAN_HAVE_NEON)
    case Isa::Neon:
      return kNeon;
#endif
    default:
      return kScalar;
  }
}

const Kernels& active_kernels() {
  static const Kernels& chosen = select_kernels();
  return chosen;
}

}  // namespace turan::simd
