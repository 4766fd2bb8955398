#pragma once

#include <cstddef>
#include <cstdint>

namespace turan::simd::detail {

std::uint64_t and_popcount_scalar(const std::uint64_t* a, const std::uint64_t* b,
                                  std::size_t words);
void rotate_scalar(double* x, double* y, std::size_t n, double c, double s);

#if defined(TURAN_HAVE_AVX2)
std::uint64_t and_popcount_avx2(const std::uint64_t* a, const std::uint64_t* b,
                                std::size_t words);
void rotate_avx2(double* x, double* y, std::size_t n, double c, double s);
#endif

#if defined(TURAN_HAVE_NEON)
std::uint64_t and_popcount_neon(const std::uint64_t* a, const std::uint64_t* b,
                                std::size_t words);
void rotate_neon(double* x, double* y, std::size_t n, double c, double s);
#endif

}  // namespace turan::simd::detail
