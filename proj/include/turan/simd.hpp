#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace turan::simd {

enum class Isa { Scalar, Avx2, Neon };

std::string_view isa_name(Isa isa) noexcept;

/// Kernel table for one instruction set. Every variant computes the same result as the
/// scalar reference: popcounts are exact, rotations agree to rounding.
struct Kernels {
  Isa isa;
  /// popcount(a[i] & b[i]) summed over `words` words.
  std::uint64_t (*and_popcount)(const std::uint64_t* a, const std::uint64_t* b,
                                std::size_t words);
  /// Plane rotation: x <- c*x - s*y, y <- s*x + c*y.
  void (*rotate)(double* x, double* y, std::size_t n, double c, double s);
};

const Kernels& scalar_kernels() noexcept;

/// ISAs whose kernels were compiled in and that the running CPU supports; Scalar first.
std::vector<Isa> available_isas();

/// Table for `isa`; throws std::invalid_argument if it is not available.
const Kernels& kernels_for(Isa isa);

/// Best available table, chosen once on first use. TURAN_SIMD=scalar forces the reference.
const Kernels& active_kernels();

}  // namespace turan::simd
