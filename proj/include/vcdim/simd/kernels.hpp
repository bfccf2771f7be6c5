#pragma once

// Word-parallel bit kernels used by the shattering checks.
//
// Every kernel has a portable scalar reference; AVX2 (x86-64, with BMI2 for
// bit extraction) and NEON (AArch64) variants are compiled when the target
// supports them and selected at runtime.  All variants must produce
// bit-identical results; tests/unit/test_kernels.cpp checks this.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace vcdim::simd {

/// Result bits of `split`.
inline constexpr unsigned kInNonEmpty = 1U;
inline constexpr unsigned kOutNonEmpty = 2U;

struct KernelSet {
  std::string_view name;

  /// in = mask & column, out = mask & ~column over `words` words.  Returns
  /// kInNonEmpty / kOutNonEmpty flags for the halves that have a set bit.
  unsigned (*split)(const std::uint64_t* mask, const std::uint64_t* column,
                    std::uint64_t* in, std::uint64_t* out, std::size_t words);

  /// mask &= column (or mask &= ~column when `complement`); returns whether
  /// the result still has a set bit.
  bool (*and_inplace)(std::uint64_t* mask, const std::uint64_t* column,
                      bool complement, std::size_t words);

  /// Number of set bits.
  std::uint64_t (*popcount)(const std::uint64_t* words_ptr, std::size_t words);

  /// out[i] = bits of codes[i] selected by `select`, packed towards bit 0
  /// (the PEXT operation).
  void (*extract_bits)(const std::uint64_t* codes, std::size_t n,
                       std::uint64_t select, std::uint64_t* out);
};

const KernelSet& scalar_kernels();

/// Variants compiled into this binary and supported by the running CPU.
/// The scalar set is always first.
std::vector<const KernelSet*> available_kernels();

/// The set used by the library.  Chosen once: the widest available variant,
/// unless the VCDIM_SIMD environment variable names another one
/// ("scalar", "avx2", "neon").
const KernelSet& active_kernels();

/// Overrides the active set (tests and benchmarks).  Returns false if `name`
/// is not available.
bool select_kernels(std::string_view name);

namespace detail {
const KernelSet* avx2_kernels();  // nullptr when not compiled in
const KernelSet* neon_kernels();  // nullptr when not compiled in
}  // namespace detail

}  // namespace vcdim::simd
