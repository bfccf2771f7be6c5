#include "vcdim/simd/kernels.hpp"

#include <bit>

namespace vcdim::simd {
namespace {

unsigned split_scalar(const std::uint64_t* mask, const std::uint64_t* column,
                      std::uint64_t* in, std::uint64_t* out, std::size_t words) {
  std::uint64_t any_in = 0;
  std::uint64_t any_out = 0;
  for (std::size_t i = 0; i < words; ++i) {
    const std::uint64_t a = mask[i] & column[i];
    const std::uint64_t b = mask[i] & ~column[i];
    in[i] = a;
    out[i] = b;
    any_in |= a;
    any_out |= b;
  }
  return (any_in != 0 ? kInNonEmpty : 0U) | (any_out != 0 ? kOutNonEmpty : 0U);
}

bool and_inplace_scalar(std::uint64_t* mask, const std::uint64_t* column,
                        bool complement, std::size_t words) {
  const std::uint64_t flip = complement ? ~std::uint64_t{0} : 0;
  std::uint64_t any = 0;
  for (std::size_t i = 0; i < words; ++i) {
    mask[i] &= column[i] ^ flip;
    any |= mask[i];
  }
  return any != 0;
}

std::uint64_t popcount_scalar(const std::uint64_t* data, std::size_t words) {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < words; ++i) {
    total += static_cast<std::uint64_t>(std::popcount(data[i]));
  }
  return total;
}

void extract_bits_scalar(const std::uint64_t* codes, std::size_t n,
                         std::uint64_t select, std::uint64_t* out) {
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t result = 0;
    std::uint64_t sel = select;
    for (unsigned pos = 0; sel != 0; ++pos) {
      const unsigned bit = static_cast<unsigned>(std::countr_zero(sel));
      result |= ((codes[i] >> bit) & 1U) << pos;
      sel &= sel - 1;
    }
    out[i] = result;
  }
}

constexpr KernelSet kScalar{
    "scalar", split_scalar, and_inplace_scalar, popcount_scalar, extract_bits_scalar};

}  // namespace

const KernelSet& scalar_kernels() { return kScalar; }

}  // namespace vcdim::simd
