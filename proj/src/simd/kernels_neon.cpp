// AArch64 only; NEON is part of the base ISA there, so no runtime probe.

#include "vcdim/simd/kernels.hpp"

#include <arm_neon.h>

#include <bit>

namespace vcdim::simd {
namespace {

inline bool any_set(uint64x2_t v) { return (vgetq_lane_u64(v, 0) | vgetq_lane_u64(v, 1)) != 0; }

unsigned split_neon(const std::uint64_t* mask, const std::uint64_t* column,
                    std::uint64_t* in, std::uint64_t* out, std::size_t words) {
  uint64x2_t any_in = vdupq_n_u64(0);
  uint64x2_t any_out = vdupq_n_u64(0);
  std::size_t i = 0;
  for (; i + 2 <= words; i += 2) {
    const uint64x2_t m = vld1q_u64(mask + i);
    const uint64x2_t c = vld1q_u64(column + i);
    const uint64x2_t a = vandq_u64(m, c);
    const uint64x2_t b = vbicq_u64(m, c);
    vst1q_u64(in + i, a);
    vst1q_u64(out + i, b);
    any_in = vorrq_u64(any_in, a);
    any_out = vorrq_u64(any_out, b);
  }
  std::uint64_t tail_in = 0;
  std::uint64_t tail_out = 0;
  for (; i < words; ++i) {
    in[i] = mask[i] & column[i];
    out[i] = mask[i] & ~column[i];
    tail_in |= in[i];
    tail_out |= out[i];
  }
  const bool has_in = any_set(any_in) || tail_in != 0;
  const bool has_out = any_set(any_out) || tail_out != 0;
  return (has_in ? kInNonEmpty : 0U) | (has_out ? kOutNonEmpty : 0U);
}

bool and_inplace_neon(std::uint64_t* mask, const std::uint64_t* column, bool complement,
                      std::size_t words) {
  uint64x2_t any = vdupq_n_u64(0);
  std::size_t i = 0;
  for (; i + 2 <= words; i += 2) {
    const uint64x2_t m = vld1q_u64(mask + i);
    const uint64x2_t c = vld1q_u64(column + i);
    const uint64x2_t r = complement ? vbicq_u64(m, c) : vandq_u64(m, c);
    vst1q_u64(mask + i, r);
    any = vorrq_u64(any, r);
  }
  const std::uint64_t flip = complement ? ~std::uint64_t{0} : 0;
  std::uint64_t tail = 0;
  for (; i < words; ++i) {
    mask[i] &= column[i] ^ flip;
    tail |= mask[i];
  }
  return any_set(any) || tail != 0;
}

std::uint64_t popcount_neon(const std::uint64_t* data, std::size_t words) {
  uint64x2_t acc = vdupq_n_u64(0);
  std::size_t i = 0;
  for (; i + 2 <= words; i += 2) {
    const uint8x16_t bytes = vcntq_u8(vreinterpretq_u8_u64(vld1q_u64(data + i)));
    acc = vaddq_u64(acc, vpaddlq_u32(vpaddlq_u16(vpaddlq_u8(bytes))));
  }
  std::uint64_t total = vgetq_lane_u64(acc, 0) + vgetq_lane_u64(acc, 1);
  for (; i < words; ++i) {
    total += static_cast<std::uint64_t>(std::popcount(data[i]));
  }
  return total;
}

// No vector PEXT on NEON; same loop as the reference.
void extract_bits_neon(const std::uint64_t* codes, std::size_t n, std::uint64_t select,
                       std::uint64_t* out) {
  scalar_kernels().extract_bits(codes, n, select, out);
}

constexpr KernelSet kNeon{"neon", split_neon, and_inplace_neon, popcount_neon,
                          extract_bits_neon};

}  // namespace

namespace detail {
const KernelSet* neon_kernels() { return &kNeon; }
}  // namespace detail

}  // namespace vcdim::simd
