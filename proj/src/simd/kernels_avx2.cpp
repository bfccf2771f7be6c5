// Compiled with -mavx2 -mbmi2; only reached after a runtime CPU check.

#include "vcdim/simd/kernels.hpp"

#include <immintrin.h>

#include <bit>

namespace vcdim::simd {
namespace {

inline __m256i load(const std::uint64_t* p) {
  return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

inline void store(std::uint64_t* p, __m256i v) {
  _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v);
}

unsigned split_avx2(const std::uint64_t* mask, const std::uint64_t* column,
                    std::uint64_t* in, std::uint64_t* out, std::size_t words) {
  __m256i any_in = _mm256_setzero_si256();
  __m256i any_out = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    const __m256i m = load(mask + i);
    const __m256i c = load(column + i);
    const __m256i a = _mm256_and_si256(m, c);
    const __m256i b = _mm256_andnot_si256(c, m);
    store(in + i, a);
    store(out + i, b);
    any_in = _mm256_or_si256(any_in, a);
    any_out = _mm256_or_si256(any_out, b);
  }
  std::uint64_t tail_in = 0;
  std::uint64_t tail_out = 0;
  for (; i < words; ++i) {
    const std::uint64_t a = mask[i] & column[i];
    const std::uint64_t b = mask[i] & ~column[i];
    in[i] = a;
    out[i] = b;
    tail_in |= a;
    tail_out |= b;
  }
  const bool has_in = !_mm256_testz_si256(any_in, any_in) || tail_in != 0;
  const bool has_out = !_mm256_testz_si256(any_out, any_out) || tail_out != 0;
  return (has_in ? kInNonEmpty : 0U) | (has_out ? kOutNonEmpty : 0U);
}

bool and_inplace_avx2(std::uint64_t* mask, const std::uint64_t* column,
                      bool complement, std::size_t words) {
  __m256i any = _mm256_setzero_si256();
  std::size_t i = 0;
  if (complement) {
    for (; i + 4 <= words; i += 4) {
      const __m256i r = _mm256_andnot_si256(load(column + i), load(mask + i));
      store(mask + i, r);
      any = _mm256_or_si256(any, r);
    }
  } else {
    for (; i + 4 <= words; i += 4) {
      const __m256i r = _mm256_and_si256(load(column + i), load(mask + i));
      store(mask + i, r);
      any = _mm256_or_si256(any, r);
    }
  }
  const std::uint64_t flip = complement ? ~std::uint64_t{0} : 0;
  std::uint64_t tail = 0;
  for (; i < words; ++i) {
    mask[i] &= column[i] ^ flip;
    tail |= mask[i];
  }
  return !_mm256_testz_si256(any, any) || tail != 0;
}

// Nibble-table popcount with per-lane horizontal byte sums.
std::uint64_t popcount_avx2(const std::uint64_t* data, std::size_t words) {
  const __m256i table = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                         0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    const __m256i v = load(data + i);
    const __m256i lo = _mm256_and_si256(v, low_mask);
    const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
    const __m256i counts =
        _mm256_add_epi8(_mm256_shuffle_epi8(table, lo), _mm256_shuffle_epi8(table, hi));
    acc = _mm256_add_epi64(acc, _mm256_sad_epu8(counts, _mm256_setzero_si256()));
  }
  std::uint64_t total = static_cast<std::uint64_t>(_mm256_extract_epi64(acc, 0)) +
                        static_cast<std::uint64_t>(_mm256_extract_epi64(acc, 1)) +
                        static_cast<std::uint64_t>(_mm256_extract_epi64(acc, 2)) +
                        static_cast<std::uint64_t>(_mm256_extract_epi64(acc, 3));
  for (; i < words; ++i) {
    total += static_cast<std::uint64_t>(std::popcount(data[i]));
  }
  return total;
}

void extract_bits_bmi2(const std::uint64_t* codes, std::size_t n, std::uint64_t select,
                       std::uint64_t* out) {
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = _pext_u64(codes[i], select);
  }
}

constexpr KernelSet kAvx2{"avx2", split_avx2, and_inplace_avx2, popcount_avx2,
                          extract_bits_bmi2};

}  // namespace

namespace detail {
const KernelSet* avx2_kernels() {
  __builtin_cpu_init();
  if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("bmi2")) {
    return &kAvx2;
  }
  return nullptr;
}
}  // namespace detail

}  // namespace vcdim::simd
