#include "vcdim/trace_matrix.hpp"

#include <algorithm>
#include <bit>

#include "vcdim/simd/kernels.hpp"

namespace vcdim {

TraceMatrix::TraceMatrix(std::size_t columns, std::size_t witnesses)
    : columns_(columns),
      witnesses_(witnesses),
      words_((witnesses + 63) / 64),
      bits_(columns * words_, 0) {}

std::vector<std::uint64_t> TraceMatrix::full_mask() const {
  std::vector<std::uint64_t> mask(words_, ~std::uint64_t{0});
  if (witnesses_ % 64 != 0) {
    mask.back() = (std::uint64_t{1} << (witnesses_ % 64)) - 1;
  }
  return mask;
}

namespace {

// Patterns over the first kRefineDepth columns are separated by word-parallel
// mask splits; the remaining columns are resolved by scanning the witnesses
// left in each leaf mask.  Splitting all the way down costs 2^k mask passes,
// which loses to the scan once the masks get sparse.
constexpr std::size_t kRefineDepth = 6;

struct Search {
  const TraceMatrix& matrix;
  std::span<const std::uint32_t> selected;
  std::vector<std::uint32_t>* first_witness;
  const simd::KernelSet& kernels;
  std::size_t depth;  // refinement depth, <= selected.size()
  std::vector<std::uint64_t> scratch;  // 2 * depth masks
  std::vector<std::uint32_t> seen;     // residual pattern stamps
  std::uint32_t stamp = 0;

  std::uint64_t* in_buf(std::size_t d) { return scratch.data() + (2 * d) * matrix.words(); }
  std::uint64_t* out_buf(std::size_t d) { return scratch.data() + (2 * d + 1) * matrix.words(); }

  bool leaf(const std::uint64_t* mask, std::uint64_t prefix) {
    const std::size_t words = matrix.words();
    const std::size_t residual = selected.size() - depth;
    if (residual == 0) {
      if (first_witness != nullptr) {
        for (std::size_t w = 0; w < words; ++w) {
          if (mask[w] != 0) {
            (*first_witness)[prefix] =
                static_cast<std::uint32_t>(w * 64 + std::countr_zero(mask[w]));
            break;
          }
        }
      }
      return true;
    }
    const std::uint64_t needed = std::uint64_t{1} << residual;
    std::uint64_t found = 0;
    ++stamp;
    for (std::size_t w = 0; w < words && found < needed; ++w) {
      for (std::uint64_t bits = mask[w]; bits != 0 && found < needed; bits &= bits - 1) {
        const std::size_t witness = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        std::uint64_t code = 0;
        for (std::size_t i = 0; i < residual; ++i) {
          code |= static_cast<std::uint64_t>(matrix.test(selected[depth + i], witness)) << i;
        }
        if (seen[code] != stamp) {
          seen[code] = stamp;
          ++found;
          if (first_witness != nullptr) {
            (*first_witness)[prefix | (code << depth)] = static_cast<std::uint32_t>(witness);
          }
        }
      }
    }
    return found == needed;
  }

  bool descend(const std::uint64_t* mask, std::size_t d, std::uint64_t prefix) {
    if (d == depth) {
      return leaf(mask, prefix);
    }
    const unsigned flags = kernels.split(mask, matrix.column(selected[d]).data(), in_buf(d),
                                         out_buf(d), matrix.words());
    if (flags != (simd::kInNonEmpty | simd::kOutNonEmpty)) {
      return false;
    }
    return descend(in_buf(d), d + 1, prefix | (std::uint64_t{1} << d)) &&
           descend(out_buf(d), d + 1, prefix);
  }
};

}  // namespace

bool shatters(const TraceMatrix& matrix, std::span<const std::uint32_t> selected,
              std::vector<std::uint32_t>* first_witness) {
  const std::size_t k = selected.size();
  if (k >= 32 || (std::uint64_t{1} << k) > matrix.witnesses()) {
    return false;
  }
  if (first_witness != nullptr) {
    first_witness->assign(std::size_t{1} << k, 0);
  }
  const std::size_t depth = std::min(k, kRefineDepth);
  Search search{matrix, selected, first_witness, simd::active_kernels(), depth, {}, {}};
  search.scratch.assign(2 * depth * matrix.words(), 0);
  search.seen.assign(std::size_t{1} << (k - depth), 0);
  const std::vector<std::uint64_t> all = matrix.full_mask();
  return search.descend(all.data(), 0, 0);
}

}  // namespace vcdim
