#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace vcdim {

/// Column-major bit matrix: one column per candidate vertex, one bit row per
/// witness (hyperedge or Y-vertex).  Bit w of column c is set iff witness w
/// contains / is adjacent to candidate c.  The shattering checks run
/// word-parallel over these columns.
class TraceMatrix {
 public:
  TraceMatrix() = default;
  TraceMatrix(std::size_t columns, std::size_t witnesses);

  std::size_t columns() const { return columns_; }
  std::size_t witnesses() const { return witnesses_; }
  std::size_t words() const { return words_; }

  void set(std::size_t column, std::size_t witness) {
    bits_[column * words_ + witness / 64] |= std::uint64_t{1} << (witness % 64);
  }
  bool test(std::size_t column, std::size_t witness) const {
    return (bits_[column * words_ + witness / 64] >> (witness % 64)) & 1U;
  }
  std::span<const std::uint64_t> column(std::size_t c) const {
    return {bits_.data() + c * words_, words_};
  }

  /// All-ones row mask over the witnesses (trailing bits clear).
  std::vector<std::uint64_t> full_mask() const;

 private:
  std::size_t columns_ = 0;
  std::size_t witnesses_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Decides whether the candidate columns `selected` are shattered by the
/// matrix witnesses: every bit pattern over `selected` (bit i = selected[i])
/// must be the trace of some witness.  When `first_witness` is given it
/// receives, per pattern, the lowest witness index realising it.
bool shatters(const TraceMatrix& matrix, std::span<const std::uint32_t> selected,
              std::vector<std::uint32_t>* first_witness = nullptr);

}  // namespace vcdim
