#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace vcdim {

/// Dense vertex id, 0..n-1.  Names and 1-based ids live only in the I/O layer.
using Vertex = std::uint32_t;

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;

/// Malformed or out-of-range input (exit code 2 at the CLI).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured resource cap would be exceeded (exit code 3 at the CLI).
class ResourceRefusal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// floor(log2(x)) for x >= 1; -1 for x == 0.
constexpr int floor_log2(std::uint64_t x) {
  int r = -1;
  while (x != 0) {
    x >>= 1;
    ++r;
  }
  return r;
}

/// Sorts and removes duplicates.
VertexSet normalized(std::vector<Vertex> vertices);

}  // namespace vcdim
