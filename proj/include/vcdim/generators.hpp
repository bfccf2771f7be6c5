#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "vcdim/graph.hpp"
#include "vcdim/hypergraph.hpp"

namespace vcdim {

// ---------------------------------------------------------------------------
// 3-Coloring reduction
// ---------------------------------------------------------------------------

enum class Layer { u, i1, i2, i3plus };

/// Role of one output vertex.
///   u      : coloring `index` of part `part`
///   i1     : private neighbour of X-vertex `a`
///   i2     : common neighbour of the consistent pair a < b
///   i3plus : adjacent to all of U_j for every bit j of `subset`
struct LayerTag {
  Layer layer = Layer::u;
  std::uint32_t part = 0;
  std::uint32_t index = 0;
  Vertex a = 0;
  Vertex b = 0;
  std::uint64_t subset = 0;
};

struct ReductionOutput {
  GenVCInstance instance;
  int k = 0;
  int p = 0;
  /// Part index of every vertex of the coloring graph.
  std::vector<std::uint32_t> part_of;
  /// parts[i] = vertices of part i, ascending.
  std::vector<VertexSet> parts;
  /// One tag per output vertex.
  std::vector<LayerTag> tags;
  /// For X-vertex u (ids 0..|X|-1): colors of parts[tags[u].part], in order.
  std::vector<std::vector<std::uint8_t>> colorings;
  std::vector<std::string> warnings;
};

/// Default cap on 2^k, the size of the subset layer.
inline constexpr std::uint64_t kDefaultReductionLimit = std::uint64_t{1} << 16;

/// Builds the Gen-VC instance whose VC-dimension is at least k = ceil(n / p)
/// exactly when `coloring_graph` is 3-colorable.  Parts are consecutive id
/// ranges of size p.  Throws ResourceRefusal when 2^k exceeds `limit` and
/// InputError for p < 1, an empty graph, p > 12, or |X| <= k.
ReductionOutput reduce_3coloring(const Graph& coloring_graph, int p,
                                 std::uint64_t limit = kDefaultReductionLimit);

/// Exact 3-colorability by backtracking.  ResourceRefusal above `limit`
/// vertices.
bool brute_3color(const Graph& g, std::size_t limit = 20);

// ---------------------------------------------------------------------------
// Random families.  Draws come from std::mt19937_64; a Bernoulli(p) trial
// takes one 64-bit output x and succeeds iff (x >> 11) * 2^-53 < p, which
// keeps outputs identical across standard libraries.
// ---------------------------------------------------------------------------

/// Every edge independently contains every vertex with probability `edge_prob`.
Hypergraph gen_random_hypergraph(std::size_t n, std::size_t m, double edge_prob,
                                 std::uint64_t seed);

/// X = 0..nx-1, Y = nx..nx+ny-1, each X-Y pair adjacent with `edge_prob`.
GenVCInstance gen_random_bipartite_instance(std::size_t nx, std::size_t ny, double edge_prob,
                                            std::uint64_t seed);

/// G(n, p) over pairs u < v in lexicographic order.
Graph gen_random_graph(std::size_t n, double edge_prob, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Fixed families
// ---------------------------------------------------------------------------

/// All 2^n subsets of {0..n-1}, in binary-counting order.  InputError for
/// n > 20.
Hypergraph gen_powerset(int n);

/// Seven points, seven lines of three.
Hypergraph fano_plane();

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph complete_bipartite_graph(std::size_t a, std::size_t b);
Graph petersen_graph();

/// Chain of `gadgets` five-vertex blocks {x1, x2, y1, y2, y12} where y1, y2,
/// y12 witness {x1}, {x2}, {x1, x2}; consecutive blocks are linked by x2 of
/// one block to y1 and y12 of the next.  X = all x vertices, Y = all y
/// vertices.  Treewidth 2, VC-dimension 2 once there are two blocks.
GenVCInstance gen_gadget_path(std::size_t gadgets);

}  // namespace vcdim
