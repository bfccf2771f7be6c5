#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "vcdim/trace_matrix.hpp"
#include "vcdim/types.hpp"

namespace vcdim {

/// A finite set system over vertices 0..n-1.  Edges form a list: duplicates
/// and the empty edge are legal.  Immutable after construction; the
/// incidence lists and the vertex-by-edge trace matrix are built eagerly so
/// that concurrent readers never mutate.
class Hypergraph {
 public:
  Hypergraph() = default;

  /// Each edge is normalised (sorted, deduplicated).  Throws InputError on a
  /// vertex id >= n_vertices.
  Hypergraph(std::size_t n_vertices, std::vector<VertexSet> edges);

  std::size_t num_vertices() const { return n_vertices_; }
  std::size_t num_edges() const { return edges_.size(); }

  const VertexSet& edge(std::size_t i) const { return edges_[i]; }
  std::span<const VertexSet> edges() const { return edges_; }

  /// Indices of the edges containing v, ascending.
  std::span<const std::uint32_t> incidence(Vertex v) const { return incidence_[v]; }
  std::size_t degree(Vertex v) const { return incidence_[v].size(); }

  /// Maximum edge cardinality (0 without edges).
  std::size_t dimension() const { return dimension_; }
  /// Maximum vertex degree (0 without vertices).
  std::size_t max_degree() const { return max_degree_; }

  /// Column v holds the incidence bitset of vertex v over edge indices.
  const TraceMatrix& traces() const { return traces_; }

  bool operator==(const Hypergraph& other) const {
    return n_vertices_ == other.n_vertices_ && edges_ == other.edges_;
  }

 private:
  std::size_t n_vertices_ = 0;
  std::vector<VertexSet> edges_;
  std::vector<std::vector<std::uint32_t>> incidence_;
  std::size_t dimension_ = 0;
  std::size_t max_degree_ = 0;
  TraceMatrix traces_;
};

}  // namespace vcdim
