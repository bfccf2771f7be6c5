#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "vcdim/types.hpp"

namespace vcdim {

using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph with sorted adjacency lists.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n_vertices) : adjacency_(n_vertices) {}

  /// Throws InputError on self-loops or out-of-range endpoints.  Parallel
  /// edges are merged.
  Graph(std::size_t n_vertices, std::span<const Edge> edges);

  std::size_t num_vertices() const { return adjacency_.size(); }
  std::size_t num_edges() const { return n_edges_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  bool adjacent(Vertex u, Vertex v) const;

  /// Edges as (u, v) with u < v, ascending.
  std::vector<Edge> edge_list() const;

  bool operator==(const Graph& other) const { return adjacency_ == other.adjacency_; }

 private:
  std::vector<VertexSet> adjacency_;
  std::size_t n_edges_ = 0;
};

/// Gen-VC instance: a graph with candidate vertices X (to be shattered) and
/// witness vertices Y.  X and Y may overlap.
class GenVCInstance {
 public:
  GenVCInstance() = default;
  /// Throws InputError on ids outside the graph.
  GenVCInstance(Graph graph, std::vector<Vertex> x, std::vector<Vertex> y);

  /// Graph-VC form: X = Y = V.
  static GenVCInstance whole_graph(Graph graph);

  const Graph& graph() const { return graph_; }
  const VertexSet& x() const { return x_; }
  const VertexSet& y() const { return y_; }
  bool in_x(Vertex v) const { return in_x_[v] != 0; }
  bool in_y(Vertex v) const { return in_y_[v] != 0; }
  bool x_and_y_overlap() const { return overlap_; }

  /// max over x in X of |N(x) ∩ Y|.
  std::size_t max_x_degree() const { return max_x_degree_; }
  /// max over y in Y of |N(y) ∩ X|.
  std::size_t max_y_degree() const { return max_y_degree_; }

  bool operator==(const GenVCInstance& other) const {
    return graph_ == other.graph_ && x_ == other.x_ && y_ == other.y_;
  }

 private:
  Graph graph_;
  VertexSet x_;
  VertexSet y_;
  std::vector<char> in_x_;
  std::vector<char> in_y_;
  bool overlap_ = false;
  std::size_t max_x_degree_ = 0;
  std::size_t max_y_degree_ = 0;
};

}  // namespace vcdim
