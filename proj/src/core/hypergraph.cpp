#include "vcdim/hypergraph.hpp"

#include <algorithm>
#include <string>

namespace vcdim {

VertexSet normalized(std::vector<Vertex> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return vertices;
}

Hypergraph::Hypergraph(std::size_t n_vertices, std::vector<VertexSet> edges)
    : n_vertices_(n_vertices), incidence_(n_vertices) {
  edges_.reserve(edges.size());
  for (auto& e : edges) {
    VertexSet edge = normalized(std::move(e));
    if (!edge.empty() && edge.back() >= n_vertices) {
      throw InputError("hyperedge " + std::to_string(edges_.size()) + " has vertex id " +
                       std::to_string(edge.back()) + " >= " + std::to_string(n_vertices));
    }
    dimension_ = std::max(dimension_, edge.size());
    edges_.push_back(std::move(edge));
  }
  traces_ = TraceMatrix(n_vertices, edges_.size());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    for (Vertex v : edges_[i]) {
      incidence_[v].push_back(static_cast<std::uint32_t>(i));
      traces_.set(v, i);
    }
  }
  for (const auto& inc : incidence_) {
    max_degree_ = std::max(max_degree_, inc.size());
  }
}

}  // namespace vcdim
