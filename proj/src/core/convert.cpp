#include "vcdim/convert.hpp"

#include <algorithm>

namespace vcdim {

namespace {

std::vector<Edge> incidence_edges(const Hypergraph& h) {
  const auto n = static_cast<Vertex>(h.num_vertices());
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    for (Vertex v : h.edge(i)) edges.emplace_back(v, n + static_cast<Vertex>(i));
  }
  return edges;
}

}  // namespace

GenVCInstance to_incidence_instance(const Hypergraph& h) {
  const std::size_t n = h.num_vertices();
  const std::size_t m = h.num_edges();
  std::vector<Vertex> x(n);
  std::vector<Vertex> y(m);
  for (std::size_t v = 0; v < n; ++v) x[v] = static_cast<Vertex>(v);
  for (std::size_t i = 0; i < m; ++i) y[i] = static_cast<Vertex>(n + i);
  const auto edges = incidence_edges(h);
  return GenVCInstance(Graph(n + m, edges), std::move(x), std::move(y));
}

Graph to_split_graph(const Hypergraph& h) {
  const auto n = static_cast<Vertex>(h.num_vertices());
  const auto m = static_cast<Vertex>(h.num_edges());
  auto edges = incidence_edges(h);
  for (Vertex i = 0; i < m; ++i) {
    for (Vertex j = i + 1; j < m; ++j) edges.emplace_back(n + i, n + j);
  }
  return Graph(static_cast<std::size_t>(n) + m, edges);
}

Hypergraph add_universal_vertex(const Hypergraph& h) {
  const auto u = static_cast<Vertex>(h.num_vertices());
  std::vector<VertexSet> edges(h.edges().begin(), h.edges().end());
  for (auto& e : edges) e.push_back(u);
  return Hypergraph(h.num_vertices() + 1, std::move(edges));
}

Hypergraph neighbourhood_hypergraph(const GenVCInstance& inst) {
  const VertexSet& x = inst.x();
  std::vector<VertexSet> edges;
  edges.reserve(inst.y().size());
  for (Vertex y : inst.y()) {
    VertexSet e;
    for (Vertex v : inst.graph().neighbors(y)) {
      if (inst.in_x(v)) {
        e.push_back(static_cast<Vertex>(std::lower_bound(x.begin(), x.end(), v) - x.begin()));
      }
    }
    edges.push_back(std::move(e));
  }
  return Hypergraph(x.size(), std::move(edges));
}

}  // namespace vcdim
