#include "vcdim/graph.hpp"

#include <algorithm>
#include <string>

namespace vcdim {

Graph::Graph(std::size_t n_vertices, std::span<const Edge> edges) : adjacency_(n_vertices) {
  for (const auto& [u, v] : edges) {
    if (u >= n_vertices || v >= n_vertices) {
      throw InputError("edge {" + std::to_string(u) + ", " + std::to_string(v) +
                       "} outside vertex range " + std::to_string(n_vertices));
    }
    if (u == v) {
      throw InputError("self-loop at vertex " + std::to_string(u));
    }
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  n_edges_ = 0;
  for (auto& list : adjacency_) {
    list = normalized(std::move(list));
    n_edges_ += list.size();
  }
  n_edges_ /= 2;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& list = adjacency_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> Graph::edge_list() const {
  std::vector<Edge> result;
  result.reserve(n_edges_);
  for (Vertex u = 0; u < adjacency_.size(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) {
        result.emplace_back(u, v);
      }
    }
  }
  return result;
}

GenVCInstance::GenVCInstance(Graph graph, std::vector<Vertex> x, std::vector<Vertex> y)
    : graph_(std::move(graph)), x_(normalized(std::move(x))), y_(normalized(std::move(y))) {
  const std::size_t n = graph_.num_vertices();
  if ((!x_.empty() && x_.back() >= n) || (!y_.empty() && y_.back() >= n)) {
    throw InputError("X or Y names a vertex outside the graph (n = " + std::to_string(n) + ")");
  }
  in_x_.assign(n, 0);
  in_y_.assign(n, 0);
  for (Vertex v : x_) in_x_[v] = 1;
  for (Vertex v : y_) {
    in_y_[v] = 1;
    overlap_ = overlap_ || in_x_[v] != 0;
  }
  for (Vertex v : x_) {
    const auto nb = graph_.neighbors(v);
    const auto d = static_cast<std::size_t>(
        std::count_if(nb.begin(), nb.end(), [this](Vertex u) { return in_y_[u] != 0; }));
    max_x_degree_ = std::max(max_x_degree_, d);
  }
  for (Vertex v : y_) {
    const auto nb = graph_.neighbors(v);
    const auto d = static_cast<std::size_t>(
        std::count_if(nb.begin(), nb.end(), [this](Vertex u) { return in_x_[u] != 0; }));
    max_y_degree_ = std::max(max_y_degree_, d);
  }
}

GenVCInstance GenVCInstance::whole_graph(Graph graph) {
  std::vector<Vertex> all(graph.num_vertices());
  for (Vertex v = 0; v < all.size(); ++v) all[v] = v;
  return GenVCInstance(std::move(graph), all, all);
}

}  // namespace vcdim
