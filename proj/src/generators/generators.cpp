#include "vcdim/generators.hpp"

#include <bit>
#include <random>

namespace vcdim {

namespace {

class Bernoulli {
 public:
  explicit Bernoulli(std::uint64_t seed) : engine_(seed) {}
  bool operator()(double p) {
    const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return u < p;
  }

 private:
  std::mt19937_64 engine_;
};

void check_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw InputError("edge probability must lie in [0, 1]");
}

// Proper 3-colorings of g restricted to `part`, in lexicographic order of the
// color vector (first vertex most significant).
std::vector<std::vector<std::uint8_t>> part_colorings(const Graph& g, const VertexSet& part) {
  std::vector<std::vector<std::uint8_t>> out;
  std::vector<std::uint8_t> colors(part.size(), 0);
  auto proper = [&] {
    for (std::size_t i = 0; i < part.size(); ++i) {
      for (std::size_t j = i + 1; j < part.size(); ++j) {
        if (colors[i] == colors[j] && g.adjacent(part[i], part[j])) return false;
      }
    }
    return true;
  };
  while (true) {
    if (proper()) out.push_back(colors);
    std::size_t i = part.size();
    while (i > 0 && colors[i - 1] == 2) colors[--i] = 0;
    if (i == 0) break;
    ++colors[i - 1];
  }
  return out;
}

}  // namespace

ReductionOutput reduce_3coloring(const Graph& gp, int p, std::uint64_t limit) {
  const std::size_t n = gp.num_vertices();
  if (n == 0) throw InputError("the coloring graph has no vertices");
  if (p < 1 || p > 12) throw InputError("part size p must lie in 1..12");
  const std::size_t k = (n + static_cast<std::size_t>(p) - 1) / static_cast<std::size_t>(p);
  if (k >= 63 || (std::uint64_t{1} << k) > limit) {
    throw ResourceRefusal("k = " + std::to_string(k) + " needs a subset-layer limit of at least 2^" +
                          std::to_string(k) + (k < 63 ? " = " + std::to_string(std::uint64_t{1} << k) : "") +
                          ", configured limit is " + std::to_string(limit));
  }

  ReductionOutput out;
  out.k = static_cast<int>(k);
  out.p = p;
  out.part_of.resize(n);
  out.parts.resize(k);
  for (Vertex v = 0; v < n; ++v) {
    out.part_of[v] = static_cast<std::uint32_t>(v / static_cast<std::size_t>(p));
    out.parts[out.part_of[v]].push_back(v);
  }

  // X: U_1, ..., U_k.
  std::vector<std::vector<Vertex>> u(k);
  for (std::uint32_t i = 0; i < k; ++i) {
    auto colorings = part_colorings(gp, out.parts[i]);
    if (colorings.empty()) {
      out.warnings.push_back("part " + std::to_string(i + 1) +
                             " has no proper 3-coloring; the output is a no-instance");
    }
    for (std::uint32_t c = 0; c < colorings.size(); ++c) {
      u[i].push_back(static_cast<Vertex>(out.tags.size()));
      out.tags.push_back({Layer::u, i, c, 0, 0, 0});
      out.colorings.push_back(std::move(colorings[c]));
    }
  }
  const std::size_t n_x = out.tags.size();
  if (n_x <= k) {
    throw InputError("the reduction needs |X| > k, got |X| = " + std::to_string(n_x) +
                     " and k = " + std::to_string(k));
  }

  std::vector<Edge> edges;
  auto add_y = [&](LayerTag tag) {
    const auto y = static_cast<Vertex>(out.tags.size());
    out.tags.push_back(tag);
    return y;
  };
  for (Vertex x = 0; x < n_x; ++x) {
    edges.emplace_back(x, add_y({Layer::i1, 0, 0, x, 0, 0}));
  }
  auto consistent = [&](Vertex a, Vertex b) {
    const VertexSet& pa = out.parts[out.tags[a].part];
    const VertexSet& pb = out.parts[out.tags[b].part];
    for (std::size_t i = 0; i < pa.size(); ++i) {
      for (std::size_t j = 0; j < pb.size(); ++j) {
        if (out.colorings[a][i] == out.colorings[b][j] && gp.adjacent(pa[i], pb[j])) return false;
      }
    }
    return true;
  };
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      for (Vertex a : u[i]) {
        for (Vertex b : u[j]) {
          if (!consistent(a, b)) continue;
          const Vertex y = add_y({Layer::i2, 0, 0, a, b, 0});
          edges.emplace_back(a, y);
          edges.emplace_back(b, y);
        }
      }
    }
  }
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    if (std::popcount(mask) < 3) continue;
    const Vertex y = add_y({Layer::i3plus, 0, 0, 0, 0, mask});
    for (std::size_t j = 0; j < k; ++j) {
      if (((mask >> j) & 1U) == 0) continue;
      for (Vertex a : u[j]) edges.emplace_back(a, y);
    }
  }

  std::vector<Vertex> xs(n_x);
  std::vector<Vertex> ys(out.tags.size() - n_x);
  for (Vertex v = 0; v < out.tags.size(); ++v) {
    (v < n_x ? xs[v] : ys[v - n_x]) = v;
  }
  out.instance = GenVCInstance(Graph(out.tags.size(), edges), std::move(xs), std::move(ys));
  return out;
}

bool brute_3color(const Graph& g, std::size_t limit) {
  const std::size_t n = g.num_vertices();
  if (n > limit) {
    throw ResourceRefusal("3-coloring oracle limited to " + std::to_string(limit) +
                          " vertices, graph has " + std::to_string(n));
  }
  std::vector<int> color(n, -1);
  // Iterative backtracking in id order.
  std::size_t v = 0;
  while (true) {
    if (v == n) return true;
    bool placed = false;
    for (int c = color[v] + 1; c < 3 && !placed; ++c) {
      bool clash = false;
      for (Vertex w : g.neighbors(static_cast<Vertex>(v))) {
        if (w < v && color[w] == c) clash = true;
      }
      if (!clash) {
        color[v] = c;
        placed = true;
      }
    }
    if (placed) {
      ++v;
      continue;
    }
    color[v] = -1;
    if (v == 0) return false;
    --v;
  }
}

Hypergraph gen_random_hypergraph(std::size_t n, std::size_t m, double edge_prob,
                                 std::uint64_t seed) {
  check_probability(edge_prob);
  Bernoulli draw(seed);
  std::vector<VertexSet> edges(m);
  for (auto& e : edges) {
    for (Vertex v = 0; v < n; ++v) {
      if (draw(edge_prob)) e.push_back(v);
    }
  }
  return Hypergraph(n, std::move(edges));
}

GenVCInstance gen_random_bipartite_instance(std::size_t nx, std::size_t ny, double edge_prob,
                                            std::uint64_t seed) {
  check_probability(edge_prob);
  Bernoulli draw(seed);
  std::vector<Edge> edges;
  for (Vertex x = 0; x < nx; ++x) {
    for (std::size_t j = 0; j < ny; ++j) {
      if (draw(edge_prob)) edges.emplace_back(x, static_cast<Vertex>(nx + j));
    }
  }
  std::vector<Vertex> xs(nx);
  std::vector<Vertex> ys(ny);
  for (std::size_t i = 0; i < nx; ++i) xs[i] = static_cast<Vertex>(i);
  for (std::size_t j = 0; j < ny; ++j) ys[j] = static_cast<Vertex>(nx + j);
  return GenVCInstance(Graph(nx + ny, edges), std::move(xs), std::move(ys));
}

Graph gen_random_graph(std::size_t n, double edge_prob, std::uint64_t seed) {
  check_probability(edge_prob);
  Bernoulli draw(seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (draw(edge_prob)) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

Hypergraph gen_powerset(int n) {
  if (n < 0 || n > 20) throw InputError("power-set size must lie in 0..20");
  std::vector<VertexSet> edges(std::size_t{1} << n);
  for (std::size_t mask = 0; mask < edges.size(); ++mask) {
    for (int i = 0; i < n; ++i) {
      if (((mask >> i) & 1U) != 0) edges[mask].push_back(static_cast<Vertex>(i));
    }
  }
  return Hypergraph(static_cast<std::size_t>(n), std::move(edges));
}

Hypergraph fano_plane() {
  return Hypergraph(7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}});
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  return Graph(n, edges);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw InputError("a cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, static_cast<Vertex>((v + 1) % n));
  return Graph(n, edges);
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph(n, edges);
}

Graph complete_bipartite_graph(std::size_t a, std::size_t b) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < a; ++u) {
    for (std::size_t j = 0; j < b; ++j) edges.emplace_back(u, static_cast<Vertex>(a + j));
  }
  return Graph(a + b, edges);
}

Graph petersen_graph() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);           // outer cycle
    edges.emplace_back(i, i + 5);                 // spokes
    edges.emplace_back(i + 5, (i + 2) % 5 + 5);   // inner pentagram
  }
  return Graph(10, edges);
}

GenVCInstance gen_gadget_path(std::size_t gadgets) {
  // Block b occupies ids 5b..5b+4 as x1, x2, y1, y2, y12.
  std::vector<Edge> edges;
  std::vector<Vertex> xs;
  std::vector<Vertex> ys;
  for (std::size_t b = 0; b < gadgets; ++b) {
    const auto base = static_cast<Vertex>(5 * b);
    const Vertex x1 = base;
    const Vertex x2 = base + 1;
    xs.insert(xs.end(), {x1, x2});
    ys.insert(ys.end(), {base + 2, base + 3, base + 4});
    edges.emplace_back(x1, base + 2);
    edges.emplace_back(x2, base + 3);
    edges.emplace_back(x1, base + 4);
    edges.emplace_back(x2, base + 4);
    if (b > 0) {
      const Vertex prev_x2 = base - 4;
      edges.emplace_back(prev_x2, base + 2);
      edges.emplace_back(prev_x2, base + 4);
    }
  }
  return GenVCInstance(Graph(5 * gadgets, edges), std::move(xs), std::move(ys));
}

}  // namespace vcdim
