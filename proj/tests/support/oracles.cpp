#include "oracles.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace oracle {

namespace {

std::vector<Vertex> members(std::uint64_t mask, const std::vector<Vertex>& pool) {
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    if ((mask >> i) & 1U) out.push_back(pool[i]);
  }
  return out;
}

bool has_edge(const Graph& g, Vertex u, Vertex v) {
  for (Vertex w : g.neighbors(u)) {
    if (w == v) return true;
  }
  return false;
}

template <typename TraceOf>
bool all_traces(std::size_t witnesses, const std::vector<Vertex>& s, TraceOf trace_of) {
  std::set<std::set<Vertex>> traces;
  for (std::size_t w = 0; w < witnesses; ++w) traces.insert(trace_of(w));
  if (s.size() >= 30) return false;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << s.size()); ++mask) {
    const auto m = members(mask, s);
    if (!traces.count(std::set<Vertex>(m.begin(), m.end()))) return false;
  }
  return true;
}

}  // namespace

bool shattered(const Hypergraph& h, const std::vector<Vertex>& s) {
  return all_traces(h.num_edges(), s, [&](std::size_t e) {
    std::set<Vertex> t;
    for (Vertex v : h.edge(e)) {
      if (std::find(s.begin(), s.end(), v) != s.end()) t.insert(v);
    }
    return t;
  });
}

bool shattered(const GenVCInstance& inst, const std::vector<Vertex>& s) {
  const auto& ys = inst.y();
  return all_traces(ys.size(), s, [&](std::size_t i) {
    std::set<Vertex> t;
    for (Vertex v : s) {
      if (has_edge(inst.graph(), ys[i], v)) t.insert(v);
    }
    return t;
  });
}

int vc(const Hypergraph& h) {
  const std::size_t n = h.num_vertices();
  if (n > 20) throw std::invalid_argument("oracle::vc limited to 20 vertices");
  std::vector<Vertex> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = static_cast<Vertex>(i);
  int best = -1;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const auto s = members(mask, all);
    if (static_cast<int>(s.size()) > best && shattered(h, s)) best = static_cast<int>(s.size());
  }
  return best;
}

std::vector<std::vector<Vertex>> maximum_shattered_sets(const GenVCInstance& inst) {
  const auto& xs = inst.x();
  if (xs.size() > 20) throw std::invalid_argument("oracle limited to |X| <= 20");
  std::vector<std::vector<Vertex>> best;
  std::size_t best_size = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << xs.size()); ++mask) {
    const auto s = members(mask, xs);
    if ((best.empty() || s.size() >= best_size) && shattered(inst, s)) {
      if (best.empty() || s.size() > best_size) {
        best.clear();
        best_size = s.size();
      }
      best.push_back(s);
    }
  }
  return best;
}

int vc(const GenVCInstance& inst) {
  const auto sets = maximum_shattered_sets(inst);
  return sets.empty() ? -1 : static_cast<int>(sets.front().size());
}

bool pattern_embeds(const GenVCInstance& inst, int k) {
  const Graph& g = inst.graph();
  const std::size_t n_w = std::size_t{1} << k;
  std::vector<Vertex> s_img;
  std::vector<Vertex> w_img;
  std::vector<char> used(g.num_vertices(), 0);

  // Place w_j given all s images.
  auto place_w = [&](auto&& self, std::size_t j) -> bool {
    if (j == n_w) return true;
    for (Vertex y : inst.y()) {
      if (used[y]) continue;
      bool ok = true;
      for (int i = 0; i < k && ok; ++i) {
        ok = has_edge(g, s_img[i], y) == (((j >> i) & 1U) != 0);
      }
      if (!ok) continue;
      used[y] = 1;
      w_img.push_back(y);
      if (self(self, j + 1)) return true;
      w_img.pop_back();
      used[y] = 0;
    }
    return false;
  };
  auto place_s = [&](auto&& self, int i) -> bool {
    if (i == k) return place_w(place_w, 0);
    for (Vertex x : inst.x()) {
      if (used[x]) continue;
      used[x] = 1;
      s_img.push_back(x);
      if (self(self, i + 1)) return true;
      s_img.pop_back();
      used[x] = 0;
    }
    return false;
  };
  return place_s(place_s, 0);
}

bool witnesses_some_set(const Hypergraph& h, const std::vector<std::uint32_t>& w, int k) {
  const std::size_t n = h.num_vertices();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (__builtin_popcountll(mask) != k) continue;
    std::vector<Vertex> s;
    for (std::size_t v = 0; v < n; ++v) {
      if ((mask >> v) & 1U) s.push_back(static_cast<Vertex>(v));
    }
    std::set<std::set<Vertex>> traces;
    for (std::uint32_t e : w) {
      std::set<Vertex> t;
      for (Vertex v : h.edge(e)) {
        if ((mask >> v) & 1U) t.insert(v);
      }
      traces.insert(t);
    }
    if (traces.size() == w.size() && traces.size() == (std::size_t{1} << k)) return true;
  }
  return false;
}

bool three_colorable(const Graph& g) {
  const std::size_t n = g.num_vertices();
  if (n > 14) throw std::invalid_argument("oracle::three_colorable limited to 14 vertices");
  std::vector<int> color(n, 0);
  const auto edges = g.edge_list();
  while (true) {
    bool proper = true;
    for (const auto& [u, v] : edges) {
      if (color[u] == color[v]) {
        proper = false;
        break;
      }
    }
    if (proper) return true;
    std::size_t i = 0;
    while (i < n && color[i] == 2) color[i++] = 0;
    if (i == n) return false;
    ++color[i];
  }
}

int best_in_bag(const GenVCInstance& inst, const vcdim::TreeDecomposition& td) {
  if (inst.y().empty()) return -1;
  int best = 0;
  for (const auto& bag : td.bags) {
    std::vector<Vertex> pool;
    for (Vertex v : bag) {
      if (inst.in_x(v)) pool.push_back(v);
    }
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pool.size()); ++mask) {
      const auto s = members(mask, pool);
      if (static_cast<int>(s.size()) > best && shattered(inst, s)) best = static_cast<int>(s.size());
    }
  }
  return best;
}

bool contained_in_bag(const vcdim::TreeDecomposition& td, const std::vector<Vertex>& s) {
  for (const auto& bag : td.bags) {
    if (std::all_of(s.begin(), s.end(),
                    [&](Vertex v) { return std::find(bag.begin(), bag.end(), v) != bag.end(); })) {
      return true;
    }
  }
  return false;
}

}  // namespace oracle
