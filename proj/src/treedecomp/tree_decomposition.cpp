#include "vcdim/tree_decomposition.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace vcdim {

int TreeDecomposition::width() const {
  int w = -1;
  for (const auto& bag : bags) w = std::max(w, static_cast<int>(bag.size()) - 1);
  return w;
}

int NiceTreeDecomposition::width() const {
  int w = -1;
  for (const auto& node : nodes) w = std::max(w, static_cast<int>(node.bag.size()) - 1);
  return w;
}

namespace {

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
  std::vector<std::size_t> parent;
};

std::vector<Violation> check_tree_shape(const TreeDecomposition& td) {
  std::vector<Violation> out;
  const std::size_t n = td.bags.size();
  if (n == 0) {
    out.push_back({Violation::Kind::not_a_tree, "decomposition has no nodes"});
    return out;
  }
  if (td.tree_edges.size() != n - 1) {
    out.push_back({Violation::Kind::not_a_tree,
                   std::to_string(n) + " nodes need " + std::to_string(n - 1) +
                       " tree edges, found " + std::to_string(td.tree_edges.size())});
  }
  DisjointSets sets(n);
  for (const auto& [a, b] : td.tree_edges) {
    if (a >= n || b >= n) {
      out.push_back({Violation::Kind::not_a_tree, "tree edge {" + std::to_string(a) + ", " +
                                                      std::to_string(b) + "} names a missing node"});
      continue;
    }
    if (!sets.unite(a, b)) {
      out.push_back({Violation::Kind::not_a_tree, "tree edge {" + std::to_string(a) + ", " +
                                                      std::to_string(b) + "} closes a cycle"});
    }
  }
  if (out.empty()) {
    for (std::size_t i = 1; i < n; ++i) {
      if (sets.find(i) != sets.find(0)) {
        out.push_back({Violation::Kind::not_a_tree,
                       "node " + std::to_string(i) + " is not connected to node 0"});
        break;
      }
    }
  }
  return out;
}

// Occurrence lists per vertex; requires a valid tree shape.
std::vector<Violation> check_occurrences(const TreeDecomposition& td, std::size_t n_vertices,
                                         bool require_all) {
  std::vector<Violation> out;
  std::vector<std::size_t> nodes_with(n_vertices, 0);
  std::vector<std::size_t> edges_with(n_vertices, 0);
  for (const auto& bag : td.bags) {
    for (Vertex v : bag) ++nodes_with[v];
  }
  for (const auto& [a, b] : td.tree_edges) {
    const VertexSet& ba = td.bags[a];
    const VertexSet& bb = td.bags[b];
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < ba.size() && j < bb.size()) {
      if (ba[i] < bb[j]) {
        ++i;
      } else if (bb[j] < ba[i]) {
        ++j;
      } else {
        ++edges_with[ba[i]];
        ++i;
        ++j;
      }
    }
  }
  for (Vertex v = 0; v < n_vertices; ++v) {
    if (nodes_with[v] == 0) {
      if (require_all) {
        out.push_back({Violation::Kind::vertex_missing,
                       "vertex " + std::to_string(v) + " appears in no bag"});
      }
    } else if (edges_with[v] != nodes_with[v] - 1) {
      out.push_back({Violation::Kind::vertex_disconnected,
                     "bags containing vertex " + std::to_string(v) + " are not connected"});
    }
  }
  return out;
}

bool bags_sorted(const TreeDecomposition& td) {
  return std::all_of(td.bags.begin(), td.bags.end(), [](const VertexSet& b) {
    return std::adjacent_find(b.begin(), b.end(), std::greater_equal<>()) == b.end();
  });
}

}  // namespace

std::vector<Violation> validate(const Graph& g, const TreeDecomposition& td) {
  std::vector<Violation> out = check_tree_shape(td);
  const std::size_t n = g.num_vertices();
  if (!bags_sorted(td)) {
    out.push_back({Violation::Kind::not_a_tree, "a bag is not a sorted vertex set"});
    return out;
  }
  for (std::size_t i = 0; i < td.bags.size(); ++i) {
    if (!td.bags[i].empty() && td.bags[i].back() >= n) {
      out.push_back({Violation::Kind::vertex_out_of_range,
                     "bag " + std::to_string(i) + " names vertex " +
                         std::to_string(td.bags[i].back()) + " outside the graph"});
    }
  }
  if (!out.empty()) return out;

  std::vector<std::vector<std::size_t>> where(n);
  for (std::size_t i = 0; i < td.bags.size(); ++i) {
    for (Vertex v : td.bags[i]) where[v].push_back(i);
  }
  for (const auto& [u, v] : g.edge_list()) {
    std::vector<std::size_t> common;
    std::set_intersection(where[u].begin(), where[u].end(), where[v].begin(), where[v].end(),
                          std::back_inserter(common));
    if (common.empty()) {
      out.push_back({Violation::Kind::edge_uncovered, "edge {" + std::to_string(u) + ", " +
                                                          std::to_string(v) +
                                                          "} is in no bag"});
    }
  }
  auto occ = check_occurrences(td, n, true);
  out.insert(out.end(), occ.begin(), occ.end());
  return out;
}

std::vector<Violation> validate_structure(const TreeDecomposition& td) {
  std::vector<Violation> out = check_tree_shape(td);
  if (!bags_sorted(td)) {
    out.push_back({Violation::Kind::not_a_tree, "a bag is not a sorted vertex set"});
  }
  if (!out.empty()) return out;
  Vertex max_id = 0;
  bool any = false;
  for (const auto& bag : td.bags) {
    if (!bag.empty()) {
      max_id = std::max(max_id, bag.back());
      any = true;
    }
  }
  return check_occurrences(td, any ? max_id + 1 : 0, false);
}

// ---------------------------------------------------------------------------
// Minimum fill-in elimination

namespace {

class EliminationGraph {
 public:
  explicit EliminationGraph(const Graph& g) : adj_(g.num_vertices()) {
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      adj_[v].assign(g.neighbors(v).begin(), g.neighbors(v).end());
    }
  }

  const VertexSet& neighbors(Vertex v) const { return adj_[v]; }

  bool adjacent(Vertex a, Vertex b) const {
    return std::binary_search(adj_[a].begin(), adj_[a].end(), b);
  }

  std::size_t fill(Vertex v) const {
    const VertexSet& nb = adj_[v];
    std::size_t missing = 0;
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (!adjacent(nb[i], nb[j])) ++missing;
      }
    }
    return missing;
  }

  /// Removes v, turning its neighbourhood into a clique.  Returns whether any
  /// fill edge was added.
  bool eliminate(Vertex v) {
    const VertexSet nb = adj_[v];
    bool filled = false;
    for (std::size_t i = 0; i < nb.size(); ++i) {
      erase(nb[i], v);
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (!adjacent(nb[i], nb[j])) {
          insert(nb[i], nb[j]);
          insert(nb[j], nb[i]);
          filled = true;
        }
      }
    }
    adj_[v].clear();
    return filled;
  }

 private:
  void insert(Vertex a, Vertex b) {
    auto& list = adj_[a];
    list.insert(std::lower_bound(list.begin(), list.end(), b), b);
  }
  void erase(Vertex a, Vertex b) {
    auto& list = adj_[a];
    list.erase(std::lower_bound(list.begin(), list.end(), b));
  }

  std::vector<VertexSet> adj_;
};

}  // namespace

namespace {

struct Elimination {
  std::vector<Vertex> order;
  std::vector<VertexSet> bags;  // bag of the i-th eliminated vertex
};

Elimination run_min_fill(const Graph& g) {
  const std::size_t n = g.num_vertices();
  EliminationGraph eg(g);
  std::vector<std::size_t> fill(n);
  std::set<std::pair<std::size_t, Vertex>> queue;
  for (Vertex v = 0; v < n; ++v) {
    fill[v] = eg.fill(v);
    queue.emplace(fill[v], v);
  }
  std::vector<char> done(n, 0);
  Elimination result;
  result.order.reserve(n);
  result.bags.reserve(n);
  while (!queue.empty()) {
    const Vertex v = queue.begin()->second;
    queue.erase(queue.begin());
    done[v] = 1;
    VertexSet bag = eg.neighbors(v);
    bag.insert(std::lower_bound(bag.begin(), bag.end(), v), v);
    const VertexSet nb = eg.neighbors(v);
    const bool filled = eg.eliminate(v);
    VertexSet touched = nb;
    if (filled) {
      for (Vertex u : nb) {
        touched.insert(touched.end(), eg.neighbors(u).begin(), eg.neighbors(u).end());
      }
      touched = normalized(std::move(touched));
    }
    for (Vertex u : touched) {
      if (done[u] != 0) continue;
      queue.erase({fill[u], u});
      fill[u] = eg.fill(u);
      queue.emplace(fill[u], u);
    }
    result.order.push_back(v);
    result.bags.push_back(std::move(bag));
  }
  return result;
}

}  // namespace

std::vector<Vertex> min_fill_ordering(const Graph& g) { return run_min_fill(g).order; }

TreeDecomposition min_fill_heuristic(const Graph& g) {
  const std::size_t n = g.num_vertices();
  TreeDecomposition td;
  if (n == 0) {
    td.bags.emplace_back();
    return td;
  }
  Elimination elim = run_min_fill(g);
  std::vector<std::size_t> position(n);
  for (std::size_t i = 0; i < n; ++i) position[elim.order[i]] = i;
  // Parent of bag i: the bag of the earliest-eliminated later neighbour.
  std::vector<std::size_t> roots;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t parent = n;
    for (Vertex u : elim.bags[i]) {
      if (position[u] > i) parent = std::min(parent, position[u]);
    }
    if (parent == n) {
      roots.push_back(i);
    } else {
      td.tree_edges.emplace_back(i, parent);
    }
  }
  // One tree per connected component; hang them all off the last root.
  for (std::size_t r = 0; r + 1 < roots.size(); ++r) {
    td.tree_edges.emplace_back(roots[r], roots.back());
  }
  td.bags = std::move(elim.bags);
  return td;
}

// ---------------------------------------------------------------------------
// Nice form

namespace {

class NiceBuilder {
 public:
  std::uint32_t leaf() { return add({NiceKind::leaf, 0, {}, {}}); }

  std::uint32_t introduce(std::uint32_t child, Vertex v) {
    VertexSet bag = out_.nodes[child].bag;
    bag.insert(std::lower_bound(bag.begin(), bag.end(), v), v);
    return add({NiceKind::introduce, v, std::move(bag), {child}});
  }

  std::uint32_t forget(std::uint32_t child, Vertex v) {
    VertexSet bag = out_.nodes[child].bag;
    bag.erase(std::lower_bound(bag.begin(), bag.end(), v));
    return add({NiceKind::forget, v, std::move(bag), {child}});
  }

  std::uint32_t join(std::uint32_t left, std::uint32_t right) {
    return add({NiceKind::join, 0, out_.nodes[left].bag, {left, right}});
  }

  /// Forgets what `target` lacks, then introduces what it adds.
  std::uint32_t transition(std::uint32_t from, const VertexSet& target) {
    const VertexSet current = out_.nodes[from].bag;
    std::uint32_t node = from;
    VertexSet gone;
    std::set_difference(current.begin(), current.end(), target.begin(), target.end(),
                        std::back_inserter(gone));
    for (Vertex v : gone) node = forget(node, v);
    VertexSet added;
    std::set_difference(target.begin(), target.end(), current.begin(), current.end(),
                        std::back_inserter(added));
    for (Vertex v : added) node = introduce(node, v);
    return node;
  }

  NiceTreeDecomposition take() { return std::move(out_); }

 private:
  std::uint32_t add(NiceNode node) {
    out_.nodes.push_back(std::move(node));
    return static_cast<std::uint32_t>(out_.nodes.size() - 1);
  }

  NiceTreeDecomposition out_;
};

}  // namespace

NiceTreeDecomposition make_nice(const TreeDecomposition& td) {
  const auto problems = validate_structure(td);
  if (!problems.empty()) {
    std::string msg = "invalid tree decomposition:";
    for (const auto& p : problems) msg += "\n  " + p.message;
    throw InputError(msg);
  }
  const std::size_t n = td.bags.size();
  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto& [a, b] : td.tree_edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  // BFS from node 0; reversed BFS order visits children before parents.
  std::vector<std::size_t> order{0};
  std::vector<std::size_t> parent(n, n);
  parent[0] = 0;
  for (std::size_t head = 0; head < order.size(); ++head) {
    const std::size_t t = order[head];
    std::sort(adj[t].begin(), adj[t].end());
    for (std::size_t c : adj[t]) {
      if (parent[c] == n) {
        parent[c] = t;
        order.push_back(c);
      }
    }
  }
  NiceBuilder builder;
  std::vector<std::uint32_t> top(n);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const std::size_t t = *it;
    const VertexSet& bag = td.bags[t];
    std::vector<std::uint32_t> branches;
    for (std::size_t c : adj[t]) {
      if (c != t && parent[c] == t) branches.push_back(builder.transition(top[c], bag));
    }
    std::uint32_t node;
    if (branches.empty()) {
      node = builder.transition(builder.leaf(), bag);
    } else {
      node = branches.front();
      for (std::size_t i = 1; i < branches.size(); ++i) node = builder.join(node, branches[i]);
    }
    top[t] = node;
  }
  const std::uint32_t root = builder.transition(top[0], {});
  NiceTreeDecomposition ntd = builder.take();
  if (root + 1 != ntd.nodes.size()) {
    throw std::logic_error("make_nice: root is not the last node");
  }
  return ntd;
}

std::vector<std::string> check_nice(const NiceTreeDecomposition& ntd) {
  std::vector<std::string> out;
  if (ntd.nodes.empty()) {
    out.emplace_back("no nodes");
    return out;
  }
  std::vector<std::size_t> parents(ntd.nodes.size(), 0);
  for (std::size_t t = 0; t < ntd.nodes.size(); ++t) {
    const NiceNode& node = ntd.nodes[t];
    const std::string name = "node " + std::to_string(t);
    for (std::uint32_t c : node.children) {
      if (c >= t) out.push_back(name + ": child " + std::to_string(c) + " not stored before it");
      else ++parents[c];
    }
    auto child_bag = [&](std::size_t i) -> const VertexSet& {
      return ntd.nodes[node.children[i]].bag;
    };
    switch (node.kind) {
      case NiceKind::leaf:
        if (!node.children.empty() || !node.bag.empty()) out.push_back(name + ": leaf must be childless with an empty bag");
        break;
      case NiceKind::introduce: {
        if (node.children.size() != 1) { out.push_back(name + ": introduce needs one child"); break; }
        VertexSet expect = child_bag(0);
        if (std::binary_search(expect.begin(), expect.end(), node.vertex)) {
          out.push_back(name + ": introduced vertex already in child bag");
          break;
        }
        expect.insert(std::lower_bound(expect.begin(), expect.end(), node.vertex), node.vertex);
        if (expect != node.bag) out.push_back(name + ": introduce bag mismatch");
        break;
      }
      case NiceKind::forget: {
        if (node.children.size() != 1) { out.push_back(name + ": forget needs one child"); break; }
        VertexSet expect = node.bag;
        if (std::binary_search(expect.begin(), expect.end(), node.vertex)) {
          out.push_back(name + ": forgotten vertex still in bag");
          break;
        }
        expect.insert(std::lower_bound(expect.begin(), expect.end(), node.vertex), node.vertex);
        if (expect != child_bag(0)) out.push_back(name + ": forget bag mismatch");
        break;
      }
      case NiceKind::join:
        if (node.children.size() != 2) { out.push_back(name + ": join needs two children"); break; }
        if (child_bag(0) != node.bag || child_bag(1) != node.bag) out.push_back(name + ": join bags differ");
        break;
    }
  }
  for (std::size_t t = 0; t + 1 < ntd.nodes.size(); ++t) {
    if (parents[t] != 1) out.push_back("node " + std::to_string(t) + " has " + std::to_string(parents[t]) + " parents");
  }
  if (!ntd.nodes.back().bag.empty()) out.emplace_back("root bag is not empty");
  return out;
}

TreeDecomposition as_tree_decomposition(const NiceTreeDecomposition& ntd) {
  TreeDecomposition td;
  for (std::size_t t = 0; t < ntd.nodes.size(); ++t) {
    td.bags.push_back(ntd.nodes[t].bag);
    for (std::uint32_t c : ntd.nodes[t].children) td.tree_edges.emplace_back(c, t);
  }
  return td;
}

}  // namespace vcdim
