#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "vcdim/graph.hpp"

namespace vcdim {

/// Bags on the nodes of an (unrooted) tree.
struct TreeDecomposition {
  std::vector<VertexSet> bags;
  std::vector<std::pair<std::size_t, std::size_t>> tree_edges;

  /// Largest bag size minus one (-1 without bags).
  int width() const;
  bool operator==(const TreeDecomposition&) const = default;
};

struct Violation {
  enum class Kind {
    not_a_tree,
    vertex_out_of_range,
    edge_uncovered,
    vertex_missing,
    vertex_disconnected,
  };
  Kind kind;
  std::string message;
};

/// Checks tree shape, edge coverage and connected vertex occurrences.
/// Empty result iff `td` is a tree decomposition of `g`.
std::vector<Violation> validate(const Graph& g, const TreeDecomposition& td);

/// Tree shape and connected occurrences only (no graph needed).
std::vector<Violation> validate_structure(const TreeDecomposition& td);

/// Elimination-ordering decomposition: repeatedly eliminates the vertex whose
/// neighbourhood needs the fewest fill edges (lowest id on ties).  Node i is
/// the bag {v_i} ∪ N(v_i) of the i-th eliminated vertex.  The width is an
/// upper bound on the treewidth.
TreeDecomposition min_fill_heuristic(const Graph& g);

/// Elimination order produced by min_fill_heuristic.
std::vector<Vertex> min_fill_ordering(const Graph& g);

enum class NiceKind { leaf, introduce, forget, join };

struct NiceNode {
  NiceKind kind = NiceKind::leaf;
  Vertex vertex = 0;  // introduced / forgotten vertex
  VertexSet bag;
  std::vector<std::uint32_t> children;
};

/// Rooted nice decomposition.  Nodes are stored children-first, so a forward
/// sweep is a valid bottom-up order; the root is the last node and its bag is
/// empty, as are all leaf bags.
struct NiceTreeDecomposition {
  std::vector<NiceNode> nodes;

  std::size_t root() const { return nodes.size() - 1; }
  int width() const;
};

/// Node-count bound guaranteed by make_nice: at most
/// kNiceNodeFactor * (width + 1) * (number of input nodes).
inline constexpr std::size_t kNiceNodeFactor = 5;

/// Converts a decomposition to nice form of the same width.  The tree is
/// rooted at node 0; along every tree edge the child side first forgets what
/// the parent lacks and then introduces what it adds (ascending vertex
/// order), nodes with several children get left-to-right binary joins by
/// child id, and an empty-bag root is placed on top.  Throws InputError
/// listing the violations when `td` is structurally invalid.
NiceTreeDecomposition make_nice(const TreeDecomposition& td);

/// Per-node kind relations, root/leaf emptiness and child ordering.
std::vector<std::string> check_nice(const NiceTreeDecomposition& ntd);

/// Forgets the node kinds.
TreeDecomposition as_tree_decomposition(const NiceTreeDecomposition& ntd);

}  // namespace vcdim
