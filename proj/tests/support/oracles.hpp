#pragma once
// Reference implementations used only by tests.  They are deliberately naive
// and share no code with the library beyond the data types: traces are
// collected into std::set, subsets enumerated by bitmask.

#include <cstdint>
#include <optional>
#include <vector>

#include "vcdim/graph.hpp"
#include "vcdim/hypergraph.hpp"
#include "vcdim/tree_decomposition.hpp"

namespace oracle {

using vcdim::GenVCInstance;
using vcdim::Graph;
using vcdim::Hypergraph;
using vcdim::Vertex;

/// {e ∩ S} == 2^S, by set comparison.
bool shattered(const Hypergraph& h, const std::vector<Vertex>& s);
bool shattered(const GenVCInstance& inst, const std::vector<Vertex>& s);

/// Maximum shattered set size over all 2^n subsets (-1 when none).  n <= 20.
int vc(const Hypergraph& h);
/// Same over subsets of X (-1 when Y is empty).  |X| <= 20.
int vc(const GenVCInstance& inst);
/// All maximum shattered sets of an instance.
std::vector<std::vector<Vertex>> maximum_shattered_sets(const GenVCInstance& inst);

/// Does the k-pattern embed injectively (s_i -> X, w_j -> Y, all images
/// distinct, s_i ~ w_j iff bit i of j)?  Literal backtracking over images.
bool pattern_embeds(const GenVCInstance& inst, int k);

/// Is there an S, |S| = k, such that the edges W (indices) realise every
/// subset of S exactly once?
bool witnesses_some_set(const Hypergraph& h, const std::vector<std::uint32_t>& w, int k);

/// 3-colorability by trying all 3^n colorings.  n <= 14.
bool three_colorable(const Graph& g);

/// Largest shattered set inside a single bag.
int best_in_bag(const GenVCInstance& inst, const vcdim::TreeDecomposition& td);

/// Does some bag contain all of s?
bool contained_in_bag(const vcdim::TreeDecomposition& td, const std::vector<Vertex>& s);

}  // namespace oracle
