#pragma once

#include "vcdim/graph.hpp"
#include "vcdim/hypergraph.hpp"

namespace vcdim {

/// Bipartite incidence instance: vertices 0..n-1 are the hypergraph vertices
/// (X), vertex n+i stands for edge i (Y) and is adjacent to the members of
/// edge i.  Shattering of every S ⊆ X is preserved.
GenVCInstance to_incidence_instance(const Hypergraph& h);

/// Incidence graph plus a clique on the edge-vertices (a split graph).
Graph to_split_graph(const Hypergraph& h);

/// Adds a fresh vertex (id n) to the universe and to every edge.  The result
/// has transversal number 1 and the same VC-dimension.
Hypergraph add_universal_vertex(const Hypergraph& h);

/// Set system of the Y-neighbourhoods restricted to X.  X is relabelled
/// densely in ascending order; edge i is N(Y[i]) ∩ X.
Hypergraph neighbourhood_hypergraph(const GenVCInstance& inst);

}  // namespace vcdim
