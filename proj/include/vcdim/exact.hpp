#pragma once

#include <cstdint>
#include <optional>

#include "vcdim/graph.hpp"
#include "vcdim/hypergraph.hpp"
#include "vcdim/shatter.hpp"

namespace vcdim {

struct SolveStats {
  std::uint64_t subsets_examined = 0;
  std::uint64_t elapsed_ns = 0;
};

/// vc_dimension is -1 when nothing (not even the empty set) is shattered,
/// i.e. there are no edges / no Y-vertices.  A certificate is present iff
/// vc_dimension >= 0, and its set has exactly vc_dimension vertices.
struct SolveResult {
  int vc_dimension = -1;
  std::optional<ShatterCertificate> certificate;
  SolveStats stats;
};

struct BruteForceOptions {
  /// Cap candidate sizes at floor(log2 m) and stop at the first size with
  /// no shattered set.  Off = test every subset of V (benchmark baseline).
  bool pruned = true;
};

/// Exact VC-dimension by enumerating candidate sets in increasing size,
/// lexicographically within a size.  Returns the lexicographically smallest
/// maximum shattered set.
SolveResult vc_bruteforce(const Hypergraph& h, BruteForceOptions options = {});

/// Exact VC-dimension via subsets of each hyperedge (every shattered set lies
/// inside the edge witnessing the full set).  Same tie-break as
/// vc_bruteforce.
SolveResult vc_dimension_fpt(const Hypergraph& h);

/// Exact Gen-VC-dimension: S ⊆ X with |S| <= floor(log2 |Y|), increasing size.
SolveResult genvc_bruteforce(const GenVCInstance& inst);

/// Exact Gen-VC-dimension via subsets of the Y-neighbourhoods N(y) ∩ X: a
/// nonempty shattered set lies in the neighbourhood of the Y-vertex
/// witnessing it in full.  Sizes are capped at floor(log2 Δ_X) + 1 where Δ_X
/// is the largest |N(x) ∩ Y|.
SolveResult genvc_neighborhood_solver(const GenVCInstance& inst);

/// Lexicographically smallest shattered S ⊆ X of exactly `size` vertices,
/// found by neighbourhood enumeration.  `examined` (optional) counts checks.
std::optional<ShatterCertificate> find_shattered_set(const GenVCInstance& inst,
                                                     std::size_t size,
                                                     std::uint64_t* examined = nullptr);

}  // namespace vcdim
