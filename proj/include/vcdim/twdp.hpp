#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vcdim/exact.hpp"
#include "vcdim/graph.hpp"
#include "vcdim/shatter.hpp"
#include "vcdim/tree_decomposition.hpp"

namespace vcdim {

/// Canonical shattering pattern for size k.  Pattern vertex i < k is s_i;
/// pattern vertex k + j is w_j.  s_i ~ w_j iff bit i of j is set, so w_0 is
/// isolated and every s_i has degree 2^(k-1).
struct PatternGraph {
  int k = 0;
  std::size_t num_vertices() const { return static_cast<std::size_t>(k) + (std::size_t{1} << k); }
  std::size_t num_witnesses() const { return std::size_t{1} << k; }
  bool is_s(std::size_t p) const { return p < static_cast<std::size_t>(k); }
  /// Pattern adjacency for any two pattern vertex indices.
  bool adjacent(std::size_t p, std::size_t q) const;
};

/// Throws InputError for k <= 0 or k > kMaxPatternK.
PatternGraph build_pattern(int k);

/// Largest k the dynamic program supports (k + 2^k pattern vertices must fit
/// a state).
inline constexpr int kMaxPatternK = 4;

/// One DP state.  Entry p is kUp, kDown, or kBagBase + index of the image in
/// the node's sorted bag.
struct Assignment {
  static constexpr std::uint8_t kUp = 0;
  static constexpr std::uint8_t kDown = 1;
  static constexpr std::uint8_t kBagBase = 2;
  static constexpr std::size_t kSlots = 24;

  std::array<std::uint8_t, kSlots> value{};
  bool operator==(const Assignment&) const = default;
};

/// Stored states of one nice node.  `from[i]` names the child state(s) the
/// i-th state was derived from (second entry only for joins).
struct StateTable {
  std::vector<Assignment> states;
  std::vector<std::array<std::uint32_t, 2>> from;
};

struct DpOptions {
  /// Largest table any node may hold before ResourceRefusal.
  std::size_t state_limit = 4'000'000;
  /// Keep every table (back-pointers for extraction, inspection in tests).
  bool keep_tables = false;
};

/// Pattern embedding: images of s_0..s_{k-1} and w_0..w_{2^k-1}.
struct Embedding {
  std::vector<Vertex> s_images;
  std::vector<Vertex> w_images;
};

struct DpRun {
  std::optional<Embedding> embedding;
  std::size_t peak_states = 0;
  std::uint64_t total_states = 0;
  /// Filled when DpOptions::keep_tables is set; indexed like ntd.nodes.
  std::vector<StateTable> tables;
};

/// Decides whether the pattern for k embeds injectively into the instance
/// with s-images in X, w-images in Y and s_i ~ w_j in G exactly when bit i of
/// j is set.  Such an embedding is a size-k shattered set with its witnesses.
/// `ntd` must be a nice decomposition of inst.graph().
DpRun dp_run(const GenVCInstance& inst, const NiceTreeDecomposition& ntd, int k,
             const DpOptions& options = {});

/// Certificate form of dp_run: shattered_set[i] is the image of s_i and
/// witnesses[j] the image of w_j.
std::optional<ShatterCertificate> dp_decide(const GenVCInstance& inst,
                                            const NiceTreeDecomposition& ntd, int k,
                                            const DpOptions& options = {});

/// Largest shattered set contained in a single bag, with its certificate
/// (vc_dimension -1 when Y is empty).
SolveResult phase1_bag_scan(const GenVCInstance& inst, const NiceTreeDecomposition& ntd);

/// floor(log2(width + 1)) + 2: shattered sets larger than this lie in a bag.
int treewidth_cutoff(int width);

struct TreewidthSolveResult {
  SolveResult result;
  int width_used = -1;
  int cutoff = 0;
  int phase1_value = -1;
  /// Phase that produced the reported certificate (1 or 2).
  int phase = 1;
  /// Sizes resolved by neighbourhood enumeration instead of the DP, either
  /// because k exceeded the pattern cap or because X and Y overlap.
  std::vector<int> fallback_sizes;
  bool overlap = false;
  std::size_t peak_states = 0;
  std::uint64_t phase1_ns = 0;
  std::uint64_t phase2_ns = 0;
};

/// Exact Gen-VC-dimension over a nice decomposition of the instance graph.
/// Throws InputError when `ntd` is not a valid nice decomposition of it.
TreewidthSolveResult genvc_treewidth_solve(const GenVCInstance& inst,
                                           const NiceTreeDecomposition& ntd, int pattern_cap,
                                           const DpOptions& options = {});

}  // namespace vcdim
