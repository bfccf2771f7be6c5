#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "vcdim/hypergraph.hpp"
#include "vcdim/shatter.hpp"

namespace vcdim {

/// A witness set W listed in good order: the edge at position j contains the
/// realiser of bit i iff bit i of j is set.
struct GoodOrdering {
  std::vector<std::uint32_t> ordering;  // edge index per position, 2^k entries
  /// Per bit position, every vertex whose incidence inside W matches it.
  std::vector<VertexSet> realizers;
};

/// Searches for a good ordering of W (|W| = 2^k).  Backtracks over the
/// position assignment, abandoning a prefix as soon as some bit position has
/// no vertex left that could realise it.  Throws InputError when |W| != 2^k,
/// W repeats an edge or names a missing edge.
std::optional<GoodOrdering> find_good_ordering(const Hypergraph& h,
                                               std::span<const std::uint32_t> w, int k);

/// The size-k set witnessed by W (lowest-id realiser per bit), if any.
std::optional<VertexSet> witness_decides_size_k(const Hypergraph& h,
                                                std::span<const std::uint32_t> w, int k);

struct ApproxOutcome {
  enum class Mode { found, refuted };
  Mode mode = Mode::refuted;
  int k = 0;
  /// Set when found: a shattered set of size k - 1.
  std::optional<ShatterCertificate> certificate;
  std::uint64_t witness_sets_examined = 0;
};

/// Either finds a shattered set of size k-1, or proves there is no
/// shattered set of size k.  Requires k >= 1.
ApproxOutcome approx_size_k(const Hypergraph& h, int k);

struct ApproxMaxResult {
  /// -1 when the hypergraph has no edges; the certificate is then absent.
  int certificate_size = -1;
  std::optional<ShatterCertificate> certificate;
  /// Certified bound VC(H) <= upper_bound (-1 without edges).
  int upper_bound = -1;
  /// Every k refuted on the way down.
  std::vector<int> refuted;
};

/// Tries k = floor(log2 Δ) + 1 downwards until approx_size_k finds a set.
/// The certificate has at least VC(H) - 1 vertices.
ApproxMaxResult approx_max(const Hypergraph& h);

}  // namespace vcdim
