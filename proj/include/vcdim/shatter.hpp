#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vcdim/graph.hpp"
#include "vcdim/hypergraph.hpp"
#include "vcdim/trace_matrix.hpp"

namespace vcdim {

/// A shattered set together with one witness per subset.  Subsets are bit
/// patterns over `shattered_set`: bit i stands for shattered_set[i].
/// `witnesses[pattern]` is an edge index (hypergraphs) or a Y-vertex id
/// (instances).
struct ShatterCertificate {
  std::vector<Vertex> shattered_set;
  std::vector<std::uint32_t> witnesses;

  std::size_t size() const { return shattered_set.size(); }
  bool operator==(const ShatterCertificate&) const = default;
};

/// Pattern rendered least-significant bit first, e.g. pattern 0b01 over two
/// vertices is "10".
std::string pattern_string(std::uint64_t pattern, std::size_t bits);

// Hypergraph shattering.  `s` is an ordered vertex list; InputError on
// out-of-range or repeated ids.
bool is_shattered(const Hypergraph& h, std::span<const Vertex> s);
/// Certificate choosing the lowest-index witnessing edge for every pattern.
std::optional<ShatterCertificate> witness_of(const Hypergraph& h, std::span<const Vertex> s);

// Instance shattering: witnesses are Y-vertices, traces are N(y) ∩ S.
// InputError when s is not a subset of X.
bool is_shattered(const GenVCInstance& inst, std::span<const Vertex> s);
/// Certificate choosing the lowest-id witnessing Y-vertex for every pattern.
std::optional<ShatterCertificate> witness_of(const GenVCInstance& inst,
                                             std::span<const Vertex> s);

/// Traces of the Y-vertices touching `s`, as a |s|-column matrix.  Y-vertices
/// with an empty trace collapse into one extra trailing witness slot
/// (`has_outside`) so the matrix stays proportional to the neighbourhood of s.
struct LocalTraces {
  TraceMatrix matrix;
  std::vector<Vertex> witness_ids;  // Y-vertex per row, outside slot excluded
  bool has_outside = false;
};
LocalTraces local_traces(const GenVCInstance& inst, std::span<const Vertex> s);

/// Re-verifies every entry.  Returns a description of the first failure
/// (naming the offending pattern), or nothing when the certificate holds.
std::optional<std::string> certificate_failure(const Hypergraph& h,
                                               const ShatterCertificate& cert);
std::optional<std::string> certificate_failure(const GenVCInstance& inst,
                                               const ShatterCertificate& cert);

}  // namespace vcdim
