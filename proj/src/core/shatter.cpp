#include "vcdim/shatter.hpp"

#include <algorithm>

namespace vcdim {

std::string pattern_string(std::uint64_t pattern, std::size_t bits) {
  std::string out(bits, '0');
  for (std::size_t i = 0; i < bits; ++i) {
    if ((pattern >> i) & 1U) out[i] = '1';
  }
  return out;
}

namespace {

void check_distinct(std::span<const Vertex> s) {
  VertexSet sorted(s.begin(), s.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InputError("vertex set lists a vertex twice");
  }
}

void check_hypergraph_set(const Hypergraph& h, std::span<const Vertex> s) {
  for (Vertex v : s) {
    if (v >= h.num_vertices()) {
      throw InputError("vertex id " + std::to_string(v) + " outside hypergraph of " +
                       std::to_string(h.num_vertices()) + " vertices");
    }
  }
  check_distinct(s);
}

void check_instance_set(const GenVCInstance& inst, std::span<const Vertex> s) {
  for (Vertex v : s) {
    if (v >= inst.graph().num_vertices() || !inst.in_x(v)) {
      throw InputError("vertex " + std::to_string(v) + " is not in X");
    }
  }
  check_distinct(s);
}

std::uint64_t edge_trace(const VertexSet& edge, std::span<const Vertex> s) {
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (std::binary_search(edge.begin(), edge.end(), s[i])) code |= std::uint64_t{1} << i;
  }
  return code;
}

std::uint64_t neighbourhood_trace(const Graph& g, Vertex y, std::span<const Vertex> s) {
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (g.adjacent(y, s[i])) code |= std::uint64_t{1} << i;
  }
  return code;
}

}  // namespace

bool is_shattered(const Hypergraph& h, std::span<const Vertex> s) {
  check_hypergraph_set(h, s);
  return shatters(h.traces(), s);
}

std::optional<ShatterCertificate> witness_of(const Hypergraph& h, std::span<const Vertex> s) {
  check_hypergraph_set(h, s);
  ShatterCertificate cert;
  if (!shatters(h.traces(), s, &cert.witnesses)) return std::nullopt;
  cert.shattered_set.assign(s.begin(), s.end());
  return cert;
}

LocalTraces local_traces(const GenVCInstance& inst, std::span<const Vertex> s) {
  const Graph& g = inst.graph();
  LocalTraces out;
  for (Vertex v : s) {
    for (Vertex y : g.neighbors(v)) {
      if (inst.in_y(y)) out.witness_ids.push_back(y);
    }
  }
  out.witness_ids = normalized(std::move(out.witness_ids));
  out.has_outside = out.witness_ids.size() < inst.y().size();
  out.matrix = TraceMatrix(s.size(), out.witness_ids.size() + (out.has_outside ? 1 : 0));
  for (std::size_t c = 0; c < s.size(); ++c) {
    for (Vertex y : g.neighbors(s[c])) {
      if (!inst.in_y(y)) continue;
      const auto row = std::lower_bound(out.witness_ids.begin(), out.witness_ids.end(), y) -
                       out.witness_ids.begin();
      out.matrix.set(c, static_cast<std::size_t>(row));
    }
  }
  return out;
}

namespace {

std::vector<std::uint32_t> identity_columns(std::size_t k) {
  std::vector<std::uint32_t> cols(k);
  for (std::uint32_t i = 0; i < k; ++i) cols[i] = i;
  return cols;
}

}  // namespace

bool is_shattered(const GenVCInstance& inst, std::span<const Vertex> s) {
  check_instance_set(inst, s);
  const LocalTraces local = local_traces(inst, s);
  return shatters(local.matrix, identity_columns(s.size()));
}

std::optional<ShatterCertificate> witness_of(const GenVCInstance& inst,
                                             std::span<const Vertex> s) {
  check_instance_set(inst, s);
  const LocalTraces local = local_traces(inst, s);
  ShatterCertificate cert;
  if (!shatters(local.matrix, identity_columns(s.size()), &cert.witnesses)) return std::nullopt;
  cert.shattered_set.assign(s.begin(), s.end());
  // Rows are Y ids in ascending order.  Every listed row touches s, so the
  // empty pattern is always realised by the outside slot.
  Vertex outside = 0;
  if (local.has_outside) {
    for (Vertex y : inst.y()) {
      if (!std::binary_search(local.witness_ids.begin(), local.witness_ids.end(), y)) {
        outside = y;
        break;
      }
    }
  }
  const auto outside_row = static_cast<std::uint32_t>(local.witness_ids.size());
  for (auto& w : cert.witnesses) {
    w = (w == outside_row) ? outside : local.witness_ids[w];
  }
  return cert;
}

namespace {

std::optional<std::string> shape_failure(const ShatterCertificate& cert) {
  const std::size_t k = cert.shattered_set.size();
  if (k >= 32) return "shattered set too large";
  if (cert.witnesses.size() != (std::size_t{1} << k)) {
    return "expected " + std::to_string(std::size_t{1} << k) + " witnesses, found " +
           std::to_string(cert.witnesses.size());
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::string> certificate_failure(const Hypergraph& h,
                                               const ShatterCertificate& cert) {
  if (auto f = shape_failure(cert)) return f;
  try {
    check_hypergraph_set(h, cert.shattered_set);
  } catch (const InputError& e) {
    return std::string(e.what());
  }
  const std::size_t k = cert.size();
  for (std::uint64_t p = 0; p < cert.witnesses.size(); ++p) {
    const std::uint32_t w = cert.witnesses[p];
    if (w >= h.num_edges()) {
      return "pattern \"" + pattern_string(p, k) + "\": witness edge out of range";
    }
    if (edge_trace(h.edge(w), cert.shattered_set) != p) {
      return "pattern \"" + pattern_string(p, k) + "\": witness edge has a different trace";
    }
  }
  return std::nullopt;
}

std::optional<std::string> certificate_failure(const GenVCInstance& inst,
                                               const ShatterCertificate& cert) {
  if (auto f = shape_failure(cert)) return f;
  try {
    check_instance_set(inst, cert.shattered_set);
  } catch (const InputError& e) {
    return std::string(e.what());
  }
  const std::size_t k = cert.size();
  for (std::uint64_t p = 0; p < cert.witnesses.size(); ++p) {
    const std::uint32_t w = cert.witnesses[p];
    if (w >= inst.graph().num_vertices() || !inst.in_y(w)) {
      return "pattern \"" + pattern_string(p, k) + "\": witness is not in Y";
    }
    if (neighbourhood_trace(inst.graph(), w, cert.shattered_set) != p) {
      return "pattern \"" + pattern_string(p, k) + "\": witness has a different trace";
    }
  }
  return std::nullopt;
}

}  // namespace vcdim
