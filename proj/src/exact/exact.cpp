#include "vcdim/exact.hpp"

#include <algorithm>
#include <chrono>

#include "vcdim/combinations.hpp"

namespace vcdim {

namespace {

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  std::uint64_t elapsed_ns() const {
    return static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::nanoseconds>(
                                          std::chrono::steady_clock::now() - start_)
                                          .count());
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

std::size_t required_degree(std::size_t size) {
  return size == 0 ? 0 : std::size_t{1} << (size - 1);
}

// Sizes above floor(log2 witnesses) cannot be shattered.
std::size_t size_cap(std::size_t witnesses) {
  return witnesses == 0 ? 0 : static_cast<std::size_t>(floor_log2(witnesses));
}

// Shared level-wise search over a trace matrix whose columns are the
// candidates.  `candidate_degree(c)` is the number of witnesses containing
// column c; a column can only sit in a shattered set of size s if it is in at
// least 2^(s-1) witnesses.
template <typename Degree>
std::vector<std::uint32_t> levelwise_search(const TraceMatrix& matrix, std::size_t max_size,
                                            bool stop_at_gap, Degree&& candidate_degree,
                                            std::uint64_t& examined) {
  std::vector<std::uint32_t> best;
  for (std::size_t size = 1; size <= max_size; ++size) {
    std::vector<std::uint32_t> pool;
    for (std::uint32_t c = 0; c < matrix.columns(); ++c) {
      if (candidate_degree(c) >= required_degree(size)) pool.push_back(c);
    }
    std::vector<std::uint32_t> chosen(size);
    std::vector<std::uint32_t> found;
    for_each_combination(pool.size(), size, [&](const std::vector<std::size_t>& idx) {
      for (std::size_t i = 0; i < size; ++i) chosen[i] = pool[idx[i]];
      ++examined;
      if (shatters(matrix, chosen)) {
        found = chosen;
        return true;
      }
      return false;
    });
    if (!found.empty()) {
      best = std::move(found);
    } else if (stop_at_gap) {
      break;
    }
  }
  return best;
}

}  // namespace

SolveResult vc_bruteforce(const Hypergraph& h, BruteForceOptions options) {
  Stopwatch clock;
  SolveResult result;
  if (h.num_edges() == 0) {
    result.stats.elapsed_ns = clock.elapsed_ns();
    return result;
  }
  const std::size_t max_size =
      options.pruned ? std::min(h.num_vertices(), size_cap(h.num_edges())) : h.num_vertices();
  std::vector<std::uint32_t> best;
  if (options.pruned) {
    best = levelwise_search(
        h.traces(), max_size, true, [&](std::uint32_t v) { return h.degree(v); },
        result.stats.subsets_examined);
  } else {
    best = levelwise_search(
        h.traces(), max_size, false, [](std::uint32_t) { return ~std::size_t{0}; },
        result.stats.subsets_examined);
  }
  result.certificate = witness_of(h, best);
  result.vc_dimension = static_cast<int>(best.size());
  result.stats.elapsed_ns = clock.elapsed_ns();
  return result;
}

SolveResult vc_dimension_fpt(const Hypergraph& h) {
  Stopwatch clock;
  SolveResult result;
  if (h.num_edges() == 0) {
    result.stats.elapsed_ns = clock.elapsed_ns();
    return result;
  }
  const std::size_t cap = size_cap(h.num_edges());
  std::vector<Vertex> best;
  std::vector<Vertex> chosen;
  for (const VertexSet& edge : h.edges()) {
    const std::size_t top = std::min(edge.size(), cap);
    if (top < std::max<std::size_t>(best.size(), 1)) continue;
    for (std::size_t size = top; size >= std::max<std::size_t>(best.size(), 1); --size) {
      VertexSet pool;
      for (Vertex v : edge) {
        if (h.degree(v) >= required_degree(size)) pool.push_back(v);
      }
      chosen.resize(size);
      bool hit = false;
      for_each_combination(pool.size(), size, [&](const std::vector<std::size_t>& idx) {
        for (std::size_t i = 0; i < size; ++i) chosen[i] = pool[idx[i]];
        if (size == best.size() && !(chosen < best)) return true;  // lexicographic cut
        ++result.stats.subsets_examined;
        if (shatters(h.traces(), chosen)) {
          hit = true;
          return true;
        }
        return false;
      });
      if (hit) {
        best = chosen;
        break;
      }
    }
  }
  result.certificate = witness_of(h, best);
  result.vc_dimension = static_cast<int>(best.size());
  result.stats.elapsed_ns = clock.elapsed_ns();
  return result;
}

SolveResult genvc_bruteforce(const GenVCInstance& inst) {
  Stopwatch clock;
  SolveResult result;
  const VertexSet& xs = inst.x();
  const VertexSet& ys = inst.y();
  if (ys.empty()) {
    result.stats.elapsed_ns = clock.elapsed_ns();
    return result;
  }
  TraceMatrix matrix(xs.size(), ys.size());
  std::vector<std::size_t> degree(xs.size(), 0);
  for (std::size_t c = 0; c < xs.size(); ++c) {
    for (Vertex y : inst.graph().neighbors(xs[c])) {
      if (!inst.in_y(y)) continue;
      matrix.set(c, static_cast<std::size_t>(std::lower_bound(ys.begin(), ys.end(), y) -
                                             ys.begin()));
      ++degree[c];
    }
  }
  const std::size_t max_size = std::min(xs.size(), size_cap(ys.size()));
  const std::vector<std::uint32_t> best = levelwise_search(
      matrix, max_size, true, [&](std::uint32_t c) { return degree[c]; },
      result.stats.subsets_examined);
  VertexSet s;
  for (std::uint32_t c : best) s.push_back(xs[c]);
  result.certificate = witness_of(inst, s);
  result.vc_dimension = static_cast<int>(s.size());
  result.stats.elapsed_ns = clock.elapsed_ns();
  return result;
}

std::optional<ShatterCertificate> find_shattered_set(const GenVCInstance& inst,
                                                     std::size_t size,
                                                     std::uint64_t* examined) {
  if (inst.y().empty()) return std::nullopt;
  if (size == 0) return witness_of(inst, std::span<const Vertex>{});
  if (size > size_cap(inst.y().size())) return std::nullopt;
  const Graph& g = inst.graph();
  const std::size_t need = required_degree(size);
  auto y_degree = [&](Vertex x) {
    std::size_t d = 0;
    for (Vertex y : g.neighbors(x)) d += inst.in_y(y) ? 1 : 0;
    return d;
  };
  std::vector<char> eligible(g.num_vertices(), 0);
  for (Vertex x : inst.x()) eligible[x] = y_degree(x) >= need ? 1 : 0;

  std::vector<Vertex> best;
  std::vector<Vertex> chosen(size);
  for (Vertex y : inst.y()) {
    VertexSet pool;
    for (Vertex v : g.neighbors(y)) {
      if (eligible[v] != 0) pool.push_back(v);
    }
    for_each_combination(pool.size(), size, [&](const std::vector<std::size_t>& idx) {
      for (std::size_t i = 0; i < size; ++i) chosen[i] = pool[idx[i]];
      if (!best.empty() && !(chosen < best)) return true;
      if (examined != nullptr) ++*examined;
      if (is_shattered(inst, chosen)) {
        best = chosen;
        return true;
      }
      return false;
    });
  }
  if (best.empty()) return std::nullopt;
  return witness_of(inst, best);
}

SolveResult genvc_neighborhood_solver(const GenVCInstance& inst) {
  Stopwatch clock;
  SolveResult result;
  if (inst.y().empty()) {
    result.stats.elapsed_ns = clock.elapsed_ns();
    return result;
  }
  result.certificate = witness_of(inst, std::span<const Vertex>{});
  result.vc_dimension = 0;
  const std::size_t dx = inst.max_x_degree();
  const std::size_t cap =
      dx == 0 ? 0
              : std::min(static_cast<std::size_t>(floor_log2(dx)) + 1, size_cap(inst.y().size()));
  for (std::size_t size = 1; size <= cap; ++size) {
    auto cert = find_shattered_set(inst, size, &result.stats.subsets_examined);
    if (!cert) break;
    result.certificate = std::move(cert);
    result.vc_dimension = static_cast<int>(size);
  }
  result.stats.elapsed_ns = clock.elapsed_ns();
  return result;
}

}  // namespace vcdim
