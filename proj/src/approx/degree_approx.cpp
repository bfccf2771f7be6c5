#include "vcdim/degree_approx.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <string>

#include "vcdim/combinations.hpp"
#include "vcdim/simd/kernels.hpp"

namespace vcdim {

namespace {

// Backtracking state for one witness set.  Candidates are the vertices that
// lie in exactly half of W (only those can realise a bit); per bit position
// a bitset over the candidates tracks who still matches the prefix placed so
// far.
class OrderingSearch {
 public:
  OrderingSearch(const Hypergraph& h, std::span<const std::uint32_t> w, int k)
      : w_(w.begin(), w.end()), k_(static_cast<std::size_t>(k)), kernels_(simd::active_kernels()) {
    const std::size_t half = w_.size() / 2;
    std::vector<Vertex> all;
    for (std::uint32_t e : w_) all.insert(all.end(), h.edge(e).begin(), h.edge(e).end());
    std::sort(all.begin(), all.end());
    for (std::size_t i = 0; i < all.size();) {
      std::size_t j = i;
      while (j < all.size() && all[j] == all[i]) ++j;
      if (j - i == half) candidates_.push_back(all[i]);
      i = j;
    }
    words_ = (candidates_.size() + 63) / 64;
    member_.assign(w_.size() * words_, 0);
    for (std::size_t m = 0; m < w_.size(); ++m) {
      const VertexSet& edge = h.edge(w_[m]);
      for (std::size_t c = 0; c < candidates_.size(); ++c) {
        if (std::binary_search(edge.begin(), edge.end(), candidates_[c])) {
          member_[m * words_ + c / 64] |= std::uint64_t{1} << (c % 64);
        }
      }
    }
    // levels_[j] holds the k candidate masks before placing position j.
    levels_.assign((w_.size() + 1) * k_ * words_, 0);
    std::uint64_t* root = level(0);
    for (std::size_t i = 0; i < k_; ++i) {
      for (std::size_t c = 0; c < candidates_.size(); ++c) {
        root[i * words_ + c / 64] |= std::uint64_t{1} << (c % 64);
      }
    }
    used_.assign(w_.size(), 0);
    order_.assign(w_.size(), 0);
  }

  std::optional<GoodOrdering> run() {
    if (candidates_.size() < k_ || !place(0)) return std::nullopt;
    GoodOrdering result;
    for (std::size_t j = 0; j < w_.size(); ++j) result.ordering.push_back(w_[order_[j]]);
    const std::uint64_t* final_masks = level(w_.size());
    result.realizers.resize(k_);
    for (std::size_t i = 0; i < k_; ++i) {
      for (std::size_t c = 0; c < candidates_.size(); ++c) {
        if ((final_masks[i * words_ + c / 64] >> (c % 64)) & 1U) {
          result.realizers[i].push_back(candidates_[c]);
        }
      }
    }
    return result;
  }

 private:
  std::uint64_t* level(std::size_t j) { return levels_.data() + j * k_ * words_; }

  bool place(std::size_t j) {
    if (j == w_.size()) return true;
    for (std::size_t m = 0; m < w_.size(); ++m) {
      if (used_[m] != 0) continue;
      std::uint64_t* next = level(j + 1);
      std::copy_n(level(j), k_ * words_, next);
      bool alive = true;
      for (std::size_t i = 0; i < k_ && alive; ++i) {
        const bool inside = ((j >> i) & 1U) != 0;
        alive = kernels_.and_inplace(next + i * words_, member_.data() + m * words_, !inside,
                                     words_);
      }
      if (!alive) continue;
      used_[m] = 1;
      order_[j] = m;
      if (place(j + 1)) return true;
      used_[m] = 0;
    }
    return false;
  }

  std::vector<std::uint32_t> w_;
  std::size_t k_;
  const simd::KernelSet& kernels_;
  std::vector<Vertex> candidates_;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> member_;
  std::vector<std::uint64_t> levels_;
  std::vector<char> used_;
  std::vector<std::size_t> order_;
};

void check_witness_set(const Hypergraph& h, std::span<const std::uint32_t> w, int k) {
  if (k < 0 || k >= 31 || w.size() != (std::size_t{1} << k)) {
    throw InputError("witness set of size " + std::to_string(w.size()) + " is not 2^" +
                     std::to_string(k));
  }
  std::vector<std::uint32_t> sorted(w.begin(), w.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InputError("witness set repeats an edge");
  }
  if (!sorted.empty() && sorted.back() >= h.num_edges()) {
    throw InputError("witness set names edge " + std::to_string(sorted.back()) +
                     " of a hypergraph with " + std::to_string(h.num_edges()) + " edges");
  }
}

}  // namespace

std::optional<GoodOrdering> find_good_ordering(const Hypergraph& h,
                                               std::span<const std::uint32_t> w, int k) {
  check_witness_set(h, w, k);
  if (k == 0) {
    return GoodOrdering{{w[0]}, {}};
  }
  return OrderingSearch(h, w, k).run();
}

std::optional<VertexSet> witness_decides_size_k(const Hypergraph& h,
                                                std::span<const std::uint32_t> w, int k) {
  // Searching from the sorted member list makes the answer independent of
  // the order W was given in.
  std::vector<std::uint32_t> sorted(w.begin(), w.end());
  std::sort(sorted.begin(), sorted.end());
  auto ordering = find_good_ordering(h, sorted, k);
  if (!ordering) return std::nullopt;
  VertexSet s;
  for (const VertexSet& r : ordering->realizers) s.push_back(r.front());
  std::sort(s.begin(), s.end());
  return s;
}

ApproxOutcome approx_size_k(const Hypergraph& h, int k) {
  if (k < 1) throw InputError("approx_size_k needs k >= 1");
  ApproxOutcome outcome;
  outcome.k = k;
  if (k - 1 >= 31) return outcome;
  const std::size_t width = std::size_t{1} << (k - 1);
  std::set<std::vector<std::uint32_t>> tried;
  std::vector<std::uint32_t> w(width);
  for (Vertex v = 0; v < h.num_vertices(); ++v) {
    const auto inc = h.incidence(v);
    if (inc.size() < width) continue;
    const bool hit = for_each_combination(inc.size(), width, [&](const std::vector<std::size_t>& idx) {
      for (std::size_t i = 0; i < width; ++i) w[i] = inc[idx[i]];
      if (!tried.insert(w).second) return false;
      ++outcome.witness_sets_examined;
      auto ordering = find_good_ordering(h, w, k - 1);
      if (!ordering) return false;
      ShatterCertificate cert;
      for (const VertexSet& r : ordering->realizers) cert.shattered_set.push_back(r.front());
      cert.witnesses = ordering->ordering;
      outcome.certificate = std::move(cert);
      return true;
    });
    if (hit) {
      outcome.mode = ApproxOutcome::Mode::found;
      return outcome;
    }
  }
  return outcome;
}

ApproxMaxResult approx_max(const Hypergraph& h) {
  ApproxMaxResult result;
  if (h.num_edges() == 0) return result;
  if (h.max_degree() == 0) {
    result.certificate = witness_of(h, std::span<const Vertex>{});
    result.certificate_size = 0;
    result.upper_bound = 0;
    return result;
  }
  const int top = floor_log2(h.max_degree()) + 1;
  for (int k = top; k >= 1; --k) {
    ApproxOutcome outcome = approx_size_k(h, k);
    if (outcome.mode == ApproxOutcome::Mode::found) {
      result.certificate = std::move(outcome.certificate);
      result.certificate_size = k - 1;
      // k + 1 was refuted (or k is the degree bound), so VC <= k.
      result.upper_bound = k;
      return result;
    }
    result.refuted.push_back(k);
  }
  // Unreachable with Δ >= 1: any single incident edge witnesses the empty set.
  throw std::logic_error("approx_max: k = 1 refuted although an edge is nonempty");
}

}  // namespace vcdim
