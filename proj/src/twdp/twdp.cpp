#include "vcdim/twdp.hpp"

#include <algorithm>
#include <chrono>
#include <cstring>
#include <unordered_map>

#include "vcdim/combinations.hpp"
#include "vcdim/simd/kernels.hpp"

namespace vcdim {

bool PatternGraph::adjacent(std::size_t p, std::size_t q) const {
  if (is_s(p) == is_s(q)) return false;
  const std::size_t s = is_s(p) ? p : q;
  const std::size_t w = (is_s(p) ? q : p) - static_cast<std::size_t>(k);
  return ((w >> s) & 1U) != 0;
}

PatternGraph build_pattern(int k) {
  if (k <= 0 || k > kMaxPatternK) {
    throw InputError("pattern size k = " + std::to_string(k) + " outside 1.." +
                     std::to_string(kMaxPatternK));
  }
  return PatternGraph{k};
}

int treewidth_cutoff(int width) { return floor_log2(static_cast<std::uint64_t>(width) + 1) + 2; }

namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t nanos_since(Clock::time_point start) {
  return static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start).count());
}

struct AssignmentHash {
  std::size_t operator()(const Assignment& a) const {
    std::uint64_t w[3];
    std::memcpy(w, a.value.data(), sizeof w);
    std::uint64_t h = w[0] * 0x9E3779B97F4A7C15ULL;
    h ^= (w[1] + 0x632BE59BD9B4E019ULL) * 0xC2B2AE3D27D4EB4FULL;
    h ^= (w[2] + 0x165667B19E3779F9ULL) * 0x94D049BB133111EBULL;
    return static_cast<std::size_t>(h ^ (h >> 31));
  }
};

constexpr std::uint32_t kNoChild = ~std::uint32_t{0};
constexpr std::uint8_t kUp = Assignment::kUp;
constexpr std::uint8_t kDown = Assignment::kDown;
constexpr std::uint8_t kBag = Assignment::kBagBase;

std::size_t bag_index(const VertexSet& bag, Vertex v) {
  return static_cast<std::size_t>(std::lower_bound(bag.begin(), bag.end(), v) - bag.begin());
}

class PatternDp {
 public:
  PatternDp(const GenVCInstance& inst, const NiceTreeDecomposition& ntd, int k,
            const DpOptions& options)
      : inst_(inst), ntd_(ntd), pattern_(build_pattern(k)), np_(pattern_.num_vertices()),
        options_(options) {
    if (ntd.width() + 1 > 255 - kBag) {
      throw ResourceRefusal("bags of " + std::to_string(ntd.width() + 1) +
                            " vertices exceed the DP state encoding");
    }
    neighbours_.resize(np_);
    for (std::size_t p = 0; p < np_; ++p) {
      for (std::size_t q = 0; q < np_; ++q) {
        if (pattern_.adjacent(p, q)) neighbours_[p].push_back(q);
      }
    }
  }

  DpRun run() {
    DpRun out;
    std::vector<StateTable> tables(ntd_.nodes.size());
    for (std::size_t t = 0; t < ntd_.nodes.size(); ++t) {
      const NiceNode& node = ntd_.nodes[t];
      StateTable& table = tables[t];
      index_.clear();
      switch (node.kind) {
        case NiceKind::leaf:
          add(table, Assignment{}, {kNoChild, kNoChild});
          break;
        case NiceKind::introduce:
          introduce(node, tables[node.children[0]], table);
          break;
        case NiceKind::forget:
          forget(node, tables[node.children[0]], table);
          break;
        case NiceKind::join:
          join(tables[node.children[0]], tables[node.children[1]], table);
          break;
      }
      out.peak_states = std::max(out.peak_states, table.states.size());
      out.total_states += table.states.size();
      if (!options_.keep_tables) {
        for (std::uint32_t c : node.children) tables[c] = StateTable{};
      }
    }
    const StateTable& root = tables[ntd_.root()];
    for (std::size_t i = 0; i < root.states.size(); ++i) {
      if (all_down(root.states[i])) {
        out.embedding = options_.keep_tables ? extract(tables, i) : Embedding{};
        break;
      }
    }
    if (options_.keep_tables) out.tables = std::move(tables);
    return out;
  }

 private:
  bool all_down(const Assignment& a) const {
    for (std::size_t p = 0; p < np_; ++p) {
      if (a.value[p] != kDown) return false;
    }
    return true;
  }

  void add(StateTable& table, const Assignment& a, std::array<std::uint32_t, 2> from) {
    const auto [it, inserted] =
        index_.try_emplace(a, static_cast<std::uint32_t>(table.states.size()));
    if (!inserted) return;
    if (table.states.size() >= options_.state_limit) {
      throw ResourceRefusal("DP table exceeds the state limit of " +
                            std::to_string(options_.state_limit));
    }
    table.states.push_back(a);
    table.from.push_back(from);
  }

  // Can pattern vertex p, currently up, be mapped to bag vertex v?
  bool can_map(const Assignment& a, const VertexSet& bag, std::size_t p, Vertex v) const {
    if (pattern_.is_s(p) ? !inst_.in_x(v) : !inst_.in_y(v)) return false;
    const Graph& g = inst_.graph();
    for (std::size_t q = 0; q < np_; ++q) {
      if (a.value[q] < kBag || pattern_.is_s(q) == pattern_.is_s(p)) continue;
      const Vertex u = bag[a.value[q] - kBag];
      if (g.adjacent(u, v) != pattern_.adjacent(p, q)) return false;
    }
    return true;
  }

  void introduce(const NiceNode& node, const StateTable& child, StateTable& table) {
    const auto at = static_cast<std::uint8_t>(kBag + bag_index(node.bag, node.vertex));
    for (std::uint32_t i = 0; i < child.states.size(); ++i) {
      Assignment a = child.states[i];
      for (std::size_t p = 0; p < np_; ++p) {
        if (a.value[p] >= at) ++a.value[p];
      }
      add(table, a, {i, kNoChild});
      for (std::size_t p = 0; p < np_; ++p) {
        if (a.value[p] != kUp || !can_map(a, node.bag, p, node.vertex)) continue;
        Assignment b = a;
        b.value[p] = at;
        add(table, b, {i, kNoChild});
      }
    }
  }

  void forget(const NiceNode& node, const StateTable& child, StateTable& table) {
    const VertexSet& child_bag = ntd_.nodes[node.children[0]].bag;
    const auto at = static_cast<std::uint8_t>(kBag + bag_index(child_bag, node.vertex));
    for (std::uint32_t i = 0; i < child.states.size(); ++i) {
      Assignment a = child.states[i];
      bool ok = true;
      for (std::size_t p = 0; p < np_ && ok; ++p) {
        if (a.value[p] == at) {
          a.value[p] = kDown;
          // A pattern neighbour still up would have to be adjacent to a
          // vertex that is now sealed off below the bag.
          for (std::size_t q : neighbours_[p]) {
            if (child.states[i].value[q] == kUp) ok = false;
          }
        } else if (a.value[p] > at) {
          --a.value[p];
        }
      }
      if (ok) add(table, a, {i, kNoChild});
    }
  }

  void join(const StateTable& left, const StateTable& right, StateTable& table) {
    // Right states grouped by their bag part (up and down erased).
    std::unordered_map<Assignment, std::vector<std::uint32_t>, AssignmentHash> groups;
    auto bag_part = [&](Assignment a) {
      for (std::size_t p = 0; p < np_; ++p) {
        if (a.value[p] < kBag) a.value[p] = kUp;
      }
      return a;
    };
    for (std::uint32_t j = 0; j < right.states.size(); ++j) {
      groups[bag_part(right.states[j])].push_back(j);
    }
    for (std::uint32_t i = 0; i < left.states.size(); ++i) {
      const auto it = groups.find(bag_part(left.states[i]));
      if (it == groups.end()) continue;
      const Assignment& l = left.states[i];
      for (std::uint32_t j : it->second) {
        const Assignment& r = right.states[j];
        Assignment a = l;
        bool ok = true;
        for (std::size_t p = 0; p < np_ && ok; ++p) {
          if (l.value[p] >= kBag) continue;
          if (l.value[p] == kDown && r.value[p] == kDown) ok = false;
          a.value[p] = (l.value[p] == kDown || r.value[p] == kDown) ? kDown : kUp;
        }
        if (ok) add(table, a, {i, j});
      }
    }
  }

  Embedding extract(const std::vector<StateTable>& tables, std::size_t accepted) const {
    std::vector<Vertex> image(np_, 0);
    std::vector<std::pair<std::size_t, std::uint32_t>> stack{
        {ntd_.root(), static_cast<std::uint32_t>(accepted)}};
    while (!stack.empty()) {
      const auto [t, i] = stack.back();
      stack.pop_back();
      const NiceNode& node = ntd_.nodes[t];
      const auto& from = tables[t].from[i];
      if (node.kind == NiceKind::introduce) {
        const Assignment& now = tables[t].states[i];
        const Assignment& before = tables[node.children[0]].states[from[0]];
        const auto at = static_cast<std::uint8_t>(kBag + bag_index(node.bag, node.vertex));
        for (std::size_t p = 0; p < np_; ++p) {
          if (now.value[p] == at && before.value[p] == kUp) image[p] = node.vertex;
        }
      }
      for (std::size_t c = 0; c < node.children.size(); ++c) stack.emplace_back(node.children[c], from[c]);
    }
    Embedding e;
    const auto k = static_cast<std::size_t>(pattern_.k);
    e.s_images.assign(image.begin(), image.begin() + static_cast<std::ptrdiff_t>(k));
    e.w_images.assign(image.begin() + static_cast<std::ptrdiff_t>(k), image.end());
    return e;
  }

  const GenVCInstance& inst_;
  const NiceTreeDecomposition& ntd_;
  PatternGraph pattern_;
  std::size_t np_;
  DpOptions options_;
  std::vector<std::vector<std::size_t>> neighbours_;
  std::unordered_map<Assignment, std::uint32_t, AssignmentHash> index_;
};

void require_valid(const GenVCInstance& inst, const NiceTreeDecomposition& ntd) {
  std::string problems;
  for (const std::string& m : check_nice(ntd)) problems += "\n  " + m;
  if (problems.empty()) {
    for (const Violation& v : validate(inst.graph(), as_tree_decomposition(ntd))) {
      problems += "\n  " + v.message;
    }
  }
  if (!problems.empty()) throw InputError("invalid nice tree decomposition:" + problems);
}

std::optional<ShatterCertificate> decide_and_extract(const GenVCInstance& inst,
                                                     const NiceTreeDecomposition& ntd, int k,
                                                     const DpOptions& options,
                                                     std::size_t* peak_states) {
  DpRun decided = PatternDp(inst, ntd, k, options).run();
  if (peak_states != nullptr) *peak_states = std::max(*peak_states, decided.peak_states);
  if (!decided.embedding) return std::nullopt;
  if (!options.keep_tables) {
    // The decide pass drops tables as it goes; rerun keeping back-pointers.
    DpOptions keep = options;
    keep.keep_tables = true;
    decided = PatternDp(inst, ntd, k, keep).run();
  }
  ShatterCertificate cert;
  cert.shattered_set = decided.embedding->s_images;
  cert.witnesses = decided.embedding->w_images;
  return cert;
}

}  // namespace

DpRun dp_run(const GenVCInstance& inst, const NiceTreeDecomposition& ntd, int k,
             const DpOptions& options) {
  require_valid(inst, ntd);
  return PatternDp(inst, ntd, k, options).run();
}

std::optional<ShatterCertificate> dp_decide(const GenVCInstance& inst,
                                            const NiceTreeDecomposition& ntd, int k,
                                            const DpOptions& options) {
  require_valid(inst, ntd);
  return decide_and_extract(inst, ntd, k, options, nullptr);
}

namespace {

SolveResult bag_scan(const GenVCInstance& inst, const NiceTreeDecomposition& ntd) {
  const auto start = Clock::now();
  SolveResult result;
  const std::size_t n_y = inst.y().size();
  if (n_y == 0) {
    result.stats.elapsed_ns = nanos_since(start);
    return result;
  }
  const Graph& g = inst.graph();
  const simd::KernelSet& kernels = simd::active_kernels();
  std::vector<std::int64_t> parent(ntd.nodes.size(), -1);
  for (std::size_t t = 0; t < ntd.nodes.size(); ++t) {
    for (std::uint32_t c : ntd.nodes[t].children) parent[c] = static_cast<std::int64_t>(t);
  }
  std::vector<std::uint64_t> code(g.num_vertices(), 0);
  std::vector<Vertex> touched;
  std::vector<std::uint64_t> traces;
  std::vector<std::uint64_t> projected;
  std::vector<char> seen;
  VertexSet best;
  std::size_t best_size = 0;
  for (std::size_t t = 0; t < ntd.nodes.size(); ++t) {
    const NiceNode& node = ntd.nodes[t];
    // Bags of forget nodes and of children of introduce/join nodes are
    // contained in a neighbouring bag that is scanned anyway.
    if (node.kind == NiceKind::forget) continue;
    if (parent[t] >= 0 && ntd.nodes[static_cast<std::size_t>(parent[t])].kind != NiceKind::forget) {
      continue;
    }
    VertexSet cols;
    for (Vertex v : node.bag) {
      if (inst.in_x(v)) cols.push_back(v);
    }
    if (cols.size() <= best_size) continue;
    if (cols.size() > 64) {
      throw ResourceRefusal("bag with " + std::to_string(cols.size()) +
                            " X-vertices exceeds the 64-column bag scan");
    }
    touched.clear();
    for (std::size_t c = 0; c < cols.size(); ++c) {
      for (Vertex y : g.neighbors(cols[c])) {
        if (!inst.in_y(y)) continue;
        if (code[y] == 0) touched.push_back(y);
        code[y] |= std::uint64_t{1} << c;
      }
    }
    traces.clear();
    for (Vertex y : touched) {
      traces.push_back(code[y]);
      code[y] = 0;
    }
    std::sort(traces.begin(), traces.end());
    traces.erase(std::unique(traces.begin(), traces.end()), traces.end());
    const bool has_empty = touched.size() < n_y;
    const std::size_t distinct = traces.size() + (has_empty ? 1 : 0);
    const std::size_t top = std::min<std::size_t>(cols.size(), static_cast<std::size_t>(floor_log2(distinct)));
    projected.resize(traces.size());
    for (std::size_t size = top; size > best_size; --size) {
      const std::size_t patterns = std::size_t{1} << size;
      const bool hit = for_each_combination(cols.size(), size, [&](const std::vector<std::size_t>& idx) {
        std::uint64_t select = 0;
        for (std::size_t i : idx) select |= std::uint64_t{1} << i;
        kernels.extract_bits(traces.data(), traces.size(), select, projected.data());
        seen.assign(patterns, 0);
        std::size_t found = 0;
        if (has_empty) {
          seen[0] = 1;
          found = 1;
        }
        for (std::uint64_t p : projected) {
          if (seen[p] == 0) {
            seen[p] = 1;
            ++found;
          }
        }
        if (found != patterns) return false;
        best.clear();
        for (std::size_t i : idx) best.push_back(cols[i]);
        return true;
      });
      if (hit) {
        best_size = size;
        break;
      }
    }
  }
  result.certificate = witness_of(inst, best);
  result.vc_dimension = static_cast<int>(best.size());
  result.stats.elapsed_ns = nanos_since(start);
  return result;
}

}  // namespace

SolveResult phase1_bag_scan(const GenVCInstance& inst, const NiceTreeDecomposition& ntd) {
  require_valid(inst, ntd);
  return bag_scan(inst, ntd);
}

TreewidthSolveResult genvc_treewidth_solve(const GenVCInstance& inst,
                                           const NiceTreeDecomposition& ntd, int pattern_cap,
                                           const DpOptions& options) {
  if (pattern_cap < 1) throw InputError("pattern cap must be at least 1");
  require_valid(inst, ntd);
  TreewidthSolveResult out;
  out.width_used = ntd.width();
  out.cutoff = treewidth_cutoff(std::max(out.width_used, 0));
  out.overlap = inst.x_and_y_overlap();

  const auto start = Clock::now();
  out.result = bag_scan(inst, ntd);
  out.phase1_value = out.result.vc_dimension;
  out.phase1_ns = nanos_since(start);
  if (out.result.vc_dimension < 0) return out;

  const auto phase2_start = Clock::now();
  const int k_max = std::min({out.cutoff, floor_log2(inst.y().size()),
                              static_cast<int>(inst.x().size())});
  for (int k = out.result.vc_dimension + 1; k <= k_max; ++k) {
    std::optional<ShatterCertificate> cert;
    if (k <= pattern_cap && k <= kMaxPatternK && !out.overlap) {
      cert = decide_and_extract(inst, ntd, k, options, &out.peak_states);
    } else {
      out.fallback_sizes.push_back(k);
      cert = find_shattered_set(inst, static_cast<std::size_t>(k),
                                &out.result.stats.subsets_examined);
    }
    if (!cert) break;
    out.result.certificate = std::move(cert);
    out.result.vc_dimension = k;
    out.phase = 2;
  }
  out.phase2_ns = nanos_since(phase2_start);
  out.result.stats.elapsed_ns = out.phase1_ns + out.phase2_ns;
  return out;
}

}  // namespace vcdim
