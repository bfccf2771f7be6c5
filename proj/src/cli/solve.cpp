#include <sys/file.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <sstream>

#include "vcdim/cli.hpp"
#include "vcdim/convert.hpp"
#include "vcdim/exact.hpp"
#include "vcdim/twdp.hpp"

namespace vcdim::cli {

using nlohmann::ordered_json;

namespace {

std::uint64_t env_number(const char* name, std::uint64_t fallback) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return fallback;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0' || v == 0) {
    throw InputError(std::string(name) + " must be a positive integer, got '" + raw + "'");
  }
  return v;
}

const char* format_name(io::Format f) {
  switch (f) {
    case io::Format::hypergraph:
      return "hypergraph";
    case io::Format::instance:
      return "instance";
    case io::Format::pace_graph:
      return "graph";
    case io::Format::dimacs:
      return "dimacs-graph";
    case io::Format::unknown:
      break;
  }
  return "unknown";
}

NiceTreeDecomposition decomposition_for(const Graph& g, const std::optional<std::string>& td_path) {
  if (!td_path) return make_nice(min_fill_heuristic(g));
  std::istringstream in(read_file(*td_path));
  io::PaceTd td = io::read_pace_td(in);
  if (td.n_vertices != g.num_vertices()) {
    throw InputError("decomposition is for " + std::to_string(td.n_vertices) +
                     " vertices, the graph has " + std::to_string(g.num_vertices()));
  }
  const auto violations = validate(g, td.td);
  if (!violations.empty()) {
    std::string msg = "decomposition " + *td_path + " is invalid:";
    for (const Violation& v : violations) msg += "\n  " + v.message;
    throw InputError(msg);
  }
  return make_nice(td.td);
}

void set_result(SolveOutcome& out, const SolveResult& r) {
  out.doc.vc_dimension = r.vc_dimension;
  out.doc.certificate = r.certificate;
  out.subsets_examined = r.stats.subsets_examined;
}

// Instance algorithms.  Certificates use instance vertex ids.
void solve_instance(const GenVCInstance& inst, const std::string& alg, const SolveRequest& req,
                    SolveOutcome& out) {
  std::optional<NiceTreeDecomposition> ntd;
  std::string chosen = alg;
  if (alg == "auto") {
    ntd = decomposition_for(inst.graph(), req.td_path);
    if (ntd->width() <= 8) {
      chosen = "treewidth";
    } else if (inst.max_y_degree() <= 64) {
      chosen = "neighborhood";
    } else {
      chosen = "brute";
    }
  }
  out.algorithm = chosen;
  if (chosen == "brute") {
    set_result(out, genvc_bruteforce(inst));
  } else if (chosen == "neighborhood") {
    set_result(out, genvc_neighborhood_solver(inst));
  } else if (chosen == "dimension") {
    const Hypergraph h = neighbourhood_hypergraph(inst);
    SolveResult r = vc_dimension_fpt(h);
    if (r.certificate) {
      for (Vertex& v : r.certificate->shattered_set) v = inst.x()[v];
      for (std::uint32_t& w : r.certificate->witnesses) w = inst.y()[w];
    }
    set_result(out, r);
  } else {
    if (!ntd) ntd = decomposition_for(inst.graph(), req.td_path);
    const TreewidthSolveResult r = genvc_treewidth_solve(inst, *ntd, req.pattern_cap);
    set_result(out, r.result);
    out.phase1_ns = r.phase1_ns;
    out.phase2_ns = r.phase2_ns;
    out.peak_states = r.peak_states;
    out.doc.extra.emplace_back("width_used", r.width_used);
    out.doc.extra.emplace_back("cutoff", r.cutoff);
    out.doc.extra.emplace_back("phase", r.phase);
    out.doc.extra.emplace_back("pattern_cap", req.pattern_cap);
    ordered_json fallback = ordered_json::array();
    for (int k : r.fallback_sizes) fallback.push_back(k);
    out.doc.extra.emplace_back("enumerated_sizes", fallback);
    if (r.overlap && !r.fallback_sizes.empty()) out.doc.extra.emplace_back("note", "X and Y overlap; sizes above phase 1 were enumerated");
  }
}

}  // namespace

int default_pattern_cap() { return static_cast<int>(env_number("VCDIM_PATTERN_CAP", 3)); }

std::uint64_t default_gen_limit() { return env_number("VCDIM_GEN_LIMIT", std::uint64_t{1} << 16); }

std::string content_digest(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

LoadedInput load_input_text(const std::string& text) {
  LoadedInput input;
  input.format = io::detect_format(text);
  input.digest = content_digest(text);
  std::istringstream in(text);
  switch (input.format) {
    case io::Format::hypergraph:
      input.data = io::read_hypergraph(in);
      break;
    case io::Format::instance:
      input.data = io::read_instance(in);
      break;
    case io::Format::pace_graph:
      input.data = GenVCInstance::whole_graph(io::read_pace_gr(in));
      break;
    case io::Format::dimacs:
      input.data = GenVCInstance::whole_graph(io::read_dimacs_col(in));
      break;
    case io::Format::unknown:
      throw InputError("unrecognised input: expected a 'p hg', 'p tw' or 'p edge' header");
  }
  return input;
}

LoadedInput load_input_file(const std::string& path) { return load_input_text(read_file(path)); }

SolveOutcome solve(const LoadedInput& input, const SolveRequest& req) {
  static const char* const kAlgorithms[] = {"brute", "dimension", "neighborhood", "treewidth", "auto"};
  if (std::find(std::begin(kAlgorithms), std::end(kAlgorithms), req.algorithm) == std::end(kAlgorithms)) {
    throw InputError("unknown algorithm '" + req.algorithm + "'");
  }
  if (req.pattern_cap < 1) throw InputError("pattern cap must be at least 1");
  const auto start = std::chrono::steady_clock::now();
  SolveOutcome out;
  out.doc.header.emplace_back("input", format_name(input.format));
  if (const auto* h = std::get_if<Hypergraph>(&input.data)) {
    std::string alg = req.algorithm;
    if (alg == "auto") alg = h->dimension() <= 16 ? "dimension" : "brute";
    out.algorithm = alg;
    if (alg == "brute") {
      set_result(out, vc_bruteforce(*h, {.pruned = !req.unpruned}));
    } else if (alg == "dimension") {
      set_result(out, vc_dimension_fpt(*h));
    } else {
      // Incidence instance: X keeps the vertex ids, Y-vertex n + i is edge i.
      solve_instance(to_incidence_instance(*h), alg, req, out);
      if (out.doc.certificate) {
        for (std::uint32_t& w : out.doc.certificate->witnesses) {
          w -= static_cast<std::uint32_t>(h->num_vertices());
        }
      }
    }
  } else {
    solve_instance(std::get<GenVCInstance>(input.data), req.algorithm, req, out);
  }
  out.doc.header.emplace_back("algorithm", out.algorithm);
  out.total_ns = static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::nanoseconds>(
                                                std::chrono::steady_clock::now() - start)
                                                .count());
  return out;
}

ordered_json run_record(const std::string& command_line, const LoadedInput& input,
                        const SolveOutcome& outcome) {
  ordered_json rec = ordered_json::object();
  rec["schema_version"] = kRecordSchemaVersion;
  rec["tool_version"] = kToolVersion;
  rec["command"] = command_line;
  rec["input_digest"] = input.digest;
  rec["algorithm"] = outcome.algorithm;
  rec["result"] = render_json(outcome.doc);
  rec["timings_ns"] = {{"total", outcome.total_ns},
                       {"phase1", outcome.phase1_ns},
                       {"phase2", outcome.phase2_ns}};
  rec["peak_states"] = outcome.peak_states;
  rec["subsets_examined"] = outcome.subsets_examined;
  return rec;
}

void append_record(const std::string& path, const ordered_json& record) {
  static std::mutex mutex;
  const std::string line = record.dump() + "\n";
  std::lock_guard<std::mutex> lock(mutex);
  std::FILE* f = std::fopen(path.c_str(), "a");
  if (f == nullptr) throw InputError("cannot append to '" + path + "'");
  // Other processes appending to the same file take the same lock.
  ::flock(fileno(f), LOCK_EX);
  std::fwrite(line.data(), 1, line.size(), f);
  std::fflush(f);
  ::flock(fileno(f), LOCK_UN);
  std::fclose(f);
}

}  // namespace vcdim::cli
