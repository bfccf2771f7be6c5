#include <CLI11.hpp>

#include <atomic>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <thread>

#include "vcdim/cli.hpp"
#include "vcdim/convert.hpp"
#include "vcdim/degree_approx.hpp"
#include "vcdim/generators.hpp"
#include "vcdim/tree_decomposition.hpp"

namespace vcdim::cli {

using nlohmann::ordered_json;

namespace {

void emit(std::ostream& out, const Document& doc, bool json) {
  if (json) {
    out << render_json(doc).dump(2) << '\n';
  } else {
    out << render_text(doc);
  }
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot write '" + path + "'");
  f << text;
}

std::string join_args(int argc, const char* const* argv) {
  std::string s;
  for (int i = 1; i < argc; ++i) {
    if (i > 1) s += ' ';
    s += argv[i];
  }
  return s;
}

// Approximation works on set systems; instances use their Y-neighbourhoods
// over X.  Returns the hypergraph plus id maps back to the input.
struct ApproxView {
  Hypergraph h;
  std::vector<Vertex> vertex_ids;
  std::vector<std::uint32_t> witness_ids;
};

ApproxView approx_view(const LoadedInput& input) {
  ApproxView view;
  if (const auto* h = std::get_if<Hypergraph>(&input.data)) {
    view.h = *h;
    for (Vertex v = 0; v < h->num_vertices(); ++v) view.vertex_ids.push_back(v);
    for (std::uint32_t e = 0; e < h->num_edges(); ++e) view.witness_ids.push_back(e);
    return view;
  }
  const auto& inst = std::get<GenVCInstance>(input.data);
  view.h = neighbourhood_hypergraph(inst);
  view.vertex_ids = inst.x();
  view.witness_ids.assign(inst.y().begin(), inst.y().end());
  return view;
}

ShatterCertificate mapped(const ShatterCertificate& c, const ApproxView& view) {
  ShatterCertificate out = c;
  for (Vertex& v : out.shattered_set) v = view.vertex_ids[v];
  for (std::uint32_t& w : out.witnesses) w = view.witness_ids[w];
  return out;
}

int cmd_verify(const std::string& cert_path, const std::string& input_path, std::ostream& out,
               std::ostream& err) {
  const Document doc = parse_document(read_file(cert_path));
  const LoadedInput input = load_input_file(input_path);
  const bool nothing_shattered = input.is_hypergraph()
                                     ? std::get<Hypergraph>(input.data).num_edges() == 0
                                     : std::get<GenVCInstance>(input.data).y().empty();
  auto fail = [&](const std::string& why) {
    err << "verification failed: " << why << '\n';
    return kVerifyFailed;
  };
  if (!doc.vc_dimension) return fail("document has no vc_dimension");
  if (*doc.vc_dimension < 0) {
    if (doc.certificate) return fail("vc_dimension -1 with a certificate");
    if (!nothing_shattered) return fail("vc_dimension -1 but the empty set is shattered");
    out << "ok: nothing is shattered\n";
    return kOk;
  }
  if (!doc.certificate) return fail("no certificate given");
  const ShatterCertificate& cert = *doc.certificate;
  if (cert.size() != static_cast<std::size_t>(*doc.vc_dimension)) {
    return fail("vc_dimension " + std::to_string(*doc.vc_dimension) + " but the set has " +
                std::to_string(cert.size()) + " vertices");
  }
  for (std::size_t p = 0; p < cert.witnesses.size(); ++p) {
    if (cert.witnesses[p] == ~std::uint32_t{0}) {
      return fail("pattern \"" + pattern_string(p, cert.size()) + "\": no witness listed");
    }
  }
  const auto failure = input.is_hypergraph()
                           ? certificate_failure(std::get<Hypergraph>(input.data), cert)
                           : certificate_failure(std::get<GenVCInstance>(input.data), cert);
  if (failure) return fail(*failure);
  out << "ok: " << cert.size() << "-vertex set shattered, " << cert.witnesses.size()
      << " witnesses verified\n";
  return kOk;
}

struct BenchRow {
  std::string input;
  std::string algorithm;
  int pattern_cap = 3;
};

std::vector<BenchRow> read_manifest(const std::string& path, int default_cap) {
  std::istringstream in(read_file(path));
  const std::filesystem::path base = std::filesystem::path(path).parent_path();
  std::vector<BenchRow> rows;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::istringstream fields(line);
    BenchRow row;
    if (!(fields >> row.input) || row.input[0] == '#') continue;
    if (!(fields >> row.algorithm)) {
      throw io::ParseError(number, "manifest rows are '<input> <algorithm> [pattern_cap]'");
    }
    row.pattern_cap = default_cap;
    if (std::string cap; fields >> cap) {
      const auto [end, ec] = std::from_chars(cap.data(), cap.data() + cap.size(), row.pattern_cap);
      if (ec != std::errc{} || end != cap.data() + cap.size() || row.pattern_cap < 1) {
        throw io::ParseError(number, "pattern cap '" + cap + "' is not a positive integer");
      }
    }
    if (std::filesystem::path(row.input).is_relative()) row.input = (base / row.input).string();
    rows.push_back(row);
  }
  return rows;
}

int cmd_bench(const std::string& manifest, const std::string& results, unsigned jobs,
              const std::string& command_line, std::ostream& out) {
  const std::vector<BenchRow> rows = read_manifest(manifest, default_pattern_cap());
  struct RowResult {
    std::string status = "ok";
    std::string vc = "-";
    double ms = 0;
    std::size_t peak = 0;
  };
  std::vector<RowResult> done(rows.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < rows.size(); i = next++) {
      RowResult& r = done[i];
      try {
        const LoadedInput input = load_input_file(rows[i].input);
        SolveRequest req;
        req.algorithm = rows[i].algorithm;
        req.pattern_cap = rows[i].pattern_cap;
        const SolveOutcome outcome = solve(input, req);
        r.vc = outcome.doc.vc_dimension ? std::to_string(*outcome.doc.vc_dimension) : "-";
        r.ms = static_cast<double>(outcome.total_ns) / 1e6;
        r.peak = outcome.peak_states;
        ordered_json rec = run_record(command_line + " :: " + rows[i].input + " " + rows[i].algorithm,
                                      input, outcome);
        rec["status"] = "ok";
        append_record(results, rec);
      } catch (const std::exception& e) {
        r.status = std::string("failed: ") + e.what();
        ordered_json rec = ordered_json::object();
        rec["schema_version"] = kRecordSchemaVersion;
        rec["tool_version"] = kToolVersion;
        rec["command"] = command_line + " :: " + rows[i].input + " " + rows[i].algorithm;
        rec["algorithm"] = rows[i].algorithm;
        rec["status"] = r.status;
        append_record(results, rec);
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < std::max(1U, jobs); ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  bool all_ok = true;
  out << std::left << std::setw(5) << "row" << std::setw(14) << "algorithm" << std::setw(6) << "vc"
      << std::setw(12) << "ms" << std::setw(12) << "peak" << "input / status\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const RowResult& r = done[i];
    all_ok = all_ok && r.status == "ok";
    std::ostringstream ms;
    ms << std::fixed << std::setprecision(3) << r.ms;
    out << std::setw(5) << i + 1 << std::setw(14) << rows[i].algorithm << std::setw(6) << r.vc
        << std::setw(12) << ms.str() << std::setw(12) << r.peak << rows[i].input;
    if (r.status != "ok") out << "  [" << r.status << "]";
    out << '\n';
  }
  return all_ok ? kOk : kInputError;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"VC-dimension solver", "vcdim"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "Exact VC-dimension with a certificate");
  std::string solve_input;
  SolveRequest req;
  std::string td_path;
  bool solve_json = false;
  std::string record_path;
  int pattern_cap = 0;
  solve_cmd->add_option("input", solve_input, "Hypergraph, instance, .gr or .col file")->required();
  solve_cmd->add_option("--alg", req.algorithm, "brute|dimension|neighborhood|treewidth|auto")
      ->check(CLI::IsMember({"brute", "dimension", "neighborhood", "treewidth", "auto"}));
  solve_cmd->add_option("--td", td_path, "PACE .td decomposition of the (incidence) graph");
  solve_cmd->add_option("--pattern-cap", pattern_cap, "Largest size decided by the treewidth DP");
  solve_cmd->add_flag("--unpruned", req.unpruned, "Brute force over every subset (no log m cap)");
  solve_cmd->add_flag("--json", solve_json, "JSON rendering");
  solve_cmd->add_option("--record", record_path, "Append a run record to this JSONL file");

  // approx
  auto* approx_cmd = app.add_subcommand("approx", "Degree-parameterized 1-additive approximation");
  std::string approx_input;
  int approx_k = 0;
  bool approx_max_flag = false;
  bool approx_json = false;
  approx_cmd->add_option("input", approx_input, "Hypergraph or instance file")->required();
  auto* k_opt = approx_cmd->add_option("--k", approx_k, "Decide size k (finds k-1 or refutes k)");
  auto* max_opt = approx_cmd->add_flag("--max", approx_max_flag, "Approximate the maximum");
  k_opt->excludes(max_opt);
  approx_cmd->add_flag("--json", approx_json, "JSON rendering");

  // decompose
  auto* decompose_cmd = app.add_subcommand("decompose", "Min-fill tree decomposition in PACE .td form");
  std::string decompose_input;
  std::string decompose_out;
  decompose_cmd->add_option("input", decompose_input, "Graph, instance or hypergraph (incidence graph)")
      ->required();
  decompose_cmd->add_option("--td", decompose_out, "Write the decomposition here (default stdout)");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Re-check a certificate document");
  std::string verify_doc;
  std::string verify_input;
  verify_cmd->add_option("certificate", verify_doc)->required();
  verify_cmd->add_option("input", verify_input)->required();

  // bench
  auto* bench_cmd = app.add_subcommand("bench", "Run a manifest of (input, algorithm) rows");
  std::string manifest;
  std::string results = "vcdim-results.jsonl";
  unsigned jobs = 1;
  bench_cmd->add_option("manifest", manifest)->required();
  bench_cmd->add_option("--results", results, "Append-only JSONL results file");
  bench_cmd->add_option("--jobs", jobs, "Parallel rows")->check(CLI::Range(1U, 256U));

  // gen
  auto* gen_cmd = app.add_subcommand("gen", "Generate instances");
  gen_cmd->require_subcommand(1);
  std::string gen_out;
  std::uint64_t seed = 1;
  double prob = 0.5;
  gen_cmd->add_option("--out", gen_out, "Output file (default stdout)");
  auto* gen_reduction = gen_cmd->add_subcommand("reduction", "Gen-VC instance from a 3-coloring input");
  std::string coloring_input;
  int part_size = 2;
  std::uint64_t limit = 0;
  gen_reduction->add_option("--in", coloring_input, "PACE .gr or DIMACS .col graph")->required();
  gen_reduction->add_option("--p", part_size, "Part size");
  gen_reduction->add_option("--limit", limit, "Cap on 2^k (default VCDIM_GEN_LIMIT or 65536)");
  auto* gen_powerset_cmd = gen_cmd->add_subcommand("powerset", "All subsets of [n]");
  int powerset_n = 3;
  gen_powerset_cmd->add_option("--n", powerset_n)->required();
  auto* gen_hg = gen_cmd->add_subcommand("random-hg", "Random hypergraph");
  std::size_t hg_n = 8;
  std::size_t hg_m = 12;
  gen_hg->add_option("--n", hg_n);
  gen_hg->add_option("--m", hg_m);
  gen_hg->add_option("--prob", prob);
  gen_hg->add_option("--seed", seed);
  auto* gen_inst = gen_cmd->add_subcommand("random-inst", "Random bipartite instance");
  std::size_t nx = 8;
  std::size_t ny = 20;
  gen_inst->add_option("--nx", nx);
  gen_inst->add_option("--ny", ny);
  gen_inst->add_option("--prob", prob);
  gen_inst->add_option("--seed", seed);
  auto* gen_gadgets = gen_cmd->add_subcommand("gadget-path", "Width-2 chain of shattering gadgets");
  std::size_t gadgets = 10;
  gen_gadgets->add_option("--gadgets", gadgets);

  for (CLI::App* sub : gen_cmd->get_subcommands({})) sub->fallthrough();

  std::vector<std::string> args(argv + 1, argv + argc);
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (solve_cmd->parsed()) {
      if (!td_path.empty()) req.td_path = td_path;
      req.pattern_cap = pattern_cap > 0 ? pattern_cap : default_pattern_cap();
      const LoadedInput input = load_input_file(solve_input);
      const SolveOutcome outcome = solve(input, req);
      emit(out, outcome.doc, solve_json);
      if (!record_path.empty()) append_record(record_path, run_record(join_args(argc, argv), input, outcome));
      return kOk;
    }
    if (approx_cmd->parsed()) {
      if (!approx_max_flag && approx_k < 1) throw InputError("approx needs --max or --k >= 1");
      const LoadedInput input = load_input_file(approx_input);
      const ApproxView view = approx_view(input);
      Document doc;
      doc.header.emplace_back("algorithm", "approx");
      if (approx_max_flag) {
        const ApproxMaxResult r = approx_max(view.h);
        doc.vc_dimension = r.certificate_size;
        doc.extra.emplace_back("mode", "found");
        doc.extra.emplace_back("upper_bound", r.upper_bound);
        ordered_json refuted = ordered_json::array();
        for (int k : r.refuted) refuted.push_back(k);
        doc.extra.emplace_back("refuted", refuted);
        if (r.certificate) doc.certificate = mapped(*r.certificate, view);
      } else {
        const ApproxOutcome r = approx_size_k(view.h, approx_k);
        doc.extra.emplace_back("k", approx_k);
        if (r.mode == ApproxOutcome::Mode::found) {
          doc.vc_dimension = approx_k - 1;
          doc.extra.emplace_back("mode", "found");
          doc.certificate = mapped(*r.certificate, view);
        } else {
          doc.vc_dimension.reset();
          doc.extra.emplace_back("mode", "refuted");
          doc.extra.emplace_back("upper_bound", approx_k - 1);
        }
      }
      emit(out, doc, approx_json);
      return kOk;
    }
    if (decompose_cmd->parsed()) {
      const LoadedInput input = load_input_file(decompose_input);
      const Graph g = input.is_hypergraph()
                          ? to_incidence_instance(std::get<Hypergraph>(input.data)).graph()
                          : std::get<GenVCInstance>(input.data).graph();
      const TreeDecomposition td = min_fill_heuristic(g);
      std::ostringstream text;
      io::write_pace_td(text, td, g.num_vertices());
      write_output(decompose_out, text.str(), out);
      err << "width: " << td.width() << '\n';
      return kOk;
    }
    if (verify_cmd->parsed()) return cmd_verify(verify_doc, verify_input, out, err);
    if (bench_cmd->parsed()) return cmd_bench(manifest, results, jobs, join_args(argc, argv), out);
    if (gen_cmd->parsed()) {
      std::ostringstream text;
      if (gen_reduction->parsed()) {
        const std::string raw = read_file(coloring_input);
        std::istringstream in(raw);
        const io::Format f = io::detect_format(raw);
        Graph g;
        if (f == io::Format::dimacs) {
          g = io::read_dimacs_col(in);
        } else if (f == io::Format::pace_graph) {
          g = io::read_pace_gr(in);
        } else {
          throw InputError("reduction input must be a PACE .gr or DIMACS .col graph");
        }
        const ReductionOutput r = reduce_3coloring(g, part_size, limit > 0 ? limit : default_gen_limit());
        text << "c 3-coloring reduction k " << r.k << " p " << r.p << '\n';
        for (const std::string& w : r.warnings) {
          text << "c warning: " << w << '\n';
          err << "warning: " << w << '\n';
        }
        io::write_instance(text, r.instance);
      } else if (gen_powerset_cmd->parsed()) {
        io::write_hypergraph(text, gen_powerset(powerset_n));
      } else if (gen_hg->parsed()) {
        io::write_hypergraph(text, gen_random_hypergraph(hg_n, hg_m, prob, seed));
      } else if (gen_inst->parsed()) {
        io::write_instance(text, gen_random_bipartite_instance(nx, ny, prob, seed));
      } else if (gen_gadgets->parsed()) {
        io::write_instance(text, gen_gadget_path(gadgets));
      }
      write_output(gen_out, text.str(), out);
      return kOk;
    }
  } catch (const ResourceRefusal& e) {
    err << "refused: " << e.what() << '\n';
    return kRefused;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace vcdim::cli
