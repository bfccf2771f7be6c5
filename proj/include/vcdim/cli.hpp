#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "vcdim/graph.hpp"
#include "vcdim/hypergraph.hpp"
#include "vcdim/io.hpp"
#include "vcdim/shatter.hpp"

namespace vcdim::cli {

inline constexpr const char* kToolVersion = "0.3.0";
inline constexpr int kRecordSchemaVersion = 1;

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kInputError = 2, kRefused = 3 };

/// Result document.  Vertex and witness ids are 0-based in memory and
/// rendered 1-based (witnesses: the edge's position in the file, or the
/// Y-vertex id).
struct Document {
  /// Ordered fields rendered before and after vc_dimension.
  std::vector<std::pair<std::string, nlohmann::ordered_json>> header;
  /// Absent only for refutations, which certify no set.
  std::optional<int> vc_dimension = -1;
  std::vector<std::pair<std::string, nlohmann::ordered_json>> extra;
  std::optional<ShatterCertificate> certificate;
};

/// Line-oriented form:
///   algorithm: dimension
///   vc_dimension: 2
///   shattered_set: [1, 3]
///   witnesses:
///     "00": 4
///     "10": 1
/// Pattern keys list bit 0 first.
std::string render_text(const Document& doc);
nlohmann::ordered_json render_json(const Document& doc);

/// Reads either rendering back.  InputError on malformed documents.
Document parse_document(const std::string& text);

/// A solver input file, loaded in its native shape.  Graph files (.gr
/// without x/y lines, DIMACS .col) become instances with X = Y = V.
struct LoadedInput {
  io::Format format = io::Format::unknown;
  std::variant<Hypergraph, GenVCInstance> data;
  std::string digest;  // "fnv1a64:<16 hex digits>" over the raw bytes

  bool is_hypergraph() const { return std::holds_alternative<Hypergraph>(data); }
};

/// 64-bit FNV-1a of the bytes, as "fnv1a64:<hex>".
std::string content_digest(const std::string& bytes);

LoadedInput load_input_text(const std::string& text);
LoadedInput load_input_file(const std::string& path);
std::string read_file(const std::string& path);

struct SolveRequest {
  std::string algorithm = "auto";  // brute|dimension|neighborhood|treewidth|auto
  std::optional<std::string> td_path;
  int pattern_cap = 3;
  bool unpruned = false;
};

struct SolveOutcome {
  Document doc;
  std::string algorithm;  // after auto-selection
  std::uint64_t total_ns = 0;
  std::uint64_t phase1_ns = 0;
  std::uint64_t phase2_ns = 0;
  std::uint64_t subsets_examined = 0;
  std::size_t peak_states = 0;
};

SolveOutcome solve(const LoadedInput& input, const SolveRequest& request);

/// Self-describing JSON line for the results file.
nlohmann::ordered_json run_record(const std::string& command_line, const LoadedInput& input,
                                  const SolveOutcome& outcome);

/// Appends one line under a process-wide lock.
void append_record(const std::string& path, const nlohmann::ordered_json& record);

/// Pattern cap and generator limit defaults, overridable through the
/// VCDIM_PATTERN_CAP and VCDIM_GEN_LIMIT environment variables.
int default_pattern_cap();
std::uint64_t default_gen_limit();

/// Entry point of the vcdim tool.  Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace vcdim::cli
