#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>

#include "vcdim/graph.hpp"
#include "vcdim/hypergraph.hpp"
#include "vcdim/tree_decomposition.hpp"

namespace vcdim::io {

/// Malformed input file.  `line()` is 1-based (0 when the problem is not
/// tied to a line, e.g. a missing header at end of input).
class ParseError : public InputError {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// All formats use 1-based vertex ids on disk and dense 0-based ids in memory.
// Lines starting with 'c' are comments (PACE / DIMACS convention).

/// PACE 2017 graph: `p tw <n> <m>` then m lines `<u> <v>`.
Graph read_pace_gr(std::istream& in);
void write_pace_gr(std::ostream& out, const Graph& g);

/// PACE 2017 decomposition: `s td <bags> <width+1> <n>`, `b <id> <v...>`
/// lines, then tree edges `<a> <b>` between bag ids.
struct PaceTd {
  TreeDecomposition td;
  std::size_t n_vertices = 0;
};
PaceTd read_pace_td(std::istream& in);
void write_pace_td(std::ostream& out, const TreeDecomposition& td, std::size_t n_vertices);

/// Hypergraph: `p hg <n> <m>` then exactly m edge lines of vertex ids; an
/// empty line is the empty edge.
Hypergraph read_hypergraph(std::istream& in);
void write_hypergraph(std::ostream& out, const Hypergraph& h);

/// Gen-VC instance: a PACE graph followed by `x <ids...>` and `y <ids...>`.
GenVCInstance read_instance(std::istream& in);
void write_instance(std::ostream& out, const GenVCInstance& inst);

/// DIMACS colouring input: `p edge <n> <m>` then `e <u> <v>` lines.
Graph read_dimacs_col(std::istream& in);

enum class Format { hypergraph, pace_graph, instance, dimacs, unknown };

/// Sniffs the format from the first non-comment line: `p hg`, `p edge`, or
/// `p tw` (an instance when trailing `x`/`y` lines are present).
Format detect_format(const std::string& text);

}  // namespace vcdim::io
