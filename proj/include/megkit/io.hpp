#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "megkit/graph.hpp"

namespace megkit {

enum class GraphFormat { EdgeList, Dimacs };

/// A parsed graph plus its source format and, when the format carries one,
/// an external-name table (DIMACS ids are 1-based, kept here as labels).
struct GraphDocument {
  GraphFormat format = GraphFormat::EdgeList;
  std::optional<std::vector<std::string>> labels;  // internal id -> name
  Graph graph;
};

/// Edge list format: '#' comments and blank lines anywhere, then a header
/// line "n m", then exactly m lines "u v" with 0-based ids. Strict: every
/// rejection names the offending 1-based line.
GraphDocument parse_edgelist(std::string_view text);

/// DIMACS format: 'c' comment lines, one "p edge n m" header, then m lines
/// "e u v" with 1-based ids.
GraphDocument parse_dimacs(std::string_view text);

/// Picks the parser by the first non-blank line: 'c' or 'p' means DIMACS.
GraphDocument parse_graph_auto(std::string_view text);

std::string serialize_edgelist(const GraphDocument& doc);
std::string serialize_dimacs(const GraphDocument& doc);

/// External name of v: its label when the document has one, else the id.
std::string label_of(const GraphDocument& doc, Vertex v);

/// Inverse of label_of; nullopt when the name matches nothing.
std::optional<Vertex> vertex_from_label(const GraphDocument& doc,
                                        const std::string& name);

/// FNV-1a hash of the canonical edge list, as 16 hex digits. Stable input
/// fingerprint for reports.
std::string graph_digest(const Graph& g);

/// Command-line entry point. Exit codes: 0 success (and true verdicts),
/// 1 false verdicts, 2 usage errors, 3 unreadable or malformed input.
int run_cli(int argc, const char* const* argv);

}  // namespace megkit
