#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "megkit/graph.hpp"
#include "megkit/megset.hpp"

namespace megkit {

struct MinMegOptions {
  /// Enumerate only supersets of mandatory_fast(g). Safe because every
  /// monitoring edge-geodetic set contains every mandatory vertex; the
  /// unpruned mode exists to validate exactly that.
  bool mandatory_pruning = true;
  /// After the optimum is found, keep scanning the same cardinality for a
  /// second solution.
  bool check_uniqueness = true;
  /// Stop after this cardinality; SizeCapExceeded when nothing was found.
  std::optional<int> max_size;
};

struct MinMegResult {
  VertexSet optimum;  // smallest, ties broken lexicographically on members
  int optimum_size = 0;
  std::optional<bool> is_unique_minimum;  // set when uniqueness was checked
  std::uint64_t nodes_enumerated = 0;     // candidate sets tested
};

/// Exhaustive minimum search in cardinality-lexicographic order. Intended
/// for small graphs: roughly n <= 14 unpruned, n <= 20 with pruning.
MinMegResult min_meg_brute(const Graph& g, const MinMegOptions& options = {});

/// True when the brute-force optimum (pruning off, uniqueness on) equals
/// mandatory_fast(g) and is the unique minimum.
bool check_meg_minimal(const Graph& g);

/// Intersection of all monitoring edge-geodetic sets, by enumerating every
/// subset. Trust anchor for the mandatory-vertex characterization; n <= 20.
VertexSet mandatory_by_definition(const Graph& g);

/// Cut vertices, ascending.
std::vector<Vertex> articulation_points(const Graph& g);

bool is_cut_vertex(const Graph& g, Vertex v);

/// Components of g with v removed; each sorted, ordered by smallest member.
std::vector<std::vector<Vertex>> components_after_removal(const Graph& g,
                                                          Vertex v);

/// Glue meg-sets across a cut vertex v: given one meg-set per component of
/// g - v, each valid for the subgraph induced by that component plus v, the
/// union minus v is a meg-set of g. Sets are given in g's vertex ids, in
/// components_after_removal order. Errors: NotACutVertex,
/// InvalidComponentMegSet. The result is re-verified before it is returned.
VertexSet compose_cut_vertex(const Graph& g, Vertex v,
                             std::span<const VertexSet> component_megsets);

}  // namespace megkit
