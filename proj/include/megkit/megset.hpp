#pragma once

#include <span>
#include <vector>

#include "megkit/graph.hpp"

namespace megkit {

/// Sorted, deduplicated set of vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::vector<Vertex> members);

  static VertexSet full(Vertex n);  // {0, ..., n-1}

  const std::vector<Vertex>& members() const noexcept { return members_; }
  int size() const noexcept { return static_cast<int>(members_.size()); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(Vertex v) const noexcept;

  /// Copy with v added.
  VertexSet with(Vertex v) const;

  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> members_;
};

/// Throws Error(id_out_of_range) when m holds an id outside g.
void require_valid_set(const Graph& g, const VertexSet& m);

/// A pair {a, b} monitors an edge e when e lies on every shortest a-b path.
/// Decided here by edge deletion: removing e must strictly increase the a-b
/// distance (unreachable counts as larger than any finite value). Pairs at
/// unreachable distance monitor nothing.
bool pair_monitors_edge(const Graph& g, Vertex a, Vertex b, const EdgeRef& e);

/// Same predicate decided through shortest-path counting: e = (x, y) lies on
/// every shortest a-b path exactly when, in one orientation, the distances
/// through e are tight and count(a, x) * count(y, b) equals count(a, b).
/// Kept as an independent route; the two implementations must always agree.
bool pair_monitors_edge_counting(const Graph& g, Vertex a, Vertex b,
                                 const EdgeRef& e);

/// Table form of the counting criterion for callers that already hold the
/// per-endpoint tables. b is the vertex from_b was computed from.
bool monitors_by_counts(const ShortestPathCounts& from_a,
                        const ShortestPathCounts& from_b, Vertex b,
                        const EdgeRef& e);

struct WitnessPair {
  Vertex a;
  Vertex b;  // a < b

  friend bool operator==(const WitnessPair&, const WitnessPair&) = default;
};

struct EdgeMonitor {
  EdgeRef edge;
  bool monitored = false;
  std::vector<WitnessPair> witnesses;  // first few monitoring pairs
};

struct MonitorReport {
  static constexpr int kWitnessCap = 8;

  std::vector<EdgeMonitor> edges;  // in canonical edge order
  int total_edges = 0;
  int monitored_count = 0;
  bool is_meg_set = false;  // monitored_count == total_edges
};

/// Per-edge monitored status over all pairs within m.
MonitorReport monitored_edges(const Graph& g, const VertexSet& m);

/// True when every edge of g is monitored by some pair within m.
bool is_meg_set(const Graph& g, const VertexSet& m);

/// Support vertices of u: neighbors w such that every neighbor x of u that
/// is not adjacent to w (an induced 2-path w-u-x) shares at least two common
/// neighbors with w, closing a 4-cycle through a vertex other than u.
/// A vertex with any support lies in every monitoring edge-geodetic set.
VertexSet supports(const Graph& g, Vertex u);

/// Vertices with a nonempty support set, by direct evaluation of supports().
VertexSet mandatory_naive(const Graph& g);

/// State of the pivot-sweep mandatory-vertex computation. Candidate sets
/// S(v) live in one flat pool, one segment per vertex, compacted in place
/// as candidates are eliminated.
struct SupportState {
  std::vector<Vertex> pool;   // all candidate segments, grouped by vertex
  std::vector<int> start;     // size n+1, segment v begins at pool[start[v]]
  std::vector<int> live;      // surviving candidates in segment v
  std::vector<char> mandatory_flags;  // flag <=> S(v) nonempty
  std::vector<int> n2_row;  // length-2 path counts for the last pivot

  std::span<const Vertex> candidates(Vertex v) const {
    return {pool.data() + start[v], static_cast<std::size_t>(live[v])};
  }
};

/// Pivot sweep: S(v) starts as N(v); each pivot i builds its length-2 path
/// counts and removes from S(j), j a neighbor of i, every candidate k that
/// is non-adjacent to i with exactly one length-2 path between i and k.
/// Flags are read off only after every pivot has run. O(n * max_degree^2).
SupportState compute_support_state(const Graph& g);

/// Vertices whose candidate set survives the pivot sweep. Always equal to
/// mandatory_naive, in far less time on bounded-degree graphs.
VertexSet mandatory_fast(const Graph& g);

/// True when every simplicial vertex of positive degree is mandatory.
bool simplicial_subset_check(const Graph& g);

}  // namespace megkit
