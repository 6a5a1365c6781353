#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace megkit {

using Vertex = int;

enum class errc {
  id_out_of_range,
  self_loop,
  duplicate_edge,
  not_an_edge,
  same_vertex,
  not_induced_p3,
  invalid_param,
  not_a_cut_vertex,
  invalid_component_megset,
  size_cap_exceeded,
  malformed,
  edge_count_mismatch,
  missing_header,
};

const char* errc_name(errc code);

/// Runtime error with a machine-checkable code. Parse errors also carry the
/// 1-based line number of the offending input line (0 otherwise).
class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& message, int line = 0);

  errc code() const noexcept { return code_; }
  int line() const noexcept { return line_; }

 private:
  errc code_;
  int line_;
};

/// Hop distance between two vertices. Unreachable is a distinct sentinel that
/// compares greater than every finite distance; it never enters arithmetic.
class Distance {
 public:
  constexpr Distance() noexcept = default;  // unreachable

  static Distance finite(int hops);
  static constexpr Distance unreachable() noexcept { return Distance(); }

  constexpr bool is_unreachable() const noexcept { return hops_ < 0; }
  constexpr bool is_finite() const noexcept { return hops_ >= 0; }
  int hops() const;  // Error(invalid_param) when unreachable

  friend constexpr bool operator==(Distance a, Distance b) noexcept = default;
  friend constexpr std::strong_ordering operator<=>(Distance a,
                                                    Distance b) noexcept {
    return a.rank() <=> b.rank();
  }

 private:
  constexpr long long rank() const noexcept {
    return hops_ < 0 ? std::numeric_limits<long long>::max() : hops_;
  }

  int hops_ = -1;
};

/// Canonical reference to an undirected edge: u < v always.
struct EdgeRef {
  Vertex u;
  Vertex v;

  EdgeRef(Vertex a, Vertex b);  // orders the endpoints, rejects a == b

  friend bool operator==(const EdgeRef&, const EdgeRef&) noexcept = default;
  friend auto operator<=>(const EdgeRef&, const EdgeRef&) noexcept = default;
};

/// Immutable simple undirected graph over dense vertex ids 0..n-1.
///
/// Neighbor lists are sorted ascending; edge membership is a constant-time
/// hash lookup. Instances never change after construction and are safe to
/// share across threads.
class Graph {
 public:
  Graph();  // graph on zero vertices
  Graph(Vertex n, std::span<const std::pair<Vertex, Vertex>> pairs);

  Vertex vertex_count() const noexcept { return n_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<EdgeRef>& edges() const noexcept { return edges_; }
  int max_degree() const noexcept { return max_degree_; }

  bool has_vertex(Vertex v) const noexcept { return v >= 0 && v < n_; }
  int degree(Vertex v) const;
  std::span<const Vertex> neighbors(Vertex v) const;

  /// False for out-of-range ids and for a == b; never throws.
  bool has_edge(Vertex a, Vertex b) const noexcept;

  void require_vertex(Vertex v) const;     // Error(id_out_of_range)
  void require_edge(const EdgeRef& e) const;  // Error(not_an_edge)

 private:
  static std::uint64_t edge_key(Vertex u, Vertex v) noexcept {
    return (static_cast<std::uint64_t>(u) << 32) |
           static_cast<std::uint32_t>(v);
  }

  Vertex n_ = 0;
  int max_degree_ = 0;
  std::vector<EdgeRef> edges_;       // canonical, sorted
  std::vector<int> offsets_;         // size n_+1, CSR offsets into adj_
  std::vector<Vertex> adj_;          // flattened sorted neighbor lists
  std::unordered_set<std::uint64_t> edge_keys_;
};

Graph build_graph(Vertex n, std::span<const std::pair<Vertex, Vertex>> pairs);

/// Hop distances from source to every vertex.
std::vector<Distance> bfs_distances(const Graph& g, Vertex source);

/// Hop distance from a to b in the graph with edge e removed.
Distance distance_avoiding_edge(const Graph& g, Vertex a, Vertex b,
                                const EdgeRef& e);

struct ShortestPathCounts {
  std::vector<Distance> dist;
  std::vector<std::uint64_t> count;  // distinct shortest paths, 0 if unreachable
};

/// Distances plus the number of distinct shortest paths from source to every
/// vertex, accumulated over the BFS dag.
ShortestPathCounts count_shortest_paths(const Graph& g, Vertex source);

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> original;  // local id -> original id, ascending
};

/// Subgraph induced by the given vertices (deduplicated, any order).
InducedSubgraph induced_subgraph(const Graph& g,
                                 std::span<const Vertex> vertices);

/// Connected components; each sorted ascending, ordered by smallest member.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

}  // namespace megkit
