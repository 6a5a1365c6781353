#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "megkit/graph.hpp"

namespace megkit {

/// Witness against a candidate elimination ordering: v comes first, p and w
/// are later neighbors of v with no edge between them.
struct PeoViolation {
  Vertex v;
  Vertex p;
  Vertex w;
};

/// Either a perfect elimination ordering (proof of chordality) or a hole,
/// i.e. a chordless cycle of length at least four (proof of the opposite).
class ChordalityCertificate {
 public:
  enum class Kind { Peo, Hole };

  static ChordalityCertificate peo(std::vector<Vertex> order);
  static ChordalityCertificate hole(std::vector<Vertex> cycle);

  Kind kind() const noexcept { return kind_; }
  bool is_peo() const noexcept { return kind_ == Kind::Peo; }

  const std::vector<Vertex>& order() const;  // Peo only
  const std::vector<Vertex>& cycle() const;  // Hole only

 private:
  ChordalityCertificate(Kind kind, std::vector<Vertex> seq)
      : kind_(kind), seq_(std::move(seq)) {}

  Kind kind_;
  std::vector<Vertex> seq_;
};

/// True when the neighborhood of v is a clique.
bool is_simplicial(const Graph& g, Vertex v);

/// Lexicographic BFS visit order. Ties break toward the smallest id, so the
/// result is deterministic; disconnected graphs restart at the smallest
/// unvisited id. The reverse of this order is the candidate elimination
/// ordering used by check_chordal.
std::vector<Vertex> lex_bfs_order(const Graph& g);

/// Full later-neighborhood clique check. Returns the first violation in
/// order position (nullopt when order is a perfect elimination ordering).
/// order must be a permutation of the vertices.
std::optional<PeoViolation> verify_peo(const Graph& g,
                                       std::span<const Vertex> order);

/// True when cycle is a hole of g: length >= 4, consecutive vertices
/// adjacent (cyclically), all other pairs non-adjacent.
bool verify_hole(const Graph& g, std::span<const Vertex> cycle);

/// Decides chordality. The returned certificate is re-verified against g
/// before it is handed back, whichever kind it is.
ChordalityCertificate check_chordal(const Graph& g);

/// Random connected chordal graph on n vertices, deterministic per seed.
/// Vertex 0 starts alone; each vertex i >= 1 is joined to a clique grown
/// from a uniformly chosen existing vertex, up to attach_max members.
/// attach_max = 1 degenerates to random trees.
Graph gen_chordal(int n, int attach_max, std::uint64_t seed);

/// Given an induced 2-path a-b-c (edges ab, bc present, ac absent), returns
/// a cycle through consecutive a, b, c obtained from a shortest a-c path in
/// the graph without b, or nullopt when no such cycle exists.
/// The cycle is listed as [a, ..., c, b].
std::optional<std::vector<Vertex>> find_cycle_through_p3(const Graph& g,
                                                         Vertex a, Vertex b,
                                                         Vertex c);

}  // namespace megkit
