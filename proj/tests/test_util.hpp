#pragma once

// Shared builders and slow reference oracles. The oracles restate the
// definitions as directly as possible (exhaustive path enumeration, literal
// quantifiers) so the optimized library code is checked against something
// with no shared machinery.

#include <algorithm>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "megkit/graph.hpp"
#include "megkit/megset.hpp"
#include "megkit/rng.hpp"

namespace tutil {

using megkit::EdgeRef;
using megkit::Graph;
using megkit::Vertex;

inline Graph make(Vertex n, std::vector<std::pair<Vertex, Vertex>> edges) {
  return megkit::build_graph(n, edges);
}

inline Graph path_graph(int n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return make(n, std::move(e));
}

inline Graph cycle_graph(int n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(0, n - 1);
  return make(n, std::move(e));
}

inline Graph complete_graph(int n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return make(n, std::move(e));
}

// Center 0, leaves 1..n-1.
inline Graph star_graph(int n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int i = 1; i < n; ++i) e.emplace_back(0, i);
  return make(n, std::move(e));
}

inline Graph er_graph(int n, double p, std::uint64_t seed) {
  megkit::Rng rng(seed);
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.chance(p)) e.emplace_back(i, j);
  return make(n, std::move(e));
}

inline megkit::VertexSet vs(std::vector<Vertex> members) {
  return megkit::VertexSet(std::move(members));
}

// ---- reference oracles ----

inline void all_paths_dfs(const Graph& g, Vertex cur, Vertex target,
                          std::vector<Vertex>& path, std::vector<char>& used,
                          std::vector<std::vector<Vertex>>& out) {
  if (cur == target) {
    out.push_back(path);
    return;
  }
  for (Vertex w : g.neighbors(cur)) {
    if (used[w]) continue;
    used[w] = 1;
    path.push_back(w);
    all_paths_dfs(g, w, target, path, used, out);
    path.pop_back();
    used[w] = 0;
  }
}

// Every shortest a-b path, by enumerating all simple paths. Exponential;
// keep n small.
inline std::vector<std::vector<Vertex>> ref_shortest_paths(const Graph& g,
                                                           Vertex a, Vertex b) {
  std::vector<std::vector<Vertex>> all;
  std::vector<Vertex> path{a};
  std::vector<char> used(g.vertex_count(), 0);
  used[a] = 1;
  all_paths_dfs(g, a, b, path, used, all);
  if (all.empty()) return {};
  std::size_t best = all.front().size();
  for (const auto& p : all) best = std::min(best, p.size());
  std::vector<std::vector<Vertex>> out;
  for (auto& p : all)
    if (p.size() == best) out.push_back(std::move(p));
  return out;
}

inline bool path_has_edge(const std::vector<Vertex>& path, const EdgeRef& e) {
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    if (EdgeRef(path[i], path[i + 1]) == e) return true;
  }
  return false;
}

inline bool ref_pair_monitors(const Graph& g, Vertex a, Vertex b,
                              const EdgeRef& e) {
  auto paths = ref_shortest_paths(g, a, b);
  if (paths.empty()) return false;
  for (const auto& p : paths)
    if (!path_has_edge(p, e)) return false;
  return true;
}

inline bool ref_is_meg_set(const Graph& g, const std::vector<Vertex>& m) {
  for (const EdgeRef& e : g.edges()) {
    bool monitored = false;
    for (std::size_t i = 0; i < m.size() && !monitored; ++i)
      for (std::size_t j = i + 1; j < m.size() && !monitored; ++j)
        monitored = ref_pair_monitors(g, m[i], m[j], e);
    if (!monitored) return false;
  }
  return true;
}

// w supports u when every neighbor x of u that is non-adjacent to w closes a
// 4-cycle u-w-v'-x with some v' other than u.
inline std::vector<Vertex> ref_supports(const Graph& g, Vertex u) {
  std::vector<Vertex> out;
  for (Vertex w : g.neighbors(u)) {
    bool ok = true;
    for (Vertex x : g.neighbors(u)) {
      if (x == w || g.has_edge(x, w)) continue;
      bool closed = false;
      for (Vertex vp = 0; vp < g.vertex_count() && !closed; ++vp) {
        closed = vp != u && g.has_edge(vp, w) && g.has_edge(vp, x);
      }
      if (!closed) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(w);
  }
  return out;
}

inline std::vector<Vertex> ref_mandatory(const Graph& g) {
  std::vector<Vertex> out;
  for (Vertex u = 0; u < g.vertex_count(); ++u)
    if (!ref_supports(g, u).empty()) out.push_back(u);
  return out;
}

// Chordality by repeated deletion of a simplicial vertex.
inline bool ref_is_chordal(const Graph& g) {
  int n = g.vertex_count();
  std::vector<std::set<Vertex>> adj(n);
  for (const EdgeRef& e : g.edges()) {
    adj[e.u].insert(e.v);
    adj[e.v].insert(e.u);
  }
  std::vector<char> alive(n, 1);
  for (int round = 0; round < n; ++round) {
    int pick = -1;
    for (int v = 0; v < n && pick < 0; ++v) {
      if (!alive[v]) continue;
      bool simplicial = true;
      for (auto ia = adj[v].begin(); simplicial && ia != adj[v].end(); ++ia)
        for (auto ib = std::next(ia); ib != adj[v].end(); ++ib)
          if (adj[*ia].count(*ib) == 0) {
            simplicial = false;
            break;
          }
      if (simplicial) pick = v;
    }
    if (pick < 0) return false;
    for (Vertex w : adj[pick]) adj[w].erase(pick);
    adj[pick].clear();
    alive[pick] = 0;
  }
  return true;
}

}  // namespace tutil
