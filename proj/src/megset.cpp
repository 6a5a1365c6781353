#include "megkit/megset.hpp"

#include <algorithm>

#include "megkit/chordal.hpp"

namespace megkit {

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()),
                 members_.end());
}

VertexSet VertexSet::full(Vertex n) {
  std::vector<Vertex> all(n);
  for (Vertex v = 0; v < n; ++v) all[v] = v;
  VertexSet s;
  s.members_ = std::move(all);
  return s;
}

bool VertexSet::contains(Vertex v) const noexcept {
  return std::binary_search(members_.begin(), members_.end(), v);
}

VertexSet VertexSet::with(Vertex v) const {
  if (contains(v)) return *this;
  VertexSet out = *this;
  auto it = std::lower_bound(out.members_.begin(), out.members_.end(), v);
  out.members_.insert(it, v);
  return out;
}

void require_valid_set(const Graph& g, const VertexSet& m) {
  for (Vertex v : m) g.require_vertex(v);
}

namespace {

void require_pair(const Graph& g, Vertex a, Vertex b) {
  g.require_vertex(a);
  g.require_vertex(b);
  if (a == b) {
    throw Error(errc::same_vertex,
                "pair endpoints must differ, got " + std::to_string(a));
  }
}

// Single-pair BFS distance with early exit; -1 when unreachable.
int pair_distance(const Graph& g, Vertex a, Vertex b) {
  if (a == b) return 0;
  std::vector<int> dist(g.vertex_count(), -1);
  dist[a] = 0;
  std::vector<Vertex> frontier{a}, next;
  int d = 0;
  while (!frontier.empty()) {
    next.clear();
    ++d;
    for (Vertex x : frontier) {
      for (Vertex y : g.neighbors(x)) {
        if (dist[y] != -1) continue;
        if (y == b) return d;
        dist[y] = d;
        next.push_back(y);
      }
    }
    frontier.swap(next);
  }
  return -1;
}

}  // namespace

// Monitors exactly when one orientation is distance-tight and carries the
// full shortest-path count. Both orientations can never be tight at once:
// that would need two shortest paths crossing e in opposite directions.
bool monitors_by_counts(const ShortestPathCounts& from_a,
                        const ShortestPathCounts& from_b, Vertex b,
                        const EdgeRef& e) {
  Distance total = from_a.dist[b];
  if (total.is_unreachable()) return false;
  const int d = total.hops();
  std::uint64_t want = from_a.count[b];
  for (int flip = 0; flip < 2; ++flip) {
    Vertex x = flip == 0 ? e.u : e.v;
    Vertex y = flip == 0 ? e.v : e.u;
    if (from_a.dist[x].is_unreachable() || from_b.dist[y].is_unreachable()) {
      continue;
    }
    if (from_a.dist[x].hops() + 1 + from_b.dist[y].hops() != d) continue;
    // Every concatenation through e is a shortest a-b path, so the product
    // never exceeds the total count; no overflow given the total fits.
    if (from_a.count[x] * from_b.count[y] == want) return true;
  }
  return false;
}

bool pair_monitors_edge(const Graph& g, Vertex a, Vertex b, const EdgeRef& e) {
  require_pair(g, a, b);
  g.require_edge(e);
  int base = pair_distance(g, a, b);
  if (base < 0) return false;  // unreachable pairs monitor nothing
  Distance detour = distance_avoiding_edge(g, a, b, e);
  return detour > Distance::finite(base);
}

bool pair_monitors_edge_counting(const Graph& g, Vertex a, Vertex b,
                                 const EdgeRef& e) {
  require_pair(g, a, b);
  g.require_edge(e);
  ShortestPathCounts from_a = count_shortest_paths(g, a);
  ShortestPathCounts from_b = count_shortest_paths(g, b);
  return monitors_by_counts(from_a, from_b, b, e);
}

MonitorReport monitored_edges(const Graph& g, const VertexSet& m) {
  require_valid_set(g, m);
  const std::vector<Vertex>& members = m.members();

  MonitorReport report;
  report.total_edges = g.edge_count();
  report.edges.reserve(g.edge_count());
  for (const EdgeRef& e : g.edges()) {
    report.edges.push_back(EdgeMonitor{e, false, {}});
  }

  std::vector<ShortestPathCounts> tables;
  tables.reserve(members.size());
  for (Vertex v : members) tables.push_back(count_shortest_paths(g, v));

  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      for (EdgeMonitor& em : report.edges) {
        if (!monitors_by_counts(tables[i], tables[j], members[j], em.edge)) {
          continue;
        }
        if (!em.monitored) {
          em.monitored = true;
          ++report.monitored_count;
        }
        if (static_cast<int>(em.witnesses.size()) <
            MonitorReport::kWitnessCap) {
          em.witnesses.push_back(WitnessPair{members[i], members[j]});
        }
      }
    }
  }
  report.is_meg_set = report.monitored_count == report.total_edges;
  return report;
}

bool is_meg_set(const Graph& g, const VertexSet& m) {
  return monitored_edges(g, m).is_meg_set;
}

namespace {

// At least two common neighbors of w and x; sorted-merge with early exit.
bool share_two_common_neighbors(const Graph& g, Vertex w, Vertex x) {
  auto nw = g.neighbors(w);
  auto nx = g.neighbors(x);
  std::size_t i = 0, j = 0;
  int found = 0;
  while (i < nw.size() && j < nx.size()) {
    if (nw[i] < nx[j]) {
      ++i;
    } else if (nw[i] > nx[j]) {
      ++j;
    } else {
      if (++found >= 2) return true;
      ++i;
      ++j;
    }
  }
  return false;
}

bool supported_by(const Graph& g, Vertex u, Vertex w) {
  for (Vertex x : g.neighbors(u)) {
    if (x == w || g.has_edge(w, x)) continue;
    if (!share_two_common_neighbors(g, w, x)) return false;
  }
  return true;
}

}  // namespace

VertexSet supports(const Graph& g, Vertex u) {
  g.require_vertex(u);
  std::vector<Vertex> out;
  for (Vertex w : g.neighbors(u)) {
    if (supported_by(g, u, w)) out.push_back(w);
  }
  return VertexSet(std::move(out));
}

VertexSet mandatory_naive(const Graph& g) {
  std::vector<Vertex> out;
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    for (Vertex w : g.neighbors(u)) {
      if (supported_by(g, u, w)) {
        out.push_back(u);
        break;
      }
    }
  }
  return VertexSet(std::move(out));
}

SupportState compute_support_state(const Graph& g) {
  const Vertex n = g.vertex_count();
  SupportState st;
  st.start.resize(n + 1);
  st.live.resize(n);
  st.pool.reserve(2 * static_cast<std::size_t>(g.edge_count()));
  for (Vertex v = 0; v < n; ++v) {
    st.start[v] = static_cast<int>(st.pool.size());
    auto nbrs = g.neighbors(v);
    st.pool.insert(st.pool.end(), nbrs.begin(), nbrs.end());
    st.live[v] = static_cast<int>(nbrs.size());
  }
  st.start[n] = static_cast<int>(st.pool.size());
  st.n2_row.assign(n, 0);

  std::vector<char> adjacent_to_pivot(n, 0);
  std::vector<Vertex> touched;
  for (Vertex pivot = 0; pivot < n; ++pivot) {
    for (Vertex k : touched) st.n2_row[k] = 0;
    touched.clear();

    auto nbrs = g.neighbors(pivot);
    for (Vertex w : nbrs) adjacent_to_pivot[w] = 1;
    for (Vertex w : nbrs) {
      for (Vertex k : g.neighbors(w)) {
        if (st.n2_row[k] == 0) touched.push_back(k);
        ++st.n2_row[k];
      }
    }

    // A candidate k in S(j) dies when the pivot witnesses an induced 2-path
    // k-j-pivot whose only common neighbor of k and pivot is j itself.
    for (Vertex j : nbrs) {
      Vertex* seg = st.pool.data() + st.start[j];
      int kept = 0;
      for (int r = 0; r < st.live[j]; ++r) {
        Vertex k = seg[r];
        if (k == pivot || adjacent_to_pivot[k] || st.n2_row[k] != 1) {
          seg[kept++] = k;
        }
      }
      st.live[j] = kept;
    }
    for (Vertex w : nbrs) adjacent_to_pivot[w] = 0;
  }

  st.mandatory_flags.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    st.mandatory_flags[v] = st.live[v] > 0 ? 1 : 0;
  }
  return st;
}

VertexSet mandatory_fast(const Graph& g) {
  SupportState st = compute_support_state(g);
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (st.mandatory_flags[v]) out.push_back(v);
  }
  return VertexSet(std::move(out));
}

bool simplicial_subset_check(const Graph& g) {
  VertexSet mand = mandatory_fast(g);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) > 0 && !mand.contains(v) && is_simplicial(g, v)) {
      return false;
    }
  }
  return true;
}

}  // namespace megkit
