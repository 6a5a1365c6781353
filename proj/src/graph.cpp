#include "megkit/graph.hpp"

#include <algorithm>
#include <queue>

namespace megkit {

const char* errc_name(errc code) {
  switch (code) {
    case errc::id_out_of_range: return "IdOutOfRange";
    case errc::self_loop: return "SelfLoop";
    case errc::duplicate_edge: return "DuplicateEdge";
    case errc::not_an_edge: return "NotAnEdge";
    case errc::same_vertex: return "SameVertex";
    case errc::not_induced_p3: return "NotInducedP3";
    case errc::invalid_param: return "InvalidParam";
    case errc::not_a_cut_vertex: return "NotACutVertex";
    case errc::invalid_component_megset: return "InvalidComponentMegSet";
    case errc::size_cap_exceeded: return "SizeCapExceeded";
    case errc::malformed: return "Malformed";
    case errc::edge_count_mismatch: return "EdgeCountMismatch";
    case errc::missing_header: return "MissingHeader";
  }
  return "Unknown";
}

namespace {

std::string format_message(errc code, const std::string& message, int line) {
  std::string out = errc_name(code);
  out += ": ";
  if (line > 0) {
    out += "line ";
    out += std::to_string(line);
    out += ": ";
  }
  out += message;
  return out;
}

}  // namespace

Error::Error(errc code, const std::string& message, int line)
    : std::runtime_error(format_message(code, message, line)),
      code_(code),
      line_(line) {}

Distance Distance::finite(int hops) {
  if (hops < 0) {
    throw Error(errc::invalid_param, "finite distance must be non-negative");
  }
  Distance d;
  d.hops_ = hops;
  return d;
}

int Distance::hops() const {
  if (is_unreachable()) {
    throw Error(errc::invalid_param, "hops() called on unreachable distance");
  }
  return hops_;
}

EdgeRef::EdgeRef(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {
  if (a == b) {
    throw Error(errc::self_loop,
                "edge endpoints must differ, got (" + std::to_string(a) +
                    ", " + std::to_string(b) + ")");
  }
}

Graph::Graph() = default;

Graph::Graph(Vertex n, std::span<const std::pair<Vertex, Vertex>> pairs) {
  if (n < 0) {
    throw Error(errc::invalid_param, "vertex count must be non-negative");
  }
  n_ = n;
  edges_.reserve(pairs.size());
  edge_keys_.reserve(pairs.size() * 2);
  for (const auto& [a, b] : pairs) {
    if (a < 0 || a >= n) {
      throw Error(errc::id_out_of_range,
                  "vertex id " + std::to_string(a) + " not in [0, " +
                      std::to_string(n) + ")");
    }
    if (b < 0 || b >= n) {
      throw Error(errc::id_out_of_range,
                  "vertex id " + std::to_string(b) + " not in [0, " +
                      std::to_string(n) + ")");
    }
    EdgeRef e(a, b);  // rejects self loops
    if (!edge_keys_.insert(edge_key(e.u, e.v)).second) {
      throw Error(errc::duplicate_edge,
                  "edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                      ") listed twice");
    }
    edges_.push_back(e);
  }
  std::sort(edges_.begin(), edges_.end());

  std::vector<int> deg(n_, 0);
  for (const EdgeRef& e : edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  offsets_.assign(n_ + 1, 0);
  for (Vertex v = 0; v < n_; ++v) offsets_[v + 1] = offsets_[v] + deg[v];
  adj_.resize(offsets_[n_]);
  std::vector<int> cursor(offsets_.begin(), offsets_.end() - 1);
  for (const EdgeRef& e : edges_) {
    adj_[cursor[e.u]++] = e.v;
    adj_[cursor[e.v]++] = e.u;
  }
  // edges_ is sorted, so each neighbor run is already ascending except for
  // the interleaving of the two endpoint roles; sort each run to be safe.
  for (Vertex v = 0; v < n_; ++v) {
    std::sort(adj_.begin() + offsets_[v], adj_.begin() + offsets_[v + 1]);
  }
  max_degree_ = deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

int Graph::degree(Vertex v) const {
  require_vertex(v);
  return offsets_[v + 1] - offsets_[v];
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  require_vertex(v);
  return {adj_.data() + offsets_[v],
          static_cast<std::size_t>(offsets_[v + 1] - offsets_[v])};
}

bool Graph::has_edge(Vertex a, Vertex b) const noexcept {
  if (a == b || !has_vertex(a) || !has_vertex(b)) return false;
  return edge_keys_.count(edge_key(std::min(a, b), std::max(a, b))) > 0;
}

void Graph::require_vertex(Vertex v) const {
  if (!has_vertex(v)) {
    throw Error(errc::id_out_of_range,
                "vertex id " + std::to_string(v) + " not in [0, " +
                    std::to_string(n_) + ")");
  }
}

void Graph::require_edge(const EdgeRef& e) const {
  require_vertex(e.u);
  require_vertex(e.v);
  if (!has_edge(e.u, e.v)) {
    throw Error(errc::not_an_edge,
                "(" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                    ") is not an edge");
  }
}

Graph build_graph(Vertex n, std::span<const std::pair<Vertex, Vertex>> pairs) {
  return Graph(n, pairs);
}

namespace {

// Plain BFS over int distances (-1 = unreachable). skip is an optional edge
// to leave out, as a canonical (u, v) pair; pass (-1, -1) for none.
void bfs_int(const Graph& g, Vertex source, std::pair<Vertex, Vertex> skip,
             std::vector<int>& dist) {
  dist.assign(g.vertex_count(), -1);
  dist[source] = 0;
  std::vector<Vertex> frontier{source};
  std::vector<Vertex> next;
  int d = 0;
  while (!frontier.empty()) {
    next.clear();
    ++d;
    for (Vertex x : frontier) {
      for (Vertex y : g.neighbors(x)) {
        if (dist[y] != -1) continue;
        if ((x == skip.first && y == skip.second) ||
            (x == skip.second && y == skip.first)) {
          continue;
        }
        dist[y] = d;
        next.push_back(y);
      }
    }
    frontier.swap(next);
  }
}

}  // namespace

std::vector<Distance> bfs_distances(const Graph& g, Vertex source) {
  g.require_vertex(source);
  std::vector<int> dist;
  bfs_int(g, source, {-1, -1}, dist);
  std::vector<Distance> out(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (dist[v] >= 0) out[v] = Distance::finite(dist[v]);
  }
  return out;
}

Distance distance_avoiding_edge(const Graph& g, Vertex a, Vertex b,
                                const EdgeRef& e) {
  g.require_vertex(a);
  g.require_vertex(b);
  g.require_edge(e);
  std::vector<int> dist;
  bfs_int(g, a, {e.u, e.v}, dist);
  return dist[b] >= 0 ? Distance::finite(dist[b]) : Distance::unreachable();
}

ShortestPathCounts count_shortest_paths(const Graph& g, Vertex source) {
  g.require_vertex(source);
  const Vertex n = g.vertex_count();
  std::vector<int> dist(n, -1);
  ShortestPathCounts out;
  out.count.assign(n, 0);
  dist[source] = 0;
  out.count[source] = 1;
  std::vector<Vertex> frontier{source};
  std::vector<Vertex> next;
  int d = 0;
  while (!frontier.empty()) {
    next.clear();
    ++d;
    for (Vertex x : frontier) {
      for (Vertex y : g.neighbors(x)) {
        if (dist[y] == -1) {
          dist[y] = d;
          next.push_back(y);
        }
        if (dist[y] == d) out.count[y] += out.count[x];
      }
    }
    frontier.swap(next);
  }
  out.dist.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    if (dist[v] >= 0) out.dist[v] = Distance::finite(dist[v]);
  }
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g,
                                 std::span<const Vertex> vertices) {
  std::vector<Vertex> keep(vertices.begin(), vertices.end());
  for (Vertex v : keep) g.require_vertex(v);
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());

  auto local_id = [&](Vertex v) -> int {
    auto it = std::lower_bound(keep.begin(), keep.end(), v);
    if (it == keep.end() || *it != v) return -1;
    return static_cast<int>(it - keep.begin());
  };

  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex v : keep) {
    int lv = local_id(v);
    for (Vertex w : g.neighbors(v)) {
      if (w <= v) continue;  // each edge once
      int lw = local_id(w);
      if (lw >= 0) pairs.emplace_back(lv, lw);
    }
  }
  return {Graph(static_cast<Vertex>(keep.size()), pairs), std::move(keep)};
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  const Vertex n = g.vertex_count();
  std::vector<std::vector<Vertex>> comps;
  std::vector<char> seen(n, 0);
  std::vector<Vertex> queue;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    queue.assign(1, s);
    seen[s] = 1;
    std::vector<Vertex> comp;
    while (!queue.empty()) {
      Vertex x = queue.back();
      queue.pop_back();
      comp.push_back(x);
      for (Vertex y : g.neighbors(x)) {
        if (!seen[y]) {
          seen[y] = 1;
          queue.push_back(y);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

}  // namespace megkit
