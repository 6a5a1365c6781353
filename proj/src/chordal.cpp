#include "megkit/chordal.hpp"

#include <algorithm>

#include "megkit/rng.hpp"

namespace megkit {

ChordalityCertificate ChordalityCertificate::peo(std::vector<Vertex> order) {
  return ChordalityCertificate(Kind::Peo, std::move(order));
}

ChordalityCertificate ChordalityCertificate::hole(std::vector<Vertex> cycle) {
  return ChordalityCertificate(Kind::Hole, std::move(cycle));
}

const std::vector<Vertex>& ChordalityCertificate::order() const {
  if (kind_ != Kind::Peo) {
    throw Error(errc::invalid_param, "certificate is not an elimination order");
  }
  return seq_;
}

const std::vector<Vertex>& ChordalityCertificate::cycle() const {
  if (kind_ != Kind::Hole) {
    throw Error(errc::invalid_param, "certificate is not a hole");
  }
  return seq_;
}

bool is_simplicial(const Graph& g, Vertex v) {
  g.require_vertex(v);
  auto nbrs = g.neighbors(v);
  for (std::size_t i = 0; i < nbrs.size(); ++i) {
    for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
      if (!g.has_edge(nbrs[i], nbrs[j])) return false;
    }
  }
  return true;
}

std::vector<Vertex> lex_bfs_order(const Graph& g) {
  const Vertex n = g.vertex_count();
  std::vector<Vertex> order;
  order.reserve(n);
  if (n == 0) return order;

  // Partition refinement over doubly linked buckets. Buckets sit in
  // lexicographic label order; members stay sorted by id because splits
  // append pivot neighbors in ascending id order and removals keep the
  // relative order of what remains.
  struct Bucket {
    Vertex head = -1;
    Vertex tail = -1;
    int prev = -1;
    int next = -1;
    int stamp = -1;  // round that created this bucket's current twin
    int twin = -1;   // front bucket receiving pivot neighbors this round
  };
  std::vector<Bucket> buckets(1);
  std::vector<Vertex> vprev(n), vnext(n);
  std::vector<int> vbucket(n, 0);
  std::vector<char> visited(n, 0);

  buckets[0].head = 0;
  buckets[0].tail = n - 1;
  for (Vertex v = 0; v < n; ++v) {
    vprev[v] = v - 1;
    vnext[v] = (v + 1 < n) ? v + 1 : -1;
  }
  int first_bucket = 0;

  auto detach = [&](Vertex v) {
    Bucket& b = buckets[vbucket[v]];
    if (vprev[v] != -1) {
      vnext[vprev[v]] = vnext[v];
    } else {
      b.head = vnext[v];
    }
    if (vnext[v] != -1) {
      vprev[vnext[v]] = vprev[v];
    } else {
      b.tail = vprev[v];
    }
    vprev[v] = vnext[v] = -1;
  };
  auto drop_if_empty = [&](int bi) {
    if (buckets[bi].head != -1) return;
    int p = buckets[bi].prev;
    int q = buckets[bi].next;
    if (p != -1) {
      buckets[p].next = q;
    } else {
      first_bucket = q;
    }
    if (q != -1) buckets[q].prev = p;
  };
  auto append = [&](int bi, Vertex v) {
    Bucket& b = buckets[bi];
    vprev[v] = b.tail;
    vnext[v] = -1;
    if (b.tail != -1) {
      vnext[b.tail] = v;
    } else {
      b.head = v;
    }
    b.tail = v;
    vbucket[v] = bi;
  };

  for (int round = 0; round < n; ++round) {
    Vertex pivot = buckets[first_bucket].head;
    int pb = vbucket[pivot];
    detach(pivot);
    drop_if_empty(pb);
    visited[pivot] = 1;
    order.push_back(pivot);

    for (Vertex w : g.neighbors(pivot)) {
      if (visited[w]) continue;
      int bi = vbucket[w];
      if (buckets[bi].stamp != round) {
        // create the twin in front of bi for this round
        int ti = static_cast<int>(buckets.size());
        buckets.push_back(Bucket{});
        buckets[ti].prev = buckets[bi].prev;
        buckets[ti].next = bi;
        if (buckets[bi].prev != -1) {
          buckets[buckets[bi].prev].next = ti;
        } else {
          first_bucket = ti;
        }
        buckets[bi].prev = ti;
        buckets[bi].stamp = round;
        buckets[bi].twin = ti;
      }
      int ti = buckets[bi].twin;
      detach(w);
      append(ti, w);
      drop_if_empty(bi);
    }
  }
  return order;
}

std::optional<PeoViolation> verify_peo(const Graph& g,
                                       std::span<const Vertex> order) {
  const Vertex n = g.vertex_count();
  if (static_cast<Vertex>(order.size()) != n) {
    throw Error(errc::invalid_param,
                "order must list every vertex exactly once");
  }
  std::vector<int> pos(n, -1);
  for (Vertex i = 0; i < n; ++i) {
    g.require_vertex(order[i]);
    if (pos[order[i]] != -1) {
      throw Error(errc::invalid_param, "duplicate vertex in order");
    }
    pos[order[i]] = i;
  }

  std::vector<Vertex> later;
  for (Vertex i = 0; i < n; ++i) {
    Vertex v = order[i];
    later.clear();
    for (Vertex u : g.neighbors(v)) {
      if (pos[u] > i) later.push_back(u);
    }
    std::sort(later.begin(), later.end(),
              [&](Vertex a, Vertex b) { return pos[a] < pos[b]; });
    for (std::size_t j = 0; j < later.size(); ++j) {
      for (std::size_t k = j + 1; k < later.size(); ++k) {
        if (!g.has_edge(later[j], later[k])) {
          return PeoViolation{v, later[j], later[k]};
        }
      }
    }
  }
  return std::nullopt;
}

bool verify_hole(const Graph& g, std::span<const Vertex> cycle) {
  const std::size_t k = cycle.size();
  if (k < 4) return false;
  std::vector<char> seen(g.vertex_count(), 0);
  for (Vertex v : cycle) {
    if (!g.has_vertex(v) || seen[v]) return false;
    seen[v] = 1;
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      bool consecutive = (j == i + 1) || (i == 0 && j == k - 1);
      if (g.has_edge(cycle[i], cycle[j]) != consecutive) return false;
    }
  }
  return true;
}

namespace {

// Shortest path from a to b that avoids every blocked vertex. Returns the
// path including both endpoints, or an empty vector.
std::vector<Vertex> shortest_path_avoiding(const Graph& g, Vertex a, Vertex b,
                                           const std::vector<char>& blocked) {
  std::vector<int> parent(g.vertex_count(), -2);
  parent[a] = -1;
  std::vector<Vertex> frontier{a}, next;
  bool reached = (a == b);
  while (!frontier.empty() && !reached) {
    next.clear();
    for (Vertex x : frontier) {
      for (Vertex y : g.neighbors(x)) {
        if (parent[y] != -2 || blocked[y]) continue;
        parent[y] = x;
        if (y == b) {
          reached = true;
          break;
        }
        next.push_back(y);
      }
      if (reached) break;
    }
    frontier.swap(next);
  }
  std::vector<Vertex> path;
  if (!reached) return path;
  for (Vertex v = b; v != -1; v = parent[v]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

// Chordless cycle through v built from a shortest p-w path that avoids the
// rest of v's closed neighborhood. Empty when p and w fall apart without it.
std::vector<Vertex> hole_through(const Graph& g, Vertex v, Vertex p, Vertex w) {
  std::vector<char> blocked(g.vertex_count(), 0);
  blocked[v] = 1;
  for (Vertex x : g.neighbors(v)) blocked[x] = 1;
  blocked[p] = 0;
  blocked[w] = 0;
  std::vector<Vertex> path = shortest_path_avoiding(g, p, w, blocked);
  if (path.empty()) return path;
  std::vector<Vertex> cycle;
  cycle.reserve(path.size() + 1);
  cycle.push_back(v);
  cycle.insert(cycle.end(), path.begin(), path.end());
  return cycle;
}

// Lexicographically smallest rotation/reflection, so equal holes print the
// same way no matter where extraction happened to start.
std::vector<Vertex> canonical_cycle(const std::vector<Vertex>& cycle) {
  const std::size_t k = cycle.size();
  std::vector<Vertex> best = cycle;
  std::vector<Vertex> cand(k);
  for (int dir = 0; dir < 2; ++dir) {
    for (std::size_t s = 0; s < k; ++s) {
      for (std::size_t i = 0; i < k; ++i) {
        std::size_t idx = dir == 0 ? (s + i) % k : (s + k - i) % k;
        cand[i] = cycle[idx];
      }
      if (cand < best) best = cand;
    }
  }
  return best;
}

std::vector<Vertex> extract_hole(const Graph& g, const PeoViolation& viol) {
  std::vector<Vertex> hole = hole_through(g, viol.v, viol.p, viol.w);
  if (!hole.empty()) return hole;
  // Fallback sweep. Some vertex of any hole, together with its two cycle
  // neighbors, admits the path search above, so this cannot come up empty
  // on a non-chordal graph.
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    auto nbrs = g.neighbors(v);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
        if (g.has_edge(nbrs[i], nbrs[j])) continue;
        hole = hole_through(g, v, nbrs[i], nbrs[j]);
        if (!hole.empty()) return hole;
      }
    }
  }
  throw std::logic_error("hole extraction failed on a non-chordal graph");
}

}  // namespace

ChordalityCertificate check_chordal(const Graph& g) {
  std::vector<Vertex> visit = lex_bfs_order(g);
  std::vector<Vertex> sigma(visit.rbegin(), visit.rend());
  std::optional<PeoViolation> viol = verify_peo(g, sigma);
  if (!viol) return ChordalityCertificate::peo(std::move(sigma));

  std::vector<Vertex> hole = canonical_cycle(extract_hole(g, *viol));
  if (!verify_hole(g, hole)) {
    throw std::logic_error("extracted hole failed verification");
  }
  return ChordalityCertificate::hole(std::move(hole));
}

Graph gen_chordal(int n, int attach_max, std::uint64_t seed) {
  if (n < 1) {
    throw Error(errc::invalid_param, "n must be at least 1");
  }
  if (attach_max < 1) {
    throw Error(errc::invalid_param, "attach_max must be at least 1");
  }
  Rng rng(seed);
  std::vector<std::vector<Vertex>> adj(n);  // sorted: new ids only grow
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::vector<Vertex> clique, candidates, narrowed;
  for (Vertex i = 1; i < n; ++i) {
    Vertex u = rng.below(i);
    clique.assign(1, u);
    candidates = adj[u];  // common neighbors of everything in clique
    while (static_cast<int>(clique.size()) < attach_max &&
           !candidates.empty()) {
      Vertex c = candidates[rng.below(static_cast<int>(candidates.size()))];
      clique.push_back(c);
      narrowed.clear();
      std::set_intersection(candidates.begin(), candidates.end(),
                            adj[c].begin(), adj[c].end(),
                            std::back_inserter(narrowed));
      candidates.swap(narrowed);
    }
    for (Vertex c : clique) {
      edges.emplace_back(c, i);
      adj[c].push_back(i);
    }
    std::sort(clique.begin(), clique.end());
    adj[i] = clique;
  }
  return build_graph(n, edges);
}

std::optional<std::vector<Vertex>> find_cycle_through_p3(const Graph& g,
                                                         Vertex a, Vertex b,
                                                         Vertex c) {
  g.require_vertex(a);
  g.require_vertex(b);
  g.require_vertex(c);
  if (a == c || !g.has_edge(a, b) || !g.has_edge(b, c) || g.has_edge(a, c)) {
    throw Error(errc::not_induced_p3,
                "(" + std::to_string(a) + ", " + std::to_string(b) + ", " +
                    std::to_string(c) + ") is not an induced 2-path");
  }
  std::vector<char> blocked(g.vertex_count(), 0);
  blocked[b] = 1;
  std::vector<Vertex> path = shortest_path_avoiding(g, a, c, blocked);
  if (path.empty()) return std::nullopt;
  path.push_back(b);  // cycle [a, ..., c, b]
  return path;
}

}  // namespace megkit
