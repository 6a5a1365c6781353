#include "megkit/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace megkit {

namespace {

// Edge coverage as bitmasks: for every vertex pair, which edges the pair
// monitors. Lets the subset search test a candidate with a few word ops.
struct Coverage {
  Vertex n = 0;
  int words = 1;
  std::vector<std::uint64_t> full;
  std::vector<std::vector<std::uint64_t>> pair_masks;  // index a * n + b, a < b

  const std::vector<std::uint64_t>& mask(Vertex a, Vertex b) const {
    return pair_masks[a * n + b];
  }
};

Coverage build_coverage(const Graph& g) {
  Coverage cov;
  cov.n = g.vertex_count();
  const int m = g.edge_count();
  cov.words = std::max(1, (m + 63) / 64);
  cov.full.assign(cov.words, 0);
  for (int ei = 0; ei < m; ++ei) cov.full[ei >> 6] |= 1ULL << (ei & 63);

  std::vector<ShortestPathCounts> tables;
  tables.reserve(cov.n);
  for (Vertex v = 0; v < cov.n; ++v) {
    tables.push_back(count_shortest_paths(g, v));
  }

  cov.pair_masks.assign(static_cast<std::size_t>(cov.n) * cov.n, {});
  const std::vector<EdgeRef>& edges = g.edges();
  for (Vertex a = 0; a < cov.n; ++a) {
    for (Vertex b = a + 1; b < cov.n; ++b) {
      std::vector<std::uint64_t> mask(cov.words, 0);
      for (int ei = 0; ei < m; ++ei) {
        if (monitors_by_counts(tables[a], tables[b], b, edges[ei])) {
          mask[ei >> 6] |= 1ULL << (ei & 63);
        }
      }
      cov.pair_masks[static_cast<std::size_t>(a) * cov.n + b] =
          std::move(mask);
    }
  }
  return cov;
}

bool covers_all(const Coverage& cov, const std::vector<Vertex>& members,
                std::vector<std::uint64_t>& acc) {
  std::fill(acc.begin(), acc.end(), 0);
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      const std::vector<std::uint64_t>& m = cov.mask(members[i], members[j]);
      for (int w = 0; w < cov.words; ++w) acc[w] |= m[w];
    }
  }
  return acc == cov.full;
}

// Advances idx to the next k-combination of [0, pool_size) in lex order.
bool next_combination(std::vector<int>& idx, int pool_size) {
  const int k = static_cast<int>(idx.size());
  for (int i = k - 1; i >= 0; --i) {
    if (idx[i] < pool_size - (k - i)) {
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

void build_candidate(const std::vector<Vertex>& base,
                     const std::vector<Vertex>& pool,
                     const std::vector<int>& idx,
                     std::vector<Vertex>& out) {
  out.clear();
  out.reserve(base.size() + idx.size());
  std::size_t bi = 0;
  for (int id : idx) {
    Vertex v = pool[id];
    while (bi < base.size() && base[bi] < v) out.push_back(base[bi++]);
    out.push_back(v);
  }
  while (bi < base.size()) out.push_back(base[bi++]);
}

}  // namespace

MinMegResult min_meg_brute(const Graph& g, const MinMegOptions& options) {
  const Vertex n = g.vertex_count();
  if (options.max_size && *options.max_size < 0) {
    throw Error(errc::invalid_param, "max_size must be non-negative");
  }
  Coverage cov = build_coverage(g);

  VertexSet mand =
      options.mandatory_pruning ? mandatory_fast(g) : VertexSet{};
  const std::vector<Vertex>& base = mand.members();
  std::vector<Vertex> pool;
  pool.reserve(n - base.size());
  for (Vertex v = 0; v < n; ++v) {
    if (!mand.contains(v)) pool.push_back(v);
  }
  const int pool_size = static_cast<int>(pool.size());
  const int cap = std::min(options.max_size.value_or(n), static_cast<int>(n));

  MinMegResult res;
  std::vector<std::uint64_t> acc(cov.words);
  std::vector<Vertex> candidate;
  std::vector<int> idx;
  bool found = false;

  for (int s = static_cast<int>(base.size()); s <= cap && !found; ++s) {
    const int k = s - static_cast<int>(base.size());
    if (k > pool_size) break;
    idx.resize(k);
    std::iota(idx.begin(), idx.end(), 0);
    bool more = true;
    while (more) {
      ++res.nodes_enumerated;
      build_candidate(base, pool, idx, candidate);
      if (covers_all(cov, candidate, acc)) {
        found = true;
        res.optimum = VertexSet(candidate);
        res.optimum_size = s;
        break;
      }
      more = next_combination(idx, pool_size);
    }
    if (found && options.check_uniqueness) {
      bool second = false;
      while (!second && next_combination(idx, pool_size)) {
        ++res.nodes_enumerated;
        build_candidate(base, pool, idx, candidate);
        if (covers_all(cov, candidate, acc)) second = true;
      }
      res.is_unique_minimum = !second;
    }
  }
  if (!found) {
    throw Error(errc::size_cap_exceeded,
                "no monitoring edge-geodetic set within size " +
                    std::to_string(cap));
  }
  return res;
}

bool check_meg_minimal(const Graph& g) {
  VertexSet mand = mandatory_fast(g);
  MinMegOptions opt;
  opt.mandatory_pruning = false;
  opt.check_uniqueness = true;
  MinMegResult res = min_meg_brute(g, opt);
  return res.optimum == mand && res.is_unique_minimum.value_or(false);
}

VertexSet mandatory_by_definition(const Graph& g) {
  const Vertex n = g.vertex_count();
  if (n > 20) {
    throw Error(errc::invalid_param,
                "subset enumeration is limited to n <= 20");
  }
  Coverage cov = build_coverage(g);
  const std::uint32_t limit = 1u << n;
  std::uint32_t inter = limit - 1;
  std::vector<Vertex> members;
  std::vector<std::uint64_t> acc(cov.words);
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    members.clear();
    for (Vertex v = 0; v < n; ++v) {
      if (mask & (1u << v)) members.push_back(v);
    }
    if (covers_all(cov, members, acc)) inter &= mask;
  }
  members.clear();
  for (Vertex v = 0; v < n; ++v) {
    if (inter & (1u << v)) members.push_back(v);
  }
  return VertexSet(std::move(members));
}

std::vector<Vertex> articulation_points(const Graph& g) {
  const Vertex n = g.vertex_count();
  std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
  std::vector<char> is_art(n, 0);
  std::vector<std::pair<Vertex, int>> stack;  // vertex, next neighbor index
  int timer = 0;

  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    int root_children = 0;
    disc[root] = low[root] = timer++;
    stack.assign(1, {root, 0});
    while (!stack.empty()) {
      auto& [v, it] = stack.back();
      if (it < static_cast<int>(g.neighbors(v).size())) {
        Vertex w = g.neighbors(v)[it++];
        if (disc[w] == -1) {
          parent[w] = v;
          disc[w] = low[w] = timer++;
          if (v == root) ++root_children;
          stack.emplace_back(w, 0);
        } else if (w != parent[v]) {
          low[v] = std::min(low[v], disc[w]);
        }
      } else {
        stack.pop_back();
        if (!stack.empty()) {
          Vertex p = stack.back().first;
          low[p] = std::min(low[p], low[v]);
          if (p != root && low[v] >= disc[p]) is_art[p] = 1;
        }
      }
    }
    if (root_children >= 2) is_art[root] = 1;
  }

  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v) {
    if (is_art[v]) out.push_back(v);
  }
  return out;
}

bool is_cut_vertex(const Graph& g, Vertex v) {
  g.require_vertex(v);
  std::vector<Vertex> arts = articulation_points(g);
  return std::binary_search(arts.begin(), arts.end(), v);
}

std::vector<std::vector<Vertex>> components_after_removal(const Graph& g,
                                                          Vertex v) {
  g.require_vertex(v);
  const Vertex n = g.vertex_count();
  std::vector<std::vector<Vertex>> comps;
  std::vector<char> seen(n, 0);
  seen[v] = 1;
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

VertexSet compose_cut_vertex(const Graph& g, Vertex v,
                             std::span<const VertexSet> component_megsets) {
  g.require_vertex(v);
  if (!is_cut_vertex(g, v)) {
    throw Error(errc::not_a_cut_vertex,
                "vertex " + std::to_string(v) + " is not a cut vertex");
  }
  std::vector<std::vector<Vertex>> comps = components_after_removal(g, v);
  if (comps.size() != component_megsets.size()) {
    throw Error(errc::invalid_component_megset,
                "expected " + std::to_string(comps.size()) +
                    " component meg-sets, got " +
                    std::to_string(component_megsets.size()));
  }

  std::vector<Vertex> acc;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    std::vector<Vertex> local_vertices = comps[i];
    local_vertices.push_back(v);
    std::sort(local_vertices.begin(), local_vertices.end());
    InducedSubgraph sub = induced_subgraph(g, local_vertices);

    std::vector<Vertex> local_members;
    for (Vertex x : component_megsets[i]) {
      auto it = std::lower_bound(sub.original.begin(), sub.original.end(), x);
      if (it == sub.original.end() || *it != x) {
        throw Error(errc::invalid_component_megset,
                    "set " + std::to_string(i) + " contains vertex " +
                        std::to_string(x) + " outside its component");
      }
      local_members.push_back(static_cast<Vertex>(it - sub.original.begin()));
    }
    if (!is_meg_set(sub.graph, VertexSet(std::move(local_members)))) {
      throw Error(errc::invalid_component_megset,
                  "set " + std::to_string(i) +
                      " is not a meg-set of its component");
    }
    for (Vertex x : component_megsets[i]) {
      if (x != v) acc.push_back(x);
    }
  }

  VertexSet out(std::move(acc));
  if (!is_meg_set(g, out)) {
    throw std::logic_error("cut-vertex composition failed verification");
  }
  return out;
}

}  // namespace megkit
