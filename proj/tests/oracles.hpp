#pragma once

// Slow, obviously-correct reference implementations used only by tests.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "gmis/graph.hpp"

namespace oracle {

using gmis::Edge;
using gmis::Graph;
using gmis::Vertex;

inline std::vector<std::vector<bool>> adjacency_matrix(const Graph& g) {
  std::vector<std::vector<bool>> a(g.order(), std::vector<bool>(g.order(), false));
  for (auto [u, v] : g.edges()) a[u][v] = a[v][u] = true;
  return a;
}

// Greedy MIS straight from the definition: take vertices in order, keep one
// if it has no kept neighbour.
inline std::vector<bool> greedy_by_order(const Graph& g, const std::vector<Vertex>& order) {
  const auto a = adjacency_matrix(g);
  std::vector<bool> kept(g.order(), false);
  for (Vertex v : order) {
    bool free = true;
    for (Vertex u = 0; u < g.order(); ++u) {
      if (kept[u] && a[u][v]) free = false;
    }
    kept[v] = free;
  }
  return kept;
}

struct RoundsResult {
  std::vector<bool> occupied;
  std::size_t rounds = 0;
};

// Round simulation by full rescans of the remaining vertex set.
inline RoundsResult naive_rounds(const Graph& g, const std::vector<double>& label) {
  const std::size_t n = g.order();
  const auto a = adjacency_matrix(g);
  std::vector<bool> alive(n, true);
  RoundsResult r;
  r.occupied.assign(n, false);
  std::size_t remaining = n;
  while (remaining > 0) {
    ++r.rounds;
    std::vector<Vertex> sinks;
    for (Vertex v = 0; v < n; ++v) {
      if (!alive[v]) continue;
      bool minimal = true;
      for (Vertex u = 0; u < n; ++u) {
        if (alive[u] && a[u][v] && label[u] < label[v]) minimal = false;
      }
      if (minimal) sinks.push_back(v);
    }
    for (Vertex v : sinks) r.occupied[v] = true;
    for (Vertex v : sinks) {
      for (Vertex u = 0; u < n; ++u) {
        if (alive[u] && (u == v || a[u][v])) {
          alive[u] = false;
          --remaining;
        }
      }
    }
  }
  return r;
}

// E[greedy MIS size] for any graph on <= ~20 vertices by conditioning on the
// first vertex over induced subgraphs (bitmasks):
//   E(S) = 1 + (1/|S|) sum_{v in S} E(S \ N[v]).
inline mpq_class subset_dp_expected(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::uint32_t> closed(n);
  for (Vertex v = 0; v < n; ++v) {
    closed[v] = 1u << v;
    for (Vertex u : g.neighbors(v)) closed[v] |= 1u << u;
  }
  const std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
  std::vector<mpq_class> e(std::size_t{full} + 1);
  for (std::uint32_t s = 1; s <= full && s != 0; ++s) {
    mpq_class sum = 0;
    int k = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (s & (1u << v)) {
        sum += e[s & ~closed[v]];
        ++k;
      }
    }
    e[s] = 1 + sum / k;
    e[s].canonicalize();
  }
  return e[full];
}

// Average greedy MIS size over all n! orders, via greedy_by_order.
inline mpq_class permutation_average(const Graph& g) {
  std::vector<Vertex> order(g.order());
  std::iota(order.begin(), order.end(), 0);
  mpz_class total = 0;
  mpz_class count = 0;
  do {
    const auto kept = greedy_by_order(g, order);
    total += static_cast<unsigned long>(std::count(kept.begin(), kept.end(), true));
    count += 1;
  } while (std::next_permutation(order.begin(), order.end()));
  mpq_class q(total, count);
  q.canonicalize();
  return q;
}

// Backtracking isomorphism test with degree pruning.
inline bool isomorphic(const Graph& g, const Graph& h) {
  const std::size_t n = g.order();
  if (n != h.order() || g.size() != h.size()) return false;
  std::vector<std::size_t> dg, dh;
  for (Vertex v = 0; v < n; ++v) {
    dg.push_back(g.degree(v));
    dh.push_back(h.degree(v));
  }
  auto sg = dg, sh = dh;
  std::sort(sg.begin(), sg.end());
  std::sort(sh.begin(), sh.end());
  if (sg != sh) return false;
  const auto ag = adjacency_matrix(g);
  const auto ah = adjacency_matrix(h);
  std::vector<Vertex> map(n);
  std::vector<bool> used(n, false);
  auto extend = [&](auto&& self, Vertex v) -> bool {
    if (v == n) return true;
    for (Vertex w = 0; w < n; ++w) {
      if (used[w] || dh[w] != dg[v]) continue;
      bool ok = true;
      for (Vertex u = 0; u < v && ok; ++u) ok = ag[u][v] == ah[map[u]][w];
      if (!ok) continue;
      used[w] = true;
      map[v] = w;
      if (self(self, v + 1)) return true;
      used[w] = false;
    }
    return false;
  };
  return extend(extend, 0);
}

// Every labelled tree on n vertices, by testing all (n-1)-edge subsets of K_n.
inline std::vector<Graph> labelled_trees_by_subsets(std::size_t n) {
  std::vector<Edge> all;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) all.emplace_back(u, v);
  }
  std::vector<Graph> out;
  const std::size_t m = all.size();
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != n - 1) continue;
    std::vector<Edge> pick;
    for (std::size_t i = 0; i < m; ++i) {
      if (mask & (1u << i)) pick.push_back(all[i]);
    }
    Graph g(n, pick);
    if (gmis::is_connected(g)) out.push_back(g);
  }
  return out;
}

// All-pairs hop distances by Floyd-Warshall; unreachable = SIZE_MAX.
inline std::vector<std::vector<std::size_t>> floyd_warshall(const Graph& g) {
  const std::size_t n = g.order();
  const std::size_t inf = static_cast<std::size_t>(-1) / 4;
  std::vector<std::vector<std::size_t>> d(n, std::vector<std::size_t>(n, inf));
  for (Vertex v = 0; v < n; ++v) d[v][v] = 0;
  for (auto [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  for (auto& row : d)
    for (auto& x : row)
      if (x >= inf) x = static_cast<std::size_t>(-1);
  return d;
}

// Longest strictly label-decreasing path from v, by exhaustive DFS.
inline std::size_t longest_decreasing_dfs(const Graph& g, const std::vector<double>& label, Vertex v) {
  std::size_t best = 0;
  for (Vertex u : g.neighbors(v)) {
    if (label[u] < label[v]) best = std::max(best, 1 + longest_decreasing_dfs(g, label, u));
  }
  return best;
}

// Vertices reachable from v by label-decreasing walks (set semantics).
inline std::set<Vertex> past_by_closure(const Graph& g, const std::vector<double>& label, Vertex v) {
  std::set<Vertex> seen{v};
  bool grew = true;
  while (grew) {
    grew = false;
    for (Vertex x : std::vector<Vertex>(seen.begin(), seen.end())) {
      for (Vertex u : g.neighbors(x)) {
        if (label[u] < label[x] && seen.insert(u).second) grew = true;
      }
    }
  }
  return seen;
}

// Random labelled graph with each edge present with probability p.
template <typename R>
Graph random_graph(std::size_t n, double p, R& rng) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (rng.uniform() < p) e.emplace_back(u, v);
    }
  }
  return Graph(n, e);
}

}  // namespace oracle
