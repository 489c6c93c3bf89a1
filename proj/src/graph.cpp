#include "gmis/graph.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace gmis {

namespace {

struct Csr {
  std::vector<std::size_t> offsets;
  std::vector<Vertex> neighbors;
};

Csr build_csr(std::size_t n, std::span<const Edge> edges) {
  Csr csr;
  csr.offsets.assign(n + 1, 0);
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    ++csr.offsets[u + 1];
    ++csr.offsets[v + 1];
  }
  std::partial_sum(csr.offsets.begin(), csr.offsets.end(), csr.offsets.begin());
  csr.neighbors.resize(csr.offsets.back());
  std::vector<std::size_t> fill(csr.offsets.begin(), csr.offsets.end() - 1);
  for (const auto& [u, v] : edges) {
    csr.neighbors[fill[u]++] = v;
    csr.neighbors[fill[v]++] = u;
  }
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(csr.neighbors.begin() + csr.offsets[v], csr.neighbors.begin() + csr.offsets[v + 1]);
  }
  return csr;
}

}  // namespace

Graph::Graph(std::size_t n, std::span<const Edge> edges) {
  for (const auto& [u, v] : edges) {
    if (u == v) {
      throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    }
  }
  auto csr = build_csr(n, edges);
  for (std::size_t v = 0; v < n; ++v) {
    auto first = csr.neighbors.begin() + csr.offsets[v];
    auto last = csr.neighbors.begin() + csr.offsets[v + 1];
    if (std::adjacent_find(first, last) != last) {
      throw std::invalid_argument("duplicate edge at vertex " + std::to_string(v));
    }
  }
  offsets_ = std::move(csr.offsets);
  neighbors_ = std::move(csr.neighbors);
}

Graph Graph::simplified(std::size_t n, std::span<const Edge> edges) {
  std::vector<Edge> kept;
  kept.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    kept.emplace_back(u, v);
  }
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  return Graph(n, kept);
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(size());
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::string validate(const Graph& g) {
  const std::size_t n = g.order();
  for (Vertex v = 0; v < n; ++v) {
    auto nb = g.neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      if (nb[i] >= n) return "neighbor out of range at vertex " + std::to_string(v);
      if (nb[i] == v) return "self-loop at vertex " + std::to_string(v);
      if (i > 0 && nb[i - 1] >= nb[i]) {
        return "adjacency of vertex " + std::to_string(v) + " not strictly sorted";
      }
      if (!g.adjacent(nb[i], v)) {
        return "asymmetric edge " + std::to_string(v) + "->" + std::to_string(nb[i]);
      }
    }
  }
  return {};
}

std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source) {
  std::vector<std::size_t> dist(g.order(), kUnreachable);
  std::vector<Vertex> queue{source};
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::optional<std::size_t> distance(const Graph& g, Vertex u, Vertex v) {
  if (u >= g.order() || v >= g.order()) {
    throw std::out_of_range("distance: vertex out of range");
  }
  if (u == v) return 0;
  // Early-exit BFS; most callers ask about nearby pairs in large graphs.
  std::vector<std::size_t> dist(g.order(), kUnreachable);
  std::vector<Vertex> queue{u};
  dist[u] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex a = queue[head];
    for (Vertex w : g.neighbors(a)) {
      if (dist[w] != kUnreachable) continue;
      dist[w] = dist[a] + 1;
      if (w == v) return dist[w];
      queue.push_back(w);
    }
  }
  return std::nullopt;
}

std::vector<std::vector<Vertex>> components(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp{s};
    seen[s] = true;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      for (Vertex w : g.neighbors(comp[head])) {
        if (!seen[w]) {
          seen[w] = true;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  const auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](std::size_t d) { return d == kUnreachable; });
}

bool is_forest(const Graph& g) {
  return g.size() + components(g).size() == g.order();
}

bool is_tree(const Graph& g) {
  return g.order() > 0 && g.size() + 1 == g.order() && is_connected(g);
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<Vertex> index(g.order(), RootedTree::kNoParent);
  for (std::size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (Vertex w : g.neighbors(vertices[i])) {
      const Vertex j = index[w];
      if (j != RootedTree::kNoParent && i < j) edges.emplace_back(static_cast<Vertex>(i), j);
    }
  }
  return Graph(vertices.size(), edges);
}

Labelling::Labelling(std::vector<double> values) : values_(std::move(values)) {
  const std::size_t n = values_.size();
  for (double x : values_) {
    if (!(x >= 0.0 && x < 1.0)) throw std::invalid_argument("label outside [0, 1)");
  }
  std::vector<std::pair<double, Vertex>> keyed(n);
  for (std::size_t v = 0; v < n; ++v) keyed[v] = {values_[v], static_cast<Vertex>(v)};
  std::sort(keyed.begin(), keyed.end());
  order_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0 && keyed[i - 1].first == keyed[i].first) {
      throw std::invalid_argument("tied labels at vertices " + std::to_string(keyed[i - 1].second) +
                                  " and " + std::to_string(keyed[i].second));
    }
    order_[i] = keyed[i].second;
  }
}

Labelling Labelling::from_order(std::span<const Vertex> order) {
  const std::size_t n = order.size();
  std::vector<double> values(n, -1.0);
  for (std::size_t i = 0; i < n; ++i) {
    if (order[i] >= n || values[order[i]] >= 0.0) {
      throw std::invalid_argument("from_order: not a permutation");
    }
    values[order[i]] = static_cast<double>(i) / static_cast<double>(n);
  }
  Labelling lab;
  lab.values_ = std::move(values);
  lab.order_.assign(order.begin(), order.end());
  return lab;
}

Labelling sample_labelling(std::size_t n, Rng& rng) {
  std::vector<double> values(n);
  for (auto& x : values) x = rng.uniform();
  for (;;) {
    std::vector<std::pair<double, Vertex>> keyed(n);
    for (std::size_t v = 0; v < n; ++v) keyed[v] = {values[v], static_cast<Vertex>(v)};
    std::sort(keyed.begin(), keyed.end());
    bool collided = false;
    for (std::size_t i = 1; i < n; ++i) {
      if (keyed[i - 1].first == keyed[i].first) {
        values[keyed[i].second] = rng.uniform();
        collided = true;
      }
    }
    if (!collided) {
      std::vector<Vertex> order(n);
      for (std::size_t i = 0; i < n; ++i) order[i] = keyed[i].second;
      return Labelling(std::move(values), std::move(order));
    }
  }
}

RootedTree root_tree(const Graph& tree, Vertex root) {
  if (!is_tree(tree)) throw std::invalid_argument("root_tree: input is not a tree");
  const std::size_t n = tree.order();
  RootedTree rt;
  rt.root = root;
  rt.parent.assign(n, RootedTree::kNoParent);
  rt.children.assign(n, {});
  std::vector<bool> seen(n, false);
  std::vector<Vertex> queue{root};
  seen[root] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    for (Vertex w : tree.neighbors(u)) {
      if (seen[w]) continue;
      seen[w] = true;
      rt.parent[w] = u;
      rt.children[u].push_back(w);
      queue.push_back(w);
    }
  }
  return rt;
}

std::vector<Vertex> tree_centers(const Graph& tree) {
  const std::size_t n = tree.order();
  if (n <= 2) {
    std::vector<Vertex> all(n);
    std::iota(all.begin(), all.end(), Vertex{0});
    return all;
  }
  std::vector<std::size_t> deg(n);
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = tree.degree(v);
    if (deg[v] <= 1) layer.push_back(v);
  }
  std::size_t remaining = n;
  while (remaining > 2) {
    remaining -= layer.size();
    std::vector<Vertex> next;
    for (Vertex leaf : layer) {
      for (Vertex w : tree.neighbors(leaf)) {
        if (--deg[w] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

std::string rooted_code(const RootedTree& tree, Vertex root) {
  // Post-order over the subtree at `root` without recursion.
  std::vector<Vertex> pre{root};
  for (std::size_t i = 0; i < pre.size(); ++i) {
    for (Vertex c : tree.children[pre[i]]) pre.push_back(c);
  }
  std::vector<std::string> code(tree.order());
  std::vector<std::string> parts;
  for (auto it = pre.rbegin(); it != pre.rend(); ++it) {
    const Vertex v = *it;
    parts.clear();
    for (Vertex c : tree.children[v]) parts.push_back(std::move(code[c]));
    std::sort(parts.begin(), parts.end());
    std::string s = "(";
    for (const auto& p : parts) s += p;
    s += ')';
    code[v] = std::move(s);
  }
  return std::move(code[root]);
}

CanonicalCode canonical_code(const Graph& tree) {
  if (!is_tree(tree)) throw std::invalid_argument("canonical_code: input is not a tree");
  const auto centers = tree_centers(tree);
  std::string best;
  for (Vertex c : centers) {
    auto code = rooted_code(root_tree(tree, c), c);
    if (best.empty() || code < best) best = std::move(code);
  }
  return CanonicalCode{std::move(best)};
}

Graph read_edge_list(std::istream& in) {
  std::string line;
  auto next_line = [&](std::string& out) {
    while (std::getline(in, out)) {
      const auto pos = out.find_first_not_of(" \t\r");
      if (pos == std::string::npos || out[pos] == '#') continue;
      return true;
    }
    return false;
  };
  if (!next_line(line)) throw std::runtime_error("edge list: missing header");
  std::size_t n = 0;
  std::size_t m = 0;
  {
    std::istringstream header(line);
    if (!(header >> n >> m)) throw std::runtime_error("edge list: malformed header '" + line + "'");
  }
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (!next_line(line)) throw std::runtime_error("edge list: expected " + std::to_string(m) + " edges");
    std::istringstream row(line);
    long long u = -1;
    long long v = -1;
    if (!(row >> u >> v) || u < 0 || v < 0) {
      throw std::runtime_error("edge list: malformed edge '" + line + "'");
    }
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return Graph(n, edges);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < n; ++i) edges.emplace_back(static_cast<Vertex>(i - 1), static_cast<Vertex>(i));
  return Graph(n, edges);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
  }
  return Graph(n, edges);
}

Graph star_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < n; ++i) edges.emplace_back(0, static_cast<Vertex>(i));
  return Graph(n, edges);
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  }
  return Graph(n, edges);
}

Graph empty_graph(std::size_t n) { return Graph(n, std::span<const Edge>{}); }

}  // namespace gmis
