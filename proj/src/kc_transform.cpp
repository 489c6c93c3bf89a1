#include "gmis/kc_transform.hpp"

#include <algorithm>
#include <stdexcept>

#include "gmis/generators.hpp"
#include "gmis/parallel.hpp"

namespace gmis {

namespace {

std::string edge_string(const Graph& g) {
  std::string s;
  for (const auto& [u, v] : g.edges()) {
    if (!s.empty()) s += ' ';
    s += std::to_string(u) + "-" + std::to_string(v);
  }
  return s;
}

std::vector<Vertex> reachable_without(const std::vector<std::vector<Vertex>>& adj, Vertex start) {
  std::vector<bool> seen(adj.size(), false);
  std::vector<Vertex> out{start};
  seen[start] = true;
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (Vertex w : adj[out[head]]) {
      if (!seen[w]) {
        seen[w] = true;
        out.push_back(w);
      }
    }
  }
  return out;
}

}  // namespace

std::vector<BarePath> find_bare_paths(const Graph& tree) {
  if (!is_tree(tree)) throw std::invalid_argument("find_bare_paths: input is not a tree");
  std::vector<BarePath> out;
  for (Vertex x = 0; x < tree.order(); ++x) {
    for (Vertex first : tree.neighbors(x)) {
      // Walk away from x while the current vertex could serve as interior.
      Vertex prev = x;
      Vertex cur = first;
      std::vector<Vertex> interior;
      for (;;) {
        if (x < cur) out.push_back({x, cur, interior});
        if (tree.degree(cur) != 2) break;
        const auto nb = tree.neighbors(cur);
        const Vertex next = nb[0] == prev ? nb[1] : nb[0];
        interior.push_back(cur);
        prev = cur;
        cur = next;
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const BarePath& l, const BarePath& r) {
    return std::pair(l.x, l.y) < std::pair(r.x, r.y);
  });
  return out;
}

BarePath bare_path(const Graph& tree, Vertex x, Vertex y) {
  if (x == y) throw std::invalid_argument("bare_path: endpoints coincide");
  if (x >= tree.order() || y >= tree.order()) throw std::invalid_argument("bare_path: vertex out of range");
  const auto rooted = root_tree(tree, y);
  BarePath path{x, y, {}};
  for (Vertex v = rooted.parent[x]; v != y; v = rooted.parent[v]) {
    if (tree.degree(v) != 2) {
      throw std::invalid_argument("path " + std::to_string(x) + "-" + std::to_string(y) +
                                  " is not bare (vertex " + std::to_string(v) + " has degree " +
                                  std::to_string(tree.degree(v)) + ")");
    }
    path.interior.push_back(v);
  }
  return path;
}

Graph kc(const Graph& tree, Vertex x, Vertex y) {
  const auto path = bare_path(tree, x, y);
  const Vertex z = path.interior.empty() ? x : path.interior.back();
  auto edges = tree.edges();
  for (auto& [u, v] : edges) {
    if (u == y && v != z) u = x;
    else if (v == y && u != z) v = x;
  }
  Graph out(tree.order(), edges);
  if (!is_tree(out)) throw std::logic_error("kc produced a non-tree");
  return out;
}

std::size_t leaf_count(const Graph& tree) {
  std::size_t leaves = 0;
  for (Vertex v = 0; v < tree.order(); ++v) leaves += tree.degree(v) == 1 ? 1 : 0;
  return leaves;
}

bool is_proper(const Graph& tree, Vertex x, Vertex y) {
  bare_path(tree, x, y);
  return tree.degree(x) != 1 && tree.degree(y) != 1;
}

KcPartition kc_partition(const Graph& tree, Vertex x, Vertex y) {
  const auto path = bare_path(tree, x, y);
  KcPartition part;
  part.p.push_back(x);
  part.p.insert(part.p.end(), path.interior.begin(), path.interior.end());
  part.p.push_back(y);

  std::vector<bool> on_path(tree.order(), false);
  for (Vertex v : part.p) on_path[v] = true;
  // Drop the path edges; x and y keep only their off-path neighbours.
  std::vector<std::vector<Vertex>> adj(tree.order());
  for (const auto& [u, v] : tree.edges()) {
    if (on_path[u] && on_path[v]) continue;
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  part.a = reachable_without(adj, x);
  part.b = reachable_without(adj, y);
  part.a.erase(part.a.begin());
  part.b.erase(part.b.begin());
  std::sort(part.a.begin(), part.a.end());
  std::sort(part.b.begin(), part.b.end());
  std::sort(part.p.begin(), part.p.end());
  return part;
}

namespace {

struct TreeOutcome {
  std::vector<KcRecord> records;
  std::vector<KcViolation> violations;
  std::size_t proper = 0;
};

std::vector<Rational> nu_per_vertex(const Graph& tree) {
  std::vector<Rational> out(tree.order());
  for (Vertex v = 0; v < tree.order(); ++v) out[v] = nu_v(tree, v);
  return out;
}

void check_transformation(const Graph& tree, const std::vector<Rational>& nu_before, const std::string& code,
                          Vertex x, Vertex y, TreeOutcome& out) {
  const Graph after = kc(tree, x, y);
  const auto nu_after = nu_per_vertex(after);
  const auto part = kc_partition(tree, x, y);
  auto violation = [&](std::string kind, std::string detail) {
    out.violations.push_back({std::move(kind), edge_string(tree), x, y, std::move(detail)});
  };

  Rational total_before = 0;
  Rational total_after = 0;
  for (Vertex v = 0; v < tree.order(); ++v) {
    total_before += nu_before[v];
    total_after += nu_after[v];
  }
  if (total_after < total_before) {
    violation("nu-total", "nu(T)=" + to_string(total_before) + " nu(T')=" + to_string(total_after));
  }
  for (const auto* side : {&part.a, &part.b}) {
    for (Vertex v : *side) {
      if (nu_after[v] < nu_before[v]) {
        violation("nu-vertex", "v=" + std::to_string(v) + " nu_v(T)=" + to_string(nu_before[v]) +
                                   " nu_v(T')=" + to_string(nu_after[v]));
      }
    }
  }
  Rational path_before = 0;
  Rational path_after = 0;
  for (Vertex v : part.p) {
    path_before += nu_before[v];
    path_after += nu_after[v];
  }
  if (path_after < path_before) {
    violation("nu-path", "sum_P nu_v(T)=" + to_string(path_before) + " sum_P nu_v(T')=" + to_string(path_after));
  }

  const bool proper = is_proper(tree, x, y);
  const std::size_t leaves_before = leaf_count(tree);
  const std::size_t leaves_after = leaf_count(after);
  if (proper && leaves_after != leaves_before + 1) {
    violation("grading", "proper transform changed leaves " + std::to_string(leaves_before) + " -> " +
                             std::to_string(leaves_after));
  }
  if (!proper && canonical_code(after) != canonical_code(tree)) {
    violation("grading", "improper transform produced a non-isomorphic tree");
  }
  out.proper += proper ? 1 : 0;
  out.records.push_back({tree.order(), code, x, y, proper, leaves_before, leaves_after, total_before, total_after});
}

}  // namespace

KcReport verify_kc_nu(std::size_t n_max, unsigned threads) {
  if (n_max > kMaxFreeTreeOrder) {
    throw std::invalid_argument("verify_kc_nu: n_max must be at most " + std::to_string(kMaxFreeTreeOrder));
  }
  alpha_table(n_max);
  std::vector<const Graph*> trees;
  for (std::size_t n = 2; n <= n_max; ++n) {
    for (const auto& t : all_free_trees(n)) trees.push_back(&t);
  }
  std::vector<TreeOutcome> outcomes(trees.size());
  parallel_for(trees.size(), threads, [&](std::size_t i) {
    const Graph& tree = *trees[i];
    const auto code = canonical_code(tree).bytes;
    const auto nu_before = nu_per_vertex(tree);
    for (const auto& path : find_bare_paths(tree)) {
      check_transformation(tree, nu_before, code, path.x, path.y, outcomes[i]);
      check_transformation(tree, nu_before, code, path.y, path.x, outcomes[i]);
    }
  });

  KcReport report;
  report.trees = trees.size();
  for (auto& o : outcomes) {
    report.transformations += o.records.size();
    report.proper += o.proper;
    std::move(o.records.begin(), o.records.end(), std::back_inserter(report.records));
    std::move(o.violations.begin(), o.violations.end(), std::back_inserter(report.violations));
  }
  return report;
}

PathMinimumReport verify_path_minimum(std::size_t n) {
  PathMinimumReport report;
  report.n = n;
  const auto path_code = canonical_code(path_graph(n)).bytes;
  for (const auto& tree : all_free_trees(n)) {
    TreeValueRow row;
    row.code = canonical_code(tree).bytes;
    row.leaves = leaf_count(tree);
    row.is_path = row.code == path_code;
    row.value = exact_expected_mis(tree);
    report.rows.push_back(std::move(row));
  }
  std::sort(report.rows.begin(), report.rows.end(), [](const TreeValueRow& l, const TreeValueRow& r) {
    if (l.value != r.value) return l.value < r.value;
    return l.code < r.code;
  });
  const Rational& minimum = report.rows.front().value;
  const auto attaining = std::count_if(report.rows.begin(), report.rows.end(),
                                       [&](const TreeValueRow& r) { return r.value == minimum; });
  const auto path_row = std::find_if(report.rows.begin(), report.rows.end(),
                                     [](const TreeValueRow& r) { return r.is_path; });
  report.path_is_minimum = path_row != report.rows.end() && path_row->value == minimum;
  report.unique_minimum = attaining == 1;
  return report;
}

}  // namespace gmis
