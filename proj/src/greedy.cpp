#include "gmis/greedy.hpp"

#include <algorithm>
#include <stdexcept>

namespace gmis {

namespace {

void check_labelling(const Graph& g, const Labelling& lab) {
  if (lab.size() != g.order()) {
    throw std::invalid_argument("labelling has " + std::to_string(lab.size()) + " labels for " +
                                std::to_string(g.order()) + " vertices");
  }
}

}  // namespace

GreedyResult run_greedy(const Graph& g, const Labelling& lab) {
  check_labelling(g, lab);
  GreedyResult res;
  res.occupied.assign(g.order(), false);
  // blocked[v]: some earlier neighbour of v is occupied.
  std::vector<bool> blocked(g.order(), false);
  for (Vertex v : lab.order()) {
    if (blocked[v]) continue;
    res.occupied[v] = true;
    ++res.mis_size;
    for (Vertex w : g.neighbors(v)) blocked[w] = true;
  }
  return res;
}

GreedyResult run_parallel(const Graph& g, const Labelling& lab) {
  check_labelling(g, lab);
  const std::size_t n = g.order();
  GreedyResult res;
  res.occupied.assign(n, false);
  res.rounds = 0;

  std::vector<bool> alive(n, true);
  std::vector<std::size_t> stamp(n, 0);
  std::vector<Vertex> candidates(n);
  for (std::size_t v = 0; v < n; ++v) candidates[v] = static_cast<Vertex>(v);
  std::vector<Vertex> sinks;
  std::vector<Vertex> removed;

  // Only vertices next to a deletion can turn into sinks, so each round
  // re-examines just those.
  while (!candidates.empty()) {
    const std::size_t round = *res.rounds + 1;
    sinks.clear();
    for (Vertex v : candidates) {
      if (!alive[v] || stamp[v] == round) continue;
      stamp[v] = round;
      bool sink = true;
      for (Vertex w : g.neighbors(v)) {
        if (alive[w] && lab[w] < lab[v]) {
          sink = false;
          break;
        }
      }
      if (sink) sinks.push_back(v);
    }
    if (sinks.empty()) break;
    res.rounds = round;

    removed.clear();
    for (Vertex v : sinks) {
      res.occupied[v] = true;
      ++res.mis_size;
      alive[v] = false;
      removed.push_back(v);
    }
    for (Vertex v : sinks) {
      for (Vertex w : g.neighbors(v)) {
        if (alive[w]) {
          alive[w] = false;
          removed.push_back(w);
        }
      }
    }
    candidates.clear();
    for (Vertex v : removed) {
      for (Vertex w : g.neighbors(v)) {
        if (alive[w]) candidates.push_back(w);
      }
    }
  }
  return res;
}

bool is_maximal_independent(const Graph& g, const std::vector<bool>& occupied) {
  if (occupied.size() != g.order()) return false;
  for (Vertex v = 0; v < g.order(); ++v) {
    bool has_occupied_neighbor = false;
    for (Vertex w : g.neighbors(v)) {
      if (occupied[w]) {
        if (occupied[v]) return false;
        has_occupied_neighbor = true;
      }
    }
    if (!occupied[v] && !has_occupied_neighbor) return false;
  }
  return true;
}

std::vector<Vertex> past_set(const Graph& g, const Labelling& lab, Vertex v) {
  check_labelling(g, lab);
  std::vector<bool> seen(g.order(), false);
  std::vector<Vertex> out{v};
  seen[v] = true;
  for (std::size_t head = 0; head < out.size(); ++head) {
    const Vertex u = out[head];
    for (Vertex w : g.neighbors(u)) {
      if (!seen[w] && lab[w] < lab[u]) {
        seen[w] = true;
        out.push_back(w);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t longest_decreasing_path_from(const Graph& g, const Labelling& lab, Vertex v) {
  auto past = past_set(g, lab, v);
  std::sort(past.begin(), past.end(), [&](Vertex a, Vertex b) { return lab[a] < lab[b]; });
  // Every decreasing path from v stays inside its past; evaluate the DP there
  // in increasing label order.
  std::vector<std::size_t> index(g.order(), kUnreachable);
  for (std::size_t i = 0; i < past.size(); ++i) index[past[i]] = i;
  std::vector<std::size_t> best(past.size(), 0);
  for (std::size_t i = 0; i < past.size(); ++i) {
    const Vertex u = past[i];
    for (Vertex w : g.neighbors(u)) {
      if (index[w] != kUnreachable && lab[w] < lab[u]) best[i] = std::max(best[i], best[index[w]] + 1);
    }
  }
  return best[index[v]];
}

std::vector<std::size_t> longest_decreasing_paths(const Graph& g, const Labelling& lab) {
  check_labelling(g, lab);
  std::vector<std::size_t> best(g.order(), 0);
  for (Vertex u : lab.order()) {
    for (Vertex w : g.neighbors(u)) {
      if (lab[w] < lab[u]) best[u] = std::max(best[u], best[w] + 1);
    }
  }
  return best;
}

PathCount count_paths_from(const Graph& g, Vertex v, std::size_t r, std::uint64_t cap) {
  PathCount out;
  if (r == 0) return out;
  std::vector<bool> on_path(g.order(), false);
  struct Frame {
    Vertex vertex;
    std::size_t next;  // index into neighbors(vertex)
  };
  std::vector<Frame> stack{{v, 0}};
  on_path[v] = true;
  while (!stack.empty()) {
    auto& top = stack.back();
    const auto nb = g.neighbors(top.vertex);
    if (top.next == nb.size()) {
      on_path[top.vertex] = false;
      stack.pop_back();
      continue;
    }
    const Vertex w = nb[top.next++];
    if (on_path[w]) continue;
    if (++out.count > cap) {
      out.overflow = true;
      return out;
    }
    // stack.size() edges lead to w; extend only while below r.
    if (stack.size() < r) {
      on_path[w] = true;
      stack.push_back({w, 0});
    }
  }
  return out;
}

}  // namespace gmis
