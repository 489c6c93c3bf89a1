#include "gmis/generators.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <mutex>
#include <stdexcept>

namespace gmis {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 9> kFamilyNames{{
    {Family::path, "path"},
    {Family::cycle, "cycle"},
    {Family::star, "star"},
    {Family::gnp, "gnp"},
    {Family::regular, "regular"},
    {Family::uniform_tree, "uniform_tree"},
    {Family::functional_mapping, "functional_mapping"},
    {Family::functional_permutation, "functional_permutation"},
    {Family::d_ary_truncated, "d_ary_truncated"},
}};

Graph gnp_graph(std::size_t n, double p, Rng& rng) {
  // Geometric skipping over the pairs (v, w), w < v (Batagelj-Brandes).
  std::vector<Edge> edges;
  if (n < 2 || p <= 0.0) return Graph(n, edges);
  if (p >= 1.0) return complete_graph(n);
  edges.reserve(static_cast<std::size_t>(p * static_cast<double>(n) * static_cast<double>(n - 1) / 2.0 * 1.1) + 16);
  const double log_q = std::log1p(-p);
  std::int64_t v = 1;
  std::int64_t w = -1;
  const auto nn = static_cast<std::int64_t>(n);
  while (v < nn) {
    const double r = rng.uniform();
    w += 1 + static_cast<std::int64_t>(std::floor(std::log1p(-r) / log_q));
    while (w >= v && v < nn) {
      w -= v;
      ++v;
    }
    if (v < nn) edges.emplace_back(static_cast<Vertex>(w), static_cast<Vertex>(v));
  }
  return Graph(n, edges);
}

Graph configuration_model(std::size_t n, std::size_t d, std::size_t max_retries, Rng& rng) {
  std::vector<Vertex> stubs(n * d);
  std::vector<Edge> edges(n * d / 2);
  std::vector<std::uint64_t> keys(edges.size());
  for (std::size_t attempt = 0; attempt < max_retries; ++attempt) {
    for (std::size_t i = 0; i < stubs.size(); ++i) stubs[i] = static_cast<Vertex>(i / d);
    rng.shuffle(stubs);
    bool simple = true;
    for (std::size_t i = 0; i < edges.size() && simple; ++i) {
      Vertex u = stubs[2 * i];
      Vertex v = stubs[2 * i + 1];
      if (u == v) simple = false;
      if (u > v) std::swap(u, v);
      edges[i] = {u, v};
      keys[i] = (static_cast<std::uint64_t>(u) << 32) | v;
    }
    if (!simple) continue;
    std::sort(keys.begin(), keys.end());
    if (std::adjacent_find(keys.begin(), keys.end()) != keys.end()) continue;
    return Graph(n, edges);
  }
  throw std::runtime_error("configuration model: no simple pairing after " + std::to_string(max_retries) +
                           " attempts");
}

Graph uniform_tree(std::size_t n, Rng& rng) {
  if (n <= 1) return empty_graph(n);
  std::vector<Vertex> seq(n - 2);
  for (auto& s : seq) s = static_cast<Vertex>(rng.below(n));
  return prufer_decode(seq, n);
}

Graph functional_graph(std::size_t n, bool permutation, Rng& rng) {
  std::vector<Vertex> image(n);
  if (permutation) {
    for (std::size_t i = 0; i < n; ++i) image[i] = static_cast<Vertex>(i);
    rng.shuffle(image);
  } else {
    for (auto& f : image) f = static_cast<Vertex>(rng.below(n));
  }
  std::vector<Edge> edges(n);
  for (std::size_t i = 0; i < n; ++i) edges[i] = {static_cast<Vertex>(i), image[i]};
  return Graph::simplified(n, edges);
}

Graph d_ary_tree(std::size_t d, std::size_t depth) {
  GeneratorSpec spec;
  spec.family = Family::d_ary_truncated;
  spec.d = d;
  spec.depth = depth;
  const std::size_t n = spec.order();
  std::vector<Edge> edges;
  edges.reserve(n > 0 ? n - 1 : 0);
  for (std::size_t v = 1; v < n; ++v) {
    edges.emplace_back(static_cast<Vertex>((v - 1) / d), static_cast<Vertex>(v));
  }
  return Graph(n, edges);
}

}  // namespace

std::string_view family_name(Family f) {
  for (const auto& [fam, name] : kFamilyNames) {
    if (fam == f) return name;
  }
  return "unknown";
}

Family parse_family(std::string_view name) {
  for (const auto& [fam, fam_name] : kFamilyNames) {
    if (fam_name == name) return fam;
  }
  throw std::invalid_argument("unknown graph family '" + std::string(name) + "'");
}

bool is_random_family(Family f) {
  switch (f) {
    case Family::path:
    case Family::cycle:
    case Family::star:
    case Family::d_ary_truncated:
      return false;
    default:
      return true;
  }
}

std::size_t GeneratorSpec::order() const {
  if (family != Family::d_ary_truncated) return n;
  if (d == 1) return depth + 1;
  std::size_t total = 0;
  std::size_t level = 1;
  for (std::size_t i = 0; i <= depth; ++i) {
    total += level;
    level *= d;
  }
  return total;
}

std::string GeneratorSpec::param_string() const {
  switch (family) {
    case Family::gnp: {
      char buf[32];
      std::snprintf(buf, sizeof buf, "lambda=%g", lambda);
      return buf;
    }
    case Family::regular:
      return "d=" + std::to_string(d);
    case Family::d_ary_truncated:
      return "d=" + std::to_string(d) + ";depth=" + std::to_string(depth);
    default:
      return "";
  }
}

void check_spec(const GeneratorSpec& spec) {
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument(std::string(family_name(spec.family)) + ": " + why);
  };
  switch (spec.family) {
    case Family::cycle:
      if (spec.n < 3) fail("n must be at least 3");
      break;
    case Family::gnp:
      if (!(spec.lambda > 0.0) || !std::isfinite(spec.lambda)) fail("lambda must be positive");
      if (spec.n > 0 && spec.lambda > static_cast<double>(spec.n)) fail("lambda must not exceed n");
      break;
    case Family::regular:
      if (spec.d < 1) fail("d must be at least 1");
      if (spec.d >= spec.n) fail("d must be smaller than n");
      if ((spec.d * spec.n) % 2 != 0) fail("d*n must be even");
      if (spec.max_retries == 0) fail("retry cap must be positive");
      break;
    case Family::d_ary_truncated:
      if (spec.d < 1) fail("d must be at least 1");
      if (spec.depth > 64) fail("depth too large");
      break;
    default:
      break;
  }
  if (spec.order() > std::numeric_limits<Vertex>::max() / 2) fail("n too large");
}

Graph generate(const GeneratorSpec& spec, Rng& rng) {
  check_spec(spec);
  switch (spec.family) {
    case Family::path:
      return path_graph(spec.n);
    case Family::cycle:
      return cycle_graph(spec.n);
    case Family::star:
      return star_graph(spec.n);
    case Family::gnp:
      return gnp_graph(spec.n, spec.lambda / static_cast<double>(spec.n), rng);
    case Family::regular:
      return configuration_model(spec.n, spec.d, spec.max_retries, rng);
    case Family::uniform_tree:
      return uniform_tree(spec.n, rng);
    case Family::functional_mapping:
      return functional_graph(spec.n, false, rng);
    case Family::functional_permutation:
      return functional_graph(spec.n, true, rng);
    case Family::d_ary_truncated:
      return d_ary_tree(spec.d, spec.depth);
  }
  throw std::logic_error("unhandled family");
}

Graph prufer_decode(std::span<const Vertex> seq, std::size_t n) {
  if (n < 2) throw std::invalid_argument("prufer_decode: n must be at least 2");
  if (seq.size() != n - 2) throw std::invalid_argument("prufer_decode: sequence length must be n-2");
  std::vector<std::size_t> degree(n, 1);
  for (Vertex s : seq) {
    if (s >= n) throw std::invalid_argument("prufer_decode: symbol out of range");
    ++degree[s];
  }
  // Linear-time decoding: `ptr` scans for the smallest leaf, `leaf` follows
  // newly created leaves smaller than `ptr`.
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  std::size_t ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  std::size_t leaf = ptr;
  for (Vertex v : seq) {
    edges.emplace_back(static_cast<Vertex>(leaf), v);
    if (--degree[v] == 1 && v < ptr) {
      leaf = v;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  edges.emplace_back(static_cast<Vertex>(leaf), static_cast<Vertex>(n - 1));
  return Graph(n, edges);
}

std::vector<Vertex> prufer_encode(const Graph& tree) {
  const std::size_t n = tree.order();
  if (n < 2 || !is_tree(tree)) throw std::invalid_argument("prufer_encode: input is not a tree on >= 2 vertices");
  // Root at n-1 so every other vertex has a parent.
  const auto rt = root_tree(tree, static_cast<Vertex>(n - 1));
  std::vector<std::size_t> degree(n);
  for (Vertex v = 0; v < n; ++v) degree[v] = tree.degree(v);
  std::vector<Vertex> seq;
  seq.reserve(n - 2);
  std::size_t ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  std::size_t leaf = ptr;
  for (std::size_t i = 0; i + 2 < n; ++i) {
    const Vertex p = rt.parent[leaf];
    seq.push_back(p);
    if (--degree[p] == 1 && p < ptr) {
      leaf = p;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  return seq;
}

const std::vector<Graph>& all_free_trees(std::size_t n) {
  if (n < 1 || n > kMaxFreeTreeOrder) {
    throw std::invalid_argument("all_free_trees: n must be in [1, " + std::to_string(kMaxFreeTreeOrder) + "]");
  }
  static std::mutex mutex;
  static std::map<std::size_t, std::vector<Graph>> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(n); it != cache.end()) return it->second;

  std::map<CanonicalCode, Graph> reps;
  if (n == 1) {
    reps.emplace(canonical_code(empty_graph(1)), empty_graph(1));
  } else {
    std::vector<Vertex> seq(n - 2, 0);
    for (;;) {
      Graph t = prufer_decode(seq, n);
      reps.try_emplace(canonical_code(t), std::move(t));
      // Odometer increment over {0..n-1}^(n-2).
      std::size_t i = 0;
      while (i < seq.size() && ++seq[i] == n) seq[i++] = 0;
      if (i == seq.size()) break;
    }
  }
  std::vector<Graph> out;
  out.reserve(reps.size());
  for (auto& [code, g] : reps) out.push_back(std::move(g));
  return cache.emplace(n, std::move(out)).first->second;
}

}  // namespace gmis
