#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gmis/graph.hpp"
#include "gmis/rng.hpp"

namespace gmis {

enum class Family {
  path,
  cycle,
  star,
  gnp,
  regular,
  uniform_tree,
  functional_mapping,
  functional_permutation,
  d_ary_truncated,
};

std::string_view family_name(Family f);
/// Throws std::invalid_argument for unknown names.
Family parse_family(std::string_view name);
bool is_random_family(Family f);

struct GeneratorSpec {
  Family family = Family::path;
  std::size_t n = 0;
  double lambda = 1.0;   // gnp: mean degree, edge probability lambda/n
  std::size_t d = 2;     // regular: degree; d_ary_truncated: arity
  std::size_t depth = 0; // d_ary_truncated: levels below the root
  std::size_t max_retries = 1000;  // configuration-model rejection cap

  /// Order of the generated graph (derived from arity and depth for
  /// d_ary_truncated).
  std::size_t order() const;
  /// Family parameter as printed in CSV output ("" when the family has none).
  std::string param_string() const;
};

/// Throws std::invalid_argument when parameters are outside the family's
/// valid range.
void check_spec(const GeneratorSpec& spec);

/// Samples one graph. Deterministic families ignore `rng`. Throws
/// std::runtime_error when the configuration model exceeds its retry cap.
Graph generate(const GeneratorSpec& spec, Rng& rng);

/// Prüfer bijection between sequences over {0..n-1} of length n-2 and
/// labelled trees on n >= 2 vertices.
Graph prufer_decode(std::span<const Vertex> seq, std::size_t n);
std::vector<Vertex> prufer_encode(const Graph& tree);

inline constexpr std::size_t kMaxFreeTreeOrder = 9;

/// One representative per isomorphism class of free trees on n vertices,
/// sorted by canonical code. 1 <= n <= 9. Results are cached per n.
const std::vector<Graph>& all_free_trees(std::size_t n);

}  // namespace gmis
