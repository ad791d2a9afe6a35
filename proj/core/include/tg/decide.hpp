#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tg/graph.hpp"
#include "tg/rational.hpp"

namespace tg {

struct Decision {
  bool yes = false;
  /// Number of induced pairs searched for.
  int k = 0;
  /// k pairwise non-adjacent edges inducing a matching, when found.
  std::optional<std::vector<Edge>> witness;
  /// Exact alpha, when the LP path ran.
  std::optional<Rational> alpha;
  std::size_t maximal_independent_sets = 0;
};

inline constexpr int kDecideMaxK = 10;

/// Is alpha of the graphic game <= a (or < a with strict)? An induced kP2
/// with k/2 > a (k/2 >= a when strict) answers no; otherwise the graph is
/// kP2-free and the LP over its maximal independent sets is solved.
Decision decide_alpha_le(const Graph& g, const Rational& a, bool strict = false);

}  // namespace tg
