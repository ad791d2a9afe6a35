#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "tg/game.hpp"
#include "tg/graph.hpp"
#include "tg/rational.hpp"

namespace tg {

struct AlphaResult {
  Rational alpha;
  /// Attains alpha with p(W) >= 1 on every winning coalition.
  PayoffVector payoff;
  /// Constraints tight at `payoff`: p(L) = alpha, resp. p(W) = 1.
  std::vector<Coalition> binding_losing;
  std::vector<Coalition> binding_winning;
  /// Size of the final LP (winning + losing rows) and, for constraint
  /// generation, the number of separation rounds.
  std::size_t lp_rows = 0;
  std::size_t rounds = 0;
};

/// min a s.t. p(W) >= 1 for `winners`, p(L) <= a for `losers`, p, a >= 0.
/// The LP is solved through its dual (few rows, one column per coalition);
/// both the primal payoff and the dual multipliers are checked, so the
/// returned value is certified from above and below.
AlphaResult solve_alpha_lp(int players, std::span<const Coalition> winners,
                           std::span<const Coalition> losers);

/// Exact alpha: preprocess, then minimal winners against maximal losing
/// coalitions (maximal independent sets for graphic games).
AlphaResult alpha_exact(const SimpleGame& game, const EnumerationLimits& limits = {});

/// Independent oracle over every winning and every losing coalition;
/// refuses games with more than 12 players.
AlphaResult alpha_brute(const SimpleGame& game);
inline constexpr int kBruteMaxPlayers = 12;

/// Constraint generation for the graphic game of a bipartite graph, with
/// maximum-weight independent sets as the separation oracle.
AlphaResult alpha_bipartite_cg(const BipartiteGraph& g);

}  // namespace tg
