#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "tg/game.hpp"
#include "tg/graph.hpp"
#include "tg/rational.hpp"
#include "tg/well_spread.hpp"

namespace tg {

enum class Normalization {
  /// p(W) >= 1 on minimal winners; bound caps p(L) on losing coalitions.
  min_winning_ge_1,
  /// bound caps max p(L) / min p(W).
  ratio,
};

std::string_view to_string(Normalization n);
Normalization parse_normalization(std::string_view text);

struct Certificate {
  std::string scheme;
  PayoffVector payoff;
  Rational bound;
  Normalization normalization = Normalization::min_winning_ge_1;
};

/// p = 1 - lambda_i on A_i and lambda_i on B_i over the well-spread
/// decomposition; bound |V|/4.
Certificate payoff_bipartite_quarter(const BipartiteGraph& g);

/// Gallai-Edmonds + contraction of odd components + the bipartite payoff;
/// everything outside the contracted graph's real vertices gets 1/2.
/// Bound n/4. Requires no isolated vertices.
Certificate payoff_graph_quarter(const Graph& g);

/// Games without size-3 minimal winners: 1/(4(1-lambda_i)) on B_i,
/// the complement on A_i, 1/4 on isolated players. Bound n/4.
Certificate payoff_no_size3(const SimpleGame& game);

/// Games whose minimal winners all have size 3: p = 1/3, or the indicator
/// of N \ L for a losing L with |L| > 3n/4.
Certificate payoff_all_size3(const SimpleGame& game);

/// Ingredients of the 3/7 + 4/7 mix, on the original players.
struct TwoSevenths {
  PayoffVector p_bar;
  PayoffVector p_tilde;
  /// Losing coalition maximising p_bar (first in canonical order).
  Coalition l_bar;
  Certificate certificate;
};

TwoSevenths two_sevenths_construction(const SimpleGame& game);
/// Any game; bound 2n/7.
Certificate payoff_two_sevenths(const SimpleGame& game);

/// p_i = 1/s_i along the desirability order, where s_i is the smallest
/// winning coalition among the players from position i on, computed on the
/// preprocessed game. Dummies get 0; singleton winners get the larger of
/// the weakest winner's value and the top payoff. Ratio certificate whose
/// bound is the exact ratio attained.
Certificate payoff_complete(const SimpleGame& game, const DesirabilityOrder& order);

/// ratio <= sqrt(n) ln n, evaluated in floating point: the ratio is rounded
/// toward zero and the bound is widened by a relative 2^-40.
struct SqrtLogCheck {
  bool within = false;
  double ratio = 0;
  double bound = 0;
};

SqrtLogCheck check_sqrt_n_ln_n(const Rational& ratio, int n);

struct Verdict {
  bool pass = false;
  std::string reason;
  std::optional<Coalition> witness;
  /// Largest p(L) over losing coalitions and smallest p(W) over winners.
  Rational max_losing;
  Rational min_winning;
};

Verdict verify_certificate(const SimpleGame& game, const Certificate& cert,
                           const EnumerationLimits& limits = {});

}  // namespace tg
