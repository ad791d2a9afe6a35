#include "tg/alpha.hpp"

#include <algorithm>
#include <stdexcept>

#include "tg/error.hpp"
#include "tg/lp.hpp"

namespace tg {

AlphaResult solve_alpha_lp(int players, std::span<const Coalition> winners,
                           std::span<const Coalition> losers) {
  const std::size_t nw = winners.size(), nl = losers.size();
  // Dual: max sum y_W  s.t.  sum_{W∋i} y_W - sum_{L∋i} z_L <= 0 for each
  // player i, sum z_L <= 1, y, z >= 0.  Written as a minimisation.
  LinearProgram dual(static_cast<int>(nw + nl));
  for (std::size_t w = 0; w < nw; ++w) dual.objective[w] = -1;
  for (int i = 0; i < players; ++i) {
    std::vector<Rational> row(nw + nl);
    for (std::size_t w = 0; w < nw; ++w) {
      if (winners[w].contains(i)) row[w] = 1;
    }
    for (std::size_t l = 0; l < nl; ++l) {
      if (losers[l].contains(i)) row[nw + l] = -1;
    }
    dual.add(std::move(row), Relation::less_equal, 0);
  }
  {
    std::vector<Rational> row(nw + nl);
    for (std::size_t l = 0; l < nl; ++l) row[nw + l] = 1;
    dual.add(std::move(row), Relation::less_equal, 1);
  }
  const LpSolution sol = solve_lp_exact(dual);
  if (sol.status != LpStatus::optimal) {
    throw std::logic_error("alpha LP dual not optimal: " + std::string(to_string(sol.status)));
  }

  AlphaResult result;
  result.alpha = -sol.objective;
  std::vector<Rational> p(players);
  for (int i = 0; i < players; ++i) p[i] = -sol.duals[i];
  result.payoff = PayoffVector(std::move(p));  // throws on a negative entry
  result.lp_rows = nw + nl;

  // Primal feasibility of the recovered payoff.
  for (Coalition w : winners) {
    const Rational v = result.payoff.value_of(w);
    if (v < 1) throw std::logic_error("recovered payoff misses winner " + to_string(w));
    if (v == 1) result.binding_winning.push_back(w);
  }
  Rational max_losing = 0;
  for (Coalition l : losers) {
    const Rational v = result.payoff.value_of(l);
    if (v > result.alpha) throw std::logic_error("recovered payoff exceeds alpha on " + to_string(l));
    if (v > max_losing) max_losing = v;
  }
  if (max_losing != result.alpha) {
    throw std::logic_error("recovered payoff does not attain alpha");
  }
  for (Coalition l : losers) {
    if (result.payoff.value_of(l) == result.alpha) result.binding_losing.push_back(l);
  }
  // Dual feasibility of the multipliers: a lower bound equal to alpha.
  Rational lower = 0;
  for (std::size_t w = 0; w < nw; ++w) {
    if (sol.x[w] < 0) throw std::logic_error("negative dual multiplier");
    lower += sol.x[w];
  }
  for (std::size_t r = 0; r < dual.constraints.size(); ++r) {
    Rational lhs = 0;
    for (std::size_t c = 0; c < nw + nl; ++c) lhs += dual.constraints[r].coefficients[c] * sol.x[c];
    if (lhs > dual.constraints[r].rhs) throw std::logic_error("dual multipliers infeasible");
  }
  if (lower != result.alpha) throw std::logic_error("duality gap in alpha LP");

  std::sort(result.binding_winning.begin(), result.binding_winning.end());
  std::sort(result.binding_losing.begin(), result.binding_losing.end());
  return result;
}

namespace {

std::vector<Coalition> losing_constraints(const SimpleGame& game, const EnumerationLimits& limits) {
  if (!game.is_graphic()) return maximal_losing(game, limits);
  std::vector<Coalition> out;
  enumerate_mis(pair_graph(game), [&](VertexMask m) {
    out.emplace_back(m);
    if (out.size() > limits.max_coalitions) {
      throw LimitExceeded("more than " + std::to_string(limits.max_coalitions) +
                          " maximal independent sets (raise TG_MAX_COALITIONS)");
    }
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

AlphaResult alpha_exact(const SimpleGame& game, const EnumerationLimits& limits) {
  const Preprocessed pre = preprocess(game);
  if (!pre.reduced) {
    AlphaResult result;
    result.alpha = 0;
    result.payoff = pre.lift(PayoffVector());
    return result;
  }
  const SimpleGame& reduced = *pre.reduced;
  const auto losers = losing_constraints(reduced, limits);
  AlphaResult r = solve_alpha_lp(reduced.players(), reduced.minimal_winning(), losers);

  AlphaResult result;
  result.alpha = r.alpha;
  result.payoff = pre.lift(r.payoff);
  for (Coalition c : r.binding_losing) result.binding_losing.push_back(pre.lift(c));
  for (Coalition c : r.binding_winning) result.binding_winning.push_back(pre.lift(c));
  std::sort(result.binding_losing.begin(), result.binding_losing.end());
  std::sort(result.binding_winning.begin(), result.binding_winning.end());
  result.lp_rows = r.lp_rows;
  return result;
}

AlphaResult alpha_brute(const SimpleGame& game) {
  const int n = game.players();
  if (n > kBruteMaxPlayers) {
    throw LimitExceeded("alpha_brute is limited to " + std::to_string(kBruteMaxPlayers) +
                        " players, game has " + std::to_string(n));
  }
  std::vector<Coalition> winners, losers;
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) {
    const Coalition c(m);
    (is_winning(game, c) ? winners : losers).push_back(c);
  }
  return solve_alpha_lp(n, winners, losers);
}

AlphaResult alpha_bipartite_cg(const BipartiteGraph& g) {
  const int n = g.order();
  if (n > kMaxPlayers) throw InvalidInput("graph too large for a coalition bitset");
  std::vector<Coalition> winners;
  for (Edge e : g.edges()) winners.push_back(Coalition::of({e.u, e.v}));
  if (winners.empty()) throw PreconditionViolation("graph has no edges");
  for (int v = 0; v < n; ++v) {
    const bool isolated = g.local_a(v) >= 0 ? g.a_neighbors(g.local_a(v)).empty()
                                            : g.b_neighbors(g.local_b(v)).empty();
    if (isolated) {
      throw PreconditionViolation("vertex " + std::to_string(v + 1) +
                                  " is isolated (preprocess first)");
    }
  }
  // Adjacency masks for extending separating sets to maximal ones.
  std::vector<std::uint64_t> nbr(n, 0);
  for (Edge e : g.edges()) {
    nbr[e.u] |= std::uint64_t{1} << e.v;
    nbr[e.v] |= std::uint64_t{1} << e.u;
  }

  std::vector<Coalition> losers;
  std::size_t rounds = 0;
  while (true) {
    ++rounds;
    AlphaResult r = solve_alpha_lp(n, winners, losers);
    const WeightedSet heaviest = mwis_bipartite(g, r.payoff.values());
    if (heaviest.weight <= r.alpha) {
      r.rounds = rounds;
      return r;
    }
    std::uint64_t set = Coalition::of(std::span<const int>(heaviest.vertices)).mask();
    for (int v = 0; v < n; ++v) {
      if (!((set >> v) & 1U) && (nbr[v] & set) == 0) set |= std::uint64_t{1} << v;
    }
    const Coalition cut(set);
    if (std::find(losers.begin(), losers.end(), cut) != losers.end()) {
      throw std::logic_error("separation oracle returned an existing constraint");
    }
    losers.push_back(cut);
  }
}

}  // namespace tg
