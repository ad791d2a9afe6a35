#include "tg/payoff.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "tg/error.hpp"

namespace tg {

std::string_view to_string(Normalization n) {
  return n == Normalization::ratio ? "ratio" : "min_winning_ge_1";
}

Normalization parse_normalization(std::string_view text) {
  if (text == "min_winning_ge_1") return Normalization::min_winning_ge_1;
  if (text == "ratio") return Normalization::ratio;
  throw InvalidInput("unknown normalization '" + std::string(text) + "'");
}

Certificate payoff_bipartite_quarter(const BipartiteGraph& g) {
  const WellSpreadDecomposition d = decompose(g);
  std::vector<Rational> p(g.order());
  for (const auto& part : d.parts) {
    for (int v : part.a_part) p[v] = 1 - part.lambda;
    for (int v : part.b_part) p[v] = part.lambda;
  }
  return {"bipartite-quarter", PayoffVector(std::move(p)), fraction(g.order(), 4),
          Normalization::min_winning_ge_1};
}

namespace {

enum class Role { tutte, singleton_odd, interior };

// Gallai-Edmonds decomposition of g, its Tutte set and odd components
// contracted into a bipartite graph, and that graph's well-spread parts.
struct Skeleton {
  std::vector<Role> role;
  /// Well-spread part holding the vertex (tutte and singleton_odd only).
  std::vector<int> part;
  WellSpreadDecomposition parts;
};

Skeleton build_skeleton(const Graph& g) {
  const int n = g.order();
  const Contraction c = contract_odd_components(g);
  const int na = static_cast<int>(c.ge.tutte_set.size());
  const BipartiteGraph& contracted = c.graph;
  const GEDecomposition& ge = c.ge;

  Skeleton s;
  s.parts = decompose(contracted);
  s.role.assign(n, Role::interior);
  s.part.assign(n, -1);
  for (std::size_t k = 0; k < s.parts.parts.size(); ++k) {
    for (int v : s.parts.parts[k].a_part) {
      const int real = ge.tutte_set[v];
      s.role[real] = Role::tutte;
      s.part[real] = static_cast<int>(k);
    }
    for (int v : s.parts.parts[k].b_part) {
      const VertexSet& comp = ge.odd_components[v - na];
      if (comp.size() == 1) {
        s.role[comp[0]] = Role::singleton_odd;
        s.part[comp[0]] = static_cast<int>(k);
      }
    }
  }
  return s;
}

// 1 / (4 (1 - lambda))
Rational shifted(const Rational& lambda) { return 1 / (4 * (1 - lambda)); }

}  // namespace

Certificate payoff_graph_quarter(const Graph& g) {
  if (g.order() == 0) throw PreconditionViolation("empty graph");
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 0) {
      throw PreconditionViolation("vertex " + std::to_string(v + 1) +
                                  " is isolated (preprocess first)");
    }
  }
  const Skeleton s = build_skeleton(g);
  std::vector<Rational> p(g.order(), fraction(1, 2));
  for (int v = 0; v < g.order(); ++v) {
    if (s.role[v] == Role::interior) continue;
    const Rational& lambda = s.parts.parts[s.part[v]].lambda;
    p[v] = s.role[v] == Role::tutte ? Rational(1 - lambda) : lambda;
  }
  return {"quarter-graph", PayoffVector(std::move(p)), fraction(g.order(), 4),
          Normalization::min_winning_ge_1};
}

Certificate payoff_no_size3(const SimpleGame& game) {
  if (game.has_winner_of_size(3)) {
    throw PreconditionViolation("game has a minimal winning coalition of size 3");
  }
  const Preprocessed pre = preprocess(game);
  PayoffVector reduced_payoff;
  if (pre.reduced) {
    const Graph g = pair_graph(*pre.reduced);
    const Skeleton s = build_skeleton(g);
    std::vector<Rational> p(g.order(), fraction(1, 2));
    for (int v = 0; v < g.order(); ++v) {
      if (s.role[v] == Role::interior) continue;
      const Rational lifted = shifted(s.parts.parts[s.part[v]].lambda);
      p[v] = s.role[v] == Role::tutte ? Rational(1 - lifted) : lifted;
    }
    reduced_payoff = PayoffVector(std::move(p));
  }
  return {"no-size3", pre.lift(reduced_payoff), fraction(game.players(), 4),
          Normalization::min_winning_ge_1};
}

Certificate payoff_all_size3(const SimpleGame& game) {
  for (Coalition w : game.minimal_winning()) {
    if (w.size() != 3) {
      throw PreconditionViolation("minimal winning coalition " + to_string(w) +
                                  " does not have size 3");
    }
  }
  const Preprocessed pre = preprocess(game);
  const SimpleGame& reduced = *pre.reduced;  // nonempty: no singleton winners
  const int n = reduced.players();
  const auto losing = maximal_losing(reduced, EnumerationLimits::from_environment());
  Coalition largest;
  int largest_size = -1;
  for (Coalition l : losing) {
    if (l.size() > largest_size) {
      largest = l;
      largest_size = l.size();
    }
  }
  if (4 * largest_size <= 3 * n) {
    return {"all-size3", pre.lift(PayoffVector(n, fraction(1, 3))),
            fraction(game.players(), 4), Normalization::min_winning_ge_1};
  }
  // Every winner meets N \ L, so the indicator of N \ L is feasible.
  std::vector<Rational> p(n, 0);
  for (int i = 0; i < n; ++i) {
    if (!largest.contains(i)) p[i] = 1;
  }
  return {"all-size3", pre.lift(PayoffVector(std::move(p))), Rational(n - largest_size),
          Normalization::min_winning_ge_1};
}

TwoSevenths two_sevenths_construction(const SimpleGame& game) {
  const Preprocessed pre = preprocess(game);
  TwoSevenths out;
  if (!pre.reduced) {
    out.p_bar = out.p_tilde = pre.lift(PayoffVector());
    out.certificate = {"two-sevenths", out.p_bar, fraction(2 * game.players(), 7),
                       Normalization::min_winning_ge_1};
    return out;
  }
  const SimpleGame& reduced = *pre.reduced;
  const int n = reduced.players();
  const Graph g = pair_graph(reduced);
  const Skeleton s = build_skeleton(g);
  const Rational quarter = fraction(1, 4), third = fraction(1, 3), half = fraction(1, 2);

  std::vector<Rational> bar(n, half);
  for (int v = 0; v < n; ++v) {
    if (s.role[v] == Role::interior) continue;
    const Rational& lambda = s.parts.parts[s.part[v]].lambda;
    const bool a_side = s.role[v] == Role::tutte;
    if (lambda >= quarter) {
      const Rational lifted = shifted(lambda);
      bar[v] = a_side ? Rational(1 - lifted) : lifted;
    } else {
      bar[v] = a_side ? Rational(2 * third) : third;
    }
  }
  const PayoffVector p_bar(bar);
  const auto losing = maximal_losing(reduced, EnumerationLimits::from_environment());
  const Coalition l_bar = max_losing_value(losing, p_bar).argmax;

  std::vector<Rational> tilde(n, half);
  for (int v = 0; v < n; ++v) {
    if (s.role[v] == Role::interior) continue;
    const Rational& lambda = s.parts.parts[s.part[v]].lambda;
    if (s.role[v] == Role::tutte) {
      tilde[v] = lambda >= quarter ? Rational(1 - shifted(lambda)) : Rational(3 * quarter);
    } else if (l_bar.contains(v)) {
      tilde[v] = lambda >= quarter ? shifted(lambda) : quarter;
    }
  }
  const PayoffVector p_tilde(tilde);
  std::vector<Rational> mix(n);
  for (int v = 0; v < n; ++v) mix[v] = fraction(3, 7) * bar[v] + fraction(4, 7) * tilde[v];

  out.p_bar = pre.lift(p_bar);
  out.p_tilde = pre.lift(p_tilde);
  out.l_bar = pre.lift(l_bar);
  out.certificate = {"two-sevenths", pre.lift(PayoffVector(std::move(mix))),
                     fraction(2 * game.players(), 7), Normalization::min_winning_ge_1};
  return out;
}

Certificate payoff_two_sevenths(const SimpleGame& game) {
  return two_sevenths_construction(game).certificate;
}

namespace {

// p_i = 1/s_i along `order` (a valid desirability order of `game`).
std::vector<Rational> harmonic_payoff(const SimpleGame& game, const std::vector<int>& order) {
  const int n = game.players();
  const WinningTable table(game, EnumerationLimits::from_environment());
  // suffix[i] = players at positions i..n-1
  std::vector<Coalition> suffix(n + 1);
  for (int pos = n - 1; pos >= 0; --pos) suffix[pos] = suffix[pos + 1].with(order[pos]);
  int k = 0;
  for (int pos = 0; pos < n; ++pos) {
    if (table.winning(suffix[pos])) k = pos;
  }
  std::vector<Rational> p(n);
  Rational last;
  for (int pos = 0; pos < n; ++pos) {
    if (pos <= k) {
      int smallest = n + 1;
      for (Coalition w : game.minimal_winning()) {
        if (w.is_subset_of(suffix[pos])) smallest = std::min(smallest, w.size());
      }
      last = fraction(1, smallest);
    }
    p[order[pos]] = last;
  }
  return p;
}

}  // namespace

Certificate payoff_complete(const SimpleGame& game, const DesirabilityOrder& order) {
  const int n = game.players();
  if (static_cast<int>(order.order.size()) != n) {
    throw PreconditionViolation("desirability order has the wrong length");
  }
  std::vector<char> seen(n, 0);
  for (int v : order.order) {
    if (v < 0 || v >= n || seen[v]) throw PreconditionViolation("order is not a permutation");
    seen[v] = 1;
  }
  const EnumerationLimits limits = EnumerationLimits::from_environment();
  {
    const WinningTable table(game, limits);
    for (int pos = 0; pos + 1 < n; ++pos) {
      if (!at_least_as_desirable(table, order.order[pos], order.order[pos + 1])) {
        throw PreconditionViolation("player " + std::to_string(order.order[pos] + 1) +
                                    " is not at least as desirable as player " +
                                    std::to_string(order.order[pos + 1] + 1));
      }
    }
  }

  const Preprocessed pre = preprocess(game);
  std::vector<Rational> p(n, 0);
  if (pre.reduced) {
    std::vector<int> reduced_of(n, -1);
    for (std::size_t r = 0; r < pre.original_index.size(); ++r) {
      reduced_of[pre.original_index[r]] = static_cast<int>(r);
    }
    std::vector<int> reduced_order;
    for (int v : order.order) {
      if (reduced_of[v] >= 0) reduced_order.push_back(reduced_of[v]);
    }
    const std::vector<Rational> q = harmonic_payoff(*pre.reduced, reduced_order);
    // Singleton winners must not set the ratio: give them at least the
    // weakest reduced winner and keep p non-increasing along the order.
    const PayoffVector reduced_payoff(q);
    Rational weakest = reduced_payoff.value_of(pre.reduced->minimal_winning().front());
    for (Coalition w : pre.reduced->minimal_winning()) {
      weakest = std::min(weakest, reduced_payoff.value_of(w));
    }
    const Rational solo = std::max(weakest, *std::max_element(q.begin(), q.end()));
    for (std::size_t r = 0; r < q.size(); ++r) p[pre.original_index[r]] = q[r];
    for (const auto& [player, value] : pre.fixed) {
      if (value == 1) p[player] = solo;
    }
  } else {
    for (const auto& [player, value] : pre.fixed) p[player] = value;
  }
  PayoffVector payoff(std::move(p));
  const CriticalRatio r = critical_ratio(game, payoff, limits);
  if (r.infinite) throw std::logic_error("complete-game payoff has a zero winner");
  return {"complete", std::move(payoff), r.value, Normalization::ratio};
}

SqrtLogCheck check_sqrt_n_ln_n(const Rational& ratio, int n) {
  SqrtLogCheck c;
  c.ratio = ratio.get_d();  // truncates toward zero
  const double raw = std::sqrt(static_cast<double>(n)) * std::log(static_cast<double>(n));
  c.bound = raw * (1.0 + std::ldexp(1.0, -40));
  c.within = c.ratio <= c.bound;
  return c;
}

Verdict verify_certificate(const SimpleGame& game, const Certificate& cert,
                           const EnumerationLimits& limits) {
  if (cert.payoff.size() != static_cast<std::size_t>(game.players())) {
    throw InvalidInput("certificate has " + std::to_string(cert.payoff.size()) +
                       " payoffs for a game with " + std::to_string(game.players()) +
                       " players");
  }
  if (cert.bound < 0) throw InvalidInput("certificate bound is negative");
  Verdict v;
  const auto losing = maximal_losing(game, limits);
  const LosingMaximum top = max_losing_value(losing, cert.payoff);
  v.max_losing = top.value;
  Coalition weakest = game.minimal_winning().front();
  v.min_winning = cert.payoff.value_of(weakest);
  for (Coalition w : game.minimal_winning()) {
    const Rational value = cert.payoff.value_of(w);
    if (value < v.min_winning) {
      v.min_winning = value;
      weakest = w;
    }
  }

  if (cert.normalization == Normalization::min_winning_ge_1) {
    if (v.min_winning < 1) {
      v.reason = "winning coalition " + to_string(weakest) + " has p(W) = " +
                 to_string(v.min_winning) + " < 1";
      v.witness = weakest;
      return v;
    }
    if (v.max_losing > cert.bound) {
      v.reason = "losing coalition " + to_string(top.argmax) + " has p(L) = " +
                 to_string(v.max_losing) + " > " + to_string(cert.bound);
      v.witness = top.argmax;
      return v;
    }
    v.pass = true;
    return v;
  }

  if (v.max_losing > 0 && v.min_winning == 0) {
    v.reason = "winning coalition " + to_string(weakest) + " has p(W) = 0";
    v.witness = weakest;
    return v;
  }
  const Rational ratio = v.max_losing == 0 ? Rational(0) : Rational(v.max_losing / v.min_winning);
  if (ratio > cert.bound) {
    v.reason = "ratio p(" + to_string(top.argmax) + ")/p(" + to_string(weakest) + ") = " +
               to_string(ratio) + " > " + to_string(cert.bound);
    v.witness = top.argmax;
    return v;
  }
  v.pass = true;
  return v;
}

}  // namespace tg
