#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <optional>
#include <random>

#include "oracles.hpp"
#include "tg/alpha.hpp"
#include "tg/error.hpp"
#include "tg/generators.hpp"
#include "tg/lp.hpp"
#include "tg/payoff.hpp"

using namespace tg;

namespace {

SimpleGame game(int n, std::initializer_list<std::initializer_list<int>> winners) {
  std::vector<Coalition> w;
  for (auto c : winners) {
    Coalition m;
    for (int i : c) m = m.with(i - 1);
    w.push_back(m);
  }
  return SimpleGame(n, w);
}

// Solve the square system M x = rhs by Gauss-Jordan; nullopt if singular.
std::optional<std::vector<Rational>> solve_square(std::vector<std::vector<Rational>> m,
                                                  std::vector<Rational> rhs) {
  const std::size_t n = rhs.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && m[pivot][c] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(m[c], m[pivot]);
    std::swap(rhs[c], rhs[pivot]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c] == 0) continue;
      const Rational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
      rhs[r] -= f * rhs[c];
    }
  }
  for (std::size_t r = 0; r < n; ++r) rhs[r] /= m[r][r];
  return rhs;
}

// Minimum over all vertices of {A x (rel) b, x >= 0}; nullopt if none.
std::optional<Rational> vertex_oracle(const LinearProgram& lp) {
  const int v = lp.variables;
  std::vector<LinearConstraint> rows = lp.constraints;
  for (int j = 0; j < v; ++j) {
    std::vector<Rational> e(v);
    e[j] = 1;
    rows.push_back({e, Relation::greater_equal, 0});
  }
  auto feasible = [&](const std::vector<Rational>& x) {
    for (const auto& row : rows) {
      Rational lhs = 0;
      for (int j = 0; j < v; ++j) lhs += row.coefficients[j] * x[j];
      if (row.relation == Relation::less_equal && lhs > row.rhs) return false;
      if (row.relation == Relation::greater_equal && lhs < row.rhs) return false;
      if (row.relation == Relation::equal && lhs != row.rhs) return false;
    }
    return true;
  };
  std::optional<Rational> best;
  const std::size_t r = rows.size();
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << r); ++pick) {
    if (std::popcount(pick) != v) continue;
    std::vector<std::vector<Rational>> m;
    std::vector<Rational> rhs;
    for (std::size_t i = 0; i < r; ++i) {
      if ((pick >> i) & 1U) {
        m.push_back(rows[i].coefficients);
        rhs.push_back(rows[i].rhs);
      }
    }
    const auto x = solve_square(m, rhs);
    if (!x || !feasible(*x)) continue;
    Rational obj = 0;
    for (int j = 0; j < v; ++j) obj += lp.objective[j] * (*x)[j];
    if (!best || obj < *best) best = obj;
  }
  return best;
}

}  // namespace

TEST_CASE("lp examples") {
  {
    // variables p1, p2, a
    LinearProgram lp(3);
    lp.objective = {0, 0, 1};
    lp.add({1, 1, 0}, Relation::greater_equal, 1);
    lp.add({1, 0, -1}, Relation::less_equal, 0);
    lp.add({0, 1, -1}, Relation::less_equal, 0);
    const LpSolution s = solve_lp_exact(lp);
    REQUIRE(s.status == LpStatus::optimal);
    CHECK(s.objective == fraction(1, 2));
  }
  {
    LinearProgram lp(1);
    lp.objective = {1};
    lp.add({1}, Relation::greater_equal, fraction(3, 7));
    const LpSolution s = solve_lp_exact(lp);
    CHECK(s.objective == fraction(3, 7));
    CHECK(s.x == std::vector<Rational>{fraction(3, 7)});
    CHECK(s.duals == std::vector<Rational>{1});
  }
  {
    LinearProgram lp(1);
    lp.objective = {-1};
    lp.add({1}, Relation::greater_equal, 1);
    CHECK(solve_lp_exact(lp).status == LpStatus::unbounded);
  }
  {
    LinearProgram lp(1);
    lp.add({1}, Relation::less_equal, -1);
    CHECK(solve_lp_exact(lp).status == LpStatus::infeasible);
  }
  {
    // free variable: min x s.t. x >= -5/2
    LinearProgram lp(1);
    lp.objective = {1};
    lp.nonnegative = {false};
    lp.add({1}, Relation::greater_equal, fraction(-5, 2));
    CHECK(solve_lp_exact(lp).objective == fraction(-5, 2));
  }
  {
    LinearProgram lp(2);
    lp.add({1}, Relation::less_equal, 1);
    CHECK_THROWS_AS(lp.validate(), InvalidInput);
    CHECK_THROWS_AS(solve_lp_exact(lp), InvalidInput);
  }
  CHECK(to_string(LpStatus::unbounded) == "unbounded");
}

TEST_CASE("property: simplex matches vertex enumeration and strong duality") {
  std::mt19937_64 rng(71);
  auto small = [&] { return fraction(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 3)); };
  int optimal = 0, infeasible = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int v = 1 + static_cast<int>(rng() % 3);
    const int m = 1 + static_cast<int>(rng() % 4);
    LinearProgram lp(v);
    for (auto& c : lp.objective) c = small();
    for (int i = 0; i < m; ++i) {
      std::vector<Rational> row(v);
      for (auto& c : row) c = small();
      const Relation rel = static_cast<Relation>(rng() % 3);
      lp.add(row, rel, small());
    }
    for (int j = 0; j < v; ++j) {  // keep the region bounded
      std::vector<Rational> row(v);
      row[j] = 1;
      lp.add(row, Relation::less_equal, 6);
    }
    const LpSolution s = solve_lp_exact(lp);
    const auto expect = vertex_oracle(lp);
    if (!expect) {
      CHECK(s.status == LpStatus::infeasible);
      ++infeasible;
      continue;
    }
    REQUIRE(s.status == LpStatus::optimal);
    ++optimal;
    CHECK(s.objective == *expect);
    Rational dual_objective = 0;
    for (std::size_t i = 0; i < lp.constraints.size(); ++i) {
      dual_objective += s.duals[i] * lp.constraints[i].rhs;
    }
    CHECK(dual_objective == s.objective);
  }
  CHECK(optimal > 50);
  CHECK(infeasible > 5);
}

TEST_CASE("alpha examples") {
  CHECK(alpha_exact(cycle_game(4)).alpha == 1);
  CHECK(alpha_exact(cycle_game(6)).alpha == fraction(3, 2));
  CHECK(alpha_exact(game(3, {{1, 2}, {1, 3}, {2, 3}})).alpha == fraction(1, 2));
  CHECK(alpha_brute(cycle_game(4)).alpha == 1);
  const AlphaResult u = alpha_brute(game(3, {{1, 2, 3}}));
  CHECK(u.alpha == fraction(2, 3));
  CHECK(u.payoff.values() == std::vector<Rational>(3, fraction(1, 3)));
  CHECK(alpha_brute(game(3, {{1, 2}, {1, 3}, {2, 3}})).alpha == fraction(1, 2));
  CHECK_THROWS_AS(alpha_brute(cycle_game(14)), LimitExceeded);

  CHECK(alpha_bipartite_cg(BipartiteGraph::from_graph(oracle::cycle(4), {0, 2})).alpha == 1);
  CHECK(alpha_bipartite_cg(BipartiteGraph::from_local(1, 1, {{0, 0}})).alpha == fraction(1, 2));
  const AlphaResult c8 = alpha_bipartite_cg(BipartiteGraph::from_graph(oracle::cycle(8), {0, 2, 4, 6}));
  CHECK(c8.alpha == 2);
  CHECK(c8.rounds >= 1);
  CHECK_THROWS_AS(alpha_bipartite_cg(BipartiteGraph::from_local(1, 2, {{0, 0}})),
                  PreconditionViolation);
}

TEST_CASE("alpha exact respects the coalition cap") {
  EnumerationLimits tight;
  tight.max_coalitions = 3;
  CHECK_THROWS_AS(alpha_exact(cycle_game(10), tight), LimitExceeded);
  CHECK_THROWS_AS(alpha_exact(game(4, {{1, 2, 3}, {2, 3, 4}, {1, 4}}), tight), LimitExceeded);
}

TEST_CASE("alpha result bookkeeping") {
  const AlphaResult r = alpha_exact(cycle_game(4));
  CHECK_FALSE(r.binding_losing.empty());
  CHECK_FALSE(r.binding_winning.empty());
  for (Coalition l : r.binding_losing) CHECK(r.payoff.value_of(l) == r.alpha);
  for (Coalition w : r.binding_winning) CHECK(r.payoff.value_of(w) == 1);
}

TEST_CASE("property: exact = brute, certified payoff, known bounds") {
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 9);
    const SimpleGame g = random_monotone_game(n, 1 + static_cast<int>(rng() % 8), rng()).game;
    const AlphaResult exact = alpha_exact(g);
    REQUIRE(exact.alpha == alpha_brute(g).alpha);
    const Certificate cert{"alpha", exact.payoff, exact.alpha, Normalization::min_winning_ge_1};
    CHECK(verify_certificate(g, cert).pass);
    const auto ex = oracle::extremes(g, exact.payoff.values());
    CHECK(ex.max_losing == exact.alpha);
    CHECK(exact.alpha <= fraction(2 * n, 7));
    bool has3 = false, all3 = true;
    for (Coalition w : g.minimal_winning()) {
      has3 |= w.size() == 3;
      all3 &= w.size() == 3;
    }
    if (!has3 || all3) CHECK(exact.alpha <= fraction(n, 4));
    if (exact.alpha < 1) {
      CHECK(ex.max_losing < 1);
      CHECK(ex.min_winning >= 1);
    }
  }
}

TEST_CASE("property: constraint generation = exact on bipartite graphs") {
  Lcg64 rng(79);
  int done = 0;
  while (done < 60) {
    const BipartiteGraph g = random_bipartite(1 + rng.below(6), 1 + rng.below(6), 45, rng);
    bool isolated = g.edge_count() == 0;
    for (int i = 0; i < g.a_count(); ++i) isolated |= g.a_neighbors(i).empty();
    for (int j = 0; j < g.b_count(); ++j) isolated |= g.b_neighbors(j).empty();
    if (isolated) continue;
    ++done;
    const AlphaResult cg = alpha_bipartite_cg(g);
    const SimpleGame game = graphic_game(Graph(g.order(), g.edges()));
    CHECK(cg.alpha == alpha_exact(game).alpha);
    const Certificate cert{"cg", cg.payoff, cg.alpha, Normalization::min_winning_ge_1};
    CHECK(verify_certificate(game, cert).pass);
  }
}

TEST_CASE("property: strong-product gadget") {
  std::mt19937_64 rng(83);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const Graph g = oracle::random_graph(n, 0.4, rng);
    const ProductInstance inst = strong_product_game(g);
    CHECK(inst.expected_alpha == fraction(oracle::independence_number(g), 2));
    CHECK(alpha_exact(inst.game).alpha == inst.expected_alpha);
  }
}
