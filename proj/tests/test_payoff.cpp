#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "tg/error.hpp"
#include "tg/generators.hpp"
#include "tg/payoff.hpp"

using namespace tg;

namespace {

Coalition C(std::initializer_list<int> one_based) {
  Coalition c;
  for (int i : one_based) c = c.with(i - 1);
  return c;
}

SimpleGame game(int n, std::initializer_list<std::initializer_list<int>> winners) {
  std::vector<Coalition> w;
  for (auto c : winners) w.push_back(C(c));
  return SimpleGame(n, w);
}

std::vector<Rational> R(std::initializer_list<Rational> v) { return v; }

SimpleGame star5() { return game(5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}}); }

// Exhaustive check of a min_winning_ge_1 certificate.
void check_feasible_within(const SimpleGame& g, const Certificate& cert) {
  const auto ex = oracle::extremes(g, cert.payoff.values());
  CHECK(ex.min_winning >= 1);
  CHECK(ex.max_losing <= cert.bound);
  const Verdict v = verify_certificate(g, cert);
  CHECK(v.pass);
  CHECK(v.max_losing == ex.max_losing);
}

SimpleGame without_size3(const SimpleGame& g) {
  std::vector<Coalition> w;
  for (Coalition c : g.minimal_winning()) {
    if (c.size() != 3) w.push_back(c);
  }
  if (w.empty()) w.push_back(Coalition::first(2));
  return SimpleGame(g.players(), w);
}

SimpleGame random_triples(int n, int count, std::mt19937_64& rng) {
  std::vector<Coalition> w;
  for (int t = 0; t < count; ++t) {
    Coalition c;
    while (c.size() < 3) c = c.with(static_cast<int>(rng() % n));
    if (std::find(w.begin(), w.end(), c) == w.end()) w.push_back(c);
  }
  return SimpleGame(n, w);
}

}  // namespace

TEST_CASE("normalization names") {
  CHECK(parse_normalization("ratio") == Normalization::ratio);
  CHECK(to_string(Normalization::min_winning_ge_1) == "min_winning_ge_1");
  CHECK_THROWS_AS(parse_normalization("other"), InvalidInput);
}

TEST_CASE("bipartite quarter examples") {
  const Certificate edge = payoff_bipartite_quarter(BipartiteGraph::from_local(1, 1, {{0, 0}}));
  CHECK(edge.payoff.values() == R({fraction(1, 2), fraction(1, 2)}));
  CHECK(edge.bound == fraction(1, 2));
  const Certificate star =
      payoff_bipartite_quarter(BipartiteGraph::from_local(1, 3, {{0, 0}, {0, 1}, {0, 2}}));
  CHECK(star.payoff.values() == R({fraction(3, 4), fraction(1, 4), fraction(1, 4), fraction(1, 4)}));
  check_feasible_within(graphic_game(Graph(4, {{0, 1}, {0, 2}, {0, 3}})), star);
  const BipartiteGraph two = BipartiteGraph::from_local(2, 3, {{0, 0}, {1, 0}, {1, 1}, {1, 2}});
  const Certificate t = payoff_bipartite_quarter(two);
  CHECK(t.payoff.values() ==
        R({fraction(1, 2), fraction(2, 3), fraction(1, 2), fraction(1, 3), fraction(1, 3)}));
  CHECK(t.bound == fraction(5, 4));
  check_feasible_within(graphic_game(Graph(5, two.edges())), t);
}

TEST_CASE("graph quarter examples") {
  const Certificate c4 = payoff_graph_quarter(oracle::cycle(4));
  CHECK(c4.payoff.values() == std::vector<Rational>(4, fraction(1, 2)));
  CHECK(c4.bound == 1);
  const Graph tri(3, {{0, 1}, {0, 2}, {1, 2}});
  const Certificate t = payoff_graph_quarter(tri);
  CHECK(t.payoff.values() == std::vector<Rational>(3, fraction(1, 2)));
  check_feasible_within(graphic_game(tri), t);
  const Graph p3(3, {{0, 1}, {1, 2}});
  const Certificate p = payoff_graph_quarter(p3);
  CHECK(p.payoff.values() == R({fraction(1, 3), fraction(2, 3), fraction(1, 3)}));
  CHECK(p.bound == fraction(3, 4));
  check_feasible_within(graphic_game(p3), p);
  CHECK_THROWS_AS(payoff_graph_quarter(Graph(3, {{0, 1}})), PreconditionViolation);
}

TEST_CASE("no-size3 examples") {
  const Certificate c4 = payoff_no_size3(cycle_game(4));
  CHECK(c4.payoff.values() == std::vector<Rational>(4, fraction(1, 2)));
  const Certificate s = payoff_no_size3(star5());
  CHECK(s.payoff.values() == R({fraction(11, 16), fraction(5, 16), fraction(5, 16),
                                fraction(5, 16), fraction(5, 16)}));
  CHECK(s.bound == fraction(5, 4));
  const Verdict v = verify_certificate(star5(), s);
  CHECK(v.pass);
  CHECK(v.max_losing == fraction(5, 4));
  // {1,2},{3,4} plus a size-4 winner through isolated pair-graph players
  const SimpleGame g = game(6, {{1, 2}, {3, 4}, {1, 3, 5, 6}});
  const Certificate c = payoff_no_size3(g);
  for (const Rational& x : c.payoff.values()) CHECK(x >= fraction(1, 4));
  check_feasible_within(g, c);
  CHECK_THROWS_AS(payoff_no_size3(game(3, {{1, 2, 3}})), PreconditionViolation);
}

TEST_CASE("all-size3 examples") {
  const Certificate four = payoff_all_size3(game(4, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}}));
  CHECK(four.payoff.values() == std::vector<Rational>(4, fraction(1, 3)));
  CHECK(four.bound == 1);
  std::vector<Coalition> through1;
  for (int i = 1; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j) through1.push_back(Coalition::of({0, i, j}));
  const SimpleGame eight(8, through1);
  const Certificate e = payoff_all_size3(eight);
  std::vector<Rational> indicator(8, 0);
  indicator[0] = 1;
  CHECK(e.payoff.values() == indicator);
  CHECK(e.bound == 1);
  const Verdict v = verify_certificate(eight, e);
  CHECK(v.pass);
  CHECK(v.max_losing < 2);
  const Certificate three = payoff_all_size3(game(3, {{1, 2, 3}}));
  CHECK(three.payoff.values() == std::vector<Rational>(3, fraction(1, 3)));
  check_feasible_within(game(3, {{1, 2, 3}}), three);
  CHECK_THROWS_AS(payoff_all_size3(cycle_game(4)), PreconditionViolation);
}

TEST_CASE("two-sevenths examples") {
  const TwoSevenths c4 = two_sevenths_construction(cycle_game(4));
  CHECK(c4.p_bar.values() == std::vector<Rational>(4, fraction(1, 2)));
  CHECK(c4.p_tilde.values() == std::vector<Rational>(4, fraction(1, 2)));
  CHECK(c4.certificate.payoff.values() == std::vector<Rational>(4, fraction(1, 2)));
  CHECK(c4.certificate.bound == fraction(8, 7));

  const TwoSevenths s = two_sevenths_construction(star5());
  CHECK(s.p_bar.values() == R({fraction(2, 3), fraction(1, 3), fraction(1, 3), fraction(1, 3),
                               fraction(1, 3)}));
  CHECK(s.l_bar == C({2, 3, 4, 5}));
  CHECK(s.p_tilde.values() == R({fraction(3, 4), fraction(1, 4), fraction(1, 4), fraction(1, 4),
                                 fraction(1, 4)}));
  CHECK(s.certificate.payoff.values() == R({fraction(5, 7), fraction(2, 7), fraction(2, 7),
                                            fraction(2, 7), fraction(2, 7)}));
  const Verdict v = verify_certificate(star5(), s.certificate);
  CHECK(v.pass);
  CHECK(v.max_losing == fraction(8, 7));
  CHECK(s.certificate.bound == fraction(10, 7));
}

TEST_CASE("complete-game examples") {
  const SimpleGame g = game(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3, 4}});
  const Certificate c = payoff_complete(g, DesirabilityOrder{{0, 1, 2, 3}});
  CHECK(c.payoff.values() == R({fraction(1, 2), fraction(1, 3), fraction(1, 3), fraction(1, 3)}));
  CHECK(c.bound == fraction(4, 5));
  CHECK(c.normalization == Normalization::ratio);
  CHECK(verify_certificate(g, c).pass);
  CHECK(check_sqrt_n_ln_n(c.bound, 4).within);

  const Certificate u = payoff_complete(game(3, {{1, 2, 3}}), DesirabilityOrder{{0, 1, 2}});
  CHECK(u.payoff.values() == std::vector<Rational>(3, fraction(1, 3)));
  CHECK(u.bound == fraction(2, 3));
  const Certificate two = payoff_complete(game(2, {{1, 2}}), DesirabilityOrder{{0, 1}});
  CHECK(two.payoff.values() == std::vector<Rational>(2, fraction(1, 2)));
  CHECK(two.bound == fraction(1, 2));

  const Certificate dictator = payoff_complete(game(3, {{1}}), DesirabilityOrder{{0, 1, 2}});
  CHECK(dictator.payoff.values() == R({1, 0, 0}));
  CHECK(dictator.bound == 0);
  const Certificate solo = payoff_complete(game(3, {{1}, {2, 3}}), DesirabilityOrder{{0, 1, 2}});
  CHECK(solo.payoff.values() == R({1, fraction(1, 2), fraction(1, 2)}));
  CHECK(solo.bound == fraction(1, 2));

  CHECK_THROWS_AS(payoff_complete(g, DesirabilityOrder{{1, 0, 2, 3}}), PreconditionViolation);
  CHECK_THROWS_AS(payoff_complete(g, DesirabilityOrder{{0, 0, 2, 3}}), PreconditionViolation);
  CHECK_THROWS_AS(payoff_complete(g, DesirabilityOrder{{0, 1}}), PreconditionViolation);
}

TEST_CASE("sqrt(n) ln n check") {
  CHECK(check_sqrt_n_ln_n(Rational(2), 4).within);            // 2 ln 4 = 2.77
  CHECK_FALSE(check_sqrt_n_ln_n(Rational(3), 4).within);
  CHECK_FALSE(check_sqrt_n_ln_n(fraction(1, 100), 1).within);  // bound 0
  CHECK(check_sqrt_n_ln_n(Rational(0), 1).within);
}

TEST_CASE("verify_certificate examples") {
  const Certificate half{"manual", PayoffVector(4, fraction(1, 2)), 1,
                         Normalization::min_winning_ge_1};
  CHECK(verify_certificate(cycle_game(4), half).pass);
  Certificate tight = half;
  tight.bound = fraction(1, 2);
  const Verdict v = verify_certificate(cycle_game(4), tight);
  CHECK_FALSE(v.pass);
  REQUIRE(v.witness);
  CHECK(*v.witness == C({1, 3}));
  Certificate low = half;
  low.payoff = PayoffVector(4, fraction(1, 4));
  const Verdict w = verify_certificate(cycle_game(4), low);
  CHECK_FALSE(w.pass);
  CHECK(*w.witness == C({1, 2}));
  Certificate wrong = half;
  wrong.payoff = PayoffVector(3, 1);
  CHECK_THROWS_AS(verify_certificate(cycle_game(4), wrong), InvalidInput);
  const Certificate zero{"manual", PayoffVector(std::vector<Rational>{1, 0, 0, 0}), 100,
                         Normalization::ratio};
  CHECK_FALSE(verify_certificate(cycle_game(4), zero).pass);  // p({2,3}) = 0
}

TEST_CASE("property: payoff arithmetic on decompositions") {
  Lcg64 rng(53);
  for (int trial = 0; trial < 100; ++trial) {
    const BipartiteGraph g = random_bipartite(1 + rng.below(6), 1 + rng.below(6), 50, rng);
    if (!max_matching_bipartite(g).size || max_matching_bipartite(g).size < std::size_t(g.a_count()))
      continue;
    bool isolated_a = false;
    for (int i = 0; i < g.a_count(); ++i) isolated_a |= g.a_neighbors(i).empty();
    if (isolated_a) continue;
    for (const auto& part : decompose(g).parts) {
      const Rational& l = part.lambda;
      CHECK(l * (1 - l) <= fraction(1, 4));
      if (l != 1) CHECK((1 - l) * (1 / (4 * (1 - l))) == fraction(1, 4));
    }
  }
}

TEST_CASE("property: graph quarter on random graphs") {
  std::mt19937_64 rng(59);
  Lcg64 lcg(59);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 11);
    const Graph g = attach_isolated(oracle::random_graph(n, 0.1 + 0.05 * (rng() % 8), rng), lcg);
    check_feasible_within(graphic_game(g), payoff_graph_quarter(g));
  }
}

TEST_CASE("property: no-size3, all-size3 and two-sevenths on random games") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 10);
    const SimpleGame g = random_monotone_game(n, 1 + static_cast<int>(rng() % 10), rng()).game;
    const SimpleGame h = without_size3(g);
    const Certificate c = payoff_no_size3(h);
    CHECK(c.bound == fraction(n, 4));
    check_feasible_within(h, c);

    const TwoSevenths t = two_sevenths_construction(g);
    CHECK(t.certificate.bound == fraction(2 * n, 7));
    check_feasible_within(g, t.certificate);
    for (Coalition w : g.minimal_winning()) CHECK_FALSE(w.is_subset_of(t.l_bar));
    if (n >= 3) {
      const SimpleGame triples = random_triples(n, 1 + static_cast<int>(rng() % 12), rng);
      check_feasible_within(triples, payoff_all_size3(triples));
    }
  }
}

TEST_CASE("property: complete-game payoff") {
  Lcg64 rng(67);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(rng.below(9));
    const SimpleGame g = random_complete_game(n, 1 + rng.below(3), rng);
    const auto order = desirability_order(g);
    REQUIRE(order);
    const Certificate c = payoff_complete(g, *order);
    const auto ex = oracle::extremes(g, c.payoff.values());
    REQUIRE(ex.min_winning > 0);
    CHECK(c.bound == ex.max_losing / ex.min_winning);
    CHECK(check_sqrt_n_ln_n(c.bound, n).within);
    for (int i = 0; i + 1 < n; ++i) {
      CHECK(c.payoff[order->order[i]] >= c.payoff[order->order[i + 1]]);
    }
    for (Coalition w : g.minimal_winning()) {
      const Rational v = c.payoff.value_of(w);
      CHECK(v * v * n >= 1);
    }
  }
}
