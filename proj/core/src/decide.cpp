#include "tg/decide.hpp"

#include "tg/alpha.hpp"
#include "tg/error.hpp"

namespace tg {

namespace {

int pair_count(const Rational& a, bool strict) {
  const Rational twice = 2 * a;
  mpz_class k;
  if (strict) {
    mpz_cdiv_q(k.get_mpz_t(), twice.get_num_mpz_t(), twice.get_den_mpz_t());
  } else {
    mpz_fdiv_q(k.get_mpz_t(), twice.get_num_mpz_t(), twice.get_den_mpz_t());
    k += 1;
  }
  if (k > kDecideMaxK) {
    throw LimitExceeded("threshold " + to_string(a) + " needs k = " + k.get_str() +
                        " induced pairs, above the limit " + std::to_string(kDecideMaxK));
  }
  return static_cast<int>(k.get_si());
}

}  // namespace

Decision decide_alpha_le(const Graph& g, const Rational& a, bool strict) {
  if (a <= 0) throw PreconditionViolation("threshold must be positive");
  if (g.order() == 0) throw PreconditionViolation("empty graph");
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 0) {
      throw PreconditionViolation("vertex " + std::to_string(v + 1) + " is isolated");
    }
  }
  Decision d;
  d.k = pair_count(a, strict);
  d.witness = find_induced_kP2(g, d.k);
  if (d.witness) return d;

  std::vector<Coalition> losers;
  enumerate_mis(g, [&](VertexMask m) {
    losers.push_back(Coalition(m));
    return true;
  });
  d.maximal_independent_sets = losers.size();
  std::vector<Coalition> winners;
  for (Edge e : g.edges()) winners.push_back(Coalition::of({e.u, e.v}));
  const AlphaResult r = solve_alpha_lp(g.order(), winners, losers);
  d.alpha = r.alpha;
  d.yes = strict ? r.alpha < a : r.alpha <= a;
  return d;
}

}  // namespace tg
