#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>

#include "tg/alpha.hpp"
#include "tg/decide.hpp"
#include "tg/error.hpp"
#include "tg/generators.hpp"
#include "tg/io.hpp"
#include "tg/payoff.hpp"
#include "tg/well_spread.hpp"

using namespace tg;
using io::json;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitInvalid = 2;

void emit(const json& j, const std::string& out) {
  if (out.empty()) {
    std::cout << io::dump(j);
  } else {
    io::write_file(out, j);
  }
}

std::string edges_text(const std::vector<Edge>& edges) {
  std::string s;
  for (Edge e : edges) {
    if (!s.empty()) s += " ";
    s += "(" + std::to_string(e.u + 1) + "," + std::to_string(e.v + 1) + ")";
  }
  return s;
}

// Constraint generation on the preprocessed game, lifted back.
AlphaResult alpha_cg(const SimpleGame& game) {
  const Preprocessed pre = preprocess(game);
  if (!pre.reduced) return alpha_exact(game);
  if (!pre.reduced->is_graphic()) {
    throw PreconditionViolation("--method cg needs a graphic game (all minimal winners pairs)");
  }
  const Graph g = pair_graph(*pre.reduced);
  const auto colours = g.two_colouring();
  if (!colours) throw PreconditionViolation("--method cg needs a bipartite graph");
  VertexSet a_side;
  for (int v = 0; v < g.order(); ++v) {
    if ((*colours)[v] == 0) a_side.push_back(v);
  }
  const AlphaResult r = alpha_bipartite_cg(BipartiteGraph::from_graph(g, a_side));
  AlphaResult lifted = r;
  lifted.payoff = pre.lift(r.payoff);
  lifted.binding_losing.clear();
  lifted.binding_winning.clear();
  for (Coalition c : r.binding_losing) lifted.binding_losing.push_back(pre.lift(c));
  for (Coalition c : r.binding_winning) lifted.binding_winning.push_back(pre.lift(c));
  std::sort(lifted.binding_losing.begin(), lifted.binding_losing.end());
  std::sort(lifted.binding_winning.begin(), lifted.binding_winning.end());
  return lifted;
}

int cmd_alpha(const std::string& file, const std::string& method, const std::string& out) {
  const SimpleGame game = io::game_from_json(io::read_file(file));
  const EnumerationLimits limits = EnumerationLimits::from_environment();
  AlphaResult r;
  if (method == "exact") {
    r = alpha_exact(game, limits);
  } else if (method == "brute") {
    r = alpha_brute(game);
  } else {
    r = alpha_cg(game);
  }
  std::cout << "alpha = " << to_string(r.alpha) << " (" << to_decimal(r.alpha) << ")\n";
  std::cout << "class = " << to_string(classify(r.alpha)) << "\n";
  if (!out.empty()) io::write_file(out, io::to_json(r));
  return 0;
}

Certificate quarter_graph(const SimpleGame& game) {
  const Preprocessed pre = preprocess(game);
  if (!pre.reduced) {
    throw PreconditionViolation("every minimal winning coalition is a singleton");
  }
  if (!pre.reduced->is_graphic()) {
    throw PreconditionViolation("quarter-graph needs a graphic game (all minimal winners pairs)");
  }
  Certificate c = payoff_graph_quarter(pair_graph(*pre.reduced));
  c.payoff = pre.lift(c.payoff);
  c.bound = fraction(game.players(), 4);
  return c;
}

int cmd_certify(const std::string& file, const std::string& scheme, const std::string& out) {
  const SimpleGame game = io::game_from_json(io::read_file(file));
  Certificate c;
  if (scheme == "quarter-graph") {
    c = quarter_graph(game);
  } else if (scheme == "no-size3") {
    c = payoff_no_size3(game);
  } else if (scheme == "all-size3") {
    c = payoff_all_size3(game);
  } else if (scheme == "two-sevenths") {
    c = payoff_two_sevenths(game);
  } else {
    const auto order = desirability_order(game, EnumerationLimits::from_environment());
    if (!order) throw PreconditionViolation("game is not complete");
    c = payoff_complete(game, *order);
    const SqrtLogCheck check = check_sqrt_n_ln_n(c.bound, game.players());
    std::cerr << "ratio " << to_string(c.bound) << " ~ " << check.ratio
              << (check.within ? " <= " : " > ") << "sqrt(n) ln n ~ " << check.bound
              << (check.within ? " (within bound up to rounding)" : "") << "\n";
  }
  emit(io::to_json(c), out);
  if (!out.empty()) std::cout << "wrote " << c.scheme << " certificate to " << out << "\n";
  return 0;
}

int cmd_verify(const std::string& game_file, const std::string& cert_file) {
  const SimpleGame game = io::game_from_json(io::read_file(game_file));
  const Certificate cert = io::certificate_from_json(io::read_file(cert_file));
  const Verdict v = verify_certificate(game, cert, EnumerationLimits::from_environment());
  if (!v.pass) {
    std::cout << "FAIL: " << v.reason << "\n";
    return kExitFail;
  }
  std::cout << "PASS: max p(L) = " << to_string(v.max_losing)
            << ", min p(W) = " << to_string(v.min_winning) << ", bound = " << to_string(cert.bound)
            << "\n";
  return 0;
}

int cmd_decompose(const std::string& file) {
  const Graph g = io::graph_from_json(io::read_file(file));
  const Contraction c = contract_odd_components(g);
  const WellSpreadDecomposition d = decompose(c.graph);
  // Contracted B vertices are reported by their odd component.
  json parts = json::array();
  for (const auto& part : d.parts) {
    json a = json::array(), b = json::array();
    for (int v : part.a_part) a.push_back(c.ge.tutte_set[c.graph.local_a(v)] + 1);
    for (int v : part.b_part) {
      json comp = json::array();
      for (int w : c.ge.odd_components[c.graph.local_b(v)]) comp.push_back(w + 1);
      b.push_back(comp);
    }
    parts.push_back({{"A", a}, {"B", b}, {"lambda", to_string(part.lambda)}});
  }
  std::cout << io::dump({{"gallai_edmonds", io::to_json(c.ge)}, {"well_spread", {{"parts", parts}}}});
  return 0;
}

int cmd_decide(const std::string& file, const std::string& a_text, bool strict) {
  const Graph g = io::graph_from_json(io::read_file(file));
  const Rational a = parse_rational(a_text);
  const Decision d = decide_alpha_le(g, a, strict);
  std::cout << (d.yes ? "yes" : "no") << ": alpha " << (strict ? "< " : "<= ") << to_string(a)
            << (d.yes ? " holds" : " fails") << "\n";
  std::cout << "k = " << d.k << "\n";
  if (d.witness) {
    std::cout << "induced " << d.k << "P2: " << edges_text(*d.witness) << "\n";
  } else {
    std::cout << "graph is " << d.k << "P2-free; " << d.maximal_independent_sets
              << " maximal independent sets\n";
    std::cout << "alpha = " << to_string(*d.alpha) << " (" << to_decimal(*d.alpha) << ")\n";
  }
  return 0;
}

std::vector<Rational> parse_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Critical threshold values of simple games"};
  app.require_subcommand(1);

  std::string file, second, out, method = "exact", scheme, a_text, weights, quota;
  bool strict = false;
  int n = 0, count = 0;
  std::uint64_t seed = 0;

  auto* alpha = app.add_subcommand("alpha", "exact alpha of a game");
  alpha->add_option("game", file, "game JSON")->required();
  alpha->add_option("--method", method)->check(CLI::IsMember({"exact", "brute", "cg"}));
  alpha->add_option("--out", out, "write the AlphaResult JSON here");

  auto* certify = app.add_subcommand("certify", "payoff certificate from one of the schemes");
  certify->add_option("game", file, "game JSON")->required();
  certify->add_option("--scheme", scheme)
      ->required()
      ->check(CLI::IsMember({"quarter-graph", "no-size3", "all-size3", "two-sevenths", "complete"}));
  certify->add_option("--out", out, "write the certificate here instead of stdout");

  auto* verify = app.add_subcommand("verify", "check a certificate against a game");
  verify->add_option("game", file, "game JSON")->required();
  verify->add_option("certificate", second, "certificate JSON")->required();

  auto* decomp = app.add_subcommand("decompose", "Gallai-Edmonds and well-spread decomposition");
  decomp->add_option("graph", file, "graph JSON")->required();

  auto* decide = app.add_subcommand("decide", "is alpha <= a for a graphic game?");
  decide->add_option("graph", file, "graph JSON")->required();
  decide->add_option("--a", a_text, "threshold num/den")->required();
  decide->add_flag("--strict", strict, "decide alpha < a instead");

  auto* generate = app.add_subcommand("generate", "write a generated game");
  generate->require_subcommand(1);
  generate->add_option("--out", out, "write here instead of stdout");
  auto* gen_cycle = generate->add_subcommand("cycle", "graphic game of the n-cycle");
  gen_cycle->add_option("--n", n)->required();
  auto* gen_product = generate->add_subcommand("product", "strong product with P2");
  gen_product->add_option("graph", file, "graph JSON")->required();
  auto* gen_random = generate->add_subcommand("random", "random antichain");
  gen_random->add_option("--n", n)->required();
  gen_random->add_option("--count", count)->required();
  gen_random->add_option("--seed", seed)->required();
  auto* gen_wvg = generate->add_subcommand("wvg", "weighted voting game");
  gen_wvg->add_option("--weights", weights, "comma separated")->required();
  gen_wvg->add_option("--quota", quota)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalid;
  }

  try {
    if (*alpha) return cmd_alpha(file, method, out);
    if (*certify) return cmd_certify(file, scheme, out);
    if (*verify) return cmd_verify(file, second);
    if (*decomp) return cmd_decompose(file);
    if (*decide) return cmd_decide(file, a_text, strict);
    json j;
    if (*gen_cycle) {
      j = io::to_json(cycle_game(n));
    } else if (*gen_product) {
      const ProductInstance p = strong_product_game(io::graph_from_json(io::read_file(file)));
      j = io::to_json(p.game);
      j["expected_alpha"] = to_string(p.expected_alpha);
    } else if (*gen_random) {
      const GeneratedGame g = random_monotone_game(n, count, seed);
      if (g.warning) std::cerr << "warning: " << *g.warning << "\n";
      j = io::to_json(g.game);
    } else {
      j = io::to_json(weighted_voting_game(parse_list(weights), parse_rational(quota)));
    }
    emit(j, out);
    return 0;
  } catch (const InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
  } catch (const PreconditionViolation& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
  } catch (const LimitExceeded& e) {
    std::cerr << "limit exceeded: " << e.what() << "\n";
  }
  return kExitInvalid;
}
