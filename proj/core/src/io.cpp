#include "tg/io.hpp"

#include <fstream>
#include <sstream>

#include "tg/error.hpp"

namespace tg::io {

namespace {

json members(Coalition c) {
  json out = json::array();
  for (int m : c.members()) out.push_back(m + 1);
  return out;
}

json vertices(const VertexSet& s) {
  json out = json::array();
  for (int v : s) out.push_back(v + 1);
  return out;
}

json rationals(const std::vector<Rational>& values) {
  json out = json::array();
  for (const Rational& q : values) out.push_back(to_string(q));
  return out;
}

const json& field(const json& j, const char* key) {
  if (!j.is_object()) throw InvalidInput("expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) throw InvalidInput(std::string("missing key '") + key + "'");
  return *it;
}

int integer(const json& j, const std::string& what) {
  if (!j.is_number_integer()) throw InvalidInput(what + " must be an integer");
  const auto v = j.get<long long>();
  if (v < INT32_MIN || v > INT32_MAX) throw InvalidInput(what + " is out of range");
  return static_cast<int>(v);
}

Rational rational(const json& j, const std::string& what) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw InvalidInput(what + " must be a \"num/den\" string");
}

// 1-based id list -> 0-based ids, range-checked against n.
std::vector<int> id_list(const json& j, int n, const std::string& what) {
  if (!j.is_array()) throw InvalidInput(what + " must be an array");
  std::vector<int> out;
  for (const json& x : j) {
    const int id = integer(x, what + " entry");
    if (id < 1 || id > n) {
      throw InvalidInput(what + " mentions " + std::to_string(id) + ", outside 1.." +
                         std::to_string(n));
    }
    out.push_back(id - 1);
  }
  return out;
}

}  // namespace

json to_json(const SimpleGame& game) {
  json winners = json::array();
  for (Coalition c : game.minimal_winning()) winners.push_back(members(c));
  return {{"n", game.players()}, {"minimal_winning", winners}};
}

json to_json(const Graph& g) {
  json edges = json::array();
  for (Edge e : g.edges()) edges.push_back({e.u + 1, e.v + 1});
  return {{"n", g.order()}, {"edges", edges}};
}

json to_json(const Certificate& cert) {
  return {{"scheme", cert.scheme},
          {"payoff", rationals(cert.payoff.values())},
          {"bound", to_string(cert.bound)},
          {"normalization", std::string(to_string(cert.normalization))}};
}

json to_json(const AlphaResult& result) {
  json losing = json::array(), winning = json::array();
  for (Coalition c : result.binding_losing) losing.push_back(members(c));
  for (Coalition c : result.binding_winning) winning.push_back(members(c));
  return {{"alpha", to_string(result.alpha)},
          {"payoff", rationals(result.payoff.values())},
          {"binding_losing", losing},
          {"binding_winning", winning}};
}

json to_json(const WellSpreadDecomposition& d) {
  json parts = json::array();
  for (const auto& part : d.parts) {
    parts.push_back({{"A", vertices(part.a_part)},
                     {"B", vertices(part.b_part)},
                     {"lambda", to_string(part.lambda)}});
  }
  return {{"parts", parts}};
}

json to_json(const GEDecomposition& ge) {
  json odd = json::array(), even = json::array();
  for (const auto& c : ge.odd_components) odd.push_back(vertices(c));
  for (const auto& c : ge.even_components) even.push_back(vertices(c));
  return {{"tutte_set", vertices(ge.tutte_set)},
          {"odd_components", odd},
          {"even_components", even},
          {"exposed_set", vertices(ge.exposed_set)}};
}

SimpleGame game_from_json(const json& j) {
  const int n = integer(field(j, "n"), "n");
  if (n < 1 || n > kMaxPlayers) {
    throw InvalidInput("n must be in 1.." + std::to_string(kMaxPlayers));
  }
  const json& list = field(j, "minimal_winning");
  if (!list.is_array()) throw InvalidInput("minimal_winning must be an array");
  std::vector<Coalition> winners;
  for (const json& c : list) {
    const std::vector<int> ids = id_list(c, n, "coalition");
    Coalition mask;
    for (int id : ids) {
      if (mask.contains(id)) {
        throw InvalidInput("coalition repeats player " + std::to_string(id + 1));
      }
      mask = mask.with(id);
    }
    winners.push_back(mask);
  }
  return SimpleGame(n, std::move(winners));
}

Graph graph_from_json(const json& j) {
  const int n = integer(field(j, "n"), "n");
  if (n < 0 || n > kMaxPlayers) {
    throw InvalidInput("n must be in 0.." + std::to_string(kMaxPlayers));
  }
  const json& list = field(j, "edges");
  if (!list.is_array()) throw InvalidInput("edges must be an array");
  std::vector<Edge> edges;
  for (const json& e : list) {
    const std::vector<int> ends = id_list(e, n, "edge");
    if (ends.size() != 2) throw InvalidInput("an edge needs exactly two endpoints");
    edges.push_back({ends[0], ends[1]});
  }
  return Graph(n, edges);
}

Certificate certificate_from_json(const json& j) {
  Certificate cert;
  const json& scheme = field(j, "scheme");
  if (!scheme.is_string()) throw InvalidInput("scheme must be a string");
  cert.scheme = scheme.get<std::string>();
  const json& payoff = field(j, "payoff");
  if (!payoff.is_array()) throw InvalidInput("payoff must be an array");
  std::vector<Rational> values;
  for (const json& x : payoff) values.push_back(rational(x, "payoff entry"));
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] < 0) {
      throw InvalidInput("payoff of player " + std::to_string(i + 1) + " is negative");
    }
  }
  cert.payoff = PayoffVector(std::move(values));
  cert.bound = rational(field(j, "bound"), "bound");
  if (cert.bound < 0) throw InvalidInput("bound is negative");
  if (j.contains("normalization")) {
    const json& norm = j.at("normalization");
    if (!norm.is_string()) throw InvalidInput("normalization must be a string");
    cert.normalization = parse_normalization(norm.get<std::string>());
  }
  return cert;
}

json read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InvalidInput(path.string() + ": " + e.what());
  }
}

std::string dump(const json& j) { return j.dump() + "\n"; }

void write_file(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write " + path.string());
  out << dump(j);
}

}  // namespace tg::io
