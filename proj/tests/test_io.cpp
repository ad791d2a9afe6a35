#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>

#include "tg/error.hpp"
#include "tg/generators.hpp"
#include "tg/io.hpp"

using namespace tg;
using io::json;

TEST_CASE("game json round trip") {
  const SimpleGame c4 = cycle_game(4);
  const json j = io::to_json(c4);
  CHECK(j.dump() == R"({"minimal_winning":[[1,2],[1,4],[2,3],[3,4]],"n":4})");
  CHECK(io::game_from_json(j) == c4);
  const json extra = json::parse(R"({"n":2,"minimal_winning":[[2,1]],"expected_alpha":"1/2"})");
  CHECK(io::game_from_json(extra) == SimpleGame(2, {Coalition::of({0, 1})}));
}

TEST_CASE("game json errors") {
  CHECK_THROWS_AS(io::game_from_json(json::parse(R"({"n":2})")), InvalidInput);
  CHECK_THROWS_AS(io::game_from_json(json::parse(R"({"n":2,"minimal_winning":[[1,3]]})")),
                  InvalidInput);
  CHECK_THROWS_AS(io::game_from_json(json::parse(R"({"n":2,"minimal_winning":[[1,1]]})")),
                  InvalidInput);
  CHECK_THROWS_AS(io::game_from_json(json::parse(R"({"n":"2","minimal_winning":[[1]]})")),
                  InvalidInput);
  CHECK_THROWS_AS(io::game_from_json(json::parse(R"({"n":2,"minimal_winning":[[1],[1,2]]})")),
                  InvalidInput);
  CHECK_THROWS_AS(io::game_from_json(json::parse("[]")), InvalidInput);
}

TEST_CASE("graph json") {
  const json j = json::parse(R"({"n":3,"edges":[[3,1],[1,2]]})");
  const Graph g = io::graph_from_json(j);
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {0, 2}});
  CHECK(io::to_json(g).dump() == R"({"edges":[[1,2],[1,3]],"n":3})");
  CHECK_THROWS_AS(io::graph_from_json(json::parse(R"({"n":3,"edges":[[1,1]]})")), InvalidInput);
  CHECK_THROWS_AS(io::graph_from_json(json::parse(R"({"n":3,"edges":[[1,2,3]]})")), InvalidInput);
  CHECK_THROWS_AS(io::graph_from_json(json::parse(R"({"n":3,"edges":[[0,2]]})")), InvalidInput);
}

TEST_CASE("certificate json") {
  const Certificate c{"quarter-graph", PayoffVector(std::vector<Rational>{fraction(1, 2), 1}),
                      fraction(3, 4), Normalization::ratio};
  const json j = io::to_json(c);
  CHECK(j.dump() ==
        R"({"bound":"3/4","normalization":"ratio","payoff":["1/2","1/1"],"scheme":"quarter-graph"})");
  const Certificate back = io::certificate_from_json(j);
  CHECK(back.payoff == c.payoff);
  CHECK(back.bound == c.bound);
  CHECK(back.normalization == c.normalization);
  CHECK(back.scheme == c.scheme);
  const json defaults = json::parse(R"({"scheme":"x","payoff":["1/2",1],"bound":"1"})");
  CHECK(io::certificate_from_json(defaults).normalization == Normalization::min_winning_ge_1);
  CHECK_THROWS_AS(io::certificate_from_json(json::parse(R"({"scheme":"x","payoff":["-1/2"],"bound":"1"})")),
                  InvalidInput);
  CHECK_THROWS_AS(io::certificate_from_json(json::parse(R"({"scheme":"x","payoff":[0.5],"bound":"1"})")),
                  InvalidInput);
  CHECK_THROWS_AS(io::certificate_from_json(json::parse(R"({"scheme":"x","payoff":[],"bound":"1/0"})")),
                  InvalidInput);
}

TEST_CASE("decomposition and alpha json") {
  WellSpreadDecomposition d;
  d.parts.push_back({{0}, {2}, fraction(1, 2)});
  CHECK(io::to_json(d).dump() == R"({"parts":[{"A":[1],"B":[3],"lambda":"1/2"}]})");
  AlphaResult r;
  r.alpha = 1;
  r.payoff = PayoffVector(2, fraction(1, 2));
  r.binding_losing = {Coalition::of({0})};
  CHECK(io::to_json(r).dump() ==
        R"({"alpha":"1/1","binding_losing":[[1]],"binding_winning":[],"payoff":["1/2","1/2"]})");
}

TEST_CASE("files") {
  const auto path = std::filesystem::temp_directory_path() / "tg_io_test.json";
  io::write_file(path, io::to_json(cycle_game(4)));
  CHECK(io::game_from_json(io::read_file(path)) == cycle_game(4));
  {
    std::ofstream bad(path);
    bad << "{ not json";
  }
  CHECK_THROWS_AS(io::read_file(path), InvalidInput);
  std::filesystem::remove(path);
  CHECK_THROWS_AS(io::read_file(path), InvalidInput);
}
