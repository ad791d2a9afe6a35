#include <algorithm>
#include <stdexcept>
#include <string>

#include "tg/graph.hpp"

namespace tg {

namespace {

std::string set_name(const VertexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i] + 1);
  }
  return out + "}";
}

bool has_perfect_matching(const Graph& g) {
  return 2 * max_matching_general(g).size == static_cast<std::size_t>(g.order());
}

}  // namespace

GEDecomposition gallai_edmonds(const Graph& g) {
  const int n = g.order();
  const std::size_t nu = max_matching_general(g).size;

  GEDecomposition ge;
  std::vector<char> in_d(n, 0), in_a(n, 0);
  for (int v = 0; v < n; ++v) {
    // v is missed by some maximum matching iff deleting it keeps nu.
    if (max_matching_general(g.without(v)).size == nu) {
      in_d[v] = 1;
      ge.exposed_set.push_back(v);
    }
  }
  for (int v = 0; v < n; ++v) {
    if (in_d[v]) continue;
    for (int w : g.neighbors(v)) {
      if (in_d[w]) {
        in_a[v] = 1;
        break;
      }
    }
    if (in_a[v]) ge.tutte_set.push_back(v);
  }

  VertexSet rest;
  for (int v = 0; v < n; ++v) {
    if (!in_a[v]) rest.push_back(v);
  }
  const Graph reduced = g.induced(rest);
  for (const VertexSet& local : reduced.components()) {
    VertexSet comp;
    bool meets_d = false;
    for (int k : local) {
      comp.push_back(rest[k]);
      meets_d = meets_d || in_d[rest[k]];
    }
    (meets_d ? ge.odd_components : ge.even_components).push_back(std::move(comp));
  }

  if (std::string err = check_gallai_edmonds(g, ge); !err.empty()) {
    throw std::logic_error("Gallai-Edmonds invariant violated: " + err);
  }
  return ge;
}

std::string check_gallai_edmonds(const Graph& g, const GEDecomposition& ge) {
  const int n = g.order();
  std::vector<int> owner(n, -1);  // 0 = A, 1 = odd, 2 = even
  auto claim = [&](const VertexSet& s, int tag) -> std::string {
    for (int v : s) {
      if (v < 0 || v >= n) return "vertex out of range";
      if (owner[v] >= 0) return "vertex " + std::to_string(v + 1) + " in two parts";
      owner[v] = tag;
    }
    return {};
  };
  if (auto e = claim(ge.tutte_set, 0); !e.empty()) return e;
  for (const auto& c : ge.odd_components) {
    if (auto e = claim(c, 1); !e.empty()) return e;
  }
  for (const auto& c : ge.even_components) {
    if (auto e = claim(c, 2); !e.empty()) return e;
  }
  for (int v = 0; v < n; ++v) {
    if (owner[v] < 0) return "vertex " + std::to_string(v + 1) + " in no part";
  }

  std::size_t expected = ge.tutte_set.size();
  for (const auto& c : ge.even_components) {
    if (c.size() % 2 != 0) return "even component " + set_name(c) + " has odd size";
    if (!has_perfect_matching(g.induced(c))) {
      return "even component " + set_name(c) + " has no perfect matching";
    }
    expected += c.size() / 2;
  }
  VertexSet exposed_union;
  for (const auto& c : ge.odd_components) {
    if (c.size() % 2 != 1) return "odd component " + set_name(c) + " has even size";
    const Graph h = g.induced(c);
    for (int k = 0; k < h.order(); ++k) {
      if (!has_perfect_matching(h.without(k))) {
        return "odd component " + set_name(c) + " is not factor-critical";
      }
    }
    expected += (c.size() - 1) / 2;
    exposed_union.insert(exposed_union.end(), c.begin(), c.end());
  }
  std::sort(exposed_union.begin(), exposed_union.end());
  if (exposed_union != ge.exposed_set) return "odd components do not cover D exactly";

  // A into distinct odd components.
  std::vector<int> comp_of(n, -1);
  for (std::size_t k = 0; k < ge.odd_components.size(); ++k) {
    for (int v : ge.odd_components[k]) comp_of[v] = static_cast<int>(k);
  }
  std::vector<std::pair<int, int>> contracted;
  for (std::size_t i = 0; i < ge.tutte_set.size(); ++i) {
    std::vector<int> seen;
    for (int w : g.neighbors(ge.tutte_set[i])) {
      if (comp_of[w] >= 0) seen.push_back(comp_of[w]);
    }
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    for (int k : seen) contracted.emplace_back(static_cast<int>(i), k);
  }
  const auto m = max_matching_bipartite(BipartiteGraph::from_local(
      static_cast<int>(ge.tutte_set.size()), static_cast<int>(ge.odd_components.size()),
      contracted));
  if (m.size != ge.tutte_set.size()) {
    return "Tutte set " + set_name(ge.tutte_set) + " cannot be matched into odd components";
  }
  if (expected != max_matching_general(g).size) {
    return "decomposition does not account for a maximum matching";
  }
  return {};
}

}  // namespace tg
