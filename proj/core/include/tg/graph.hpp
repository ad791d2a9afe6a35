#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "tg/game.hpp"
#include "tg/rational.hpp"

namespace tg {

/// Sorted 0-based vertex ids.
using VertexSet = std::vector<int>;
using VertexMask = std::uint64_t;

struct Edge {
  int u;
  int v;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on at most 64 vertices.
class Graph {
 public:
  explicit Graph(int vertices = 0);
  /// Throws InvalidInput on self-loops, duplicate edges or bad endpoints.
  Graph(int vertices, const std::vector<Edge>& edges);

  int order() const { return n_; }
  std::size_t size() const { return edges_.size(); }
  /// Normalised (u < v) and sorted.
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adjacency_[v]; }
  VertexMask neighbor_mask(int v) const { return masks_[v]; }
  bool adjacent(int u, int v) const { return (masks_[u] >> v) & 1U; }
  int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }
  bool has_isolated_vertex() const;

  /// Subgraph induced by `vertices` (ascending); vertex k of the result is
  /// vertices[k].
  Graph induced(const VertexSet& vertices) const;
  Graph without(int vertex) const;

  /// Connected components, each sorted, ordered by smallest member.
  std::vector<VertexSet> components() const;
  /// Side per vertex (0/1) if bipartite, colouring each component from its
  /// smallest vertex.
  std::optional<std::vector<int>> two_colouring() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<VertexMask> masks_;
};

/// Graph of the size-2 minimal winners (all players become vertices).
Graph pair_graph(const SimpleGame& game);
/// Graphic game whose minimal winners are the edges; requires >= 1 edge.
SimpleGame graphic_game(const Graph& g);

/// Bipartite graph with explicit sides. Vertices keep their ids
/// 0..order()-1; local indices into a_side()/b_side() are used by the
/// adjacency lists.
class BipartiteGraph {
 public:
  /// `a_side` and `b_side` must partition 0..vertices-1 and every edge must
  /// cross. Throws InvalidInput otherwise.
  BipartiteGraph(int vertices, VertexSet a_side, VertexSet b_side,
                 const std::vector<Edge>& edges);
  /// Sides given by A; B is the rest.
  static BipartiteGraph from_graph(const Graph& g, const VertexSet& a_side);
  /// Unlabelled graph with |A| = a_count, |B| = b_count; vertex ids are
  /// 0..a_count-1 for A and a_count.. for B. `edges` use local indices.
  static BipartiteGraph from_local(int a_count, int b_count,
                                   const std::vector<std::pair<int, int>>& edges);

  int order() const { return n_; }
  const VertexSet& a_side() const { return a_; }
  const VertexSet& b_side() const { return b_; }
  int a_count() const { return static_cast<int>(a_.size()); }
  int b_count() const { return static_cast<int>(b_.size()); }
  /// Local B indices adjacent to local A index i, ascending.
  const std::vector<int>& a_neighbors(int i) const { return a_adj_[i]; }
  const std::vector<int>& b_neighbors(int j) const { return b_adj_[j]; }
  std::size_t edge_count() const { return edge_count_; }
  /// Original-id edges (a, b).
  std::vector<Edge> edges() const;

  /// Local index lookups; -1 when the vertex is on the other side.
  int local_a(int vertex) const { return local_[vertex].first ? local_[vertex].second : -1; }
  int local_b(int vertex) const { return local_[vertex].first ? -1 : local_[vertex].second; }

  /// Induced subgraph on local subsets; vertex ids are preserved.
  BipartiteGraph induced_local(const std::vector<int>& a_local,
                               const std::vector<int>& b_local) const;

 private:
  BipartiteGraph() = default;
  void index();

  int n_ = 0;
  VertexSet a_;
  VertexSet b_;
  std::vector<std::vector<int>> a_adj_;
  std::vector<std::vector<int>> b_adj_;
  std::vector<std::pair<bool, int>> local_;  // (in A, local index)
  std::size_t edge_count_ = 0;
};

/// Maximum bipartite matching with a König vertex cover of equal size.
struct BipartiteMatching {
  std::size_t size = 0;
  /// mate_of_a[i] = local B index or -1.
  std::vector<int> mate_of_a;
  std::vector<int> mate_of_b;
  std::vector<int> cover_a;  // local indices
  std::vector<int> cover_b;
};

/// Hopcroft-Karp. The König cover is checked against the matching before
/// returning.
BipartiteMatching max_matching_bipartite(const BipartiteGraph& g);

/// Maximum matching in a general graph (Edmonds' blossom algorithm).
/// mate[v] = partner or -1.
struct Matching {
  std::size_t size = 0;
  std::vector<int> mate;
};

Matching max_matching_general(const Graph& g);

struct GEDecomposition {
  VertexSet tutte_set;                   // A
  std::vector<VertexSet> odd_components;  // components of G-A meeting D
  std::vector<VertexSet> even_components;
  VertexSet exposed_set;                 // D
};

/// Gallai-Edmonds decomposition; the structural properties are asserted
/// (std::logic_error on failure) before returning.
GEDecomposition gallai_edmonds(const Graph& g);

/// Checks every Gallai-Edmonds property; returns an empty string when all
/// hold, otherwise a description of the first failure.
std::string check_gallai_edmonds(const Graph& g, const GEDecomposition& ge);

/// Maximum-weight independent set by min-cut duality. `weights` is indexed
/// by vertex id and must be nonnegative.
struct WeightedSet {
  VertexSet vertices;
  Rational weight;
};

WeightedSet mwis_bipartite(const BipartiteGraph& g, const std::vector<Rational>& weights);

/// Calls `visit` once per maximal independent set (reverse search over
/// growing prefixes, polynomial delay). Stop early by returning false.
void enumerate_mis(const Graph& g, const std::function<bool(VertexMask)>& visit);
/// All maximal independent sets, sorted by their member lists.
std::vector<VertexSet> maximal_independent_sets(const Graph& g);

struct IndependentSet {
  VertexSet vertices;
  int size = 0;
};

/// Exact branch and bound.
IndependentSet max_independent_set_exact(const Graph& g);

/// k edges whose 2k endpoints induce exactly those k edges; the first such
/// k-tuple in lexicographic edge order, or nullopt.
std::optional<std::vector<Edge>> find_induced_kP2(const Graph& g, int k);

/// Strong product with P2: vertex i becomes i (first copy) and n+i (second).
Graph strong_product_p2(const Graph& g);

VertexSet to_vertex_set(VertexMask mask);
VertexMask to_mask(const VertexSet& vertices);
bool is_independent(const Graph& g, VertexMask set);

}  // namespace tg
