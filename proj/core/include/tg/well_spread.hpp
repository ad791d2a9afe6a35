#pragma once

#include <string>
#include <vector>

#include "tg/graph.hpp"
#include "tg/rational.hpp"

namespace tg {

/// One binary-search probe: does some S ⊆ A have |S|/|N(S)| > p/q?
struct RatioProbe {
  int p = 0;
  int q = 0;
  bool violator = false;
};

struct RatioResult {
  /// Vertex ids in A. Among all maximisers this is the largest one (the
  /// maximisers are closed under union).
  VertexSet subset;
  Rational ratio;
};

/// Sorted distinct fractions p/q in (0, 1] with 1 <= p, q <= n.
std::vector<Rational> candidate_fractions(int n);

/// Hall test on the blow-up with q copies of A and p copies of B: true iff
/// the copies of A cannot be matched completely.
bool blow_up_has_hall_violator(const BipartiteGraph& g, int p, int q);

/// max |S|/|N(S)| over nonempty S ⊆ A by binary search over
/// candidate_fractions(|A|+|B|) with the blow-up Hall test. Throws
/// PreconditionViolation unless A is nonempty and matchable into B.
RatioResult max_ratio_subset(const BipartiteGraph& g, std::vector<RatioProbe>* trace = nullptr);

struct WellSpreadPart {
  VertexSet a_part;
  VertexSet b_part;
  /// |A_i| / (|A_i| + |B_i|); zero exactly for the trailing part of
  /// isolated B vertices.
  Rational lambda;
};

struct WellSpreadDecomposition {
  std::vector<WellSpreadPart> parts;
};

/// Peels (S, N(S)) for a maximum-cardinality ratio maximiser S until A is
/// exhausted; leftover (isolated) B vertices form a final part with
/// lambda = 0. Invariants are checked before returning.
WellSpreadDecomposition decompose(const BipartiteGraph& g);

/// Empty string when all decomposition invariants hold.
std::string check_decomposition(const BipartiteGraph& g, const WellSpreadDecomposition& d);

/// max ratio <= |A|/|B|. Requires A nonempty.
bool is_well_spread(const BipartiteGraph& g);

/// Gallai-Edmonds decomposition with each odd component contracted to one
/// vertex: local A index i is ge.tutte_set[i], local B index k is
/// ge.odd_components[k]. Even components are left out.
struct Contraction {
  GEDecomposition ge;
  BipartiteGraph graph;
};

Contraction contract_odd_components(const Graph& g);

}  // namespace tg
