#ifndef HOMCX_HOMOLOGY_HPP
#define HOMCX_HOMOLOGY_HPP

#include <vector>

#include "homcx/homspace.hpp"
#include "homcx/intmat.hpp"

namespace homcx {

struct SmithResult {
  std::vector<BigInt> invariants; // d_1 | d_2 | ..., all positive
  int rank = 0;
};

// Invariant factors by unimodular row/column reduction with
// smallest-nonzero pivots; for matrices up to 50x50 the accumulated
// transforms are re-multiplied against the diagonal as a self-check.
SmithResult smith_normal_form(const IntMat& m);

struct HomologyGroup {
  std::int64_t betti = 0;
  std::vector<BigInt> torsion; // each >= 2, dividing the next
};

// Chain complex on the nondegenerate (tier-0) simplices; boundary[k] maps
// dimension k to k-1, with faces landing in degenerate simplices dropped.
struct ChainComplex {
  int max_dim = 0;
  std::vector<std::vector<int>> basis; // per dim: tuple indices, tier 0
  std::vector<IntMat> boundary;        // boundary[k] for k = 1..max_dim
};

ChainComplex normalized_complex(const SimplicialHomSpace& space, int max_dim,
                                int basis_budget = 20000);

// H_k for k = 0..max_dim-1 (the top computed dimension lacks incoming
// boundaries and is not returned).
std::vector<HomologyGroup> homology(const ChainComplex& cc);

std::int64_t euler_truncated(const ChainComplex& cc);

// Connected components of the vertices-and-edges graph of the space.
int component_count(const SimplicialHomSpace& space);

// Invariant factors (>= 2) of a finite abelian group from its table.
std::vector<BigInt> abelian_invariants(const FiniteGroup& q);
// Invariant factors of G/[G,G].
std::vector<BigInt> abelianization_invariants(const FiniteGroup& g);

} // namespace homcx

#endif
