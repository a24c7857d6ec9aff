#ifndef HOMCX_IRIG_HPP
#define HOMCX_IRIG_HPP

#include <string>
#include <vector>

#include "homcx/intmat.hpp"

namespace homcx {

// Bijection of {1..k}; images kept 1-based to match the shuffle formulas.
struct Permutation {
  std::vector<int> images; // images[i-1] = sigma(i)

  int degree() const { return (int)images.size(); }
  int apply(int i) const { return images[i - 1]; } // 1-based
  static Permutation identity(int k);
  bool is_identity() const;
  friend bool operator==(const Permutation&, const Permutation&) = default;
};

Permutation compose_perm(const Permutation& first, const Permutation& then);
Permutation inverse_perm(const Permutation& p);

// Block shuffle on {1..m+n}: i -> n+i for i <= m, i -> i-m above.
Permutation tau(int m, int n);
// Tensor shuffle on {1..mn}: (i-1)n+j -> (j-1)m+i.
Permutation tau_times(int m, int n);

// P e_i = e_{sigma(i)}, so P A P^-1 carries entry (i,j) to (sigma(i), sigma(j)).
IntMat permutation_matrix(const Permutation& p);
IntMat conjugate_by(const Permutation& p, const IntMat& a);

IntMat block_sum(const IntMat& a, const IntMat& b);
IntMat kronecker(const IntMat& a, const IntMat& b);

// The recorded shuffle pi with
// pi . (A tensor (B + B')) = (A tensor B) + (A tensor B') for A m x m,
// B n x n, B' n' x n' (right distributivity needs no shuffle).
Permutation left_distributivity_shuffle(int m, int n, int nprime);

struct DiagramResult {
  std::string name;
  bool pass = true;
  std::string witness;
};

// The symmetry and distributivity diagrams on concrete matrices, exact.
std::vector<DiagramResult> bipermutative_check(const IntMat& a,
                                               const IntMat& aprime,
                                               const IntMat& b,
                                               const IntMat& bprime);

// Stabilization coherence: permutations agreeing on {1..m} act identically
// on identity-padded matrices.
DiagramResult coherence_check(const IntMat& a, const Permutation& sigma,
                              const Permutation& sigma_prime);

} // namespace homcx

#endif
