#ifndef HOMCX_HALL_HPP
#define HOMCX_HALL_HPP

#include <memory>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "homcx/word.hpp"

namespace homcx {

using BigInt = boost::multiprecision::cpp_int;

// Basic commutator: a leaf generator or a bracket [left, right] of earlier
// basis elements.
struct BasicCommutator {
  int weight = 1;
  int gen = -1;        // leaf generator index, -1 for brackets
  int left = -1;       // children as basis indices
  int right = -1;
};

// Hall basis of the free nilpotent group of the given rank and class.
// Convention: brackets [u,v] with u < v in basis order, and when
// v = [v1,v2] additionally u >= v1. Elements are ordered by weight and then
// by construction order, so weight-1 elements are exactly the generators
// and the first bracket on two generators is [a1,a2].
class HallBasis {
public:
  // Guarded at rank <= 4, cls <= 4; larger requests fail loudly.
  HallBasis(int rank, int cls);

  int rank() const { return rank_; }
  int cls() const { return cls_; }
  int size() const { return (int)elements_.size(); }
  const std::vector<BasicCommutator>& elements() const { return elements_; }

  Word expand(int idx) const;        // bracket as a word in the generators
  std::string describe(int idx) const; // e.g. "[a1,[a1,a2]]"
  int weight_begin(int w) const { return weight_begin_[w]; }
  int weight_end(int w) const { return weight_begin_[w + 1]; }

  static std::int64_t witt_number(int rank, int weight);

private:
  int rank_;
  int cls_;
  std::vector<BasicCommutator> elements_;
  std::vector<int> weight_begin_; // size cls+2
};

using HallBasisPtr = std::shared_ptr<const HallBasis>;
HallBasisPtr hall_basis(int rank, int cls);

// Normal form b_1^{e_1} ... b_k^{e_k} in basis order, exponents arbitrary
// precision.
struct NilpotentNormalForm {
  HallBasisPtr basis;
  std::vector<BigInt> exponents;

  friend bool operator==(const NilpotentNormalForm& a,
                         const NilpotentNormalForm& b) {
    return a.exponents == b.exponents;
  }
};

} // namespace homcx

#endif
