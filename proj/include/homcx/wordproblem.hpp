#ifndef HOMCX_WORDPROBLEM_HPP
#define HOMCX_WORDPROBLEM_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "homcx/hall.hpp"
#include "homcx/presentation.hpp"
#include "homcx/word.hpp"

namespace homcx {

// Series with integer coefficients on noncommutative monomials of degree
// <= cap over `rank` variables. Sending x_i to 1 + X_i decides the word
// problem of the free nilpotent group of class `cap` exactly (the kernel of
// the evaluation is the (cap+1)-st term of the lower central series), and
// the graded pieces give Hall-basis normal forms.
struct TensorSeries {
  std::vector<BigInt> coef;
};

class TensorContext {
public:
  TensorContext(int rank, int cap);

  int rank() const { return rank_; }
  int cap() const { return cap_; }
  std::int64_t monomials() const { return offset_[cap_ + 1]; }
  std::int64_t degree_begin(int d) const { return offset_[d]; }
  std::int64_t degree_end(int d) const { return offset_[d + 1]; }

  TensorSeries one() const;
  TensorSeries mul(const TensorSeries& a, const TensorSeries& b) const;
  // Group-like series only (constant term 1).
  TensorSeries invert(const TensorSeries& s) const;
  TensorSeries pow(const TensorSeries& s, const BigInt& e) const;
  TensorSeries generator_series(int g, const BigInt& e) const; // (1+X_g)^e
  TensorSeries eval_word(const Word& w) const;
  // Bracket expansion [u,v] -> uv - vu of a basis element, homogeneous of
  // degree = weight.
  TensorSeries lie_element(const HallBasis& basis, int idx) const;
  bool is_one(const TensorSeries& s) const;

private:
  int rank_;
  int cap_;
  std::vector<std::int64_t> offset_;
};

// Hall-basis normal form of w in the free nilpotent group of the basis'
// rank and class, computed by stripping graded pieces of the series.
NilpotentNormalForm collect(const Word& w, const HallBasisPtr& basis);
NilpotentNormalForm collect_series(const TensorContext& ctx, TensorSeries s,
                                   const HallBasisPtr& basis);
TensorSeries series_of_normal_form(const TensorContext& ctx,
                                   const NilpotentNormalForm& nf);
NilpotentNormalForm nf_multiply(const NilpotentNormalForm& a,
                                const NilpotentNormalForm& b);

// Word problem of the free metabelian group F/F'' via abelianized Fox
// derivatives (the Magnus embedding into Z^rank wr Z^rank is faithful).
bool metabelian_is_identity(int rank, const Word& w);

// All abelianized Fox derivatives of w; exponent vector -> coefficient.
using LaurentPoly = std::map<std::vector<int>, std::int64_t>;
std::vector<LaurentPoly> fox_derivatives(int rank, const Word& w);

} // namespace homcx

#endif
