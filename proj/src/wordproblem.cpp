#include "homcx/wordproblem.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include "homcx/error.hpp"

namespace homcx {

using BigRat = boost::multiprecision::cpp_rational;

TensorContext::TensorContext(int rank, int cap) : rank_(rank), cap_(cap) {
  if (rank < 0 || cap < 0)
    fail(ErrorCode::ConfigError, "tensor context: bad rank/cap");
  offset_.assign(cap + 2, 0);
  std::int64_t pw = 1;
  for (int d = 0; d <= cap; ++d) {
    offset_[d + 1] = offset_[d] + pw;
    pw *= rank;
    if (offset_[d + 1] > 2000000)
      fail(ErrorCode::SizeGuardExceeded,
           "tensor context: monomial count exceeds guard");
  }
}

TensorSeries TensorContext::one() const {
  TensorSeries s;
  s.coef.assign(monomials(), BigInt(0));
  s.coef[0] = 1;
  return s;
}

TensorSeries TensorContext::mul(const TensorSeries& a,
                                const TensorSeries& b) const {
  TensorSeries out;
  out.coef.assign(monomials(), BigInt(0));
  for (int da = 0; da <= cap_; ++da) {
    std::int64_t abeg = offset_[da], aend = offset_[da + 1];
    for (std::int64_t ia = abeg; ia < aend; ++ia) {
      if (a.coef[ia] == 0) continue;
      std::int64_t acode = ia - abeg;
      for (int db = 0; da + db <= cap_; ++db) {
        std::int64_t bbeg = offset_[db], bend = offset_[db + 1];
        std::int64_t block = bend - bbeg; // rank^db
        std::int64_t target = offset_[da + db] + acode * block;
        for (std::int64_t ib = bbeg; ib < bend; ++ib) {
          if (b.coef[ib] == 0) continue;
          out.coef[target + (ib - bbeg)] += a.coef[ia] * b.coef[ib];
        }
      }
    }
  }
  return out;
}

TensorSeries TensorContext::invert(const TensorSeries& s) const {
  if (s.coef.empty() || s.coef[0] != 1)
    fail(ErrorCode::Internal, "invert: series is not group-like");
  // (1 + N)^-1 = sum (-N)^k
  TensorSeries n = s;
  n.coef[0] = 0;
  for (auto& c : n.coef) c = -c;
  TensorSeries acc = one();
  TensorSeries term = one();
  for (int k = 1; k <= cap_; ++k) {
    term = mul(term, n);
    for (std::int64_t i = 0; i < monomials(); ++i) acc.coef[i] += term.coef[i];
  }
  return acc;
}

TensorSeries TensorContext::pow(const TensorSeries& s, const BigInt& e) const {
  BigInt k = e;
  TensorSeries base = s;
  if (k < 0) {
    base = invert(s);
    k = -k;
  }
  TensorSeries acc = one();
  while (k > 0) {
    if ((k & 1) != 0) acc = mul(acc, base);
    k >>= 1;
    if (k > 0) base = mul(base, base);
  }
  return acc;
}

TensorSeries TensorContext::generator_series(int g, const BigInt& e) const {
  if (g < 0 || g >= rank_)
    fail(ErrorCode::RankMismatch, "generator index beyond series rank");
  TensorSeries s;
  s.coef.assign(monomials(), BigInt(0));
  // (1+X)^e = sum binom(e,k) X^k, exact for any integer e.
  BigInt binom = 1;
  for (int k = 0; k <= cap_; ++k) {
    if (k > 0) {
      binom *= (e - (k - 1));
      binom /= k;
    }
    // X_g^k is the degree-k monomial with all letters g.
    std::int64_t code = 0;
    for (int t = 0; t < k; ++t) code = code * rank_ + g;
    s.coef[offset_[k] + code] = binom;
  }
  return s;
}

TensorSeries TensorContext::eval_word(const Word& w) const {
  TensorSeries acc = one();
  for (const auto& l : w.letters)
    acc = mul(acc, generator_series(l.gen, BigInt(l.exp)));
  return acc;
}

TensorSeries TensorContext::lie_element(const HallBasis& basis, int idx) const {
  const auto& e = basis.elements()[idx];
  if (e.gen >= 0) {
    TensorSeries s;
    s.coef.assign(monomials(), BigInt(0));
    if (e.weight <= cap_) s.coef[offset_[1] + e.gen] = 1;
    return s;
  }
  TensorSeries u = lie_element(basis, e.left);
  TensorSeries v = lie_element(basis, e.right);
  TensorSeries uv = mul(u, v);
  TensorSeries vu = mul(v, u);
  for (std::int64_t i = 0; i < monomials(); ++i) uv.coef[i] -= vu.coef[i];
  return uv;
}

bool TensorContext::is_one(const TensorSeries& s) const {
  if (s.coef[0] != 1) return false;
  for (std::int64_t i = 1; i < monomials(); ++i)
    if (s.coef[i] != 0) return false;
  return true;
}

namespace {

// Unique rational solution of (columns) * x = rhs; the system comes from a
// Hall-basis expansion so a unique integer solution exists. Verified by
// substitution before returning.
std::vector<BigInt> solve_exact(const std::vector<std::vector<BigInt>>& columns,
                                const std::vector<BigInt>& rhs) {
  std::size_t rows = rhs.size(), cols = columns.size();
  std::vector<std::vector<BigRat>> m(rows, std::vector<BigRat>(cols + 1));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m[r][c] = BigRat(columns[c][r]);
    m[r][cols] = BigRat(rhs[r]);
  }
  std::vector<std::int64_t> pivot_row(cols, -1);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t sel = rank;
    while (sel < rows && m[sel][c] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(m[sel], m[rank]);
    BigRat inv = m[rank][c];
    for (std::size_t k = c; k <= cols; ++k) m[rank][k] /= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      BigRat f = m[r][c];
      for (std::size_t k = c; k <= cols; ++k) m[r][k] -= f * m[rank][k];
    }
    pivot_row[c] = (std::int64_t)rank;
    ++rank;
  }
  std::vector<BigInt> x(cols, 0);
  for (std::size_t c = 0; c < cols; ++c) {
    if (pivot_row[c] < 0) continue;
    const BigRat& v = m[pivot_row[c]][cols];
    if (denominator(v) != 1)
      fail(ErrorCode::Internal, "collect: non-integer solution");
    x[c] = numerator(v);
  }
  for (std::size_t r = 0; r < rows; ++r) {
    BigInt acc = 0;
    for (std::size_t c = 0; c < cols; ++c) acc += columns[c][r] * x[c];
    if (acc != rhs[r])
      fail(ErrorCode::Internal, "collect: linear system inconsistent");
  }
  return x;
}

} // namespace

NilpotentNormalForm collect_series(const TensorContext& ctx, TensorSeries s,
                                   const HallBasisPtr& basis) {
  if (ctx.rank() != basis->rank() || ctx.cap() != basis->cls())
    fail(ErrorCode::RankMismatch, "collect: context does not match basis");
  NilpotentNormalForm nf;
  nf.basis = basis;
  nf.exponents.assign(basis->size(), BigInt(0));
  for (int w = 1; w <= basis->cls(); ++w) {
    if (s.coef[0] != 1)
      fail(ErrorCode::Internal, "collect: series is not group-like");
    for (std::int64_t i = 1; i < ctx.degree_begin(w); ++i)
      if (s.coef[i] != 0)
        fail(ErrorCode::Internal, "collect: lower graded piece survived");
    int b0 = basis->weight_begin(w), b1 = basis->weight_end(w);
    std::int64_t r0 = ctx.degree_begin(w), r1 = ctx.degree_end(w);
    if (b1 > b0) {
      std::vector<std::vector<BigInt>> columns;
      for (int b = b0; b < b1; ++b) {
        TensorSeries lie = ctx.lie_element(*basis, b);
        columns.emplace_back(lie.coef.begin() + r0, lie.coef.begin() + r1);
      }
      std::vector<BigInt> rhs(s.coef.begin() + r0, s.coef.begin() + r1);
      auto sol = solve_exact(columns, rhs);
      for (int b = b0; b < b1; ++b) {
        nf.exponents[b] = sol[b - b0];
        if (sol[b - b0] != 0) {
          TensorSeries mu = ctx.eval_word(basis->expand(b));
          s = ctx.mul(ctx.pow(mu, -sol[b - b0]), s);
        }
      }
    } else {
      for (std::int64_t i = r0; i < r1; ++i)
        if (s.coef[i] != 0)
          fail(ErrorCode::Internal, "collect: graded piece without basis");
    }
  }
  if (!ctx.is_one(s))
    fail(ErrorCode::Internal, "collect: residual series nontrivial");
  return nf;
}

NilpotentNormalForm collect(const Word& w, const HallBasisPtr& basis) {
  if (w.max_generator() >= basis->rank())
    fail(ErrorCode::GeneratorIndexOutOfRange,
         "collect: word uses generators beyond basis rank");
  TensorContext ctx(basis->rank(), basis->cls());
  return collect_series(ctx, ctx.eval_word(w), basis);
}

TensorSeries series_of_normal_form(const TensorContext& ctx,
                                   const NilpotentNormalForm& nf) {
  TensorSeries acc = ctx.one();
  for (int b = 0; b < nf.basis->size(); ++b) {
    if (nf.exponents[b] == 0) continue;
    acc = ctx.mul(acc, ctx.pow(ctx.eval_word(nf.basis->expand(b)),
                               nf.exponents[b]));
  }
  return acc;
}

NilpotentNormalForm nf_multiply(const NilpotentNormalForm& a,
                                const NilpotentNormalForm& b) {
  if (a.basis->rank() != b.basis->rank() || a.basis->cls() != b.basis->cls())
    fail(ErrorCode::RankMismatch, "nf_multiply: mismatched bases");
  TensorContext ctx(a.basis->rank(), a.basis->cls());
  TensorSeries prod =
      ctx.mul(series_of_normal_form(ctx, a), series_of_normal_form(ctx, b));
  return collect_series(ctx, std::move(prod), a.basis);
}

std::vector<LaurentPoly> fox_derivatives(int rank, const Word& w) {
  std::vector<LaurentPoly> d(rank);
  std::vector<int> prefix(rank, 0);
  auto bump = [](LaurentPoly& p, const std::vector<int>& mono, std::int64_t by) {
    auto it = p.find(mono);
    if (it == p.end()) {
      if (by != 0) p.emplace(mono, by);
      return;
    }
    it->second += by;
    if (it->second == 0) p.erase(it);
  };
  for (const auto& l : w.letters) {
    if (l.gen < 0 || l.gen >= rank)
      fail(ErrorCode::RankMismatch, "fox_derivatives: generator out of rank");
    std::int64_t e = l.exp;
    if (e > 100000 || e < -100000)
      fail(ErrorCode::SizeGuardExceeded, "fox_derivatives: huge exponent");
    if (e > 0) {
      for (std::int64_t t = 0; t < e; ++t) {
        bump(d[l.gen], prefix, 1);
        ++prefix[l.gen];
      }
    } else {
      for (std::int64_t t = 0; t < -e; ++t) {
        --prefix[l.gen];
        bump(d[l.gen], prefix, -1);
      }
    }
  }
  return d;
}

bool metabelian_is_identity(int rank, const Word& w) {
  for (const auto& p : fox_derivatives(rank, w))
    if (!p.empty()) return false;
  return true;
}

Tristate words_equal(const Presentation& p, const Word& w1, const Word& w2) {
  if (w1.max_generator() >= p.num_generators ||
      w2.max_generator() >= p.num_generators)
    fail(ErrorCode::RankMismatch,
         "words_equal: word exceeds presentation rank");
  switch (p.kind.tag) {
    case Kind::Free:
      return free_reduce(concat(w1, inverse(w2))).empty() ? Tristate::Equal
                                                          : Tristate::NotEqual;
    case Kind::FreeNilpotent: {
      TensorContext ctx(p.num_generators, p.kind.param);
      TensorSeries diff =
          ctx.mul(ctx.eval_word(w1), ctx.invert(ctx.eval_word(w2)));
      return ctx.is_one(diff) ? Tristate::Equal : Tristate::NotEqual;
    }
    case Kind::FreeSolvable: {
      Word diff = concat(w1, inverse(w2));
      if (p.kind.param == 1)
        return exponent_sums(diff, p.num_generators) ==
                       std::vector<std::int64_t>(p.num_generators, 0)
                   ? Tristate::Equal
                   : Tristate::NotEqual;
      if (p.kind.param == 2)
        return metabelian_is_identity(p.num_generators, diff)
                   ? Tristate::Equal
                   : Tristate::NotEqual;
      return Tristate::Undecidable;
    }
    case Kind::FiniteKind:
      return evaluate_word(*p.kind.group, w1, p.kind.gen_images) ==
                     evaluate_word(*p.kind.group, w2, p.kind.gen_images)
                 ? Tristate::Equal
                 : Tristate::NotEqual;
    case Kind::Explicit:
      return Tristate::Undecidable;
  }
  return Tristate::Undecidable;
}

} // namespace homcx
