#include "homcx/irig.hpp"

#include "homcx/error.hpp"

namespace homcx {

IntMat matmul(const IntMat& x, const IntMat& y) {
  if (x.cols != y.rows) fail(ErrorCode::DimensionMismatch, "matmul shapes");
  IntMat out = IntMat::zero(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      if (x.a[i][k] == 0) continue;
      for (int j = 0; j < y.cols; ++j)
        if (y.a[k][j] != 0) out.a[i][j] += x.a[i][k] * y.a[k][j];
    }
  return out;
}

Permutation Permutation::identity(int k) {
  Permutation p;
  p.images.resize(k);
  for (int i = 1; i <= k; ++i) p.images[i - 1] = i;
  return p;
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= degree(); ++i)
    if (apply(i) != i) return false;
  return true;
}

Permutation compose_perm(const Permutation& first, const Permutation& then) {
  if (first.degree() != then.degree())
    fail(ErrorCode::DimensionMismatch, "compose_perm degrees");
  Permutation out;
  out.images.resize(first.degree());
  for (int i = 1; i <= first.degree(); ++i)
    out.images[i - 1] = then.apply(first.apply(i));
  return out;
}

Permutation inverse_perm(const Permutation& p) {
  Permutation out;
  out.images.resize(p.degree());
  for (int i = 1; i <= p.degree(); ++i) out.images[p.apply(i) - 1] = i;
  return out;
}

Permutation tau(int m, int n) {
  if (m < 0 || n < 0) fail(ErrorCode::ConfigError, "tau: m, n >= 0");
  Permutation p;
  p.images.resize(m + n);
  for (int i = 1; i <= m + n; ++i) p.images[i - 1] = i <= m ? n + i : i - m;
  return p;
}

Permutation tau_times(int m, int n) {
  if (m < 1 || n < 1) fail(ErrorCode::ConfigError, "tau_times: m, n >= 1");
  Permutation p;
  p.images.resize(m * n);
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j)
      p.images[(i - 1) * n + j - 1] = (j - 1) * m + i;
  return p;
}

IntMat permutation_matrix(const Permutation& p) {
  IntMat out = IntMat::zero(p.degree(), p.degree());
  for (int i = 1; i <= p.degree(); ++i) out.a[p.apply(i) - 1][i - 1] = 1;
  return out;
}

IntMat conjugate_by(const Permutation& p, const IntMat& a) {
  if (a.rows != p.degree() || a.cols != p.degree())
    fail(ErrorCode::DimensionMismatch, "conjugate_by shapes");
  IntMat out = IntMat::zero(a.rows, a.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j)
      out.a[p.apply(i + 1) - 1][p.apply(j + 1) - 1] = a.a[i][j];
  return out;
}

IntMat block_sum(const IntMat& a, const IntMat& b) {
  if (a.rows != a.cols || b.rows != b.cols)
    fail(ErrorCode::DimensionMismatch, "block_sum needs square blocks");
  IntMat out = IntMat::zero(a.rows + b.rows, a.cols + b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) out.a[i][j] = a.a[i][j];
  for (int i = 0; i < b.rows; ++i)
    for (int j = 0; j < b.cols; ++j) out.a[a.rows + i][a.cols + j] = b.a[i][j];
  return out;
}

IntMat kronecker(const IntMat& a, const IntMat& b) {
  if (a.rows != a.cols || b.rows != b.cols)
    fail(ErrorCode::DimensionMismatch, "kronecker needs square blocks");
  IntMat out = IntMat::zero(a.rows * b.rows, a.cols * b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) {
      if (a.a[i][j] == 0) continue;
      for (int k = 0; k < b.rows; ++k)
        for (int l = 0; l < b.cols; ++l)
          out.a[i * b.rows + k][j * b.cols + l] = a.a[i][j] * b.a[k][l];
    }
  return out;
}

Permutation left_distributivity_shuffle(int m, int n, int nprime) {
  Permutation p;
  p.images.resize(m * (n + nprime));
  for (int i = 1; i <= m; ++i)
    for (int k = 1; k <= n + nprime; ++k) {
      int from = (i - 1) * (n + nprime) + k;
      int to = k <= n ? (i - 1) * n + k : m * n + (i - 1) * nprime + (k - n);
      p.images[from - 1] = to;
    }
  return p;
}

namespace {
DiagramResult check_equal(const std::string& name, const IntMat& lhs,
                          const IntMat& rhs) {
  DiagramResult r{name, true, ""};
  if (!(lhs == rhs)) {
    r.pass = false;
    for (int i = 0; i < lhs.rows && r.witness.empty(); ++i)
      for (int j = 0; j < lhs.cols; ++j)
        if (lhs.a[i][j] != rhs.a[i][j]) {
          r.witness = "entry (" + std::to_string(i + 1) + "," +
                      std::to_string(j + 1) + "): " + lhs.a[i][j].str() +
                      " vs " + rhs.a[i][j].str();
          break;
        }
  }
  return r;
}
} // namespace

std::vector<DiagramResult> bipermutative_check(const IntMat& a,
                                               const IntMat& aprime,
                                               const IntMat& b,
                                               const IntMat& bprime) {
  int m = a.rows, n = b.rows;
  std::vector<DiagramResult> out;
  out.push_back(check_equal("block-sum symmetry tau.(A+B) = B+A",
                            conjugate_by(tau(m, n), block_sum(a, b)),
                            block_sum(b, a)));
  out.push_back(check_equal("tensor symmetry taux.(AxB) = BxA",
                            conjugate_by(tau_times(m, n), kronecker(a, b)),
                            kronecker(b, a)));
  out.push_back(check_equal("right distributivity (A+A')xB",
                            kronecker(block_sum(a, aprime), b),
                            block_sum(kronecker(a, b), kronecker(aprime, b))));
  out.push_back(check_equal(
      "left distributivity Ax(B+B') up to recorded shuffle",
      conjugate_by(left_distributivity_shuffle(m, n, bprime.rows),
                   kronecker(a, block_sum(b, bprime))),
      block_sum(kronecker(a, b), kronecker(a, bprime))));
  return out;
}

DiagramResult coherence_check(const IntMat& a, const Permutation& sigma,
                              const Permutation& sigma_prime) {
  int r = sigma.degree();
  if (sigma_prime.degree() != r || a.rows > r)
    fail(ErrorCode::DimensionMismatch, "coherence_check sizes");
  for (int i = 1; i <= a.rows; ++i)
    if (sigma.apply(i) != sigma_prime.apply(i))
      fail(ErrorCode::ConfigError,
           "coherence_check: permutations disagree on the stable block");
  IntMat padded = block_sum(a, IntMat::identity(r - a.rows));
  return check_equal("padded conjugation independent of extension",
                     conjugate_by(sigma, padded),
                     conjugate_by(sigma_prime, padded));
}

} // namespace homcx
