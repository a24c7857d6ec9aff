#include "homcx/homology.hpp"

#include <numeric>

#include "homcx/error.hpp"

namespace homcx {

namespace {

BigInt big_abs(const BigInt& v) { return v < 0 ? -v : v; }

// Floor-free balanced quotient: choose q so |a - q*b| <= |b|/2 when
// possible; plain truncation works too, this just converges faster.
BigInt near_quot(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  BigInt r = a - q * b;
  if (2 * big_abs(r) > big_abs(b)) q += (r < 0) == (b < 0) ? 1 : -1;
  return q;
}

struct SnfWork {
  std::vector<std::vector<BigInt>> m;
  int rows, cols;
  bool track;
  std::vector<std::vector<BigInt>> u, v; // row and column transforms

  explicit SnfWork(const IntMat& in, bool track_)
      : m(in.a), rows(in.rows), cols(in.cols), track(track_) {
    if (track) {
      u.assign(rows, std::vector<BigInt>(rows));
      v.assign(cols, std::vector<BigInt>(cols));
      for (int i = 0; i < rows; ++i) u[i][i] = 1;
      for (int j = 0; j < cols; ++j) v[j][j] = 1;
    }
  }
  void swap_rows(int a, int b) {
    std::swap(m[a], m[b]);
    if (track) std::swap(u[a], u[b]);
  }
  void swap_cols(int a, int b) {
    for (int i = 0; i < rows; ++i) std::swap(m[i][a], m[i][b]);
    if (track)
      for (int i = 0; i < cols; ++i) std::swap(v[i][a], v[i][b]);
  }
  void add_row(int dst, int src, const BigInt& f) { // row dst += f * row src
    for (int j = 0; j < cols; ++j) m[dst][j] += f * m[src][j];
    if (track)
      for (int j = 0; j < rows; ++j) u[dst][j] += f * u[src][j];
  }
  void add_col(int dst, int src, const BigInt& f) {
    for (int i = 0; i < rows; ++i) m[i][dst] += f * m[i][src];
    if (track)
      for (int i = 0; i < cols; ++i) v[i][dst] += f * v[i][src];
  }
  void negate_row(int r) {
    for (int j = 0; j < cols; ++j) m[r][j] = -m[r][j];
    if (track)
      for (int j = 0; j < rows; ++j) u[r][j] = -u[r][j];
  }
};

} // namespace

SmithResult smith_normal_form(const IntMat& in) {
  bool track = in.rows <= 50 && in.cols <= 50;
  SnfWork w(in, track);
  SmithResult out;
  int r = 0;
  int limit = std::min(w.rows, w.cols);
  while (r < limit) {
    // smallest nonzero entry in the trailing block
    int pi = -1, pj = -1;
    for (int i = r; i < w.rows; ++i)
      for (int j = r; j < w.cols; ++j)
        if (w.m[i][j] != 0 &&
            (pi < 0 || big_abs(w.m[i][j]) < big_abs(w.m[pi][pj]))) {
          pi = i;
          pj = j;
        }
    if (pi < 0) break;
    w.swap_rows(r, pi);
    w.swap_cols(r, pj);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (int i = r + 1; i < w.rows; ++i)
        if (w.m[i][r] != 0) {
          w.add_row(i, r, -near_quot(w.m[i][r], w.m[r][r]));
          if (w.m[i][r] != 0) {
            w.swap_rows(r, i); // remainder is strictly smaller
            clean = false;
          }
        }
      for (int j = r + 1; j < w.cols; ++j)
        if (w.m[r][j] != 0) {
          w.add_col(j, r, -near_quot(w.m[r][j], w.m[r][r]));
          if (w.m[r][j] != 0) {
            w.swap_cols(r, j);
            clean = false;
          }
        }
      if (clean) {
        // divisibility: absorb any entry the pivot does not divide
        for (int i = r + 1; i < w.rows && clean; ++i)
          for (int j = r + 1; j < w.cols && clean; ++j)
            if (w.m[i][j] % w.m[r][r] != 0) {
              w.add_row(r, i, 1);
              clean = false;
            }
      }
    }
    if (w.m[r][r] < 0) w.negate_row(r);
    ++r;
  }
  out.rank = r;
  for (int k = 0; k < r; ++k) out.invariants.push_back(w.m[k][k]);
  for (int k = 0; k + 1 < r; ++k)
    if (out.invariants[k + 1] % out.invariants[k] != 0)
      fail(ErrorCode::Internal, "smith_normal_form: divisibility chain broken");
  if (track) {
    // u * A * v must reproduce the diagonal
    for (int i = 0; i < w.rows; ++i)
      for (int j = 0; j < w.cols; ++j) {
        BigInt acc = 0;
        for (int k = 0; k < w.rows; ++k) {
          if (w.u[i][k] == 0) continue;
          for (int l = 0; l < w.cols; ++l)
            acc += w.u[i][k] * in.a[k][l] * w.v[l][j];
        }
        BigInt want = (i == j && i < r) ? out.invariants[i] : BigInt(0);
        if (acc != want)
          fail(ErrorCode::Internal,
               "smith_normal_form: transform re-multiplication failed");
      }
  }
  return out;
}

ChainComplex normalized_complex(const SimplicialHomSpace& space, int max_dim,
                                int basis_budget) {
  if (max_dim > space.n_max)
    fail(ErrorCode::ConfigError, "normalized_complex: space too shallow");
  ChainComplex cc;
  cc.max_dim = max_dim;
  cc.basis.resize(max_dim + 1);
  std::vector<std::vector<int>> pos(max_dim + 1);
  for (int k = 0; k <= max_dim; ++k) {
    pos[k].assign(space.levels[k].size(), -1);
    for (int x = 0; x < space.levels[k].size(); ++x)
      if (space.tier[k][x] == 0) {
        pos[k][x] = (int)cc.basis[k].size();
        cc.basis[k].push_back(x);
      }
    if ((int)cc.basis[k].size() > basis_budget)
      fail(ErrorCode::BudgetExceeded,
           "normalized_complex: dimension " + std::to_string(k) + " has " +
               std::to_string(cc.basis[k].size()) + " nondegenerate simplices");
  }
  cc.boundary.resize(max_dim + 1);
  for (int k = 1; k <= max_dim; ++k) {
    cc.boundary[k] = IntMat::zero((int)cc.basis[k - 1].size(),
                                  (int)cc.basis[k].size());
    for (std::size_t c = 0; c < cc.basis[k].size(); ++c) {
      int x = cc.basis[k][c];
      for (int i = 0; i <= k; ++i) {
        int y = space.face[k][i][x];
        if (space.tier[k - 1][y] != 0) continue; // degenerate face
        cc.boundary[k].a[pos[k - 1][y]][c] += (i % 2 == 0) ? 1 : -1;
      }
    }
  }
  for (int k = 2; k <= max_dim; ++k) {
    // boundary[k-1] * boundary[k] == 0
    const IntMat& a = cc.boundary[k - 1];
    const IntMat& b = cc.boundary[k];
    for (int i = 0; i < a.rows; ++i)
      for (int j = 0; j < b.cols; ++j) {
        BigInt acc = 0;
        for (int l = 0; l < a.cols; ++l)
          if (a.a[i][l] != 0 && b.a[l][j] != 0) acc += a.a[i][l] * b.a[l][j];
        if (acc != 0)
          fail(ErrorCode::BoundarySquareNonzero,
               "boundary^2 != 0 at dimension " + std::to_string(k));
      }
  }
  return cc;
}

std::vector<HomologyGroup> homology(const ChainComplex& cc) {
  std::vector<SmithResult> snf(cc.max_dim + 1);
  for (int k = 1; k <= cc.max_dim; ++k) snf[k] = smith_normal_form(cc.boundary[k]);
  std::vector<HomologyGroup> out;
  for (int k = 0; k < cc.max_dim; ++k) {
    HomologyGroup h;
    std::int64_t rank_in = k >= 1 ? snf[k].rank : 0;
    std::int64_t rank_out = snf[k + 1].rank;
    h.betti = (std::int64_t)cc.basis[k].size() - rank_in - rank_out;
    for (const auto& d : snf[k + 1].invariants)
      if (d >= 2) h.torsion.push_back(d);
    out.push_back(std::move(h));
  }
  return out;
}

std::int64_t euler_truncated(const ChainComplex& cc) {
  std::int64_t chi = 0;
  for (int k = 0; k <= cc.max_dim; ++k)
    chi += (k % 2 == 0 ? 1 : -1) * (std::int64_t)cc.basis[k].size();
  return chi;
}

int component_count(const SimplicialHomSpace& space) {
  int verts = space.levels[0].size();
  std::vector<int> parent(verts);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  if (space.n_max >= 1)
    for (int x = 0; x < space.levels[1].size(); ++x) {
      int a = find(space.face[1][0][x]);
      int b = find(space.face[1][1][x]);
      if (a != b) parent[a] = b;
    }
  int count = 0;
  for (int v = 0; v < verts; ++v)
    if (find(v) == v) ++count;
  return count;
}

std::vector<BigInt> abelian_invariants(const FiniteGroup& q) {
  if (!q.is_abelian())
    fail(ErrorCode::ConfigError, "abelian_invariants: group is not abelian");
  IntMat rel = IntMat::zero(q.order * q.order, q.order);
  for (int a = 0; a < q.order; ++a)
    for (int b = 0; b < q.order; ++b) {
      auto& row = rel.a[a * q.order + b];
      row[a] += 1;
      row[b] += 1;
      row[q.mul[a][b]] -= 1;
    }
  auto snf = smith_normal_form(rel);
  std::vector<BigInt> out;
  for (const auto& d : snf.invariants)
    if (d >= 2) out.push_back(d);
  // presented group must be finite of order |Q|
  if (snf.rank != q.order)
    fail(ErrorCode::Internal, "abelian_invariants: unexpected free rank");
  BigInt prod = 1;
  for (const auto& d : out) prod *= d;
  if (prod != q.order)
    fail(ErrorCode::Internal, "abelian_invariants: order mismatch");
  return out;
}

std::vector<BigInt> abelianization_invariants(const FiniteGroup& g) {
  auto derived = commutator_subgroup(g);
  auto q = quotient_group(g, derived);
  return abelian_invariants(*q);
}

} // namespace homcx
