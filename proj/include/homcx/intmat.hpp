#ifndef HOMCX_INTMAT_HPP
#define HOMCX_INTMAT_HPP

#include <vector>

#include "homcx/hall.hpp" // BigInt

namespace homcx {

// Dense matrix over arbitrary-precision integers.
struct IntMat {
  int rows = 0;
  int cols = 0;
  std::vector<std::vector<BigInt>> a;

  static IntMat zero(int r, int c) {
    return {r, c, std::vector<std::vector<BigInt>>(r, std::vector<BigInt>(c))};
  }
  static IntMat identity(int n) {
    IntMat m = zero(n, n);
    for (int i = 0; i < n; ++i) m.a[i][i] = 1;
    return m;
  }
  friend bool operator==(const IntMat& x, const IntMat& y) {
    return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
  }
};

IntMat matmul(const IntMat& x, const IntMat& y);

} // namespace homcx

#endif
