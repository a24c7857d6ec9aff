#include "homcx/hall.hpp"

#include "homcx/error.hpp"

namespace homcx {

HallBasis::HallBasis(int rank, int cls) : rank_(rank), cls_(cls) {
  if (rank < 0 || cls < 1)
    fail(ErrorCode::ConfigError, "hall_basis: need rank >= 0, class >= 1");
  if (rank > 4 || cls > 4)
    fail(ErrorCode::SizeGuardExceeded,
         "hall_basis: guarded at rank <= 4, class <= 4 (asked rank " +
             std::to_string(rank) + ", class " + std::to_string(cls) + ")");
  weight_begin_.assign(cls + 2, 0);
  for (int g = 0; g < rank; ++g)
    elements_.push_back({1, g, -1, -1});
  weight_begin_[1] = 0;
  for (int w = 2; w <= cls; ++w) {
    weight_begin_[w] = (int)elements_.size();
    int prior = weight_begin_[w]; // everything of weight < w
    for (int v = 0; v < prior; ++v) {
      int wu = w - elements_[v].weight;
      if (wu < 1) continue;
      for (int u = 0; u < v; ++u) {
        if (elements_[u].weight != wu) continue;
        if (elements_[v].left >= 0 && u < elements_[v].left) continue;
        elements_.push_back({w, -1, u, v});
      }
    }
  }
  weight_begin_[cls + 1] = (int)elements_.size();
  for (int w = 1; w <= cls; ++w) {
    std::int64_t have = weight_end(w) - weight_begin(w);
    if (have != witt_number(rank, w))
      fail(ErrorCode::Internal,
           "hall_basis: weight " + std::to_string(w) + " count " +
               std::to_string(have) + " != Witt number " +
               std::to_string(witt_number(rank, w)));
  }
}

Word HallBasis::expand(int idx) const {
  const auto& e = elements_[idx];
  if (e.gen >= 0) return word_generator(e.gen);
  return commutator(expand(e.left), expand(e.right));
}

std::string HallBasis::describe(int idx) const {
  const auto& e = elements_[idx];
  if (e.gen >= 0) return "a" + std::to_string(e.gen + 1);
  return "[" + describe(e.left) + "," + describe(e.right) + "]";
}

namespace {
int moebius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      result = -result;
    }
  }
  if (n > 1) result = -result;
  return result;
}
} // namespace

std::int64_t HallBasis::witt_number(int rank, int weight) {
  std::int64_t sum = 0;
  for (int d = 1; d <= weight; ++d) {
    if (weight % d) continue;
    std::int64_t pw = 1;
    for (int i = 0; i < weight / d; ++i) pw *= rank;
    sum += moebius(d) * pw;
  }
  return sum / weight;
}

HallBasisPtr hall_basis(int rank, int cls) {
  return std::make_shared<HallBasis>(rank, cls);
}

} // namespace homcx
