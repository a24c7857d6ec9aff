#include <random>

#include "doctest.h"
#include "homcx/error.hpp"
#include "homcx/irig.hpp"

using namespace homcx;

namespace {
IntMat random_matrix(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> entry(-9, 9);
  IntMat m = IntMat::zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.a[i][j] = entry(rng);
  return m;
}

Permutation random_perm(std::mt19937_64& rng, int n) {
  Permutation p = Permutation::identity(n);
  for (int i = n - 1; i > 0; --i) {
    std::uniform_int_distribution<int> pick(0, i);
    std::swap(p.images[i], p.images[pick(rng)]);
  }
  return p;
}
} // namespace

TEST_CASE("block shuffle formulas") {
  CHECK(tau(2, 1).images == std::vector<int>{2, 3, 1});
  CHECK(tau(3, 0).is_identity());
  CHECK(tau(0, 3).is_identity());
  for (int m = 0; m <= 5; ++m)
    for (int n = 0; n <= 5; ++n)
      CHECK(compose_perm(tau(m, n), tau(n, m)).is_identity());
}

TEST_CASE("tensor shuffle formulas") {
  CHECK(tau_times(2, 2).images == std::vector<int>{1, 3, 2, 4});
  CHECK(tau_times(1, 4).is_identity());
  CHECK(tau_times(4, 1).is_identity());
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 4; ++n)
      CHECK(compose_perm(tau_times(m, n), tau_times(n, m)).is_identity());
}

TEST_CASE("permutation matrices realize conjugation") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 2 + (int)(rng() % 4);
    auto p = random_perm(rng, n);
    auto m = random_matrix(rng, n);
    auto via_perm = conjugate_by(p, m);
    auto via_matrices =
        matmul(matmul(permutation_matrix(p), m),
               permutation_matrix(inverse_perm(p)));
    CHECK(via_perm == via_matrices);
  }
}

TEST_CASE("block sum basics") {
  CHECK(block_sum(IntMat::identity(2), IntMat::identity(3)) ==
        IntMat::identity(5));
  IntMat one = IntMat::zero(1, 1);
  one.a[0][0] = 7;
  IntMat s = block_sum(one, IntMat::identity(1));
  CHECK(s.a[0][0] == 7);
  CHECK(s.a[1][1] == 1);
  CHECK(s.a[0][1] == 0);
  IntMat rect = IntMat::zero(1, 2);
  CHECK_THROWS_AS(block_sum(rect, one), Error);
}

TEST_CASE("kronecker examples") {
  IntMat swap2 = IntMat::zero(2, 2);
  swap2.a[0][1] = 1;
  swap2.a[1][0] = 1;
  IntMat two = IntMat::zero(1, 1);
  two.a[0][0] = 2;
  IntMat got = kronecker(swap2, two);
  IntMat want = IntMat::zero(2, 2);
  want.a[0][1] = 2;
  want.a[1][0] = 2;
  CHECK(got == want);

  std::mt19937_64 rng(47);
  IntMat b = random_matrix(rng, 3);
  IntMat viaKron = kronecker(IntMat::identity(2), b);
  IntMat viaSum = block_sum(b, b);
  CHECK(viaKron == viaSum);
}

TEST_CASE("bipermutative diagrams on identities and random matrices") {
  for (auto& r : bipermutative_check(IntMat::identity(3), IntMat::identity(3),
                                     IntMat::identity(2), IntMat::identity(2)))
    CHECK(r.pass);

  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 30; ++trial) {
    int m = 1 + (int)(rng() % 5), n = 1 + (int)(rng() % 5);
    int mp = 1 + (int)(rng() % 5), np = 1 + (int)(rng() % 5);
    auto results =
        bipermutative_check(random_matrix(rng, m), random_matrix(rng, mp),
                            random_matrix(rng, n), random_matrix(rng, np));
    for (auto& r : results) {
      CAPTURE(r.name);
      CHECK(r.pass);
    }
  }
}

TEST_CASE("left distributivity shuffle is recorded and nontrivial") {
  auto pi = left_distributivity_shuffle(2, 1, 1);
  CHECK(!pi.is_identity());
  CHECK(pi.degree() == 4);
  auto pi1 = left_distributivity_shuffle(1, 3, 2);
  CHECK(pi1.is_identity()); // m = 1 needs no shuffle
}

TEST_CASE("stabilization coherence") {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 20; ++trial) {
    int m = 1 + (int)(rng() % 3);
    int r = m + 1 + (int)(rng() % 3);
    auto sigma = random_perm(rng, r);
    // modify sigma beyond the first m points by a permutation fixing {1..m}
    auto rho = Permutation::identity(r);
    for (int i = r - 1; i > m; --i) {
      std::uniform_int_distribution<int> pick(m, i);
      std::swap(rho.images[i], rho.images[pick(rng)]);
    }
    auto sigma_prime = compose_perm(rho, sigma);
    for (int i = 1; i <= m; ++i) REQUIRE(sigma.apply(i) == sigma_prime.apply(i));
    auto res = coherence_check(random_matrix(rng, m), sigma, sigma_prime);
    CHECK(res.pass);
  }
}
