#include <filesystem>
#include <set>

#include "doctest.h"
#include "homcx/error.hpp"
#include "homcx/homspace.hpp"

using namespace homcx;

namespace {

// Independent oracle: commuting pairs counted with a plain double loop.
int commuting_pairs(const FiniteGroup& g) {
  int count = 0;
  for (int a = 0; a < g.order; ++a)
    for (int b = 0; b < g.order; ++b)
      if (g.mul[a][b] == g.mul[b][a]) ++count;
  return count;
}

int commuting_triples(const FiniteGroup& g) {
  int count = 0;
  for (int a = 0; a < g.order; ++a)
    for (int b = 0; b < g.order; ++b) {
      if (g.mul[a][b] != g.mul[b][a]) continue;
      for (int c = 0; c < g.order; ++c)
        if (g.mul[a][c] == g.mul[c][a] && g.mul[b][c] == g.mul[c][b]) ++count;
    }
  return count;
}

} // namespace

TEST_CASE("enumeration counts") {
  auto s3 = catalog_group("sym:3");
  auto f = build_free();
  CHECK(enumerate_hom(f->level_ptr(2), s3).size() == 36);

  auto g2 = build_gamma(2);
  auto hom = enumerate_hom(g2->level_ptr(2), s3);
  CHECK(hom.size() == 18);
  CHECK(hom.size() == commuting_pairs(*s3));
  // |Hom(Z^2, G)| = |G| * #classes
  CHECK(hom.size() ==
        s3->order * (int)conjugacy_data(*s3).classes.size());

  auto g3 = build_gamma(3);
  CHECK(enumerate_hom(g3->level_ptr(2), s3).size() == 18);

  auto q8 = catalog_group("quaternion:8");
  CHECK(enumerate_hom(g2->level_ptr(2), q8).size() == 40);
  CHECK(enumerate_hom(g3->level_ptr(2), q8).size() == 64); // class 2 group

  auto sig = build_sigma23();
  CHECK(enumerate_hom(sig->level_ptr(1), s3).size() == 10);

  CHECK_THROWS_AS(enumerate_hom(f->level_ptr(4), s3, 1000), Error);
}

TEST_CASE("induced maps recover nerve structure") {
  auto s3 = catalog_group("sym:3");
  auto f = build_free();
  HomSet h1 = enumerate_hom(f->level_ptr(1), s3);
  HomSet h2 = enumerate_hom(f->level_ptr(2), s3);

  auto d1 = induced_map(f->coface(2, 1), h2, h1);
  for (int x = 0; x < h2.size(); ++x) {
    int expect = s3->mul[h2.tuples[x][0]][h2.tuples[x][1]];
    CHECK(h1.tuples[d1[x]][0] == expect);
  }
  auto d0 = induced_map(f->coface(2, 0), h2, h1);
  auto d2 = induced_map(f->coface(2, 2), h2, h1);
  for (int x = 0; x < h2.size(); ++x) {
    CHECK(h1.tuples[d0[x]][0] == h2.tuples[x][1]);
    CHECK(h1.tuples[d2[x]][0] == h2.tuples[x][0]);
  }

  auto id = identity_map(f->level_ptr(2));
  auto idmap = induced_map(id, h2, h2);
  for (int x = 0; x < h2.size(); ++x) CHECK(idmap[x] == x);

  // degeneracy inserts the identity element
  auto g2 = build_gamma(2);
  HomSet k1 = enumerate_hom(g2->level_ptr(1), s3);
  HomSet k2 = enumerate_hom(g2->level_ptr(2), s3);
  auto s0 = induced_map(g2->codegeneracy(1, 0), k1, k2);
  for (int x = 0; x < k1.size(); ++x) {
    CHECK(k2.tuples[s0[x]][0] == 0);
    CHECK(k2.tuples[s0[x]][1] == k1.tuples[x][0]);
  }
}

TEST_CASE("spaces build with verified simplicial identities") {
  auto z2 = catalog_group("cyclic:2");
  auto space = build_space(build_free(), z2, 3);
  CHECK(space.levels[0].size() == 1);
  CHECK(space.levels[1].size() == 2);
  CHECK(space.levels[2].size() == 4);
  CHECK(space.levels[3].size() == 8);

  auto s3 = catalog_group("sym:3");
  auto sp = build_space(build_gamma(2), s3, 3);
  CHECK(sp.levels[3].size() == commuting_triples(*s3));
  CHECK(sp.levels[3].size() == 48);

  auto sig = build_space(build_sigma23(), s3, 2);
  CHECK(sig.levels[1].size() == 10);
}

TEST_CASE("filtration tiers and strata") {
  auto s3 = catalog_group("sym:3");
  auto sp = build_space(build_gamma(2), s3, 3);

  // gamma families: tier equals the number of identity coordinates
  for (int n = 0; n <= 3; ++n)
    for (int x = 0; x < sp.levels[n].size(); ++x) {
      int idcount = 0;
      for (int v : sp.levels[n].tuples[x])
        if (v == 0) ++idcount;
      CHECK(sp.tier[n][x] == idcount);
    }

  auto strata = sp.strata_sizes(2);
  CHECK(strata == std::vector<int>{7, 10, 1});
  int s1 = strata[1] + strata[2];
  CHECK(s1 == 11); // tuples with some identity coordinate

  // partition property at every level
  for (int n = 0; n <= 3; ++n) {
    int total = 0;
    for (int c : sp.strata_sizes(n)) total += c;
    CHECK(total == sp.levels[n].size());
  }

  // monotonicity: degeneracies raise tier, faces lower it by at most one
  for (int n = 0; n < 3; ++n)
    for (int i = 0; i <= n; ++i)
      for (int x = 0; x < sp.levels[n].size(); ++x)
        CHECK(sp.tier[n + 1][sp.degeneracy[n][i][x]] >= sp.tier[n][x] + 1);
  for (int n = 1; n <= 3; ++n)
    for (int i = 0; i <= n; ++i)
      for (int x = 0; x < sp.levels[n].size(); ++x)
        if (sp.tier[n][x] >= 1)
          CHECK(sp.tier[n - 1][sp.face[n][i][x]] >= sp.tier[n][x] - 1);
}

TEST_CASE("wedge stratum bijections") {
  auto s3 = catalog_group("sym:3");
  auto sp = build_space(build_gamma(2), s3, 3);

  auto w0 = wedge_check(sp, 2, 0);
  CHECK(w0.pass);
  CHECK(w0.stratum_size == 7);
  CHECK(w0.binom == 1);

  auto w1 = wedge_check(sp, 2, 1);
  CHECK(w1.pass);
  CHECK(w1.stratum_size == 10);
  CHECK(w1.binom == 2);
  CHECK(w1.identity_free == 5);

  auto w2 = wedge_check(sp, 2, 2);
  CHECK(w2.pass);
  CHECK(w2.stratum_size == 1);

  for (int t = 0; t <= 3; ++t) CHECK(wedge_check(sp, 3, t).pass);

  auto z4 = catalog_group("cyclic:4");
  auto sp4 = build_space(build_gamma(3), z4, 3);
  for (int n = 0; n <= 3; ++n)
    for (int t = 0; t <= n; ++t) CHECK(wedge_check(sp4, n, t).pass);

  auto fsp = build_space(build_free(), z4, 2);
  CHECK_THROWS_AS(wedge_check(fsp, 2, 1), Error);
}

TEST_CASE("abelian groups make the free and gamma:2 spaces equal") {
  auto z4 = catalog_group("cyclic:4");
  auto a = build_space(build_free(), z4, 3);
  auto b = build_space(build_gamma(2), z4, 3);
  for (int n = 0; n <= 3; ++n) {
    CHECK(a.levels[n].tuples == b.levels[n].tuples);
    CHECK(a.tier[n] == b.tier[n]);
  }
  CHECK(a.face == b.face);
  CHECK(a.degeneracy == b.degeneracy);
}

TEST_CASE("subgroup inclusion commutes with the structure maps") {
  auto s3 = catalog_group("sym:3");
  auto a3 = make_subgroup(s3, {3}); // alternating subgroup
  auto fam = build_gamma(2);
  auto small = build_space(fam, a3.subgroup, 2);
  auto big = build_space(fam, s3, 2);

  for (int n = 0; n <= 2; ++n) {
    // inclusion of tuple sets via the embedding
    std::vector<int> incl(small.levels[n].size());
    for (int x = 0; x < small.levels[n].size(); ++x) {
      Tuple t = small.levels[n].tuples[x];
      for (auto& v : t) v = a3.embedding[v];
      incl[x] = big.levels[n].index_of(t);
      REQUIRE(incl[x] >= 0);
    }
    if (n >= 1) {
      std::vector<int> incl_low(small.levels[n - 1].size());
      for (int x = 0; x < small.levels[n - 1].size(); ++x) {
        Tuple t = small.levels[n - 1].tuples[x];
        for (auto& v : t) v = a3.embedding[v];
        incl_low[x] = big.levels[n - 1].index_of(t);
      }
      for (int i = 0; i <= n; ++i)
        for (int x = 0; x < small.levels[n].size(); ++x)
          CHECK(big.face[n][i][incl[x]] == incl_low[small.face[n][i][x]]);
    }
  }
}

TEST_CASE("conjugation orbits with Burnside cross-check") {
  auto s3 = catalog_group("sym:3");
  auto sp = build_space(build_gamma(2), s3, 2);
  auto orbits = conjugation_orbits(sp, 2);
  CHECK(orbits.count == 8); // |Rep(Z^2, S_3)|

  // independent Burnside oracle: fixed tuples of each conjugation
  std::int64_t fixed = 0;
  for (int e = 0; e < 6; ++e)
    for (const auto& t : sp.levels[2].tuples) {
      bool fix = true;
      for (int v : t)
        if (s3->conjugate(e, v) != v) fix = false;
      if (fix) ++fixed;
    }
  CHECK(fixed == 6 * 8);

  // tier-0 orbits: (t,t) for transpositions, (c,c) and (c,c^2) for 3-cycles;
  // tier-1 orbits: e paired with either class on either side; tier-2: (e,e)
  auto strata = orbit_strata_sizes(sp, orbits);
  int total = 0;
  for (int c : strata) total += c;
  CHECK(total == orbits.count);
  CHECK(strata == std::vector<int>{3, 4, 1});

  // conjugation by the identity fixes every tuple: orbit of rep contains rep
  for (int r : orbits.representatives)
    CHECK(orbits.orbit_of[r] >= 0);

  // orbit reps are lexicographically least members
  for (int x = 0; x < sp.levels[2].size(); ++x)
    CHECK(orbits.representatives[orbits.orbit_of[x]] <= x);
}

TEST_CASE("pushout and pullback of the twisted family") {
  Mode sym = Mode::symbolic_mode();
  auto s3 = catalog_group("sym:3");
  auto g2 = build_gamma(2);

  auto rep = pushout_check(g2, make_cocycle(g2, parse_word("a1"), sym), s3, 2);
  CHECK(rep.pass);
  CHECK(rep.levels[2].hom_lb == 108); // 6 * 18
  CHECK(rep.levels[2].expected == 108);

  auto z2 = catalog_group("cyclic:2");
  auto f = build_free();
  auto repf = pushout_check(f, make_cocycle(f, parse_word("a1"), sym), z2, 2);
  CHECK(repf.pass);
  CHECK(repf.levels[2].hom_lb == 8); // free on 3 generators

  // trivial cocycle degenerates to a plain product
  auto repe = pushout_check(g2, make_cocycle(g2, Word{}, sym), s3, 2);
  CHECK(repe.pass);

  auto rep2 = pushout_check(g2, make_cocycle(g2, parse_word("a1^2"), sym), s3, 2);
  CHECK(rep2.pass);
}

TEST_CASE("enumeration cache round trip") {
  auto dir = std::filesystem::temp_directory_path() / "homcx-cache-test";
  std::filesystem::remove_all(dir);
  auto s3 = catalog_group("sym:3");
  auto p = build_gamma(2)->level_ptr(2);
  auto hom = enumerate_hom(p, s3);
  cache_store(dir.string(), hom, 2);
  auto loaded = cache_load(dir.string(), p, s3, 2);
  REQUIRE(loaded.has_value());
  CHECK(loaded->tuples == hom.tuples);
  CHECK(!cache_load(dir.string(), p, s3, 3).has_value());
  // different presentation misses
  CHECK(!cache_load(dir.string(), build_gamma(3)->level_ptr(2), s3, 2)
             .has_value());
  std::filesystem::remove_all(dir);
}

TEST_CASE("spaces populate and reuse the cache") {
  auto dir = std::filesystem::temp_directory_path() / "homcx-space-cache";
  std::filesystem::remove_all(dir);
  auto s3 = catalog_group("sym:3");
  auto fam = build_gamma(2);
  auto fresh = build_space(fam, s3, 2, 10000000, dir.string());
  int files = 0;
  for ([[maybe_unused]] auto& entry : std::filesystem::directory_iterator(dir))
    ++files;
  CHECK(files == 3); // one per level
  auto cached = build_space(fam, s3, 2, 10000000, dir.string());
  for (int n = 0; n <= 2; ++n)
    CHECK(cached.levels[n].tuples == fresh.levels[n].tuples);
  CHECK(cached.face == fresh.face);
  std::filesystem::remove_all(dir);
}
