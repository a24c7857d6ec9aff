#include "homcx/homspace.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>

#include <nlohmann/json.hpp>

#include "homcx/error.hpp"

namespace homcx {

namespace {

std::string tuple_str(const Tuple& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(t[i]);
  }
  return s + ")";
}

} // namespace

int HomSet::index_of(const Tuple& t) const {
  auto it = std::lower_bound(tuples.begin(), tuples.end(), t);
  if (it == tuples.end() || *it != t) return -1;
  return (int)(it - tuples.begin());
}

HomSet enumerate_hom(const PresentationPtr& p, const GroupPtr& g,
                     std::int64_t budget) {
  int rank = p->num_generators;
  std::int64_t total = 1;
  for (int i = 0; i < rank; ++i) {
    total *= g->order;
    if (total > budget)
      fail(ErrorCode::BudgetExceeded,
           "enumerate_hom: |" + g->name + "|^" + std::to_string(rank) +
               " exceeds budget " + std::to_string(budget));
  }
  // Secondary predicate from the subgroup series; kept in lockstep with the
  // relator predicate for quotient kinds, disagreement is a hard error.
  bool check_series = (p->kind.tag == Kind::FreeNilpotent ||
                       p->kind.tag == Kind::FreeSolvable) &&
                      !p->relators.empty();
  HomSet hs;
  hs.source = p;
  hs.group = g;
  Tuple t(rank, 0);
  while (true) {
    bool rel_ok = true;
    for (const auto& r : p->relators)
      if (evaluate_word(*g, r, t) != 0) {
        rel_ok = false;
        break;
      }
    if (check_series) {
      auto profile = series_profile(*g, subgroup_closure(*g, t));
      bool series_ok =
          p->kind.tag == Kind::FreeNilpotent
              ? (profile.nilpotency_class &&
                 *profile.nilpotency_class <= p->kind.param)
              : (profile.derived_length &&
                 *profile.derived_length <= p->kind.param);
      if (series_ok != rel_ok)
        fail(ErrorCode::Internal,
             "enumerate_hom: relator predicate and series predicate disagree "
             "on " +
                 tuple_str(t) + " for " + p->label + " over " + g->name);
    }
    if (rel_ok) hs.tuples.push_back(t);
    int k = rank - 1;
    while (k >= 0 && t[k] == g->order - 1) t[k--] = 0;
    if (k < 0) break;
    ++t[k];
  }
  return hs;
}

std::vector<int> induced_map(const GeneratorMap& phi, const HomSet& from,
                             const HomSet& into) {
  if (from.source.get() != phi.target.get() ||
      into.source.get() != phi.source.get())
    fail(ErrorCode::RankMismatch, "induced_map: hom-sets do not match map");
  const FiniteGroup& g = *from.group;
  std::vector<int> out(from.tuples.size());
  Tuple pulled(phi.images.size());
  for (std::size_t x = 0; x < from.tuples.size(); ++x) {
    for (std::size_t k = 0; k < phi.images.size(); ++k)
      pulled[k] = evaluate_word(g, phi.images[k], from.tuples[x]);
    int idx = into.index_of(pulled);
    if (idx < 0) {
      std::string violated = "?";
      for (const auto& r : into.source->relators)
        if (evaluate_word(g, r, pulled) != 0) {
          violated = format_word(r);
          break;
        }
      fail(ErrorCode::ImageNotAHomomorphism,
           "induced tuple " + tuple_str(pulled) + " of " +
               tuple_str(from.tuples[x]) + " violates relator " + violated +
               " of " + into.source->label + " over " + g.name);
    }
    out[x] = idx;
  }
  return out;
}

const HomSet& HomCache::get(const PresentationPtr& p, const GroupPtr& g,
                            std::int64_t budget) {
  auto key = std::make_pair((const void*)p.get(), (const void*)g.get());
  auto it = store_.find(key);
  if (it == store_.end())
    it = store_.emplace(key, enumerate_hom(p, g, budget)).first;
  return it->second;
}

bool maps_agree_pointwise(const GeneratorMap& f, const GeneratorMap& h,
                          const GroupPtr& g, std::int64_t budget,
                          std::string* witness, HomCache* cache) {
  HomCache local;
  HomCache& c = cache ? *cache : local;
  const HomSet& hom = c.get(f.target, g, budget);
  for (const auto& t : hom.tuples)
    for (std::size_t k = 0; k < f.images.size(); ++k) {
      int a = evaluate_word(*g, f.images[k], t);
      int b = evaluate_word(*g, h.images[k], t);
      if (a != b) {
        if (witness)
          *witness = "generator a" + std::to_string(k + 1) + " at point " +
                     tuple_str(t) + " over " + g->name + ": " +
                     std::to_string(a) + " vs " + std::to_string(b);
        return false;
      }
    }
  return true;
}

bool words_agree_pointwise(const PresentationPtr& p, const Word& w1,
                           const Word& w2, const GroupPtr& g,
                           std::int64_t budget, std::string* witness,
                           HomCache* cache) {
  HomCache local;
  HomCache& c = cache ? *cache : local;
  const HomSet& hom = c.get(p, g, budget);
  for (const auto& t : hom.tuples) {
    int a = evaluate_word(*g, w1, t);
    int b = evaluate_word(*g, w2, t);
    if (a != b) {
      if (witness)
        *witness = format_word(w1) + " vs " + format_word(w2) + " at point " +
                   tuple_str(t) + " over " + g->name;
      return false;
    }
  }
  return true;
}

bool map_is_hom_pointwise(const GeneratorMap& f, const GroupPtr& g,
                          std::int64_t budget, std::string* witness,
                          HomCache* cache) {
  HomCache local;
  HomCache& c = cache ? *cache : local;
  const HomSet& hom = c.get(f.target, g, budget);
  for (const auto& t : hom.tuples)
    for (const auto& r : f.source->relators) {
      if (evaluate_word(*g, f.apply(r), t) != 0) {
        if (witness)
          *witness = "relator " + format_word(r) + " alive at point " +
                     tuple_str(t) + " over " + g->name;
        return false;
      }
    }
  return true;
}

std::vector<int> SimplicialHomSpace::strata_sizes(int n) const {
  std::vector<int> counts(n + 1, 0);
  for (int t : tier[n]) ++counts[t];
  return counts;
}

SimplicialHomSpace build_space(const CosimplicialPtr& l, const GroupPtr& g,
                               int n_max, std::int64_t budget,
                               const std::string& cache_dir) {
  if (!l->has_level(n_max))
    fail(ErrorCode::ConfigError,
         l->descriptor() + ": level " + std::to_string(n_max) +
             " outside truncation");
  SimplicialHomSpace sp;
  sp.family = l;
  sp.group = g;
  sp.n_max = n_max;
  for (int n = 0; n <= n_max; ++n) {
    if (!cache_dir.empty()) {
      if (auto cached = cache_load(cache_dir, l->level_ptr(n), g, n)) {
        sp.levels.push_back(std::move(*cached));
        continue;
      }
    }
    sp.levels.push_back(enumerate_hom(l->level_ptr(n), g, budget));
    if (!cache_dir.empty()) cache_store(cache_dir, sp.levels.back(), n);
  }
  sp.face.resize(n_max + 1);
  sp.degeneracy.resize(n_max + 1);
  for (int n = 1; n <= n_max; ++n)
    for (int i = 0; i <= n; ++i)
      sp.face[n].push_back(
          induced_map(l->coface(n, i), sp.levels[n], sp.levels[n - 1]));
  for (int n = 0; n < n_max; ++n)
    for (int i = 0; i <= n; ++i)
      sp.degeneracy[n].push_back(
          induced_map(l->codegeneracy(n, i), sp.levels[n], sp.levels[n + 1]));

  auto violation = [&](const std::string& what, int n, int x) {
    fail(ErrorCode::SimplicialIdentityViolation,
         what + " fails at level " + std::to_string(n) + ", tuple " +
             tuple_str(sp.levels[n].tuples[x]) + " over " + g->name);
  };
  // d_i d_j = d_{j-1} d_i (i < j)
  for (int n = 2; n <= n_max; ++n)
    for (int j = 1; j <= n; ++j)
      for (int i = 0; i < j; ++i)
        for (int x = 0; x < sp.levels[n].size(); ++x)
          if (sp.face[n - 1][i][sp.face[n][j][x]] !=
              sp.face[n - 1][j - 1][sp.face[n][i][x]])
            violation("d_" + std::to_string(i) + " d_" + std::to_string(j), n,
                      x);
  // s_i s_j = s_{j+1} s_i (i <= j)
  for (int n = 0; n + 2 <= n_max; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= j; ++i)
        for (int x = 0; x < sp.levels[n].size(); ++x)
          if (sp.degeneracy[n + 1][i][sp.degeneracy[n][j][x]] !=
              sp.degeneracy[n + 1][j + 1][sp.degeneracy[n][i][x]])
            violation("s_" + std::to_string(i) + " s_" + std::to_string(j), n,
                      x);
  // d_i s_j
  for (int n = 0; n + 1 <= n_max; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= n + 1; ++i)
        for (int x = 0; x < sp.levels[n].size(); ++x) {
          int got = sp.face[n + 1][i][sp.degeneracy[n][j][x]];
          int want;
          if (i == j || i == j + 1)
            want = x;
          else if (i < j)
            want = sp.degeneracy[n - 1][j - 1][sp.face[n][i][x]];
          else
            want = sp.degeneracy[n - 1][j][sp.face[n][i - 1][x]];
          if (got != want)
            violation("d_" + std::to_string(i) + " s_" + std::to_string(j), n,
                      x);
        }
  // degeneracies are injective
  for (int n = 0; n < n_max; ++n)
    for (int i = 0; i <= n; ++i) {
      std::set<int> targets(sp.degeneracy[n][i].begin(),
                            sp.degeneracy[n][i].end());
      if (targets.size() != sp.degeneracy[n][i].size())
        fail(ErrorCode::SimplicialIdentityViolation,
             "degeneracy s_" + std::to_string(i) + " at level " +
                 std::to_string(n) + " is not injective");
    }
  // Tier recursion: S^t(X_n) is the union of s_i(S^{t-1}(X_{n-1})).
  sp.tier.resize(n_max + 1);
  for (int n = 0; n <= n_max; ++n)
    sp.tier[n].assign(sp.levels[n].size(), 0);
  for (int n = 1; n <= n_max; ++n)
    for (int i = 0; i < n; ++i)
      for (int x = 0; x < sp.levels[n - 1].size(); ++x) {
        int y = sp.degeneracy[n - 1][i][x];
        sp.tier[n][y] = std::max(sp.tier[n][y], sp.tier[n - 1][x] + 1);
      }
  return sp;
}

WedgeReport wedge_check(const SimplicialHomSpace& space, int n, int t) {
  if (space.family->descriptor().rfind("gamma:", 0) != 0)
    fail(ErrorCode::ConfigError,
         "wedge_check applies to gamma:q families only");
  if (n > space.n_max || t < 0 || t > n)
    fail(ErrorCode::ConfigError, "wedge_check: bad (n, t)");
  WedgeReport rep;
  rep.n = n;
  rep.t = t;
  const auto& level_n = space.levels[n];
  const auto& level_low = space.levels[n - t];

  std::vector<int> tier0_low; // identity-free tuples downstairs
  for (int y = 0; y < level_low.size(); ++y)
    if (space.tier[n - t][y] == 0) tier0_low.push_back(y);
  std::vector<int> low_pos(level_low.size(), -1);
  for (std::size_t k = 0; k < tier0_low.size(); ++k)
    low_pos[tier0_low[k]] = (int)k;
  rep.identity_free = (std::int64_t)tier0_low.size();

  // All t-subsets of {0..n-1}, lexicographic.
  std::vector<std::vector<int>> subsets;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int from) -> void {
    if ((int)cur.size() == t) {
      subsets.push_back(cur);
      return;
    }
    for (int v = from; v < n; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  rep.binom = (std::int64_t)subsets.size();
  std::map<std::vector<int>, int> subset_index;
  for (std::size_t k = 0; k < subsets.size(); ++k)
    subset_index[subsets[k]] = (int)k;

  std::vector<char> used((std::size_t)rep.binom * tier0_low.size(), 0);
  for (int x = 0; x < level_n.size(); ++x) {
    if (space.tier[n][x] != t) continue;
    ++rep.stratum_size;
    const Tuple& tup = level_n.tuples[x];
    std::vector<int> positions;
    Tuple complement;
    for (int c = 0; c < n; ++c) {
      if (tup[c] == 0)
        positions.push_back(c);
      else
        complement.push_back(tup[c]);
    }
    if ((int)positions.size() != t) {
      rep.witness = "tuple " + tuple_str(tup) + " has tier " + std::to_string(t) +
                    " but " + std::to_string(positions.size()) +
                    " identity coordinates";
      return rep;
    }
    int y = level_low.index_of(complement);
    if (y < 0 || low_pos[y] < 0) {
      rep.witness = "projection " + tuple_str(complement) +
                    " is not an identity-free point at level " +
                    std::to_string(n - t);
      return rep;
    }
    // Inverse: reinsert identities with the complementary degeneracies,
    // innermost insertion first.
    int cursor = y;
    for (int k = t - 1; k >= 0; --k) {
      int level_at = n - t + (t - 1 - k); // current level of `cursor`
      int s_index = positions[k] - k;
      cursor = space.degeneracy[level_at][s_index][cursor];
    }
    if (cursor != x) {
      rep.witness = "degeneracy composite does not invert the projection at " +
                    tuple_str(tup);
      return rep;
    }
    std::size_t slot =
        (std::size_t)subset_index.at(positions) * tier0_low.size() +
        (std::size_t)low_pos[y];
    if (used[slot]) {
      rep.witness = "two stratum points share (positions, projection) at " +
                    tuple_str(tup);
      return rep;
    }
    used[slot] = 1;
  }
  if (rep.stratum_size != rep.binom * rep.identity_free) {
    rep.witness = "count identity fails: " + std::to_string(rep.stratum_size) +
                  " != " + std::to_string(rep.binom) + " * " +
                  std::to_string(rep.identity_free);
    return rep;
  }
  rep.pass = true;
  return rep;
}

OrbitSpace conjugation_orbits(const SimplicialHomSpace& space, int n) {
  const FiniteGroup& g = *space.group;
  const HomSet& hom = space.levels[n];
  int m = hom.size();

  // Conjugation permutations of every level touched by the equivariance
  // checks at level n.
  auto conj_perm = [&](int level, int elem) {
    const HomSet& hs = space.levels[level];
    std::vector<int> perm(hs.size());
    Tuple image(hs.tuples.empty() ? 0 : hs.tuples[0].size());
    for (int x = 0; x < hs.size(); ++x) {
      for (std::size_t k = 0; k < hs.tuples[x].size(); ++k)
        image[k] = g.conjugate(elem, hs.tuples[x][k]);
      int idx = hs.index_of(image);
      if (idx < 0)
        fail(ErrorCode::EquivarianceViolation,
             "conjugate of a homomorphism is not a homomorphism (level " +
                 std::to_string(level) + ")");
      perm[x] = idx;
    }
    return perm;
  };

  std::vector<std::vector<int>> perms_n(g.order);
  for (int e = 0; e < g.order; ++e) perms_n[e] = conj_perm(n, e);

  for (int e = 0; e < g.order; ++e) {
    if (n >= 1) {
      auto low = conj_perm(n - 1, e);
      for (int i = 0; i <= n; ++i)
        for (int x = 0; x < m; ++x)
          if (low[space.face[n][i][x]] != space.face[n][i][perms_n[e][x]])
            fail(ErrorCode::EquivarianceViolation,
                 "conjugation does not commute with d_" + std::to_string(i) +
                     " at level " + std::to_string(n) + " over " + g.name);
    }
    if (n < space.n_max) {
      auto high = conj_perm(n + 1, e);
      for (int i = 0; i <= n; ++i)
        for (int x = 0; x < m; ++x)
          if (high[space.degeneracy[n][i][x]] !=
              space.degeneracy[n][i][perms_n[e][x]])
            fail(ErrorCode::EquivarianceViolation,
                 "conjugation does not commute with s_" + std::to_string(i) +
                     " at level " + std::to_string(n) + " over " + g.name);
    }
  }

  OrbitSpace orbits;
  orbits.level = n;
  orbits.orbit_of.assign(m, -1);
  std::int64_t fixed_total = 0;
  for (int e = 0; e < g.order; ++e)
    for (int x = 0; x < m; ++x)
      if (perms_n[e][x] == x) ++fixed_total;
  for (int x = 0; x < m; ++x) {
    if (orbits.orbit_of[x] >= 0) continue;
    int id = orbits.count++;
    orbits.representatives.push_back(x);
    std::vector<int> stack{x};
    orbits.orbit_of[x] = id;
    while (!stack.empty()) {
      int cur = stack.back();
      stack.pop_back();
      for (int e = 0; e < g.order; ++e) {
        int nxt = perms_n[e][cur];
        if (orbits.orbit_of[nxt] < 0) {
          orbits.orbit_of[nxt] = id;
          stack.push_back(nxt);
        }
      }
    }
  }
  if (fixed_total != (std::int64_t)orbits.count * g.order)
    fail(ErrorCode::Internal,
         "Burnside count mismatch: " + std::to_string(fixed_total) + " vs " +
             std::to_string(orbits.count) + " * " + std::to_string(g.order));
  // Tiers are constant on orbits.
  for (int x = 0; x < m; ++x)
    if (space.tier[n][x] !=
        space.tier[n][orbits.representatives[orbits.orbit_of[x]]])
      fail(ErrorCode::EquivarianceViolation,
           "tier not constant on a conjugation orbit at level " +
               std::to_string(n));
  return orbits;
}

std::vector<int> orbit_strata_sizes(const SimplicialHomSpace& space,
                                    const OrbitSpace& orbits) {
  std::vector<int> counts(orbits.level + 1, 0);
  for (int rep : orbits.representatives)
    ++counts[space.tier[orbits.level][rep]];
  return counts;
}

PushoutReport pushout_check(const CosimplicialPtr& l, const Cocycle& b,
                            const GroupPtr& g, int n_max,
                            std::int64_t budget) {
  PushoutReport rep;
  auto hb = build_hb(l, b, n_max);
  auto free_family = hb.source; // shared so presentation identities line up
  auto fplus = build_lb(free_family,
                        make_cocycle(free_family, word_generator(0),
                                     Mode::symbolic_mode()));
  auto lb = build_lb(l, b);

  for (int n = 0; n <= n_max && l->has_level(n); ++n) {
    PushoutLevelReport lr;
    lr.n = n;
    HomSet hom_lb = enumerate_hom(lb->level_ptr(n), g, budget);
    HomSet hom_l = enumerate_hom(l->level_ptr(n), g, budget);
    HomSet hom_fp = enumerate_hom(fplus->level_ptr(n), g, budget);
    HomSet hom_f = enumerate_hom(free_family->level_ptr(n), g, budget);
    lr.hom_lb = hom_lb.size();
    lr.expected = (std::int64_t)g->order * hom_l.size();

    // Free-product bijection Hom(L^b_n, G) = G x Hom(L_n, G).
    std::set<std::pair<int, int>> pairs;
    bool biject = lr.hom_lb == lr.expected;
    for (const auto& t : hom_lb.tuples) {
      Tuple rest(t.begin() + 1, t.end());
      int idx = hom_l.index_of(rest);
      if (idx < 0) {
        biject = false;
        break;
      }
      pairs.emplace(t[0], idx);
    }
    lr.product_bijection =
        biject && (std::int64_t)pairs.size() == lr.expected;

    // The square against the untwisted morphism, evaluated on points.
    GeneratorMap iota_b;
    iota_b.source = l->level_ptr(n);
    iota_b.target = lb->level_ptr(n);
    for (int k = 0; k < iota_b.source->num_generators; ++k)
      iota_b.images.push_back(word_generator(k + 1));
    GeneratorMap iota_plus;
    iota_plus.source = free_family->level_ptr(n);
    iota_plus.target = fplus->level_ptr(n);
    for (int k = 0; k < n; ++k)
      iota_plus.images.push_back(word_generator(k + 1));
    GeneratorMap id_star_hb;
    id_star_hb.source = fplus->level_ptr(n);
    id_star_hb.target = lb->level_ptr(n);
    id_star_hb.images.push_back(word_generator(0));
    for (int k = 0; k < n; ++k) {
      Word img = hb.levels[n].images[k];
      for (auto& letter : img.letters) ++letter.gen;
      id_star_hb.images.push_back(std::move(img));
    }

    auto map_ib = induced_map(iota_b, hom_lb, hom_l);
    auto map_ih = induced_map(id_star_hb, hom_lb, hom_fp);
    auto map_ip = induced_map(iota_plus, hom_fp, hom_f);
    auto map_hb = induced_map(hb.levels[n], hom_l, hom_f);

    lr.square_commutes = true;
    for (int x = 0; x < hom_lb.size(); ++x)
      if (map_ip[map_ih[x]] != map_hb[map_ib[x]]) {
        lr.square_commutes = false;
        break;
      }

    // Fiber product size and the canonical bijection onto it.
    std::vector<std::int64_t> count_a(hom_f.size(), 0), count_b(hom_f.size(), 0);
    for (int v : map_hb) ++count_a[v];
    for (int v : map_ip) ++count_b[v];
    std::int64_t fiber = 0;
    for (int f = 0; f < hom_f.size(); ++f) fiber += count_a[f] * count_b[f];
    std::set<std::pair<int, int>> canonical;
    for (int x = 0; x < hom_lb.size(); ++x)
      canonical.emplace(map_ib[x], map_ih[x]);
    lr.pullback_bijection = lr.square_commutes &&
                            (std::int64_t)canonical.size() == hom_lb.size() &&
                            fiber == hom_lb.size();
    if (!lr.product_bijection || !lr.pullback_bijection) rep.pass = false;
    rep.levels.push_back(lr);
  }
  return rep;
}

void cache_store(const std::string& dir, const HomSet& hs, int level) {
  std::filesystem::create_directories(dir);
  std::string name = "hom-v1-" + hs.group->content_hash() + "-" +
                     hs.source->content_hash() + "-L" + std::to_string(level) +
                     ".json";
  nlohmann::ordered_json j;
  j["version"] = 1;
  j["group"] = hs.group->content_hash();
  j["presentation"] = hs.source->content_hash();
  j["level"] = level;
  j["tuples"] = hs.tuples;
  std::string final_path = dir + "/" + name;
  std::string tmp_path = final_path + ".tmp";
  {
    std::ofstream out(tmp_path);
    out << j.dump() << "\n";
  }
  std::rename(tmp_path.c_str(), final_path.c_str());
}

std::optional<HomSet> cache_load(const std::string& dir,
                                 const PresentationPtr& p, const GroupPtr& g,
                                 int level) {
  std::string name = "hom-v1-" + g->content_hash() + "-" + p->content_hash() +
                     "-L" + std::to_string(level) + ".json";
  std::ifstream in(dir + "/" + name);
  if (!in) return std::nullopt;
  nlohmann::json j;
  try {
    in >> j;
  } catch (const std::exception&) {
    return std::nullopt;
  }
  if (j.value("version", 0) != 1) return std::nullopt;
  if (j.value("group", "") != g->content_hash()) return std::nullopt;
  if (j.value("presentation", "") != p->content_hash()) return std::nullopt;
  if (j.value("level", -1) != level) return std::nullopt;
  HomSet hs;
  hs.source = p;
  hs.group = g;
  hs.tuples = j.at("tuples").get<std::vector<Tuple>>();
  for (std::size_t i = 0; i < hs.tuples.size(); ++i) {
    if ((int)hs.tuples[i].size() != p->num_generators) return std::nullopt;
    for (int v : hs.tuples[i])
      if (v < 0 || v >= g->order) return std::nullopt;
    if (i > 0 && !(hs.tuples[i - 1] < hs.tuples[i])) return std::nullopt;
  }
  return hs;
}

} // namespace homcx
