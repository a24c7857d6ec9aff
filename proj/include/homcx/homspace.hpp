#ifndef HOMCX_HOMSPACE_HPP
#define HOMCX_HOMSPACE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "homcx/cosimplicial.hpp"
#include "homcx/group.hpp"
#include "homcx/presentation.hpp"

namespace homcx {

using Tuple = std::vector<int>;

// All homomorphisms P -> G as generator-image tuples, sorted
// lexicographically.
struct HomSet {
  PresentationPtr source;
  GroupPtr group;
  std::vector<Tuple> tuples;

  int size() const { return (int)tuples.size(); }
  int index_of(const Tuple& t) const; // -1 when absent
};

// Exhaustive scan of G^rank against the relators. |G|^rank must stay within
// the budget. For free-nilpotent and free-solvable kinds the subgroup-series
// predicate is evaluated alongside the relator predicate and any
// disagreement fails loudly.
HomSet enumerate_hom(const PresentationPtr& p, const GroupPtr& g,
                     std::int64_t budget = 10000000);

// rho -> rho . phi, as indices: entry x of Hom(phi.target, G) maps to
// index of the pulled-back tuple inside Hom(phi.source, G). A pullback
// falling outside `into` throws ImageNotAHomomorphism.
std::vector<int> induced_map(const GeneratorMap& phi, const HomSet& from,
                             const HomSet& into);

// Memoizes enumerations keyed by presentation/group identity.
class HomCache {
public:
  const HomSet& get(const PresentationPtr& p, const GroupPtr& g,
                    std::int64_t budget);

private:
  std::map<std::pair<const void*, const void*>, HomSet> store_;
};

bool maps_agree_pointwise(const GeneratorMap& f, const GeneratorMap& h,
                          const GroupPtr& g, std::int64_t budget,
                          std::string* witness, HomCache* cache = nullptr);
bool words_agree_pointwise(const PresentationPtr& p, const Word& w1,
                           const Word& w2, const GroupPtr& g,
                           std::int64_t budget, std::string* witness,
                           HomCache* cache = nullptr);
// Every source relator pulls back to the identity under all points of
// Hom(target, G), i.e. the induced map lands in Hom(source, G).
bool map_is_hom_pointwise(const GeneratorMap& f, const GroupPtr& g,
                          std::int64_t budget, std::string* witness,
                          HomCache* cache = nullptr);

// Levels 0..n_max of Hom(L, G) with materialized face/degeneracy index maps
// and the degeneracy filtration tier of every tuple. Simplicial identities
// and degeneracy injectivity are verified during construction.
struct SimplicialHomSpace {
  CosimplicialPtr family;
  GroupPtr group;
  int n_max = 0;
  std::vector<HomSet> levels;
  // face[n][i]: level n -> level n-1 (1 <= n <= n_max, 0 <= i <= n)
  std::vector<std::vector<std::vector<int>>> face;
  // degeneracy[n][i]: level n -> level n+1 (0 <= n < n_max, 0 <= i <= n)
  std::vector<std::vector<std::vector<int>>> degeneracy;
  // tier[n][x] = max t with x in S^t (0 = nondegenerate stratum)
  std::vector<std::vector<int>> tier;

  std::vector<int> strata_sizes(int n) const; // |S^t \ S^{t+1}|, t = 0..n
};

SimplicialHomSpace build_space(const CosimplicialPtr& l, const GroupPtr& g,
                               int n_max, std::int64_t budget = 10000000,
                               const std::string& cache_dir = {});

// Stratum bijection of the stable splitting at (level n, tier t): tuples of
// tier t correspond to (choice of t degenerate positions) x (tier-0 tuples
// at level n-t), inverse given by the complementary degeneracies.
struct WedgeReport {
  int n = 0;
  int t = 0;
  std::int64_t stratum_size = 0;
  std::int64_t binom = 0;
  std::int64_t identity_free = 0;
  bool pass = false;
  std::string witness;
};
WedgeReport wedge_check(const SimplicialHomSpace& space, int n, int t);

// Orbits of simultaneous conjugation.
struct OrbitSpace {
  int level = 0;
  std::vector<int> orbit_of;        // tuple index -> orbit id
  std::vector<int> representatives; // orbit id -> lex-least tuple index
  int count = 0;
};

// Also verifies conjugation commutes with every face/degeneracy at level n,
// that tiers are constant on orbits, and the Burnside count.
OrbitSpace conjugation_orbits(const SimplicialHomSpace& space, int n);
std::vector<int> orbit_strata_sizes(const SimplicialHomSpace& space,
                                    const OrbitSpace& orbits);

// Set-level pushout/pullback check for the twisted family: the free-product
// bijection Hom(L^b_n, G) = G x Hom(L_n, G) and the pullback square against
// the untwisted morphism.
struct PushoutLevelReport {
  int n = 0;
  std::int64_t hom_lb = 0;
  std::int64_t expected = 0; // |G| * |Hom(L_n, G)|
  bool product_bijection = false;
  bool square_commutes = false;
  bool pullback_bijection = false;
};
struct PushoutReport {
  std::vector<PushoutLevelReport> levels;
  bool pass = true;
};
PushoutReport pushout_check(const CosimplicialPtr& l, const Cocycle& b,
                            const GroupPtr& g, int n_max,
                            std::int64_t budget = 10000000);

// Enumeration cache (versioned JSON, atomic publish).
void cache_store(const std::string& dir, const HomSet& hs, int level);
std::optional<HomSet> cache_load(const std::string& dir,
                                 const PresentationPtr& p, const GroupPtr& g,
                                 int level);

} // namespace homcx

#endif
