#ifndef HOMCX_COSIMPLICIAL_HPP
#define HOMCX_COSIMPLICIAL_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "homcx/presentation.hpp"
#include "homcx/word.hpp"

namespace homcx {

// Homomorphism between presented groups, described on generators.
struct GeneratorMap {
  PresentationPtr source;
  PresentationPtr target;
  std::vector<Word> images;

  Word apply(const Word& w) const { return substitute(w, images); }
};

// first, then second (source of `second` = target of `first`).
GeneratorMap compose_maps(const GeneratorMap& first, const GeneratorMap& second);
GeneratorMap identity_map(const PresentationPtr& p);

// How word identities are certified: by decision procedure, or by comparing
// induced maps on Hom(-, G) over a list of finite groups.
struct Mode {
  bool symbolic = true;
  std::vector<GroupPtr> groups;
  std::int64_t budget = 10000000;

  static Mode symbolic_mode() { return {}; }
  static Mode pointwise(std::vector<GroupPtr> gs,
                        std::int64_t budget = 10000000) {
    return {false, std::move(gs), budget};
  }
  std::string describe() const;
};

// Level-indexed presentations with coface maps d^i: L_{n-1} -> L_n and
// codegeneracy maps s^i: L_{n+1} -> L_n. Levels and maps are generated
// lazily and memoized; truncated families reject levels above the cutoff.
class CosimplicialGroup {
public:
  virtual ~CosimplicialGroup() = default;

  const std::string& descriptor() const { return descriptor_; }
  std::optional<int> truncation() const { return truncation_; }
  bool has_level(int n) const;

  const Presentation& level(int n) const { return *level_ptr(n); }
  PresentationPtr level_ptr(int n) const;
  const GeneratorMap& coface(int n, int i) const;       // L_{n-1} -> L_n
  const GeneratorMap& codegeneracy(int n, int i) const; // L_{n+1} -> L_n

protected:
  CosimplicialGroup(std::string descriptor, std::optional<int> truncation)
      : descriptor_(std::move(descriptor)), truncation_(truncation) {}
  virtual PresentationPtr make_level(int n) const = 0;
  virtual GeneratorMap make_coface(int n, int i) const = 0;
  virtual GeneratorMap make_codegeneracy(int n, int i) const = 0;

private:
  std::string descriptor_;
  std::optional<int> truncation_;
  mutable std::map<int, PresentationPtr> levels_;
  mutable std::map<std::pair<int, int>, GeneratorMap> cofaces_;
  mutable std::map<std::pair<int, int>, GeneratorMap> codegeneracies_;
};

using CosimplicialPtr = std::shared_ptr<const CosimplicialGroup>;

enum class Sigma23Reading {
  Squares,     // a^2 = b^2 = c^2 = e (the reading the level-2 computations use)
  SharedSquare // only a^2 = b^2 = c^2, not forced trivial
};

CosimplicialPtr build_free();
CosimplicialPtr build_freebar();
CosimplicialPtr build_gamma(int q);   // levels F_n / Gamma^q, q >= 2
CosimplicialPtr build_derived(int q); // levels F_n / F^(q), q >= 2
CosimplicialPtr build_sigma23(Sigma23Reading reading = Sigma23Reading::Squares);

// Left-normed weight-q commutators on n generators, trivial leading pairs
// pruned and exact inverses deduplicated.
std::vector<Word> gamma_relators(int n, int q);
// Normal-closure generators of the q-th derived subgroup, built by staged
// commutators with short conjugators.
std::vector<Word> derived_relators(int n, int q);

// `free | freebar | gamma:q | derived:q | sigma23 | sigma23:strict |
//  lb:<family>:<word>`
CosimplicialPtr parse_family(const std::string& descriptor,
                             const Mode& lb_cocycle_mode);

// ---- verification ------------------------------------------------------

struct CheckResult {
  std::string name;
  Tristate status = Tristate::Equal;
  std::string witness; // filled for NotEqual / Undecidable
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  int failed = 0;
  int undecidable = 0;
  bool ok() const { return failed == 0; }
  void add(CheckResult c);
  void merge(const VerifyReport& other);
};

// The three cosimplicial identity families on every generator, all levels
// involved <= n_max. Throws nothing; failures are entries in the report.
VerifyReport verify_cosimplicial_identities(const CosimplicialGroup& l,
                                            int n_max, const Mode& mode);
// Source relators of every coface/codegeneracy die in the target.
VerifyReport verify_level_maps(const CosimplicialGroup& l, int n_max,
                               const Mode& mode);

// ---- 1-cocycles and twisted families ------------------------------------

struct CocycleOutcome {
  enum Status { Verified, Refuted, Inconclusive } status = Inconclusive;
  std::string witness;
};

// Checks d^2(b) d^0(b) = d^1(b) and s^0(b) = e; on success also the derived
// conditions for b_n, n <= 4 (within truncation).
CocycleOutcome cocycle_check(const CosimplicialGroup& l, const Word& b,
                             const Mode& mode);

struct Cocycle {
  Word b;
  Mode mode;
};
// Throws CocycleNotVerified unless cocycle_check says Verified.
Cocycle make_cocycle(const CosimplicialPtr& l, const Word& b, const Mode& mode);

// Verified powers a_1^m, |m| <= m_max, plus the identity. Completeness of
// the full cocycle set is not claimed.
std::vector<Word> scan_cocycles(const CosimplicialGroup& l, int m_max,
                                const Mode& mode);

// b_1 = b, b_{k+1} = d^{k+1}(b_k).
Word build_b_sequence(const CosimplicialGroup& l, const Word& b, int n);

// Twisted family: level n is a_0 * L_n with d^0(a_0) = a_0 b_n; word
// problems are not attempted on the free products (kind Explicit).
CosimplicialPtr build_lb(const CosimplicialPtr& l, const Cocycle& b);

struct CosimplicialMorphism {
  CosimplicialPtr source;
  CosimplicialPtr target;
  std::vector<GeneratorMap> levels; // 0..n_max
};

// Morphism F -> L with h^n(a_j) = (d^0)^{j-1} (d^2)^{n-j} (b); commutation
// with cofaces/codegeneracies is verified up to n_max and a definite
// violation throws CommutationFailure.
CosimplicialMorphism build_hb(const CosimplicialPtr& l, const Cocycle& b,
                              int n_max);
VerifyReport verify_morphism(const CosimplicialMorphism& m, const Mode& mode);

} // namespace homcx

#endif
