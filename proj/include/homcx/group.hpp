#ifndef HOMCX_GROUP_HPP
#define HOMCX_GROUP_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "homcx/word.hpp"

namespace homcx {

// Finite group given by its full multiplication table. Element 0 is the
// identity; catalog groups fix the element order by sorting a faithful
// permutation representation lexicographically, so indices are reproducible.
struct FiniteGroup {
  int order = 1;
  std::vector<std::vector<int>> mul; // mul[x][y]
  std::vector<int> inv;
  std::string name;
  std::vector<int> generators; // may be empty (whole set generates)

  int multiply(int x, int y) const { return mul[x][y]; }
  int inverse_of(int x) const { return inv[x]; }
  int conjugate(int g, int x) const { // g x g^-1
    return mul[mul[g][x]][inv[g]];
  }
  int commutator_elems(int x, int y) const { // x^-1 y^-1 x y
    return mul[mul[mul[inv[x]][inv[y]]][x]][y];
  }
  int pow(int x, std::int64_t e) const;
  int element_order(int x) const;
  bool is_abelian() const;

  // Throws InvalidGroupFile when a table invariant fails. Associativity is
  // exhaustive for order <= 64 and sampled above that.
  void validate() const;

  std::string content_hash() const;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

// `cyclic:n | sym:n | alt:n | dihedral:2n | quaternion:8` or a JSON file path.
GroupPtr catalog_group(const std::string& name);
GroupPtr load_group_file(const std::string& path);
GroupPtr group_from_table(const std::string& name,
                          std::vector<std::vector<int>> table);
GroupPtr group_from_permutations(const std::string& name, int degree,
                                 const std::vector<std::vector<int>>& perm_gens);

// All catalog groups with order <= max_order (the default pointwise-mode
// universe). Isomorphic duplicates of cyclic groups (sym:2, alt:3) are left
// out; alt:4 and the dihedral series are included.
std::vector<GroupPtr> default_catalog(int max_order);

int evaluate_word(const FiniteGroup& g, const Word& w,
                  const std::vector<int>& assignment);

std::vector<int> subgroup_closure(const FiniteGroup& g,
                                  const std::vector<int>& seed);
bool is_subgroup(const FiniteGroup& g, const std::vector<int>& elems);

struct SeriesProfile {
  std::optional<int> nilpotency_class; // nullopt = not nilpotent
  std::optional<int> derived_length;   // nullopt = not solvable
};
// Lower central and derived series of the subgroup H (must be closed),
// computed by iterated commutator closures until stabilization.
SeriesProfile series_profile(const FiniteGroup& g, const std::vector<int>& h);

struct ConjugacyData {
  std::vector<std::vector<int>> classes;      // each sorted; ordered by min
  std::vector<std::vector<int>> centralizers; // per element, sorted
};
ConjugacyData conjugacy_data(const FiniteGroup& g);

std::vector<int> commutator_subgroup(const FiniteGroup& g);

// Subgroup generated by seed, as a FiniteGroup of its own plus the
// embedding H -> G (element i of H is G-element embedding[i]).
struct SubgroupEmbedding {
  GroupPtr subgroup;
  std::vector<int> embedding;
};
SubgroupEmbedding make_subgroup(const GroupPtr& g, const std::vector<int>& seed);

// Quotient of G by a normal subgroup (element set); element 0 is the coset
// of the identity, cosets ordered by least member.
GroupPtr quotient_group(const FiniteGroup& g, const std::vector<int>& normal);

} // namespace homcx

#endif
