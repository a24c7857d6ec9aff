#ifndef HOMCX_PRESENTATION_HPP
#define HOMCX_PRESENTATION_HPP

#include <string>
#include <vector>

#include "homcx/group.hpp"
#include "homcx/word.hpp"

namespace homcx {

// Decidability class of a presentation's word problem.
//   Free            — free group, decided by free reduction
//   FreeNilpotent c — free nilpotent of class c, decided exactly
//   FreeSolvable d  — free solvable of derived length d, decided for d <= 2
//   FiniteKind      — presents the attached finite group; generator g of the
//                     presentation is group element gen_images[g]
//   Explicit        — relators only, word problem not attempted
struct Kind {
  enum Tag { Free, FreeNilpotent, FreeSolvable, FiniteKind, Explicit };
  Tag tag = Free;
  int param = 0; // class c / derived length d
  GroupPtr group;
  std::vector<int> gen_images;

  static Kind free() { return {Free, 0, nullptr, {}}; }
  static Kind free_nilpotent(int c) { return {FreeNilpotent, c, nullptr, {}}; }
  static Kind free_solvable(int d) { return {FreeSolvable, d, nullptr, {}}; }
  static Kind finite(GroupPtr g, std::vector<int> images) {
    return {FiniteKind, 0, std::move(g), std::move(images)};
  }
  static Kind explicit_kind() { return {Explicit, 0, nullptr, {}}; }

  std::string describe() const;
};

struct Presentation {
  int num_generators = 0;
  std::vector<Word> relators;
  Kind kind;
  std::string label;

  void validate() const; // relator indices in range; Free implies no relators
  std::string content_hash() const;
};

using PresentationPtr = std::shared_ptr<const Presentation>;

PresentationPtr make_presentation(int num_generators, std::vector<Word> relators,
                                  Kind kind, std::string label = {});

enum class Tristate { Equal, NotEqual, Undecidable };

// Decides w1 = w2 in the group presented by p, for decidable kinds.
Tristate words_equal(const Presentation& p, const Word& w1, const Word& w2);
// True when words_equal never answers Undecidable for this kind.
bool kind_decidable(const Kind& k);

} // namespace homcx

#endif
