#include "homcx/presentation.hpp"

#include "homcx/error.hpp"
#include "homcx/hash.hpp"

namespace homcx {

std::string Kind::describe() const {
  switch (tag) {
    case Free: return "free";
    case FreeNilpotent: return "free-nilpotent(" + std::to_string(param) + ")";
    case FreeSolvable: return "free-solvable(" + std::to_string(param) + ")";
    case FiniteKind: return "finite(" + (group ? group->name : "?") + ")";
    case Explicit: return "explicit";
  }
  return "?";
}

void Presentation::validate() const {
  if (num_generators < 0)
    fail(ErrorCode::ConfigError, "negative generator count");
  for (const auto& r : relators) {
    if (r.empty())
      fail(ErrorCode::ConfigError, "empty relator");
    if (r.max_generator() >= num_generators)
      fail(ErrorCode::GeneratorIndexOutOfRange,
           "relator " + format_word(r) + " exceeds rank " +
               std::to_string(num_generators));
  }
  if (kind.tag == Kind::Free && !relators.empty())
    fail(ErrorCode::ConfigError, "kind Free with relators");
  if (kind.tag == Kind::FiniteKind) {
    if (!kind.group) fail(ErrorCode::ConfigError, "FiniteKind without group");
    if ((int)kind.gen_images.size() != num_generators)
      fail(ErrorCode::RankMismatch, "FiniteKind generator images mismatch");
    for (const auto& r : relators)
      if (evaluate_word(*kind.group, r, kind.gen_images) != 0)
        fail(ErrorCode::ConfigError,
             "FiniteKind relator does not hold in the group");
    if ((int)subgroup_closure(*kind.group, kind.gen_images).size() !=
        kind.group->order)
      fail(ErrorCode::ConfigError,
           "FiniteKind generator images do not generate");
  }
}

std::string Presentation::content_hash() const {
  Fnv64 h;
  h.feed("presentation");
  h.feed((std::int64_t)num_generators);
  h.feed(kind.describe());
  if (kind.tag == Kind::FiniteKind) {
    h.feed(kind.group->content_hash());
    for (int v : kind.gen_images) h.feed((std::int64_t)v);
  }
  for (const auto& r : relators) h.feed(format_word(r));
  return h.hex();
}

PresentationPtr make_presentation(int num_generators, std::vector<Word> relators,
                                  Kind kind, std::string label) {
  auto p = std::make_shared<Presentation>();
  p->num_generators = num_generators;
  p->relators = std::move(relators);
  p->kind = std::move(kind);
  p->label = std::move(label);
  p->validate();
  return p;
}

bool kind_decidable(const Kind& k) {
  switch (k.tag) {
    case Kind::Free:
    case Kind::FreeNilpotent:
    case Kind::FiniteKind:
      return true;
    case Kind::FreeSolvable:
      return k.param <= 2;
    case Kind::Explicit:
      return false;
  }
  return false;
}

} // namespace homcx
