#include "homcx/cosimplicial.hpp"

#include <algorithm>
#include <set>

#include "homcx/error.hpp"
#include "homcx/homspace.hpp"
#include "homcx/wordproblem.hpp"

namespace homcx {

GeneratorMap compose_maps(const GeneratorMap& first, const GeneratorMap& second) {
  if (first.target->num_generators != second.source->num_generators)
    fail(ErrorCode::RankMismatch, "compose_maps: level mismatch");
  GeneratorMap out;
  out.source = first.source;
  out.target = second.target;
  out.images.reserve(first.images.size());
  for (const auto& w : first.images) out.images.push_back(second.apply(w));
  return out;
}

GeneratorMap identity_map(const PresentationPtr& p) {
  GeneratorMap out;
  out.source = p;
  out.target = p;
  for (int g = 0; g < p->num_generators; ++g)
    out.images.push_back(word_generator(g));
  return out;
}

std::string Mode::describe() const {
  if (symbolic) return "symbolic";
  std::string s = "pointwise[";
  for (std::size_t i = 0; i < groups.size(); ++i) {
    if (i) s += ",";
    s += groups[i]->name;
  }
  return s + "]";
}

bool CosimplicialGroup::has_level(int n) const {
  return n >= 0 && (!truncation_ || n <= *truncation_);
}

PresentationPtr CosimplicialGroup::level_ptr(int n) const {
  if (!has_level(n))
    fail(ErrorCode::ConfigError,
         descriptor_ + ": level " + std::to_string(n) +
             " outside truncation");
  auto it = levels_.find(n);
  if (it == levels_.end()) it = levels_.emplace(n, make_level(n)).first;
  return it->second;
}

const GeneratorMap& CosimplicialGroup::coface(int n, int i) const {
  if (n < 1 || i < 0 || i > n)
    fail(ErrorCode::ConfigError, "coface index out of range");
  if (!has_level(n))
    fail(ErrorCode::ConfigError, "coface above truncation");
  auto key = std::make_pair(n, i);
  auto it = cofaces_.find(key);
  if (it == cofaces_.end()) it = cofaces_.emplace(key, make_coface(n, i)).first;
  return it->second;
}

const GeneratorMap& CosimplicialGroup::codegeneracy(int n, int i) const {
  if (n < 0 || i < 0 || i > n)
    fail(ErrorCode::ConfigError, "codegeneracy index out of range");
  if (!has_level(n + 1))
    fail(ErrorCode::ConfigError, "codegeneracy above truncation");
  auto key = std::make_pair(n, i);
  auto it = codegeneracies_.find(key);
  if (it == codegeneracies_.end())
    it = codegeneracies_.emplace(key, make_codegeneracy(n, i)).first;
  return it->second;
}

namespace {

// Coface images of the free family: d^0 shifts every generator up, d^i
// doubles the i-th one, d^n fixes everything (0-based generators g for the
// presentation's a_{g+1}).
Word free_coface_image(int i, int g) {
  if (i == 0) return word_generator(g + 1);
  if (g <= i - 2) return word_generator(g);
  if (g == i - 1) return concat(word_generator(g), word_generator(g + 1));
  return word_generator(g + 1);
}

Word free_codegeneracy_image(int i, int g) {
  if (g < i) return word_generator(g);
  if (g == i) return {};
  return word_generator(g - 1);
}

class FreeFamily : public CosimplicialGroup {
public:
  FreeFamily() : CosimplicialGroup("free", std::nullopt) {}

protected:
  PresentationPtr make_level(int n) const override {
    return make_presentation(n, {}, Kind::free(),
                             "free:L" + std::to_string(n));
  }
  GeneratorMap make_coface(int n, int i) const override {
    GeneratorMap m;
    m.source = level_ptr(n - 1);
    m.target = level_ptr(n);
    for (int g = 0; g < n - 1; ++g) m.images.push_back(free_coface_image(i, g));
    return m;
  }
  GeneratorMap make_codegeneracy(int n, int i) const override {
    GeneratorMap m;
    m.source = level_ptr(n + 1);
    m.target = level_ptr(n);
    for (int g = 0; g < n + 1; ++g)
      m.images.push_back(free_codegeneracy_image(i, g));
    return m;
  }
};

class FreeBarFamily : public CosimplicialGroup {
public:
  FreeBarFamily() : CosimplicialGroup("freebar", std::nullopt) {}

protected:
  PresentationPtr make_level(int n) const override {
    return make_presentation(n + 1, {}, Kind::free(),
                             "freebar:L" + std::to_string(n));
  }
  GeneratorMap make_coface(int n, int i) const override {
    GeneratorMap m;
    m.source = level_ptr(n - 1);
    m.target = level_ptr(n);
    for (int g = 0; g < n; ++g)
      m.images.push_back(word_generator(g < i ? g : g + 1));
    return m;
  }
  GeneratorMap make_codegeneracy(int n, int i) const override {
    GeneratorMap m;
    m.source = level_ptr(n + 1);
    m.target = level_ptr(n);
    for (int g = 0; g < n + 2; ++g)
      m.images.push_back(word_generator(g <= i ? g : g - 1));
    return m;
  }
};

// Quotient families share the free family's generator maps; only the level
// presentations differ.
class QuotientFamily : public CosimplicialGroup {
public:
  QuotientFamily(std::string descriptor, int q)
      : CosimplicialGroup(std::move(descriptor), std::nullopt), q_(q) {}

protected:
  int q_;
  GeneratorMap make_coface(int n, int i) const override {
    GeneratorMap m;
    m.source = level_ptr(n - 1);
    m.target = level_ptr(n);
    for (int g = 0; g < n - 1; ++g) m.images.push_back(free_coface_image(i, g));
    return m;
  }
  GeneratorMap make_codegeneracy(int n, int i) const override {
    GeneratorMap m;
    m.source = level_ptr(n + 1);
    m.target = level_ptr(n);
    for (int g = 0; g < n + 1; ++g)
      m.images.push_back(free_codegeneracy_image(i, g));
    return m;
  }
};

class GammaFamily : public QuotientFamily {
public:
  explicit GammaFamily(int q)
      : QuotientFamily("gamma:" + std::to_string(q), q) {}

protected:
  PresentationPtr make_level(int n) const override {
    return make_presentation(n, gamma_relators(n, q_),
                             Kind::free_nilpotent(q_ - 1),
                             descriptor() + ":L" + std::to_string(n));
  }
};

class DerivedFamily : public QuotientFamily {
public:
  explicit DerivedFamily(int q)
      : QuotientFamily("derived:" + std::to_string(q), q) {}

protected:
  PresentationPtr make_level(int n) const override {
    return make_presentation(n, derived_relators(n, q_),
                             Kind::free_solvable(q_),
                             descriptor() + ":L" + std::to_string(n));
  }
};

Word braid_relator(int x, int y) { // xyx (yxy)^-1
  Word l = concat(concat(word_generator(x), word_generator(y)),
                  word_generator(x));
  Word r = concat(concat(word_generator(y), word_generator(x)),
                  word_generator(y));
  return concat(l, inverse(r));
}

class Sigma23Family : public CosimplicialGroup {
public:
  explicit Sigma23Family(Sigma23Reading reading)
      : CosimplicialGroup(reading == Sigma23Reading::Squares ? "sigma23"
                                                             : "sigma23:strict",
                          2),
        reading_(reading) {}

protected:
  Sigma23Reading reading_;

  PresentationPtr make_level(int n) const override {
    if (n == 0) {
      auto s2 = catalog_group("sym:2");
      return make_presentation(1, {power(word_generator(0), 2)},
                               Kind::finite(s2, {1}), "sigma23:L0");
    }
    if (n == 1) {
      auto s3 = catalog_group("sym:3");
      std::vector<Word> rel = {power(word_generator(0), 2),
                               power(word_generator(1), 2),
                               power(concat(word_generator(0), word_generator(1)), 3)};
      // sigma_1 = (12) is element 2, sigma_2 = (23) is element 1 in the
      // lexicographic catalog order of sym:3.
      return make_presentation(2, std::move(rel), Kind::finite(s3, {2, 1}),
                               "sigma23:L1");
    }
    std::vector<Word> rel;
    if (reading_ == Sigma23Reading::Squares) {
      rel.push_back(power(word_generator(0), 2));
      rel.push_back(power(word_generator(1), 2));
      rel.push_back(power(word_generator(2), 2));
    } else {
      rel.push_back(concat(power(word_generator(0), 2),
                           power(word_generator(2), -2)));
      rel.push_back(concat(power(word_generator(1), 2),
                           power(word_generator(2), -2)));
    }
    rel.push_back(braid_relator(0, 1));
    rel.push_back(braid_relator(0, 2));
    rel.push_back(braid_relator(1, 2));
    return make_presentation(3, std::move(rel), Kind::explicit_kind(),
                             descriptor() + ":L2");
  }

  GeneratorMap make_coface(int n, int i) const override {
    GeneratorMap m;
    m.source = level_ptr(n - 1);
    m.target = level_ptr(n);
    if (n == 1) {
      // d^0(tau) = sigma_2, d^1(tau) = sigma_1
      m.images.push_back(word_generator(i == 0 ? 1 : 0));
    } else {
      static const int img[3][2] = {{0, 1}, {2, 1}, {2, 0}}; // a,b / c,b / c,a
      m.images.push_back(word_generator(img[i][0]));
      m.images.push_back(word_generator(img[i][1]));
    }
    return m;
  }

  GeneratorMap make_codegeneracy(int n, int i) const override {
    GeneratorMap m;
    m.source = level_ptr(n + 1);
    m.target = level_ptr(n);
    if (n == 0) {
      m.images.push_back(word_generator(0));
      m.images.push_back(word_generator(0));
    } else {
      static const int img[2][3] = {{0, 1, 0}, {1, 1, 0}};
      for (int g = 0; g < 3; ++g)
        m.images.push_back(word_generator(img[i][g]));
    }
    return m;
  }
};

Word shift_word(const Word& w, int by) {
  Word out = w;
  for (auto& l : out.letters) l.gen += by;
  return out;
}

class TwistedFamily : public CosimplicialGroup {
public:
  TwistedFamily(CosimplicialPtr base, Cocycle b)
      : CosimplicialGroup("lb:" + base->descriptor() + ":" + format_word(b.b),
                          base->truncation()),
        base_(std::move(base)),
        b_(std::move(b)) {}

protected:
  CosimplicialPtr base_;
  Cocycle b_;
  mutable std::map<int, Word> b_seq_;

  const Word& twist_word(int n) const {
    auto it = b_seq_.find(n);
    if (it == b_seq_.end())
      it = b_seq_.emplace(n, build_b_sequence(*base_, b_.b, n)).first;
    return it->second;
  }

  PresentationPtr make_level(int n) const override {
    auto base = base_->level_ptr(n);
    std::vector<Word> rel;
    rel.reserve(base->relators.size());
    for (const auto& r : base->relators) rel.push_back(shift_word(r, 1));
    return make_presentation(base->num_generators + 1, std::move(rel),
                             Kind::explicit_kind(),
                             descriptor() + ":L" + std::to_string(n));
  }

  GeneratorMap make_coface(int n, int i) const override {
    GeneratorMap m;
    m.source = level_ptr(n - 1);
    m.target = level_ptr(n);
    if (i == 0)
      m.images.push_back(
          concat(word_generator(0), shift_word(twist_word(n), 1)));
    else
      m.images.push_back(word_generator(0));
    const auto& basemap = base_->coface(n, i);
    for (const auto& w : basemap.images) m.images.push_back(shift_word(w, 1));
    return m;
  }

  GeneratorMap make_codegeneracy(int n, int i) const override {
    GeneratorMap m;
    m.source = level_ptr(n + 1);
    m.target = level_ptr(n);
    m.images.push_back(word_generator(0));
    const auto& basemap = base_->codegeneracy(n, i);
    for (const auto& w : basemap.images) m.images.push_back(shift_word(w, 1));
    return m;
  }
};

} // namespace

CosimplicialPtr build_free() { return std::make_shared<FreeFamily>(); }
CosimplicialPtr build_freebar() { return std::make_shared<FreeBarFamily>(); }

CosimplicialPtr build_gamma(int q) {
  if (q < 2)
    fail(ErrorCode::UnsupportedFamilyParameter, "gamma:q needs q >= 2");
  return std::make_shared<GammaFamily>(q);
}

CosimplicialPtr build_derived(int q) {
  if (q < 2)
    fail(ErrorCode::UnsupportedFamilyParameter, "derived:q needs q >= 2");
  return std::make_shared<DerivedFamily>(q);
}

CosimplicialPtr build_sigma23(Sigma23Reading reading) {
  return std::make_shared<Sigma23Family>(reading);
}

std::vector<Word> gamma_relators(int n, int q) {
  if (n < 0 || q < 2)
    fail(ErrorCode::UnsupportedFamilyParameter, "gamma_relators: q >= 2");
  std::vector<Word> out;
  if (n <= 1) return out; // nothing noncommuting to kill
  std::set<Word> seen;
  std::vector<int> idx(q, 0);
  while (true) {
    if (idx[0] != idx[1]) {
      Word w = free_reduce(left_normed_commutator(idx));
      if (!w.empty() && !seen.count(w) && !seen.count(inverse(w))) {
        seen.insert(w);
        out.push_back(std::move(w));
      }
    }
    int k = q - 1;
    while (k >= 0 && idx[k] == n - 1) idx[k--] = 0;
    if (k < 0) break;
    ++idx[k];
  }
  return out;
}

std::vector<Word> derived_relators(int n, int q) {
  if (n < 0 || q < 2)
    fail(ErrorCode::UnsupportedFamilyParameter, "derived_relators: q >= 2");
  std::vector<Word> stage;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      stage.push_back(commutator(word_generator(i), word_generator(j)));
  if (stage.empty()) return stage;
  // Conjugators: reduced words of length <= 2 in the generators. This is
  // shorter than a full normal generating set; enumeration over this family
  // therefore always cross-checks the derived-series predicate.
  std::vector<Word> conjugators{{}};
  for (int i = 0; i < n; ++i)
    for (int s : {1, -1}) conjugators.push_back(word_generator(i, s));
  std::size_t singles = conjugators.size();
  for (std::size_t a = 1; a < singles; ++a)
    for (std::size_t b = 1; b < singles; ++b) {
      Word w = concat(conjugators[a], conjugators[b]);
      if (w.length() == 2) conjugators.push_back(std::move(w));
    }
  std::sort(conjugators.begin(), conjugators.end());
  conjugators.erase(std::unique(conjugators.begin(), conjugators.end()),
                    conjugators.end());
  for (int step = 2; step <= q; ++step) {
    std::vector<Word> next;
    std::set<Word> seen;
    for (const auto& u : stage)
      for (const auto& c : conjugators) {
        Word uc = concat(concat(inverse(c), u), c);
        for (const auto& v : stage) {
          Word r = free_reduce(commutator(uc, v));
          if (r.empty() || seen.count(r) || seen.count(inverse(r))) continue;
          seen.insert(r);
          next.push_back(std::move(r));
          if (next.size() > 20000)
            fail(ErrorCode::SizeGuardExceeded,
                 "derived_relators: relator count guard exceeded");
        }
      }
    stage = std::move(next);
  }
  return stage;
}

CosimplicialPtr parse_family(const std::string& descriptor,
                             const Mode& lb_cocycle_mode) {
  auto starts_with = [&](const std::string& p) {
    return descriptor.rfind(p, 0) == 0;
  };
  if (descriptor == "free") return build_free();
  if (descriptor == "freebar") return build_freebar();
  if (descriptor == "sigma23") return build_sigma23(Sigma23Reading::Squares);
  if (descriptor == "sigma23:strict")
    return build_sigma23(Sigma23Reading::SharedSquare);
  if (starts_with("gamma:") || starts_with("derived:")) {
    auto colon = descriptor.find(':');
    int q = 0;
    try {
      q = std::stoi(descriptor.substr(colon + 1));
    } catch (const std::exception&) {
      fail(ErrorCode::ConfigError, "bad family parameter: " + descriptor);
    }
    return starts_with("gamma:") ? build_gamma(q) : build_derived(q);
  }
  if (starts_with("lb:")) {
    auto last = descriptor.rfind(':');
    if (last == 2)
      fail(ErrorCode::ConfigError, "lb descriptor needs lb:<family>:<word>");
    std::string inner = descriptor.substr(3, last - 3);
    std::string word_text = descriptor.substr(last + 1);
    auto base = parse_family(inner, lb_cocycle_mode);
    Mode mode = lb_cocycle_mode;
    if (kind_decidable(base->level(std::min(2, base->truncation().value_or(2)))
                           .kind))
      mode = Mode::symbolic_mode();
    return build_lb(base, make_cocycle(base, parse_word(word_text), mode));
  }
  fail(ErrorCode::ConfigError, "unknown family descriptor: " + descriptor);
}

void VerifyReport::add(CheckResult c) {
  if (c.status == Tristate::NotEqual) ++failed;
  if (c.status == Tristate::Undecidable) ++undecidable;
  checks.push_back(std::move(c));
}

void VerifyReport::merge(const VerifyReport& other) {
  for (const auto& c : other.checks) add(c);
}

namespace {

// Compare two generator maps with the same source/target, symbolically or
// pointwise.
CheckResult compare_maps(const std::string& name, const GeneratorMap& lhs,
                         const GeneratorMap& rhs, const Mode& mode,
                         HomCache* cache) {
  CheckResult out{name, Tristate::Equal, ""};
  if (lhs.images.size() != rhs.images.size()) {
    out.status = Tristate::NotEqual;
    out.witness = "rank mismatch";
    return out;
  }
  if (mode.symbolic) {
    for (std::size_t g = 0; g < lhs.images.size(); ++g) {
      Tristate t = words_equal(*lhs.target, lhs.images[g], rhs.images[g]);
      if (t == Tristate::NotEqual) {
        out.status = t;
        out.witness = "generator a" + std::to_string(g + 1) + ": " +
                      format_word(lhs.images[g]) + " vs " +
                      format_word(rhs.images[g]);
        return out;
      }
      if (t == Tristate::Undecidable) {
        out.status = Tristate::Undecidable;
        out.witness = "target " + lhs.target->label + " kind " +
                      lhs.target->kind.describe();
      }
    }
    return out;
  }
  for (const auto& g : mode.groups) {
    std::string witness;
    if (!maps_agree_pointwise(lhs, rhs, g, mode.budget, &witness, cache)) {
      out.status = Tristate::NotEqual;
      out.witness = witness;
      return out;
    }
  }
  return out;
}

std::string lvl(int n) { return "L" + std::to_string(n); }

} // namespace

VerifyReport verify_cosimplicial_identities(const CosimplicialGroup& l,
                                            int n_max, const Mode& mode) {
  VerifyReport report;
  HomCache cache;
  auto ok_level = [&](int n) { return n >= 0 && n <= n_max && l.has_level(n); };

  // d^j d^i = d^i d^{j-1} for i < j (maps L_{n-2} -> L_n)
  for (int n = 2; n <= n_max; ++n) {
    if (!ok_level(n)) continue;
    for (int j = 1; j <= n; ++j)
      for (int i = 0; i < j; ++i) {
        auto lhs = compose_maps(l.coface(n - 1, i), l.coface(n, j));
        auto rhs = compose_maps(l.coface(n - 1, j - 1), l.coface(n, i));
        report.add(compare_maps("d^" + std::to_string(j) + " d^" +
                                    std::to_string(i) + " on " + lvl(n - 2) +
                                    "->" + lvl(n),
                                lhs, rhs, mode, &cache));
      }
  }
  // s^j s^i = s^{i-1} s^j for i > j (maps L_{n+2} -> L_n)
  for (int n = 0; n + 2 <= n_max; ++n) {
    if (!ok_level(n + 2)) continue;
    for (int j = 0; j <= n; ++j)
      for (int i = j + 1; i <= n + 1; ++i) {
        auto lhs = compose_maps(l.codegeneracy(n + 1, i), l.codegeneracy(n, j));
        auto rhs =
            compose_maps(l.codegeneracy(n + 1, j), l.codegeneracy(n, i - 1));
        report.add(compare_maps("s^" + std::to_string(j) + " s^" +
                                    std::to_string(i) + " on " + lvl(n + 2) +
                                    "->" + lvl(n),
                                lhs, rhs, mode, &cache));
      }
  }
  // s^j d^i (maps L_n -> L_n through L_{n+1})
  for (int n = 0; n + 1 <= n_max; ++n) {
    if (!ok_level(n + 1)) continue;
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= n + 1; ++i) {
        auto lhs = compose_maps(l.coface(n + 1, i), l.codegeneracy(n, j));
        GeneratorMap rhs;
        if (i == j || i == j + 1) {
          rhs = identity_map(l.level_ptr(n));
        } else if (i < j) {
          rhs = compose_maps(l.codegeneracy(n - 1, j - 1), l.coface(n, i));
        } else {
          rhs = compose_maps(l.codegeneracy(n - 1, j), l.coface(n, i - 1));
        }
        report.add(compare_maps("s^" + std::to_string(j) + " d^" +
                                    std::to_string(i) + " on " + lvl(n),
                                lhs, rhs, mode, &cache));
      }
  }
  return report;
}

VerifyReport verify_level_maps(const CosimplicialGroup& l, int n_max,
                               const Mode& mode) {
  VerifyReport report;
  HomCache cache;
  auto check_map = [&](const GeneratorMap& m, const std::string& name) {
    CheckResult out{name, Tristate::Equal, ""};
    if (mode.symbolic) {
      for (const auto& r : m.source->relators) {
        Tristate t = words_equal(*m.target, m.apply(r), Word{});
        if (t == Tristate::NotEqual) {
          out.status = t;
          out.witness = "relator " + format_word(r) + " maps to " +
                        format_word(m.apply(r));
          break;
        }
        if (t == Tristate::Undecidable) {
          out.status = Tristate::Undecidable;
          out.witness = "kind " + m.target->kind.describe();
        }
      }
    } else {
      for (const auto& g : mode.groups) {
        std::string witness;
        if (!map_is_hom_pointwise(m, g, mode.budget, &witness, &cache)) {
          out.status = Tristate::NotEqual;
          out.witness = witness;
          break;
        }
      }
    }
    report.add(std::move(out));
  };
  for (int n = 1; n <= n_max && l.has_level(n); ++n)
    for (int i = 0; i <= n; ++i)
      check_map(l.coface(n, i),
                "d^" + std::to_string(i) + ": " + lvl(n - 1) + "->" + lvl(n));
  for (int n = 0; n + 1 <= n_max && l.has_level(n + 1); ++n)
    for (int i = 0; i <= n; ++i)
      check_map(l.codegeneracy(n, i),
                "s^" + std::to_string(i) + ": " + lvl(n + 1) + "->" + lvl(n));
  return report;
}

namespace {

CheckResult check_words(const std::string& name, const CosimplicialGroup& l,
                        int level, const Word& w1, const Word& w2,
                        const Mode& mode, HomCache* cache) {
  CheckResult out{name, Tristate::Equal, ""};
  auto p = l.level_ptr(level);
  if (mode.symbolic) {
    Tristate t = words_equal(*p, w1, w2);
    out.status = t;
    if (t != Tristate::Equal)
      out.witness = format_word(w1) + " vs " + format_word(w2) + " in " +
                    p->label;
    return out;
  }
  for (const auto& g : mode.groups) {
    std::string witness;
    if (!words_agree_pointwise(p, w1, w2, g, mode.budget, &witness, cache)) {
      out.status = Tristate::NotEqual;
      out.witness = witness;
      return out;
    }
  }
  return out;
}

} // namespace

Word build_b_sequence(const CosimplicialGroup& l, const Word& b, int n) {
  if (n < 1) fail(ErrorCode::ConfigError, "build_b_sequence: n >= 1");
  Word acc = b;
  for (int k = 2; k <= n; ++k) acc = l.coface(k, k).apply(acc);
  return acc;
}

CocycleOutcome cocycle_check(const CosimplicialGroup& l, const Word& b,
                             const Mode& mode) {
  CocycleOutcome out;
  HomCache cache;
  if (!l.has_level(2)) {
    out.status = CocycleOutcome::Inconclusive;
    out.witness = "family truncated below level 2";
    return out;
  }
  VerifyReport rep;
  Word lhs = concat(l.coface(2, 2).apply(b), l.coface(2, 0).apply(b));
  Word rhs = l.coface(2, 1).apply(b);
  rep.add(check_words("d^2(b) d^0(b) = d^1(b)", l, 2, lhs, rhs, mode, &cache));
  rep.add(check_words("s^0(b) = e", l, 0, l.codegeneracy(0, 0).apply(b), {},
                      mode, &cache));
  if (rep.ok() && rep.undecidable == 0) {
    // Derived conditions for the iterated twist words.
    for (int n = 2; n <= 4; ++n) {
      if (!l.has_level(n + 1)) break;
      Word bn = build_b_sequence(l, b, n);
      Word l2 = concat(l.coface(n + 1, 2).apply(bn), l.coface(n + 1, 0).apply(bn));
      Word r2 = l.coface(n + 1, 1).apply(bn);
      rep.add(check_words("d^2(b_" + std::to_string(n) + ") d^0 = d^1", l,
                          n + 1, l2, r2, mode, &cache));
      rep.add(check_words("s^0(b_" + std::to_string(n) + ") = e", l, n - 1,
                          l.codegeneracy(n - 1, 0).apply(bn), {}, mode,
                          &cache));
    }
  }
  if (!rep.ok()) {
    out.status = CocycleOutcome::Refuted;
    for (const auto& c : rep.checks)
      if (c.status == Tristate::NotEqual) {
        out.witness = c.name + ": " + c.witness;
        break;
      }
  } else if (rep.undecidable > 0) {
    out.status = CocycleOutcome::Inconclusive;
    out.witness = "word problem undecidable for this kind";
  } else {
    out.status = CocycleOutcome::Verified;
  }
  return out;
}

Cocycle make_cocycle(const CosimplicialPtr& l, const Word& b,
                     const Mode& mode) {
  auto outcome = cocycle_check(*l, b, mode);
  if (outcome.status != CocycleOutcome::Verified)
    fail(ErrorCode::CocycleNotVerified,
         "cocycle " + format_word(b) + " on " + l->descriptor() +
             (outcome.status == CocycleOutcome::Refuted ? " refuted: "
                                                        : " inconclusive: ") +
             outcome.witness);
  return Cocycle{b, mode};
}

std::vector<Word> scan_cocycles(const CosimplicialGroup& l, int m_max,
                                const Mode& mode) {
  std::vector<Word> verified;
  verified.push_back({}); // identity is always a cocycle
  for (int a = 1; a <= m_max; ++a)
    for (int m : {a, -a}) {
      Word cand = word_generator(0, m);
      if (cocycle_check(l, cand, mode).status == CocycleOutcome::Verified)
        verified.push_back(cand);
    }
  return verified;
}

CosimplicialPtr build_lb(const CosimplicialPtr& l, const Cocycle& b) {
  return std::make_shared<TwistedFamily>(l, b);
}

CosimplicialMorphism build_hb(const CosimplicialPtr& l, const Cocycle& b,
                              int n_max) {
  CosimplicialMorphism m;
  m.source = build_free();
  m.target = l;
  for (int n = 0; n <= n_max && l->has_level(n); ++n) {
    GeneratorMap h;
    h.source = m.source->level_ptr(n);
    h.target = l->level_ptr(n);
    for (int j = 1; j <= n; ++j) {
      // (d^0)^{j-1} (d^2)^{n-j} (b)
      Word w = b.b;
      for (int t = 1; t <= n - j; ++t) w = l->coface(1 + t, 2).apply(w);
      for (int t = 1; t <= j - 1; ++t)
        w = l->coface(n - j + 1 + t, 0).apply(w);
      h.images.push_back(std::move(w));
    }
    m.levels.push_back(std::move(h));
  }
  auto rep = verify_morphism(m, b.mode);
  if (!rep.ok()) {
    std::string w;
    for (const auto& c : rep.checks)
      if (c.status == Tristate::NotEqual) {
        w = c.name + ": " + c.witness;
        break;
      }
    fail(ErrorCode::CommutationFailure, "h_b does not commute: " + w);
  }
  return m;
}

VerifyReport verify_morphism(const CosimplicialMorphism& m, const Mode& mode) {
  VerifyReport report;
  HomCache cache;
  int n_max = (int)m.levels.size() - 1;
  for (int n = 1; n <= n_max; ++n)
    for (int i = 0; i <= n; ++i) {
      auto lhs = compose_maps(m.levels[n - 1], m.target->coface(n, i));
      auto rhs = compose_maps(m.source->coface(n, i), m.levels[n]);
      report.add(compare_maps("h d^" + std::to_string(i) + " square at " +
                                  lvl(n),
                              lhs, rhs, mode, &cache));
    }
  for (int n = 0; n + 1 <= n_max; ++n)
    for (int i = 0; i <= n; ++i) {
      auto lhs = compose_maps(m.levels[n + 1], m.target->codegeneracy(n, i));
      auto rhs = compose_maps(m.source->codegeneracy(n, i), m.levels[n]);
      report.add(compare_maps("h s^" + std::to_string(i) + " square at " +
                                  lvl(n),
                              lhs, rhs, mode, &cache));
    }
  return report;
}

} // namespace homcx
