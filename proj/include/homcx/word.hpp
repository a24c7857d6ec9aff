#ifndef HOMCX_WORD_HPP
#define HOMCX_WORD_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace homcx {

// One syllable of a group word: generator index (0-based) with a nonzero
// signed exponent.
struct Letter {
  int gen = 0;
  std::int64_t exp = 0;
  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

// Word over abstract generators. Kept free-reduced by the factory helpers;
// raw letter lists can be normalized with free_reduce.
struct Word {
  std::vector<Letter> letters;

  bool empty() const { return letters.empty(); }
  // Total letter count, counting multiplicity |exp|.
  std::int64_t length() const;
  int max_generator() const; // -1 for the empty word

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;
};

Word word_generator(int gen, std::int64_t exp = 1);
Word free_reduce(const Word& w);
Word inverse(const Word& w);
Word concat(const Word& a, const Word& b); // free-reduced product
Word power(const Word& w, std::int64_t k);
// [a,b] = a^-1 b^-1 a b
Word commutator(const Word& a, const Word& b);
// [[...[x_{i0},x_{i1}],...],x_{ik}] over generator indices
Word left_normed_commutator(const std::vector<int>& gens);
// Rewrite w through images[g] substituted for generator g.
Word substitute(const Word& w, const std::vector<Word>& images);

// Exponent-sum vector (abelianization) of w over `rank` generators.
std::vector<std::int64_t> exponent_sums(const Word& w, int rank);

// Grammar: `e` | ga(^exp)?(*ga(^exp)?)* with ga = a<k>, k 1-based.
Word parse_word(const std::string& text);
std::string format_word(const Word& w);

} // namespace homcx

#endif
