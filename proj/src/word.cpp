#include "homcx/word.hpp"

#include <cctype>
#include <cstdlib>

#include "homcx/error.hpp"

namespace homcx {

std::int64_t Word::length() const {
  std::int64_t n = 0;
  for (const auto& l : letters) n += l.exp < 0 ? -l.exp : l.exp;
  return n;
}

int Word::max_generator() const {
  int m = -1;
  for (const auto& l : letters)
    if (l.gen > m) m = l.gen;
  return m;
}

Word word_generator(int gen, std::int64_t exp) {
  Word w;
  if (exp != 0) w.letters.push_back({gen, exp});
  return w;
}

Word free_reduce(const Word& w) {
  Word out;
  for (const auto& l : w.letters) {
    if (l.exp == 0) continue;
    if (!out.letters.empty() && out.letters.back().gen == l.gen) {
      out.letters.back().exp += l.exp;
      if (out.letters.back().exp == 0) out.letters.pop_back();
    } else {
      out.letters.push_back(l);
    }
  }
  return out;
}

Word inverse(const Word& w) {
  Word out;
  out.letters.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    out.letters.push_back({it->gen, -it->exp});
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return free_reduce(out);
}

Word power(const Word& w, std::int64_t k) {
  if (k == 0) return {};
  Word base = k > 0 ? w : inverse(w);
  std::int64_t reps = k > 0 ? k : -k;
  if (base.letters.size() == 1) {
    Letter l = base.letters[0];
    l.exp *= reps;
    return Word{{l}};
  }
  Word out;
  for (std::int64_t i = 0; i < reps; ++i) out = concat(out, base);
  return out;
}

Word commutator(const Word& a, const Word& b) {
  return concat(concat(inverse(a), inverse(b)), concat(a, b));
}

Word left_normed_commutator(const std::vector<int>& gens) {
  if (gens.empty()) return {};
  Word acc = word_generator(gens[0]);
  for (std::size_t k = 1; k < gens.size(); ++k)
    acc = commutator(acc, word_generator(gens[k]));
  return acc;
}

Word substitute(const Word& w, const std::vector<Word>& images) {
  Word out;
  for (const auto& l : w.letters) {
    if (l.gen < 0 || static_cast<std::size_t>(l.gen) >= images.size())
      fail(ErrorCode::GeneratorIndexOutOfRange,
           "substitute: generator a" + std::to_string(l.gen + 1) +
               " has no image");
    Word img = power(images[l.gen], l.exp);
    out.letters.insert(out.letters.end(), img.letters.begin(),
                       img.letters.end());
  }
  return free_reduce(out);
}

std::vector<std::int64_t> exponent_sums(const Word& w, int rank) {
  std::vector<std::int64_t> sums(rank, 0);
  for (const auto& l : w.letters) {
    if (l.gen < 0 || l.gen >= rank)
      fail(ErrorCode::RankMismatch, "exponent_sums: generator out of rank");
    sums[l.gen] += l.exp;
  }
  return sums;
}

Word parse_word(const std::string& text) {
  if (text.empty() || text == "e") return {};
  Word w;
  std::size_t pos = 0;
  auto syntax = [&](const std::string& why) {
    fail(ErrorCode::ConfigError, "bad word '" + text + "': " + why);
  };
  while (pos < text.size()) {
    if (text[pos] != 'a') syntax("expected generator 'a<k>'");
    ++pos;
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) syntax("missing generator number");
    long idx = std::strtol(text.substr(start, pos - start).c_str(), nullptr, 10);
    if (idx < 1) syntax("generator numbers are 1-based");
    std::int64_t exp = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      start = pos;
      if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == start) syntax("missing exponent");
      exp = std::strtoll(text.substr(start, pos - start).c_str(), nullptr, 10);
      if (exp == 0) syntax("zero exponent");
    }
    w.letters.push_back({static_cast<int>(idx - 1), exp});
    if (pos < text.size()) {
      if (text[pos] != '*') syntax("expected '*' between letters");
      ++pos;
      if (pos == text.size()) syntax("trailing '*'");
    }
  }
  return free_reduce(w);
}

std::string format_word(const Word& w) {
  if (w.letters.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i) out += '*';
    out += 'a';
    out += std::to_string(w.letters[i].gen + 1);
    if (w.letters[i].exp != 1) {
      out += '^';
      out += std::to_string(w.letters[i].exp);
    }
  }
  return out;
}

} // namespace homcx
