/* text.cpp -- parse and render word, point and group literals. */
#include "subshift/text.hpp"

#include <algorithm>
#include <cstddef>

#include "subshift/errors.hpp"

namespace subshift {

namespace {

bool any_multichar(const Alphabet& alph) {
  for (const std::string& s : alph.symbols())
    if (s.size() > 1) return true;
  return false;
}

// Longest symbol match at position i, or npos when nothing matches.
std::size_t match_symbol(const Alphabet& alph, const std::string& text, std::size_t i,
                         SymbolId& out) {
  std::size_t best_len = 0;
  for (SymbolId a = 0; a < alph.size(); ++a) {
    const std::string& sym = alph.name(a);
    if (sym.size() > best_len && text.compare(i, sym.size(), sym) == 0) {
      best_len = sym.size();
      out = a;
    }
  }
  return best_len == 0 ? std::string::npos : best_len;
}

}  // namespace

std::string word_to_string(const Alphabet& alph, const Word& w) {
  if (w.empty()) return "w";
  const std::string sep = any_multichar(alph) ? "." : "";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) out += sep;
    out += alph.name(w[i]);
  }
  return out;
}

Word parse_word(const Alphabet& alph, const std::string& text, std::size_t offset_base) {
  if (text == "w" && !alph.find("w").has_value()) return {};
  Word w;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == '.') {
      ++i;
      continue;
    }
    SymbolId a = 0;
    std::size_t len = match_symbol(alph, text, i, a);
    if (len == std::string::npos)
      throw SyntaxError(offset_base + i, "unknown symbol in word literal");
    w.push_back(a);
    i += len;
  }
  return w;
}

std::string point_to_string(const Alphabet& alph, const EvPeriodicPoint& p) {
  std::string pre;
  if (!p.preperiod().empty()) pre = word_to_string(alph, p.preperiod());
  return pre + "|" + word_to_string(alph, p.period());
}

EvPeriodicPoint parse_point(const Alphabet& alph, const std::string& text) {
  std::size_t bar = text.find('|');
  if (bar == std::string::npos)
    throw SyntaxError(0, "point literal must contain '|'");
  if (text.find('|', bar + 1) != std::string::npos)
    throw SyntaxError(text.find('|', bar + 1), "point literal has more than one '|'");
  Word pre = bar == 0 ? Word{} : parse_word(alph, text.substr(0, bar), 0);
  std::string per_text = text.substr(bar + 1);
  if (per_text.empty())
    throw SyntaxError(bar + 1, "point literal needs a nonempty period");
  Word per = parse_word(alph, per_text, bar + 1);
  if (per.empty())
    throw SyntaxError(bar + 1, "point literal needs a nonempty period");
  return EvPeriodicPoint(pre, per);
}

std::string group_to_string(const Alphabet& alph, const FreeGroupElement& g) {
  if (g.is_identity()) return "e";
  const std::string sep = any_multichar(alph) ? "." : "";
  std::string out;
  bool first = true;
  for (std::int32_t l : g.letters()) {
    if (!first) out += sep;
    first = false;
    SymbolId a = static_cast<SymbolId>((l > 0 ? l : -l) - 1);
    out += alph.name(a);
    if (l < 0) out += '\'';
  }
  return out;
}

FreeGroupElement parse_group(const Alphabet& alph, const std::string& text,
                             std::size_t offset_base) {
  if (text == "e" && !alph.find("e").has_value()) return FreeGroupElement();
  std::vector<std::int32_t> letters;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == '.') {
      ++i;
      continue;
    }
    SymbolId a = 0;
    std::size_t len = match_symbol(alph, text, i, a);
    if (len == std::string::npos)
      throw SyntaxError(offset_base + i, "unknown symbol in group literal");
    i += len;
    bool inv = i < text.size() && text[i] == '\'';
    if (inv) ++i;
    std::int32_t l = static_cast<std::int32_t>(a) + 1;
    letters.push_back(inv ? -l : l);
  }
  return FreeGroupElement::reduce(std::move(letters));
}

}  // namespace subshift
