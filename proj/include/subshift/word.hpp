/* word.hpp -- finite ordered alphabets and words over them. */
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "subshift/errors.hpp"

namespace subshift {

using SymbolId = std::uint32_t;

/// A word is a sequence of symbol ids; the empty vector is the empty word.
using Word = std::vector<SymbolId>;

class Alphabet {
 public:
  Alphabet() = default;

  explicit Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
    if (symbols_.empty()) fail(Errc::malformed_spec, "alphabet must be nonempty");
    for (SymbolId i = 0; i < symbols_.size(); ++i) {
      const std::string& s = symbols_[i];
      if (s.empty()) fail(Errc::malformed_spec, "alphabet symbols must be nonempty strings");
      if (!index_.emplace(s, i).second)
        fail(Errc::malformed_spec, "duplicate alphabet symbol '" + s + "'");
      if (s.size() != 1) single_char_ = false;
    }
  }

  std::size_t size() const { return symbols_.size(); }
  const std::string& name(SymbolId a) const { return symbols_.at(a); }
  const std::vector<std::string>& symbols() const { return symbols_; }
  bool single_char() const { return single_char_; }

  std::optional<SymbolId> find(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  bool operator==(const Alphabet& o) const { return symbols_ == o.symbols_; }

 private:
  std::vector<std::string> symbols_;
  std::unordered_map<std::string, SymbolId> index_;
  bool single_char_ = true;
};

inline Word concat(const Word& a, const Word& b) {
  Word r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

/// Last min(k,|w|) letters of w.
inline Word suffix(const Word& w, std::size_t k) {
  if (k >= w.size()) return w;
  return Word(w.end() - static_cast<std::ptrdiff_t>(k), w.end());
}

/// First min(k,|w|) letters of w.
inline Word prefix(const Word& w, std::size_t k) {
  if (k >= w.size()) return w;
  return Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
}

inline bool starts_with(const Word& w, const Word& p) {
  if (p.size() > w.size()) return false;
  return std::equal(p.begin(), p.end(), w.begin());
}

/// True when the nonempty pattern occurs as a factor of text.
inline bool contains_factor(const Word& text, const Word& pattern) {
  if (pattern.empty() || pattern.size() > text.size()) return false;
  for (std::size_t i = 0; i + pattern.size() <= text.size(); ++i) {
    if (std::equal(pattern.begin(), pattern.end(), text.begin() + static_cast<std::ptrdiff_t>(i)))
      return true;
  }
  return false;
}

/// Deterministic word order used throughout: by length, then lexicographic.
inline bool length_lex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace subshift
