/* free_group.hpp -- reduced words in the free group on the alphabet. */
#pragma once

#include <cstdint>
#include <vector>

#include "subshift/word.hpp"

namespace subshift {

/// A reduced word: letter a is stored as +(a+1), its inverse as -(a+1).
class FreeGroupElement {
 public:
  FreeGroupElement() = default;  // the identity

  static FreeGroupElement reduce(std::vector<std::int32_t> raw) {
    std::vector<std::int32_t> out;
    for (std::int32_t x : raw) {
      if (!out.empty() && out.back() == -x)
        out.pop_back();
      else
        out.push_back(x);
    }
    FreeGroupElement g;
    g.letters_ = std::move(out);
    return g;
  }

  static FreeGroupElement generator(SymbolId a, bool inverted = false) {
    FreeGroupElement g;
    g.letters_.push_back(inverted ? -static_cast<std::int32_t>(a + 1)
                                  : static_cast<std::int32_t>(a + 1));
    return g;
  }

  /// The positive word alpha as a group element.
  static FreeGroupElement from_word(const Word& w) {
    FreeGroupElement g;
    for (SymbolId a : w) g.letters_.push_back(static_cast<std::int32_t>(a + 1));
    return g;
  }

  FreeGroupElement inverse() const {
    FreeGroupElement g;
    g.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) g.letters_.push_back(-*it);
    return g;
  }

  friend FreeGroupElement operator*(const FreeGroupElement& a, const FreeGroupElement& b) {
    std::vector<std::int32_t> raw = a.letters_;
    raw.insert(raw.end(), b.letters_.begin(), b.letters_.end());
    return reduce(std::move(raw));
  }

  bool is_identity() const { return letters_.empty(); }
  std::size_t length() const { return letters_.size(); }
  const std::vector<std::int32_t>& letters() const { return letters_; }

  bool operator==(const FreeGroupElement& o) const { return letters_ == o.letters_; }
  bool operator<(const FreeGroupElement& o) const {
    if (letters_.size() != o.letters_.size()) return letters_.size() < o.letters_.size();
    return letters_ < o.letters_;
  }

 private:
  std::vector<std::int32_t> letters_;
};

}  // namespace subshift
