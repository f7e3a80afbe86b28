/* clopen.hpp -- clopen subsets of a shift as finite unions of cylinders.
 *
 * A set is stored at a single level n as a sorted list of distinct language
 * words of length n, meaning the union of their cylinders.  The canonical
 * form is the minimal level: whenever every live extension of a length-(n-1)
 * word is present the whole family collapses to that word, and lowering is
 * all-or-nothing per level, which makes the representation unique.
 */
#pragma once

#include <optional>
#include <vector>

#include "subshift/shift.hpp"

namespace subshift {

class ClopenSet {
 public:
  static ClopenSet empty(ShiftPtr s);
  static ClopenSet whole(ShiftPtr s);

  /// Z(w); the empty set when w is not in the language.
  static ClopenSet cylinder(ShiftPtr s, const Word& w);

  /// Union of cylinders of the given level-n words; validates membership in
  /// the language and canonicalizes.
  static ClopenSet from_words(ShiftPtr s, std::size_t level, std::vector<Word> words);

  const ShiftPtr& shift() const { return shift_; }
  std::size_t level() const { return level_; }
  const std::vector<Word>& words() const { return words_; }
  bool is_empty() const { return words_.empty(); }

  /// Membership; throws Errc::point_not_in_shift when p is outside the shift.
  bool contains(const EvPeriodicPoint& p) const;

  /// The same set represented at the given level >= level().
  ClopenSet refined(std::size_t level) const;

  /// When the set has exactly one point, returns it.
  std::optional<EvPeriodicPoint> single_point() const;

  friend ClopenSet set_union(const ClopenSet& a, const ClopenSet& b);
  friend ClopenSet set_intersect(const ClopenSet& a, const ClopenSet& b);
  friend ClopenSet set_minus(const ClopenSet& a, const ClopenSet& b);
  friend ClopenSet set_complement(const ClopenSet& a);
  friend bool set_equal(const ClopenSet& a, const ClopenSet& b);

 private:
  ClopenSet(ShiftPtr s, std::size_t level, std::vector<Word> words)
      : shift_(std::move(s)), level_(level), words_(std::move(words)) {}

  void canonicalize();
  static void require_same_shift(const ClopenSet& a, const ClopenSet& b);

  ShiftPtr shift_;
  std::size_t level_ = 0;
  std::vector<Word> words_;
};

/// C(alpha, beta) = { beta x in X : alpha x in X }, the clopen set the
/// partial action moves; evaluated at level |beta| + m by testing both
/// junctions against every live continuation word.
ClopenSet c_set(const ShiftPtr& s, const Word& alpha, const Word& beta);

/// Follower set F_beta = C(beta, empty word) = { x : beta x in X }.
ClopenSet follower_set(const ShiftPtr& s, const Word& beta);

}  // namespace subshift
