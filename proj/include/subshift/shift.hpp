/* shift.hpp -- one-sided shifts of finite type and eventually periodic points.
 *
 * A shift is compiled from (alphabet, forbidden words) into the automaton on
 * live words of length m, where m is the memory (max forbidden length - 1,
 * at least 1).  A length-m word is live when it starts some point of the
 * shift; for one-sided shifts these are exactly the forward-extendable
 * allowed words, obtained by deleting dead states until a fixed point.
 */
#pragma once

#include <memory>
#include <vector>

#include "subshift/word.hpp"

namespace subshift {

struct ShiftSpec {
  Alphabet alphabet;
  std::vector<Word> forbidden;

  /// Throws Errc::malformed_spec on out-of-range symbols, empty or
  /// duplicate forbidden words.
  void validate() const;
};

/// The point u v v v ... , stored in canonical form: the period is primitive
/// and the preperiod is shortest (its last letter differs from the period's).
class EvPeriodicPoint {
 public:
  EvPeriodicPoint(Word preperiod, Word period);

  const Word& preperiod() const { return pre_; }
  const Word& period() const { return per_; }

  SymbolId at(std::size_t i) const {
    if (i < pre_.size()) return pre_[i];
    return per_[(i - pre_.size()) % per_.size()];
  }

  Word word_prefix(std::size_t n) const;

  /// The shifted point sigma^k: drop the first k letters.
  EvPeriodicPoint dropped(std::size_t k) const;
  EvPeriodicPoint prepended(const Word& w) const { return {concat(w, pre_), per_}; }

  bool operator==(const EvPeriodicPoint& o) const { return pre_ == o.pre_ && per_ == o.per_; }
  bool operator<(const EvPeriodicPoint& o) const {
    if (pre_ != o.pre_) return pre_ < o.pre_;
    return per_ < o.per_;
  }

 private:
  Word pre_, per_;
};

class Shift;
using ShiftPtr = std::shared_ptr<const Shift>;

class Shift {
 public:
  /// Compiles the spec: enumerate allowed length-m words, connect them by
  /// single-letter transitions, then prune states without outgoing edges.
  static ShiftPtr build(ShiftSpec spec);

  const ShiftSpec& spec() const { return spec_; }
  const Alphabet& alphabet() const { return spec_.alphabet; }
  std::size_t memory() const { return memory_; }
  bool empty() const { return states_.empty(); }
  void require_nonempty() const;

  /// Live length-m words in lexicographic order; equals the length-m language.
  const std::vector<Word>& states() const { return states_; }
  int state_index(const Word& w) const;
  int transition(int state, SymbolId a) const { return next_[static_cast<std::size_t>(state)][a]; }

  /// True when w has no forbidden factor (no liveness requirement).
  bool word_allowed(const Word& w) const;

  /// Language membership: w is a factor of some point of the shift.
  /// Throws Errc::empty_shift when the shift has no points.
  bool in_language(const Word& w) const;

  /// All language words of length exactly n, in lexicographic order.
  std::vector<Word> language(std::size_t n) const;

  /// Letters a with w a still in the language (empty for non-language w).
  std::vector<SymbolId> extensions(const Word& w) const;

  bool contains(const EvPeriodicPoint& p) const;

  /// sigma(p); throws Errc::point_not_in_shift when p is not in the shift.
  EvPeriodicPoint shifted(const EvPeriodicPoint& p) const;

 private:
  Shift() = default;

  bool prefix_of_state(const Word& w) const;

  ShiftSpec spec_;
  std::size_t memory_ = 1;
  std::size_t max_forbidden_len_ = 0;
  std::vector<Word> states_;
  std::vector<std::vector<int>> next_;
};

inline ShiftPtr build_shift(ShiftSpec spec) { return Shift::build(std::move(spec)); }

}  // namespace subshift
