/* simplicity.hpp -- condition (L), cofinality and the simplicity verdict.
 *
 * For a shift with memory m, whether beta gamma x is a point depends on beta
 * only through its min(m,|beta|)-suffix, so follower sets and costs of finite
 * word sets B are classified by suffix sets S of words of length <= m.  This
 * turns the universally quantified definitions into finite procedures; each
 * decision procedure is paired with a bounded brute-force oracle whose
 * definite failures are authoritative.
 */
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "subshift/clopen.hpp"
#include "subshift/ring.hpp"
#include "subshift/shift.hpp"

namespace subshift {

/// A realizable follower class: the words S inducing it and F_S itself.
struct FollowerClass {
  std::vector<Word> suffix_set;  // length-lex ordered, nonempty words
  ClopenSet follower;            // nonempty by construction
};

/// Structured counterexample, replayable through the oracles.
struct Witness {
  std::vector<Word> B;                          // the word set carrying the failure
  std::optional<Word> gamma;                    // the isolated period, for condition (L)
  std::optional<EvPeriodicPoint> point;         // trapped or singleton point
  std::string note;
};

struct Verdict {
  std::string property;
  bool holds = false;
  std::optional<Witness> witness;               // present iff holds is false
  std::string method = "decision";              // "decision" or "oracle"
  std::optional<long long> bound;               // set for bounded methods
  std::string detail;                           // human-readable elaboration
};

inline constexpr std::size_t kDefaultClassCap = std::size_t{1} << 20;

/// All distinct nonempty follower sets F_S, S a nonempty set of language
/// words of length <= m; deduplicated by set equality, first suffix set in
/// subset enumeration order wins.  Throws Errc::class_explosion when the
/// number of candidate subsets exceeds class_cap.
std::vector<FollowerClass> realizable_follower_classes(const ShiftPtr& s,
                                                       std::size_t class_cap = kDefaultClassCap);

/// Condition (L): no follower class is a singleton consisting of a purely
/// periodic point.  Witness on failure: B = S, gamma the period.
Verdict check_condition_L(const ShiftPtr& s, std::size_t class_cap = kDefaultClassCap);

/// Exact minimum of |alpha| + |gamma| over alpha, gamma in the language with
/// p = alpha x'' and beta gamma x'' in the shift for every beta in B;
/// nullopt encodes infinity.  B must be a nonempty set of language words.
std::optional<long long> cost(const ShiftPtr& s, const std::vector<Word>& B,
                              const EvPeriodicPoint& p);

/// Hyper cofinality: sup over points of cost(B, .) is finite for every
/// finite B with nonempty follower set.  Decided per class by checking that
/// the states that admit no repairing gamma span no cycle; a cycle yields a
/// trapped periodic point of infinite cost.
Verdict check_hyper_cofinal(const ShiftPtr& s, std::size_t class_cap = kDefaultClassCap);

/// The same criterion restricted to singleton classes.
Verdict check_strongly_cofinal(const ShiftPtr& s);

/// Bounded semi-decision of collective cofinality: over all classes and all
/// eventually periodic points with |u| + |v| <= bound, some alpha, gamma with
/// |alpha| + |gamma| <= bound must work.
Verdict check_collectively_cofinal_bounded(const ShiftPtr& s, std::size_t bound,
                                           std::size_t class_cap = kDefaultClassCap);

/// Minimality of the induced partial action; for finite alphabets this is
/// exactly hyper cofinality.
Verdict is_minimal(const ShiftPtr& s, std::size_t class_cap = kDefaultClassCap);

/// The algebra over a field is simple iff condition (L) and hyper cofinality
/// both hold.  Throws Errc::ring_not_field for non-field coefficients.  The
/// verdict also applies to the corresponding C*-algebra.
Verdict simplicity_verdict(const ShiftPtr& s, const CoefficientRing& ring,
                           std::size_t class_cap = kDefaultClassCap);

/// Brute-force condition (L) straight from the definition: all B of size
/// <= bound over language words of length <= bound, all gamma of length
/// <= bound.  The second-point search combines bounded point enumeration
/// with a constructive branch walk and is complete, so failures are
/// authoritative; a pass is up to the bound.
Verdict oracle_condition_L(const ShiftPtr& s, std::size_t bound);

/// Brute-force cofinality: evaluates cost on every bounded B (size
/// <= max_B_size, default bound) and every bounded point.  An infinite cost
/// is a definite failure.
Verdict oracle_cofinal(const ShiftPtr& s, std::size_t bound, std::size_t max_B_size = 0);

/// Re-verify emitted witnesses by definition-direct search.
bool replay_condition_L_witness(const ShiftPtr& s, const Witness& w);
bool replay_cofinal_witness(const ShiftPtr& s, const Witness& w, std::size_t bound);

/// All points of the shift with |preperiod| + |period| <= max_total_len,
/// canonical and sorted.
std::vector<EvPeriodicPoint> enumerate_points(const ShiftPtr& s, std::size_t max_total_len);

}  // namespace subshift
