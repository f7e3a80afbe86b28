/* checks.hpp -- exhaustive and sampled identity suites for the algebra.
 *
 * Each suite replays a family of defining identities through the exact
 * arithmetic and reports every violation.  A passing report means the
 * identities hold on the nose for the quantified range, not up to sampling
 * error; the only sampled family is the chain identity, which is quantified
 * over a deterministic pseudo-random selection.
 */
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "subshift/free_group.hpp"
#include "subshift/ring.hpp"
#include "subshift/shift.hpp"

namespace subshift {

struct CheckReport {
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::vector<std::string> failures;  // first few failure descriptions

  bool ok() const { return failed == 0; }
  void pass() { ++checked; }
  void fail(std::string what) {
    ++checked;
    ++failed;
    if (failures.size() < 16) failures.push_back(std::move(what));
  }
  void merge(const CheckReport& o) {
    checked += o.checked;
    failed += o.failed;
    for (const std::string& f : o.failures)
      if (failures.size() < 16) failures.push_back(f);
  }
};

/// All reduced words of the free group on n generators with length <= max_len,
/// in (length, lexicographic) order; starts with the identity.
std::vector<FreeGroupElement> reduced_elements(std::size_t n_generators, std::size_t max_len);

/// All language words of length <= max_len, shortest first; starts with the
/// empty word.
std::vector<Word> language_up_to(const ShiftPtr& s, std::size_t max_len);

/// Partial representation axioms for pi over all reduced g, h with length
/// <= bound, the derived idempotent identities for eps_g = pi(g) pi(g^-1),
/// and deterministically sampled chain factorizations
/// pi(g_1)...pi(g_n) = eps_{g_1} eps_{g_1 g_2} ... pi(g_1...g_n).
CheckReport check_partial_representation(const ShiftPtr& s, const CoefficientRing& ring,
                                         std::size_t bound);

/// Generator relations over all language words alpha, beta with length
/// <= word_bound: s_a s_a* s_a = s_a, s_beta s_alpha* s_alpha s_beta* =
/// p_{C(alpha,beta)}, s_a* s_b = delta_ab p_{F_a}, commutation of the range
/// and source projections, and s_alpha s_beta = 0 when alpha beta leaves the
/// language.
CheckReport check_generator_relations(const ShiftPtr& s, const CoefficientRing& ring,
                                      std::size_t word_bound);

/// Projection relations p_X = 1, p_empty = 0, p_{A cap B} = p_A p_B and
/// p_{A cup B} = p_A + p_B - p_{A cap B} on seeded random clopen pairs.
CheckReport check_projection_relations(const ShiftPtr& s, const CoefficientRing& ring,
                                       std::size_t samples, unsigned seed);

}  // namespace subshift
