/* partial_action.hpp -- the partial action of the free group on the shift.
 *
 * A group element acts only when it factors as alpha beta^{-1} with both
 * words in the language.  The homeomorphism for g = alpha beta^{-1} replaces
 * the prefix beta by alpha: it maps C(alpha, beta) onto C(beta, alpha), and
 * domain_set(g) is the latter (the set carrying the g-component of the
 * algebra).  Elements with no such factorization act nowhere.
 */
#pragma once

#include <optional>
#include <vector>

#include "subshift/clopen.hpp"
#include "subshift/free_group.hpp"

namespace subshift {

/// g = alpha * beta^{-1} with alpha, beta in the language; the reduced shape
/// (positive letters, then inverses) makes the split unique.
struct SimpleFactorization {
  Word alpha, beta;
};

std::optional<SimpleFactorization> simple_factorization(const ShiftPtr& s,
                                                        const FreeGroupElement& g);

bool is_simple(const ShiftPtr& s, const FreeGroupElement& g);

/// W_g = C(beta, alpha) for simple g = alpha beta^{-1}; empty otherwise.
ClopenSet domain_set(const ShiftPtr& s, const FreeGroupElement& g);

/// Applies g to a point of C(alpha, beta): beta y -> alpha y.
EvPeriodicPoint act_point(const ShiftPtr& s, const FreeGroupElement& g, const EvPeriodicPoint& p);

/// Image of U under g; requires U inside C(alpha, beta) = domain_set(g^{-1}).
ClopenSet act_clopen(const ShiftPtr& s, const FreeGroupElement& g, const ClopenSet& u);

/// Whether g lies in the orbit filter of p: g = beta alpha^{-1} with
/// p in C(alpha, beta), i.e. p in W_g.
bool xi_contains(const ShiftPtr& s, const EvPeriodicPoint& p, const FreeGroupElement& g);

/// All images of p under elements alpha beta^{-1} with |alpha|, |beta| <= depth.
std::vector<EvPeriodicPoint> orbit(const ShiftPtr& s, const EvPeriodicPoint& p, std::size_t depth);

}  // namespace subshift
