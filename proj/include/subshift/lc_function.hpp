/* lc_function.hpp -- locally constant functions on a shift with ring values.
 *
 * Stored as a finite list of (nonzero coefficient, clopen set) parts with
 * pairwise disjoint supports; parts are sorted by coefficient and the sets
 * are canonical, so equal functions have identical representations.
 */
#pragma once

#include <utility>
#include <vector>

#include "subshift/clopen.hpp"
#include "subshift/free_group.hpp"
#include "subshift/ring.hpp"

namespace subshift {

class LcFunction {
 public:
  static LcFunction zero(ShiftPtr s, CoefficientRing ring);
  static LcFunction indicator(const ClopenSet& u, const CoefficientRing& ring);
  static LcFunction scaled_indicator(const ClopenSet& u, const CoefficientRing& ring,
                                     const Scalar& coeff);

  const ShiftPtr& shift() const { return shift_; }
  const CoefficientRing& ring() const { return ring_; }
  const std::vector<std::pair<Scalar, ClopenSet>>& parts() const { return parts_; }

  bool is_zero() const { return parts_.empty(); }
  ClopenSet support() const;
  Scalar eval(const EvPeriodicPoint& p) const;

  LcFunction negated() const;
  LcFunction scaled(const Scalar& c) const;

  /// Pointwise product with the indicator of U.
  LcFunction restricted(const ClopenSet& u) const;

  /// Transport along g; requires the support inside domain_set(g^{-1}).
  LcFunction transported(const ShiftPtr& s, const FreeGroupElement& g) const;

  friend LcFunction operator+(const LcFunction& a, const LcFunction& b);
  friend LcFunction operator*(const LcFunction& a, const LcFunction& b);
  friend bool operator==(const LcFunction& a, const LcFunction& b);

 private:
  LcFunction(ShiftPtr s, CoefficientRing ring) : shift_(std::move(s)), ring_(ring) {}

  static void require_compatible(const LcFunction& a, const LcFunction& b);

  ShiftPtr shift_;
  CoefficientRing ring_;
  std::vector<std::pair<Scalar, ClopenSet>> parts_;
};

}  // namespace subshift
