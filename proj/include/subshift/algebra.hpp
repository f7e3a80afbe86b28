/* algebra.hpp -- elements of the partial skew group ring attached to a shift.
 *
 * An element is a finite sum f_g delta_g over simple group elements g, with
 * each coefficient a locally constant function supported inside W_g.  The
 * product follows the skew rule (f delta_g)(h delta_k) =
 * theta_g(theta_{g^{-1}}(f) h) delta_{gk}; when gk is not simple the
 * coefficient always vanishes, and a nonzero one signals an internal bug.
 */
#pragma once

#include <map>

#include "subshift/lc_function.hpp"
#include "subshift/partial_action.hpp"

namespace subshift {

class AlgebraElement {
 public:
  static AlgebraElement zero(ShiftPtr s, CoefficientRing ring);

  /// f delta_g; validates that g is simple and supp(f) lies inside W_g.
  static AlgebraElement from_term(const ShiftPtr& s, const FreeGroupElement& g, LcFunction f);

  const ShiftPtr& shift() const { return shift_; }
  const CoefficientRing& ring() const { return ring_; }
  const std::map<FreeGroupElement, LcFunction>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  AlgebraElement negated() const;
  AlgebraElement scaled(const Scalar& c) const;

  /// The involution: (f delta_g)^* = theta_{g^{-1}}(f) delta_{g^{-1}}.
  AlgebraElement star() const;

  friend AlgebraElement operator+(const AlgebraElement& x, const AlgebraElement& y);
  friend AlgebraElement operator-(const AlgebraElement& x, const AlgebraElement& y);
  friend AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y);
  friend bool operator==(const AlgebraElement& x, const AlgebraElement& y);

 private:
  AlgebraElement(ShiftPtr s, CoefficientRing ring) : shift_(std::move(s)), ring_(ring) {}

  static void require_compatible(const AlgebraElement& x, const AlgebraElement& y);
  void add_term(const FreeGroupElement& g, const LcFunction& f);

  ShiftPtr shift_;
  CoefficientRing ring_;
  std::map<FreeGroupElement, LcFunction> terms_;
};

/// Generator s_a = 1_{C(empty, a)} delta_a.
AlgebraElement gen_s(const ShiftPtr& s, const CoefficientRing& ring, SymbolId a);

/// Adjoint generator s_a^* = 1_{C(a, empty)} delta_{a^{-1}}.
AlgebraElement gen_s_star(const ShiftPtr& s, const CoefficientRing& ring, SymbolId a);

/// Projection p_U = 1_U delta_e.
AlgebraElement gen_p(const CoefficientRing& ring, const ClopenSet& u);

/// The unit 1 = 1_X delta_e.
AlgebraElement unit_element(const ShiftPtr& s, const CoefficientRing& ring);

/// s_alpha = product of letter generators; the unit for the empty word.
AlgebraElement word_s(const ShiftPtr& s, const CoefficientRing& ring, const Word& alpha);
AlgebraElement word_s_star(const ShiftPtr& s, const CoefficientRing& ring, const Word& beta);

/// The partial representation pi(g) = 1_{W_g} delta_g for simple g, else 0;
/// pi(e) is the unit.
AlgebraElement pi_element(const ShiftPtr& s, const CoefficientRing& ring,
                          const FreeGroupElement& g);

}  // namespace subshift
