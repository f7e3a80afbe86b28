#include "subshift/algebra.hpp"

namespace subshift {

AlgebraElement AlgebraElement::zero(ShiftPtr s, CoefficientRing ring) {
  s->require_nonempty();
  return AlgebraElement(std::move(s), ring);
}

AlgebraElement AlgebraElement::from_term(const ShiftPtr& s, const FreeGroupElement& g,
                                         LcFunction f) {
  AlgebraElement out = zero(s, f.ring());
  if (f.is_zero()) return out;
  if (!is_simple(s, g)) fail(Errc::non_simple_element, "term index must act on the shift");
  if (!set_minus(f.support(), domain_set(s, g)).is_empty())
    fail(Errc::not_in_domain, "coefficient support exceeds the domain of its index");
  out.terms_.emplace(g, std::move(f));
  return out;
}

void AlgebraElement::require_compatible(const AlgebraElement& x, const AlgebraElement& y) {
  if (x.shift_.get() != y.shift_.get())
    fail(Errc::shift_mismatch, "elements live on different shifts");
  if (!(x.ring_ == y.ring_)) fail(Errc::ring_mismatch, "elements have different coefficient rings");
}

void AlgebraElement::add_term(const FreeGroupElement& g, const LcFunction& f) {
  if (f.is_zero()) return;
  auto it = terms_.find(g);
  if (it == terms_.end()) {
    terms_.emplace(g, f);
    return;
  }
  LcFunction sum = it->second + f;
  if (sum.is_zero())
    terms_.erase(it);
  else
    it->second = sum;
}

AlgebraElement AlgebraElement::negated() const {
  AlgebraElement out(shift_, ring_);
  for (const auto& [g, f] : terms_) out.terms_.emplace(g, f.negated());
  return out;
}

AlgebraElement AlgebraElement::scaled(const Scalar& c) const {
  AlgebraElement out(shift_, ring_);
  for (const auto& [g, f] : terms_) {
    LcFunction cf = f.scaled(c);
    if (!cf.is_zero()) out.terms_.emplace(g, std::move(cf));
  }
  return out;
}

AlgebraElement AlgebraElement::star() const {
  AlgebraElement out(shift_, ring_);
  for (const auto& [g, f] : terms_)
    out.terms_.emplace(g.inverse(), f.transported(shift_, g.inverse()));
  return out;
}

AlgebraElement operator+(const AlgebraElement& x, const AlgebraElement& y) {
  AlgebraElement::require_compatible(x, y);
  AlgebraElement out = x;
  for (const auto& [g, f] : y.terms_) out.add_term(g, f);
  return out;
}

AlgebraElement operator-(const AlgebraElement& x, const AlgebraElement& y) {
  return x + y.negated();
}

AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y) {
  AlgebraElement::require_compatible(x, y);
  AlgebraElement out(x.shift_, x.ring_);
  for (const auto& [g, f] : x.terms_) {
    LcFunction pulled = f.transported(x.shift_, g.inverse());  // theta_{g^{-1}}(f)
    for (const auto& [k, h] : y.terms_) {
      LcFunction mixed = pulled * h;
      if (mixed.is_zero()) continue;
      LcFunction coeff = mixed.transported(x.shift_, g);  // theta_g(theta_{g^{-1}}(f) h)
      FreeGroupElement gk = g * k;
      if (!is_simple(x.shift_, gk))
        fail(Errc::internal_invariant, "nonzero coefficient at a non-simple product index");
      if (!set_minus(coeff.support(), domain_set(x.shift_, gk)).is_empty())
        fail(Errc::internal_invariant, "product coefficient escapes its domain");
      out.add_term(gk, coeff);
    }
  }
  return out;
}

bool operator==(const AlgebraElement& x, const AlgebraElement& y) {
  AlgebraElement::require_compatible(x, y);
  if (x.terms_.size() != y.terms_.size()) return false;
  auto ix = x.terms_.begin();
  auto iy = y.terms_.begin();
  for (; ix != x.terms_.end(); ++ix, ++iy) {
    if (!(ix->first == iy->first)) return false;
    if (!(ix->second == iy->second)) return false;
  }
  return true;
}

AlgebraElement gen_s(const ShiftPtr& s, const CoefficientRing& ring, SymbolId a) {
  Word w{a};
  return AlgebraElement::from_term(s, FreeGroupElement::from_word(w),
                                   LcFunction::indicator(ClopenSet::cylinder(s, w), ring));
}

AlgebraElement gen_s_star(const ShiftPtr& s, const CoefficientRing& ring, SymbolId a) {
  Word w{a};
  return AlgebraElement::from_term(s, FreeGroupElement::from_word(w).inverse(),
                                   LcFunction::indicator(follower_set(s, w), ring));
}

AlgebraElement gen_p(const CoefficientRing& ring, const ClopenSet& u) {
  return AlgebraElement::from_term(u.shift(), FreeGroupElement(),
                                   LcFunction::indicator(u, ring));
}

AlgebraElement unit_element(const ShiftPtr& s, const CoefficientRing& ring) {
  return gen_p(ring, ClopenSet::whole(s));
}

AlgebraElement word_s(const ShiftPtr& s, const CoefficientRing& ring, const Word& alpha) {
  AlgebraElement out = unit_element(s, ring);
  for (SymbolId a : alpha) out = out * gen_s(s, ring, a);
  return out;
}

AlgebraElement word_s_star(const ShiftPtr& s, const CoefficientRing& ring, const Word& beta) {
  AlgebraElement out = unit_element(s, ring);
  for (auto it = beta.rbegin(); it != beta.rend(); ++it) out = out * gen_s_star(s, ring, *it);
  return out;
}

AlgebraElement pi_element(const ShiftPtr& s, const CoefficientRing& ring,
                          const FreeGroupElement& g) {
  if (!is_simple(s, g)) return AlgebraElement::zero(s, ring);
  return AlgebraElement::from_term(s, g, LcFunction::indicator(domain_set(s, g), ring));
}

}  // namespace subshift
