#include "subshift/lc_function.hpp"

#include <algorithm>
#include <map>

#include "subshift/partial_action.hpp"

namespace subshift {

namespace {

using WordMap = std::map<Word, Scalar>;

std::size_t common_level(const LcFunction& f, std::size_t floor_level) {
  std::size_t level = floor_level;
  for (const auto& [c, u] : f.parts()) level = std::max(level, u.level());
  return level;
}

WordMap flattened(const LcFunction& f, std::size_t level) {
  WordMap m;
  for (const auto& [c, u] : f.parts()) {
    ClopenSet fine = u.refined(level);
    for (const Word& w : fine.words()) m.emplace(w, c);
  }
  return m;
}

}  // namespace

LcFunction LcFunction::zero(ShiftPtr s, CoefficientRing ring) {
  s->require_nonempty();
  return LcFunction(std::move(s), ring);
}

LcFunction LcFunction::indicator(const ClopenSet& u, const CoefficientRing& ring) {
  return scaled_indicator(u, ring, ring.one());
}

LcFunction LcFunction::scaled_indicator(const ClopenSet& u, const CoefficientRing& ring,
                                        const Scalar& coeff) {
  LcFunction f(u.shift(), ring);
  if (!u.is_empty() && !ring.is_zero(coeff)) f.parts_.emplace_back(coeff, u);
  return f;
}

void LcFunction::require_compatible(const LcFunction& a, const LcFunction& b) {
  if (a.shift_.get() != b.shift_.get())
    fail(Errc::shift_mismatch, "functions live on different shifts");
  if (!(a.ring_ == b.ring_)) fail(Errc::ring_mismatch, "functions take values in different rings");
}

ClopenSet LcFunction::support() const {
  ClopenSet out = ClopenSet::empty(shift_);
  for (const auto& [c, u] : parts_) out = set_union(out, u);
  return out;
}

Scalar LcFunction::eval(const EvPeriodicPoint& p) const {
  if (!shift_->contains(p)) fail(Errc::point_not_in_shift, "point is outside the shift");
  for (const auto& [c, u] : parts_)
    if (u.contains(p)) return c;
  return ring_.zero();
}

LcFunction LcFunction::negated() const {
  LcFunction out(shift_, ring_);
  for (const auto& [c, u] : parts_) out.parts_.emplace_back(ring_.neg(c), u);
  std::sort(out.parts_.begin(), out.parts_.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

LcFunction LcFunction::scaled(const Scalar& c) const {
  LcFunction out(shift_, ring_);
  std::map<Scalar, ClopenSet> groups;
  for (const auto& [c0, u] : parts_) {
    Scalar c1 = ring_.mul(c, c0);
    if (ring_.is_zero(c1)) continue;
    auto it = groups.find(c1);
    if (it == groups.end())
      groups.emplace(c1, u);
    else
      it->second = set_union(it->second, u);
  }
  for (const auto& [c1, u] : groups) out.parts_.emplace_back(c1, u);
  return out;
}

LcFunction LcFunction::restricted(const ClopenSet& u) const {
  LcFunction out(shift_, ring_);
  for (const auto& [c, part] : parts_) {
    ClopenSet cut = set_intersect(part, u);
    if (!cut.is_empty()) out.parts_.emplace_back(c, cut);
  }
  return out;
}

LcFunction LcFunction::transported(const ShiftPtr& s, const FreeGroupElement& g) const {
  if (g.is_identity() || is_zero()) return *this;
  LcFunction out(shift_, ring_);
  for (const auto& [c, u] : parts_) out.parts_.emplace_back(c, act_clopen(s, g, u));
  return out;
}

LcFunction operator+(const LcFunction& a, const LcFunction& b) {
  LcFunction::require_compatible(a, b);
  std::size_t level = std::max(common_level(a, 0), common_level(b, 0));
  WordMap values = flattened(a, level);
  for (const auto& [w, c] : flattened(b, level)) {
    auto it = values.find(w);
    if (it == values.end())
      values.emplace(w, c);
    else
      it->second = a.ring().add(it->second, c);
  }
  std::map<Scalar, std::vector<Word>> groups;
  for (const auto& [w, c] : values) {
    if (a.ring().is_zero(c)) continue;
    groups[c].push_back(w);
  }
  LcFunction out = LcFunction::zero(a.shift(), a.ring());
  for (auto& [c, words] : groups)
    out.parts_.emplace_back(c, ClopenSet::from_words(a.shift(), level, std::move(words)));
  return out;
}

LcFunction operator*(const LcFunction& a, const LcFunction& b) {
  LcFunction::require_compatible(a, b);
  std::size_t level = std::max(common_level(a, 0), common_level(b, 0));
  WordMap va = flattened(a, level);
  WordMap vb = flattened(b, level);
  std::map<Scalar, std::vector<Word>> groups;
  for (const auto& [w, ca] : va) {
    auto it = vb.find(w);
    if (it == vb.end()) continue;
    Scalar c = a.ring().mul(ca, it->second);
    if (a.ring().is_zero(c)) continue;
    groups[c].push_back(w);
  }
  LcFunction out = LcFunction::zero(a.shift(), a.ring());
  for (auto& [c, words] : groups)
    out.parts_.emplace_back(c, ClopenSet::from_words(a.shift(), level, std::move(words)));
  return out;
}

bool operator==(const LcFunction& a, const LcFunction& b) {
  LcFunction::require_compatible(a, b);
  if (a.parts_.size() != b.parts_.size()) return false;
  for (std::size_t i = 0; i < a.parts_.size(); ++i) {
    if (!(a.parts_[i].first == b.parts_[i].first)) return false;
    if (!set_equal(a.parts_[i].second, b.parts_[i].second)) return false;
  }
  return true;
}

}  // namespace subshift
