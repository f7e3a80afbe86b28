#include "subshift/partial_action.hpp"

#include <algorithm>
#include <set>

namespace subshift {

std::optional<SimpleFactorization> simple_factorization(const ShiftPtr& s,
                                                        const FreeGroupElement& g) {
  s->require_nonempty();
  const auto& ls = g.letters();
  Word alpha, beta;
  std::size_t i = 0;
  while (i < ls.size() && ls[i] > 0) alpha.push_back(static_cast<SymbolId>(ls[i++] - 1));
  while (i < ls.size() && ls[i] < 0) beta.push_back(static_cast<SymbolId>(-ls[i++] - 1));
  if (i != ls.size()) return std::nullopt;  // an inverse letter precedes a plain one
  std::reverse(beta.begin(), beta.end());
  if (!s->in_language(alpha) || !s->in_language(beta)) return std::nullopt;
  return SimpleFactorization{std::move(alpha), std::move(beta)};
}

bool is_simple(const ShiftPtr& s, const FreeGroupElement& g) {
  return simple_factorization(s, g).has_value();
}

ClopenSet domain_set(const ShiftPtr& s, const FreeGroupElement& g) {
  auto fact = simple_factorization(s, g);
  if (!fact) return ClopenSet::empty(s);
  return c_set(s, fact->beta, fact->alpha);
}

EvPeriodicPoint act_point(const ShiftPtr& s, const FreeGroupElement& g, const EvPeriodicPoint& p) {
  auto fact = simple_factorization(s, g);
  if (!fact) fail(Errc::non_simple_element, "element does not act on the shift");
  if (!s->contains(p)) fail(Errc::not_in_domain, "point is outside the shift");
  if (p.word_prefix(fact->beta.size()) != fact->beta)
    fail(Errc::not_in_domain, "point does not start with the required prefix");
  EvPeriodicPoint image = p.dropped(fact->beta.size()).prepended(fact->alpha);
  if (!s->contains(image)) fail(Errc::not_in_domain, "image leaves the shift");
  return image;
}

ClopenSet act_clopen(const ShiftPtr& s, const FreeGroupElement& g, const ClopenSet& u) {
  if (u.shift().get() != s.get()) fail(Errc::shift_mismatch, "set belongs to a different shift");
  if (u.is_empty()) return u;
  auto fact = simple_factorization(s, g);
  if (!fact) fail(Errc::not_in_domain, "element acts nowhere but the set is nonempty");
  ClopenSet source = c_set(s, fact->alpha, fact->beta);  // W_{g^{-1}}
  if (!set_minus(u, source).is_empty())
    fail(Errc::not_in_domain, "set is not inside the domain of the action");
  std::size_t level = std::max(u.level(), fact->beta.size() + s->memory());
  ClopenSet refined = u.refined(level);
  std::vector<Word> mapped;
  mapped.reserve(refined.words().size());
  for (const Word& w : refined.words()) {
    // Every word starts with beta because U sits inside C(alpha, beta).
    Word tail(w.begin() + static_cast<std::ptrdiff_t>(fact->beta.size()), w.end());
    mapped.push_back(concat(fact->alpha, tail));
  }
  std::size_t image_level = fact->alpha.size() + (level - fact->beta.size());
  ClopenSet image = ClopenSet::from_words(s, image_level, std::move(mapped));
  return set_intersect(image, domain_set(s, g));
}

bool xi_contains(const ShiftPtr& s, const EvPeriodicPoint& p, const FreeGroupElement& g) {
  if (!s->contains(p)) fail(Errc::point_not_in_shift, "point is outside the shift");
  auto fact = simple_factorization(s, g);
  if (!fact) return false;
  // p must lie in W_g = C(fact->beta, fact->alpha): it starts with alpha and
  // replacing that prefix by beta stays in the shift.
  if (p.word_prefix(fact->alpha.size()) != fact->alpha) return false;
  return s->contains(p.dropped(fact->alpha.size()).prepended(fact->beta));
}

std::vector<EvPeriodicPoint> orbit(const ShiftPtr& s, const EvPeriodicPoint& p,
                                   std::size_t depth) {
  if (!s->contains(p)) fail(Errc::point_not_in_shift, "point is outside the shift");
  std::vector<Word> words;
  for (std::size_t n = 0; n <= depth; ++n) {
    std::vector<Word> layer = s->language(n);
    words.insert(words.end(), layer.begin(), layer.end());
  }
  std::set<EvPeriodicPoint> out;
  for (const Word& beta : words) {
    if (p.word_prefix(beta.size()) != beta) continue;
    EvPeriodicPoint tail = p.dropped(beta.size());
    for (const Word& alpha : words) {
      EvPeriodicPoint image = tail.prepended(alpha);
      if (s->contains(image)) out.insert(image);
    }
  }
  return {out.begin(), out.end()};
}

}  // namespace subshift
