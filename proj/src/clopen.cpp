#include "subshift/clopen.hpp"

#include <algorithm>
#include <map>

namespace subshift {

ClopenSet ClopenSet::empty(ShiftPtr s) {
  s->require_nonempty();
  return ClopenSet(std::move(s), 0, {});
}

ClopenSet ClopenSet::whole(ShiftPtr s) {
  s->require_nonempty();
  return ClopenSet(std::move(s), 0, {Word{}});
}

ClopenSet ClopenSet::cylinder(ShiftPtr s, const Word& w) {
  s->require_nonempty();
  if (!s->in_language(w)) return empty(std::move(s));
  ClopenSet r(std::move(s), w.size(), {w});
  r.canonicalize();
  return r;
}

ClopenSet ClopenSet::from_words(ShiftPtr s, std::size_t level, std::vector<Word> words) {
  s->require_nonempty();
  for (const Word& w : words) {
    if (w.size() != level) fail(Errc::malformed_spec, "cylinder word has the wrong length");
    if (!s->in_language(w))
      fail(Errc::word_not_in_language, "cylinder word is not in the language");
  }
  ClopenSet r(std::move(s), level, std::move(words));
  r.canonicalize();
  return r;
}

void ClopenSet::canonicalize() {
  std::sort(words_.begin(), words_.end());
  words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
  if (words_.empty()) {
    level_ = 0;
    return;
  }
  while (level_ > 0) {
    // Lower by one level only if every parent family is complete.
    std::vector<Word> parents;
    bool complete = true;
    for (std::size_t i = 0; i < words_.size() && complete;) {
      Word par = prefix(words_[i], level_ - 1);
      std::vector<SymbolId> exts = shift_->extensions(par);
      if (i + exts.size() > words_.size()) {
        complete = false;
        break;
      }
      for (std::size_t j = 0; j < exts.size() && complete; ++j) {
        const Word& w = words_[i + j];
        complete = starts_with(w, par) && w.back() == exts[j];
      }
      if (!complete) break;
      parents.push_back(std::move(par));
      i += exts.size();
    }
    if (!complete) break;
    words_ = std::move(parents);
    --level_;
  }
}

void ClopenSet::require_same_shift(const ClopenSet& a, const ClopenSet& b) {
  if (a.shift_.get() != b.shift_.get())
    fail(Errc::shift_mismatch, "clopen sets belong to different shifts");
}

ClopenSet ClopenSet::refined(std::size_t level) const {
  if (level < level_) fail(Errc::internal_invariant, "refinement cannot lower the level");
  std::vector<Word> cur = words_;
  for (std::size_t len = level_; len < level; ++len) {
    std::vector<Word> next;
    for (const Word& w : cur) {
      for (SymbolId a : shift_->extensions(w)) {
        Word wa = w;
        wa.push_back(a);
        next.push_back(std::move(wa));
      }
    }
    cur = std::move(next);
  }
  std::sort(cur.begin(), cur.end());
  return ClopenSet(shift_, level, std::move(cur));
}

bool ClopenSet::contains(const EvPeriodicPoint& p) const {
  if (!shift_->contains(p)) fail(Errc::point_not_in_shift, "point is outside the shift");
  return std::binary_search(words_.begin(), words_.end(), p.word_prefix(level_));
}

std::optional<EvPeriodicPoint> ClopenSet::single_point() const {
  if (words_.empty()) return std::nullopt;
  std::size_t m = shift_->memory();
  ClopenSet r = refined(std::max(level_, m));
  if (r.words_.size() != 1) return std::nullopt;
  // One cylinder holds one point exactly when the continuation is forced.
  Word seq = r.words_[0];
  int cur = shift_->state_index(suffix(seq, m));
  std::map<int, std::size_t> first_seen;
  while (!first_seen.count(cur)) {
    first_seen[cur] = seq.size();
    SymbolId forced = 0;
    std::size_t out_degree = 0;
    for (SymbolId a = 0; a < shift_->alphabet().size(); ++a) {
      if (shift_->transition(cur, a) >= 0) {
        forced = a;
        ++out_degree;
      }
    }
    if (out_degree != 1) return std::nullopt;
    seq.push_back(forced);
    cur = shift_->transition(cur, forced);
  }
  std::size_t cycle_start = first_seen[cur];
  return EvPeriodicPoint(Word(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(cycle_start)),
                         Word(seq.begin() + static_cast<std::ptrdiff_t>(cycle_start), seq.end()));
}

ClopenSet set_union(const ClopenSet& a, const ClopenSet& b) {
  ClopenSet::require_same_shift(a, b);
  std::size_t level = std::max(a.level_, b.level_);
  ClopenSet ra = a.refined(level), rb = b.refined(level);
  std::vector<Word> words;
  std::set_union(ra.words_.begin(), ra.words_.end(), rb.words_.begin(), rb.words_.end(),
                 std::back_inserter(words));
  ClopenSet r(a.shift_, level, std::move(words));
  r.canonicalize();
  return r;
}

ClopenSet set_intersect(const ClopenSet& a, const ClopenSet& b) {
  ClopenSet::require_same_shift(a, b);
  std::size_t level = std::max(a.level_, b.level_);
  ClopenSet ra = a.refined(level), rb = b.refined(level);
  std::vector<Word> words;
  std::set_intersection(ra.words_.begin(), ra.words_.end(), rb.words_.begin(), rb.words_.end(),
                        std::back_inserter(words));
  ClopenSet r(a.shift_, level, std::move(words));
  r.canonicalize();
  return r;
}

ClopenSet set_minus(const ClopenSet& a, const ClopenSet& b) {
  ClopenSet::require_same_shift(a, b);
  std::size_t level = std::max(a.level_, b.level_);
  ClopenSet ra = a.refined(level), rb = b.refined(level);
  std::vector<Word> words;
  std::set_difference(ra.words_.begin(), ra.words_.end(), rb.words_.begin(), rb.words_.end(),
                      std::back_inserter(words));
  ClopenSet r(a.shift_, level, std::move(words));
  r.canonicalize();
  return r;
}

ClopenSet set_complement(const ClopenSet& a) { return set_minus(ClopenSet::whole(a.shift_), a); }

bool set_equal(const ClopenSet& a, const ClopenSet& b) {
  ClopenSet::require_same_shift(a, b);
  std::size_t level = std::max(a.level_, b.level_);
  return a.refined(level).words_ == b.refined(level).words_;
}

ClopenSet c_set(const ShiftPtr& s, const Word& alpha, const Word& beta) {
  s->require_nonempty();
  std::size_t m = s->memory();
  std::vector<Word> words;
  for (const Word& y : s->states()) {
    if (s->in_language(concat(alpha, y)) && s->in_language(concat(beta, y)))
      words.push_back(concat(beta, y));
  }
  return ClopenSet::from_words(s, beta.size() + m, std::move(words));
}

ClopenSet follower_set(const ShiftPtr& s, const Word& beta) { return c_set(s, beta, Word{}); }

}  // namespace subshift
