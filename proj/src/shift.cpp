#include "subshift/shift.hpp"

#include <algorithm>
#include <map>

namespace subshift {

void ShiftSpec::validate() const {
  if (alphabet.size() == 0) fail(Errc::malformed_spec, "alphabet must be nonempty");
  std::vector<Word> seen;
  for (const Word& f : forbidden) {
    if (f.empty()) fail(Errc::malformed_spec, "forbidden words must be nonempty");
    for (SymbolId a : f) {
      if (a >= alphabet.size()) fail(Errc::malformed_spec, "forbidden word uses unknown symbol");
    }
    seen.push_back(f);
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
    fail(Errc::malformed_spec, "duplicate forbidden word");
}

EvPeriodicPoint::EvPeriodicPoint(Word preperiod, Word period)
    : pre_(std::move(preperiod)), per_(std::move(period)) {
  if (per_.empty()) fail(Errc::malformed_spec, "eventually periodic point needs a nonempty period");
  // Replace the period by its primitive root.
  for (std::size_t p = 1; p <= per_.size() / 2; ++p) {
    if (per_.size() % p != 0) continue;
    bool repeats = true;
    for (std::size_t i = p; i < per_.size() && repeats; ++i) repeats = per_[i] == per_[i - p];
    if (repeats) {
      per_.resize(p);
      break;
    }
  }
  // Absorb preperiod letters that already match the periodic tail.
  while (!pre_.empty() && pre_.back() == per_.back()) {
    pre_.pop_back();
    per_.insert(per_.begin(), per_.back());
    per_.pop_back();
  }
}

Word EvPeriodicPoint::word_prefix(std::size_t n) const {
  Word w;
  w.reserve(n);
  for (std::size_t i = 0; i < n; ++i) w.push_back(at(i));
  return w;
}

EvPeriodicPoint EvPeriodicPoint::dropped(std::size_t k) const {
  if (k <= pre_.size())
    return {Word(pre_.begin() + static_cast<std::ptrdiff_t>(k), pre_.end()), per_};
  std::size_t r = (k - pre_.size()) % per_.size();
  Word rot(per_.begin() + static_cast<std::ptrdiff_t>(r), per_.end());
  rot.insert(rot.end(), per_.begin(), per_.begin() + static_cast<std::ptrdiff_t>(r));
  return {Word{}, rot};
}

ShiftPtr Shift::build(ShiftSpec spec) {
  spec.validate();
  auto s = std::shared_ptr<Shift>(new Shift());
  s->spec_ = std::move(spec);
  std::size_t max_len = 0;
  for (const Word& f : s->spec_.forbidden) max_len = std::max(max_len, f.size());
  s->max_forbidden_len_ = max_len;
  s->memory_ = std::max<std::size_t>(1, max_len == 0 ? 1 : max_len - 1);

  // All allowed words of length m, grown letter by letter.
  std::vector<Word> cur{Word{}};
  for (std::size_t len = 0; len < s->memory_; ++len) {
    std::vector<Word> next;
    for (const Word& w : cur) {
      for (SymbolId a = 0; a < s->spec_.alphabet.size(); ++a) {
        Word wa = w;
        wa.push_back(a);
        if (s->word_allowed(wa)) next.push_back(std::move(wa));
      }
    }
    cur = std::move(next);
  }

  // Prune words with no allowed successor until a fixed point; the survivors
  // are exactly the forward-extendable words, i.e. the length-m language.
  std::map<Word, std::size_t> index;
  for (std::size_t i = 0; i < cur.size(); ++i) index.emplace(cur[i], i);
  std::vector<char> alive(cur.size(), 1);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < cur.size(); ++i) {
      if (!alive[i]) continue;
      bool has_successor = false;
      for (SymbolId a = 0; a < s->spec_.alphabet.size() && !has_successor; ++a) {
        Word wa = cur[i];
        wa.push_back(a);
        if (!s->word_allowed(wa)) continue;
        auto it = index.find(suffix(wa, s->memory_));
        if (it != index.end() && alive[it->second]) has_successor = true;
      }
      if (!has_successor) {
        alive[i] = 0;
        changed = true;
      }
    }
  }

  for (std::size_t i = 0; i < cur.size(); ++i)
    if (alive[i]) s->states_.push_back(cur[i]);
  std::map<Word, int> live_index;
  for (std::size_t i = 0; i < s->states_.size(); ++i)
    live_index.emplace(s->states_[i], static_cast<int>(i));

  s->next_.assign(s->states_.size(), std::vector<int>(s->spec_.alphabet.size(), -1));
  for (std::size_t i = 0; i < s->states_.size(); ++i) {
    for (SymbolId a = 0; a < s->spec_.alphabet.size(); ++a) {
      Word wa = s->states_[i];
      wa.push_back(a);
      if (!s->word_allowed(wa)) continue;
      auto it = live_index.find(suffix(wa, s->memory_));
      if (it != live_index.end()) s->next_[i][a] = it->second;
    }
  }
  return s;
}

void Shift::require_nonempty() const {
  if (empty()) fail(Errc::empty_shift, "the shift has no points");
}

int Shift::state_index(const Word& w) const {
  auto it = std::lower_bound(states_.begin(), states_.end(), w);
  if (it == states_.end() || *it != w) return -1;
  return static_cast<int>(it - states_.begin());
}

bool Shift::word_allowed(const Word& w) const {
  for (SymbolId a : w)
    if (a >= spec_.alphabet.size()) return false;
  for (const Word& f : spec_.forbidden)
    if (contains_factor(w, f)) return false;
  return true;
}

bool Shift::prefix_of_state(const Word& w) const {
  auto it = std::lower_bound(states_.begin(), states_.end(), w);
  return it != states_.end() && starts_with(*it, w);
}

bool Shift::in_language(const Word& w) const {
  require_nonempty();
  if (!word_allowed(w)) return false;
  if (w.size() >= memory_) return state_index(suffix(w, memory_)) >= 0;
  return prefix_of_state(w);
}

std::vector<Word> Shift::language(std::size_t n) const {
  require_nonempty();
  std::vector<Word> cur{Word{}};
  for (std::size_t len = 0; len < n; ++len) {
    std::vector<Word> next;
    for (const Word& w : cur) {
      for (SymbolId a : extensions(w)) {
        Word wa = w;
        wa.push_back(a);
        next.push_back(std::move(wa));
      }
    }
    cur = std::move(next);
  }
  return cur;
}

std::vector<SymbolId> Shift::extensions(const Word& w) const {
  require_nonempty();
  std::vector<SymbolId> out;
  if (w.size() >= memory_) {
    if (!word_allowed(w)) return out;
    int s = state_index(suffix(w, memory_));
    if (s < 0) return out;
    for (SymbolId a = 0; a < spec_.alphabet.size(); ++a) {
      if (next_[static_cast<std::size_t>(s)][a] < 0) continue;
      Word wa = w;
      wa.push_back(a);
      if (word_allowed(wa)) out.push_back(a);
    }
    return out;
  }
  for (SymbolId a = 0; a < spec_.alphabet.size(); ++a) {
    Word wa = w;
    wa.push_back(a);
    if (in_language(wa)) out.push_back(a);
  }
  return out;
}

bool Shift::contains(const EvPeriodicPoint& p) const {
  for (SymbolId a : p.preperiod())
    if (a >= spec_.alphabet.size()) return false;
  for (SymbolId a : p.period())
    if (a >= spec_.alphabet.size()) return false;
  // Every factor of the point occurs in a window starting before
  // |preperiod| + |period|, so this finite prefix sees them all.
  std::size_t window = std::max<std::size_t>(1, max_forbidden_len_);
  std::size_t need = p.preperiod().size() + p.period().size() + window - 1;
  return word_allowed(p.word_prefix(need));
}

EvPeriodicPoint Shift::shifted(const EvPeriodicPoint& p) const {
  if (!contains(p)) fail(Errc::point_not_in_shift, "cannot shift a point outside the shift");
  return p.dropped(1);
}

}  // namespace subshift
