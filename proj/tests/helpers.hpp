/* helpers.hpp -- shared fixtures and definition-level oracles for the tests.
 *
 * The naive_* functions decide language and point membership straight from
 * the forbidden-word list, bypassing the compiled automaton, so they can
 * serve as independent ground truth.
 */
#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "subshift/shift.hpp"

namespace testutil {

using namespace subshift;

// Word literal for test alphabets: digits map to 0..9, lowercase letters to
// 0..25.  Only meaningful for the single-character alphabets used here.
inline Word w(const std::string& text) {
  Word out;
  for (char c : text) {
    if (c >= '0' && c <= '9')
      out.push_back(static_cast<SymbolId>(c - '0'));
    else
      out.push_back(static_cast<SymbolId>(c - 'a'));
  }
  return out;
}

inline ShiftPtr make_shift(std::vector<std::string> alphabet,
                           std::vector<std::string> forbidden) {
  std::vector<Word> fb;
  for (const std::string& f : forbidden) fb.push_back(w(f));
  return Shift::build(ShiftSpec{Alphabet(std::move(alphabet)), std::move(fb)});
}

inline ShiftPtr full_2_shift() { return make_shift({"0", "1"}, {}); }
inline ShiftPtr golden_mean() { return make_shift({"0", "1"}, {"11"}); }
inline ShiftPtr forbid_10() { return make_shift({"0", "1"}, {"10"}); }
inline ShiftPtr one_point() { return make_shift({"a"}, {}); }

inline bool naive_allowed(const ShiftPtr& s, const Word& word) {
  for (const Word& f : s->spec().forbidden)
    if (contains_factor(word, f)) return false;
  return true;
}

inline std::size_t naive_memory(const ShiftPtr& s) {
  std::size_t maxf = 0;
  for (const Word& f : s->spec().forbidden) maxf = std::max(maxf, f.size());
  return maxf > 1 ? maxf - 1 : 1;
}

// Number of forbidden-factor-free words of length m; the pumping horizon.
inline std::size_t naive_live_bound(const ShiftPtr& s) {
  const std::size_t m = naive_memory(s);
  const std::size_t n = s->alphabet().size();
  std::vector<Word> layer{Word{}};
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Word> next;
    for (const Word& u : layer)
      for (SymbolId a = 0; a < n; ++a) {
        Word ua = u;
        ua.push_back(a);
        if (naive_allowed(s, ua)) next.push_back(std::move(ua));
      }
    layer = std::move(next);
  }
  return layer.size();
}

// Language membership from the definition: extendable by live_bound + 1
// letters without creating a forbidden factor.  A path that long revisits an
// allowed memory-window and can be pumped into a point.
inline bool naive_in_language(const ShiftPtr& s, const Word& word) {
  if (!naive_allowed(s, word)) return false;
  const std::size_t budget = naive_live_bound(s) + 1;
  std::vector<std::pair<Word, std::size_t>> stack{{word, 0}};
  while (!stack.empty()) {
    auto [cur, used] = stack.back();
    stack.pop_back();
    if (used == budget) return true;
    for (SymbolId a = 0; a < s->alphabet().size(); ++a) {
      Word ca = cur;
      ca.push_back(a);
      if (naive_allowed(s, ca)) stack.emplace_back(std::move(ca), used + 1);
    }
  }
  return false;
}

inline bool naive_contains(const ShiftPtr& s, const EvPeriodicPoint& p) {
  const std::size_t need = p.preperiod().size() + p.period().size() + naive_memory(s) + 1;
  return naive_allowed(s, p.word_prefix(need));
}

// All words over the alphabet (not just language words) up to max_len.
inline std::vector<Word> all_raw_words(std::size_t n_symbols, std::size_t max_len) {
  std::vector<Word> words{Word{}};
  std::vector<Word> layer{Word{}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<Word> next;
    for (const Word& u : layer)
      for (SymbolId a = 0; a < n_symbols; ++a) {
        Word ua = u;
        ua.push_back(a);
        next.push_back(ua);
        words.push_back(std::move(ua));
      }
    layer = std::move(next);
  }
  return words;
}

// All points with |preperiod| + |period| <= max_total, canonical, sorted.
inline std::vector<EvPeriodicPoint> naive_points(const ShiftPtr& s, std::size_t max_total) {
  std::vector<Word> words = all_raw_words(s->alphabet().size(), max_total);
  std::set<EvPeriodicPoint> acc;
  for (const Word& pre : words)
    for (const Word& per : words) {
      if (per.empty() || pre.size() + per.size() > max_total) continue;
      EvPeriodicPoint p(pre, per);
      if (naive_contains(s, p)) acc.insert(p);
    }
  return {acc.begin(), acc.end()};
}

// Exhaustive Cost search: min |alpha| + |gamma| <= budget with p = alpha x,
// beta gamma x in the shift for every beta in B.
inline std::optional<long long> naive_cost(const ShiftPtr& s, const std::vector<Word>& B,
                                           const EvPeriodicPoint& p, std::size_t budget) {
  for (std::size_t total = 0; total <= budget; ++total) {
    for (std::size_t alen = 0; alen <= total; ++alen) {
      Word alpha = p.word_prefix(alen);
      if (!naive_in_language(s, alpha)) continue;
      EvPeriodicPoint x = p.dropped(alen);
      const std::size_t glen = total - alen;
      for (const Word& gamma : all_raw_words(s->alphabet().size(), glen)) {
        if (gamma.size() != glen || !naive_in_language(s, gamma)) continue;
        bool all = true;
        for (const Word& beta : B)
          if (!naive_contains(s, x.prepended(concat(beta, gamma)))) {
            all = false;
            break;
          }
        if (all) return static_cast<long long>(total);
      }
    }
  }
  return std::nullopt;
}

}  // namespace testutil
