/* simplicity.cpp -- decision procedures and brute-force oracles. */
#include "subshift/simplicity.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>

#include "subshift/errors.hpp"
#include "subshift/text.hpp"

namespace subshift {

namespace {

// Language words of length 1..max_len, shortest first, lexicographic within
// a length.
std::vector<Word> words_up_to(const ShiftPtr& s, std::size_t max_len) {
  std::vector<Word> out;
  for (std::size_t n = 1; n <= max_len; ++n) {
    std::vector<Word> layer = s->language(n);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

std::vector<Word> suffix_universe(const ShiftPtr& s) { return words_up_to(s, s->memory()); }

// beta gamma x depends on beta only through its min(m,|beta|)-suffix.
std::vector<Word> reduce_to_suffixes(const ShiftPtr& s, const std::vector<Word>& B) {
  std::vector<Word> S;
  for (const Word& beta : B) {
    if (!s->in_language(beta))
      fail(Errc::word_not_in_language,
           "word '" + word_to_string(s->alphabet(), beta) + "' is not in the language");
    if (beta.empty()) continue;  // the empty word constrains nothing
    S.push_back(suffix(beta, s->memory()));
  }
  std::sort(S.begin(), S.end(), length_lex_less);
  S.erase(std::unique(S.begin(), S.end()), S.end());
  return S;
}

ClopenSet follower_of_set(const ShiftPtr& s, const std::vector<Word>& S) {
  ClopenSet f = ClopenSet::whole(s);
  for (const Word& w : S) f = set_intersect(f, follower_set(s, w));
  return f;
}

// Extends a tracked window (the last <= m letters of w gamma) by one letter;
// nullopt when the extension creates a forbidden factor.
std::optional<Word> advance_window(const ShiftPtr& s, const Word& z, SymbolId a) {
  Word za = z;
  za.push_back(a);
  if (!s->word_allowed(za)) return std::nullopt;
  return suffix(za, s->memory());
}

// Exact min |gamma| over gamma with all junction constraints satisfiable;
// accept() sees the per-word windows suffix(w gamma, m).  Nullopt = no gamma.
std::optional<long long> min_gamma(const ShiftPtr& s, const std::vector<Word>& S,
                                   const std::function<bool(const std::vector<Word>&)>& accept) {
  std::vector<Word> start;
  start.reserve(S.size());
  for (const Word& w : S) start.push_back(suffix(w, s->memory()));

  std::set<std::vector<Word>> visited{start};
  std::deque<std::pair<std::vector<Word>, long long>> queue{{start, 0}};
  while (!queue.empty()) {
    auto [wins, depth] = queue.front();
    queue.pop_front();
    if (accept(wins)) return depth;
    for (SymbolId a = 0; a < s->alphabet().size(); ++a) {
      std::vector<Word> next;
      next.reserve(wins.size());
      bool alive = true;
      for (const Word& z : wins) {
        std::optional<Word> nz = advance_window(s, z, a);
        if (!nz) {
          alive = false;
          break;
        }
        next.push_back(std::move(*nz));
      }
      if (alive && visited.insert(next).second) queue.emplace_back(std::move(next), depth + 1);
    }
  }
  return std::nullopt;
}

std::optional<long long> min_gamma_for_point(const ShiftPtr& s, const std::vector<Word>& S,
                                             const EvPeriodicPoint& x) {
  return min_gamma(s, S, [&](const std::vector<Word>& wins) {
    for (const Word& z : wins)
      if (!s->contains(x.prepended(z))) return false;
    return true;
  });
}

// Good states for a class: x0 such that some gamma makes w gamma x a point
// for every w in S and every point x starting with x0.  The junction only
// sees prefix_m(x) = x0, so goodness is a property of the state.
std::vector<char> good_states(const ShiftPtr& s, const std::vector<Word>& S) {
  const std::vector<Word>& sts = s->states();
  std::vector<char> good(sts.size(), 0);
  for (std::size_t i = 0; i < sts.size(); ++i) {
    const Word& x0 = sts[i];
    auto g = min_gamma(s, S, [&](const std::vector<Word>& wins) {
      for (const Word& z : wins)
        if (!s->word_allowed(concat(z, x0))) return false;
      return true;
    });
    good[i] = g.has_value();
  }
  return good;
}

struct BadCycle {
  std::vector<int> states;
  std::vector<SymbolId> letters;
};

// First cycle (in DFS order over ascending states and letters) inside the
// subgraph spanned by the bad states; a point looping there never reaches a
// good state under any number of shifts.
std::optional<BadCycle> find_bad_cycle(const ShiftPtr& s, const std::vector<char>& good) {
  const std::size_t n = s->states().size();
  std::vector<int> color(n, 0);
  std::vector<int> path;
  std::vector<SymbolId> path_letters;  // letter entering path[i] from path[i-1]
  std::optional<BadCycle> found;

  std::function<void(int)> dfs = [&](int v) {
    if (found) return;
    color[static_cast<std::size_t>(v)] = 1;
    path.push_back(v);
    for (SymbolId a = 0; a < s->alphabet().size() && !found; ++a) {
      int t = s->transition(v, a);
      if (t < 0 || good[static_cast<std::size_t>(t)]) continue;
      if (color[static_cast<std::size_t>(t)] == 1) {
        BadCycle cyc;
        std::size_t from = 0;
        while (path[from] != t) ++from;
        for (std::size_t i = from; i < path.size(); ++i) {
          cyc.states.push_back(path[i]);
          if (i > from) cyc.letters.push_back(path_letters[i]);
        }
        cyc.letters.push_back(a);
        found = cyc;
        return;
      }
      if (color[static_cast<std::size_t>(t)] == 0) {
        path_letters.resize(path.size() + 1);
        path_letters[path.size()] = a;
        dfs(t);
      }
    }
    path.pop_back();
    color[static_cast<std::size_t>(v)] = 2;
  };

  for (std::size_t v = 0; v < n && !found; ++v)
    if (!good[v] && color[v] == 0) dfs(static_cast<int>(v));
  return found;
}

EvPeriodicPoint trapped_point(const ShiftPtr& s, const BadCycle& cyc) {
  Word pre = s->states()[static_cast<std::size_t>(cyc.states.front())];
  return EvPeriodicPoint(pre, Word(cyc.letters.begin(), cyc.letters.end()));
}

// Longest path length (vertex count) in the acyclic bad subgraph: a uniform
// bound on how long any point can stay outside the good set.
std::size_t bad_dag_depth(const ShiftPtr& s, const std::vector<char>& good) {
  const std::size_t n = s->states().size();
  std::vector<long long> depth(n, -1);
  std::function<long long(std::size_t)> dp = [&](std::size_t v) -> long long {
    if (depth[v] >= 0) return depth[v];
    long long best = 1;
    for (SymbolId a = 0; a < s->alphabet().size(); ++a) {
      int t = s->transition(static_cast<int>(v), a);
      if (t >= 0 && !good[static_cast<std::size_t>(t)])
        best = std::max(best, 1 + dp(static_cast<std::size_t>(t)));
    }
    return depth[v] = best;
  };
  std::size_t worst = 0;
  for (std::size_t v = 0; v < n; ++v)
    if (!good[v]) worst = std::max(worst, static_cast<std::size_t>(dp(v)));
  return worst;
}

// Greedy completion of a language word to a point: always take the least
// valid letter until the walk revisits a state.
EvPeriodicPoint greedy_point_from(const ShiftPtr& s, const Word& w) {
  Word cur = w;
  while (cur.size() < s->memory()) {
    std::vector<SymbolId> ext = s->extensions(cur);
    cur.push_back(ext.front());
  }
  int q = s->state_index(suffix(cur, s->memory()));
  std::map<int, std::size_t> first_seen{{q, 0}};
  std::vector<SymbolId> letters;
  while (true) {
    SymbolId pick = 0;
    int next = -1;
    for (SymbolId a = 0; a < s->alphabet().size(); ++a) {
      next = s->transition(q, a);
      if (next >= 0) {
        pick = a;
        break;
      }
    }
    letters.push_back(pick);
    q = s->transition(q, pick);
    auto it = first_seen.find(q);
    if (it != first_seen.end()) {
      Word pre = cur;
      pre.insert(pre.end(), letters.begin(), letters.begin() + static_cast<long>(it->second));
      Word per(letters.begin() + static_cast<long>(it->second), letters.end());
      return EvPeriodicPoint(pre, per);
    }
    first_seen[q] = letters.size();
  }
}

// A point of F other than gp, when one exists.  Bounded enumeration first,
// then a complete constructive search: every cylinder of F either leaves the
// ray of gp outright or branches off it within |states| * |period| + m steps.
std::optional<EvPeriodicPoint> second_point_in(const ShiftPtr& s, const ClopenSet& F,
                                               const EvPeriodicPoint& gp,
                                               const std::vector<EvPeriodicPoint>& pool) {
  for (const EvPeriodicPoint& p : pool)
    if (!(p == gp) && F.contains(p)) return p;

  for (const Word& w : F.words()) {
    if (w != gp.word_prefix(F.level())) return greedy_point_from(s, w);
    std::size_t steps = s->states().size() * gp.period().size() + s->memory() + 1;
    Word cur = w;
    for (std::size_t t = 0; t <= steps; ++t) {
      SymbolId expected = gp.at(cur.size());
      for (SymbolId b : s->extensions(cur)) {
        if (b == expected) continue;
        Word dev = cur;
        dev.push_back(b);
        return greedy_point_from(s, dev);
      }
      cur.push_back(expected);
    }
  }
  return std::nullopt;
}

std::string class_note(const ShiftPtr& s, const std::vector<Word>& S) {
  std::string out = "B = {";
  for (std::size_t i = 0; i < S.size(); ++i) {
    if (i) out += ", ";
    out += word_to_string(s->alphabet(), S[i]);
  }
  return out + "}";
}

// Visits index subsets by ascending size, lexicographic within a size, until
// the visitor returns true.
bool each_subset(std::size_t n, std::size_t max_size,
                 const std::function<bool(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> idx;
  std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t start,
                                                          std::size_t want) -> bool {
    if (idx.size() == want) return visit(idx);
    for (std::size_t i = start; i + (want - idx.size()) <= n; ++i) {
      idx.push_back(i);
      if (rec(i + 1, want)) return true;
      idx.pop_back();
    }
    return false;
  };
  for (std::size_t size = 1; size <= std::min(n, max_size); ++size)
    if (rec(0, size)) return true;
  return false;
}

}  // namespace

std::vector<FollowerClass> realizable_follower_classes(const ShiftPtr& s, std::size_t class_cap) {
  s->require_nonempty();
  std::vector<Word> universe = suffix_universe(s);
  if (universe.size() >= 63 || (std::size_t{1} << universe.size()) > class_cap)
    fail(Errc::class_explosion, "2^" + std::to_string(universe.size()) +
                                    " follower class candidates exceed the cap of " +
                                    std::to_string(class_cap));

  std::vector<FollowerClass> out;
  const std::size_t nmasks = std::size_t{1} << universe.size();
  for (std::size_t mask = 1; mask < nmasks; ++mask) {
    std::vector<Word> S;
    for (std::size_t i = 0; i < universe.size(); ++i)
      if (mask & (std::size_t{1} << i)) S.push_back(universe[i]);
    ClopenSet f = follower_of_set(s, S);
    if (f.is_empty()) continue;
    bool dup = false;
    for (const FollowerClass& c : out)
      if (set_equal(c.follower, f)) {
        dup = true;
        break;
      }
    if (!dup) out.push_back(FollowerClass{std::move(S), std::move(f)});
  }
  return out;
}

Verdict check_condition_L(const ShiftPtr& s, std::size_t class_cap) {
  std::vector<FollowerClass> classes = realizable_follower_classes(s, class_cap);
  Verdict v;
  v.property = "condition (L)";
  for (const FollowerClass& c : classes) {
    std::optional<EvPeriodicPoint> only = c.follower.single_point();
    if (only && only->preperiod().empty()) {
      v.holds = false;
      Witness w;
      w.B = c.suffix_set;
      w.gamma = only->period();
      w.point = *only;
      w.note = "the follower set of " + class_note(s, c.suffix_set) +
               " is the singleton {" + point_to_string(s->alphabet(), *only) + "}";
      v.witness = std::move(w);
      return v;
    }
  }
  v.holds = true;
  v.detail = "none of the " + std::to_string(classes.size()) +
             " realizable follower classes isolates a purely periodic point";
  return v;
}

std::optional<long long> cost(const ShiftPtr& s, const std::vector<Word>& B,
                              const EvPeriodicPoint& p) {
  s->require_nonempty();
  if (!s->contains(p)) fail(Errc::point_not_in_shift, "cost target point is not in the shift");
  if (B.empty()) fail(Errc::malformed_spec, "cost requires a nonempty word set");
  std::vector<Word> S = reduce_to_suffixes(s, B);
  if (S.empty()) return 0;  // B = {empty word}: alpha = gamma = empty works

  const long long total =
      static_cast<long long>(p.preperiod().size() + p.period().size());
  std::optional<long long> best;
  for (long long k = 0; k < total; ++k) {
    if (best && *best <= k) break;
    std::optional<long long> g = min_gamma_for_point(s, S, p.dropped(static_cast<std::size_t>(k)));
    if (g && (!best || k + *g < *best)) best = k + *g;
  }
  return best;
}

namespace {

Verdict cofinality_over_classes(const ShiftPtr& s, const std::vector<FollowerClass>& classes,
                                const std::string& property) {
  Verdict v;
  v.property = property;
  std::size_t worst_depth = 0;
  for (const FollowerClass& c : classes) {
    std::vector<char> good = good_states(s, c.suffix_set);
    std::optional<BadCycle> cyc = find_bad_cycle(s, good);
    if (cyc) {
      v.holds = false;
      Witness w;
      w.B = c.suffix_set;
      w.point = trapped_point(s, *cyc);
      w.note = "point " + point_to_string(s->alphabet(), *w.point) +
               " never reaches a state repairable for " + class_note(s, c.suffix_set) +
               "; its cost is infinite";
      v.witness = std::move(w);
      return v;
    }
    worst_depth = std::max(worst_depth, bad_dag_depth(s, good));
  }
  v.holds = true;
  v.detail = "every point reaches a repairable state within " + std::to_string(worst_depth) +
             " shifts, uniformly over all " + std::to_string(classes.size()) + " classes";
  return v;
}

}  // namespace

Verdict check_hyper_cofinal(const ShiftPtr& s, std::size_t class_cap) {
  std::vector<FollowerClass> classes = realizable_follower_classes(s, class_cap);
  return cofinality_over_classes(s, classes, "hyper cofinality");
}

Verdict check_strongly_cofinal(const ShiftPtr& s) {
  s->require_nonempty();
  std::vector<FollowerClass> singletons;
  for (const Word& w : suffix_universe(s)) {
    ClopenSet f = follower_set(s, w);
    singletons.push_back(FollowerClass{{w}, std::move(f)});
  }
  return cofinality_over_classes(s, singletons, "strong cofinality");
}

Verdict check_collectively_cofinal_bounded(const ShiftPtr& s, std::size_t bound,
                                           std::size_t class_cap) {
  std::vector<FollowerClass> classes = realizable_follower_classes(s, class_cap);
  std::vector<EvPeriodicPoint> points = enumerate_points(s, bound);
  Verdict v;
  v.property = "collective cofinality (bounded)";
  v.bound = static_cast<long long>(bound);
  for (const FollowerClass& c : classes) {
    for (const EvPeriodicPoint& p : points) {
      std::optional<long long> c0 = cost(s, c.suffix_set, p);
      if (c0 && *c0 <= static_cast<long long>(bound)) continue;
      v.holds = false;
      Witness w;
      w.B = c.suffix_set;
      w.point = p;
      w.note = c0 ? "least cost " + std::to_string(*c0) + " exceeds the bound"
                  : "cost is infinite";
      v.witness = std::move(w);
      return v;
    }
  }
  v.holds = true;
  v.detail = "all " + std::to_string(points.size()) + " bounded points repaired within the bound";
  return v;
}

Verdict is_minimal(const ShiftPtr& s, std::size_t class_cap) {
  Verdict v = check_hyper_cofinal(s, class_cap);
  v.property = "minimality";
  if (v.holds)
    v.detail = "the shift is hyper cofinal, so the induced partial action is minimal";
  else if (v.witness)
    v.witness->note += " (the partial action is not minimal)";
  return v;
}

Verdict simplicity_verdict(const ShiftPtr& s, const CoefficientRing& ring,
                           std::size_t class_cap) {
  s->require_nonempty();
  if (!ring.is_field())
    fail(Errc::ring_not_field,
         "simplicity is decided for field coefficients; " + ring.name() + " is not a field");
  Verdict condL = check_condition_L(s, class_cap);
  Verdict hyper = check_hyper_cofinal(s, class_cap);
  Verdict v;
  v.property = "simplicity";
  v.holds = condL.holds && hyper.holds;
  if (v.holds) {
    v.detail = "condition (L) and hyper cofinality both hold; the same verdict applies to the "
               "subshift C*-algebra";
    return v;
  }
  std::string reasons;
  if (!condL.holds) reasons = "condition (L) fails";
  if (!hyper.holds) reasons += std::string(reasons.empty() ? "" : "; ") + "not hyper cofinal";
  v.detail = reasons + "; the same verdict applies to the subshift C*-algebra";
  Witness w = !condL.holds ? *condL.witness : *hyper.witness;
  w.note = reasons + ": " + w.note;
  v.witness = std::move(w);
  return v;
}

Verdict oracle_condition_L(const ShiftPtr& s, std::size_t bound) {
  s->require_nonempty();
  Verdict v;
  v.property = "condition (L)";
  v.method = "oracle";
  v.bound = static_cast<long long>(bound);

  std::vector<Word> words = words_up_to(s, bound);
  std::vector<EvPeriodicPoint> pool = enumerate_points(s, bound + s->memory() + 2);
  std::set<std::vector<Word>> seen_suffix_sets;

  bool failed = each_subset(words.size(), bound, [&](const std::vector<std::size_t>& idx) {
    std::vector<Word> B;
    for (std::size_t i : idx) B.push_back(words[i]);
    if (!seen_suffix_sets.insert(reduce_to_suffixes(s, B)).second) return false;
    ClopenSet F = follower_of_set(s, B);
    if (F.is_empty()) return false;
    for (const Word& gamma : words) {
      EvPeriodicPoint gp({}, gamma);
      if (!s->contains(gp) || !F.contains(gp)) continue;
      if (!second_point_in(s, F, gp, pool)) {
        Witness w;
        w.B = B;
        w.gamma = gp.period();
        w.point = gp;
        w.note = "the follower set of " + class_note(s, B) + " is the singleton {" +
                 point_to_string(s->alphabet(), gp) + "}";
        v.holds = false;
        v.witness = std::move(w);
        return true;
      }
    }
    return false;
  });
  if (failed) return v;
  v.holds = true;
  v.detail = "no bounded B isolates a purely periodic point";
  return v;
}

Verdict oracle_cofinal(const ShiftPtr& s, std::size_t bound, std::size_t max_B_size) {
  s->require_nonempty();
  if (max_B_size == 0) max_B_size = bound;
  Verdict v;
  v.property = max_B_size == 1 ? "strong cofinality" : "hyper cofinality";
  v.method = "oracle";
  v.bound = static_cast<long long>(bound);

  std::vector<Word> words = words_up_to(s, bound);
  std::vector<EvPeriodicPoint> points = enumerate_points(s, bound);
  std::set<std::vector<Word>> seen_suffix_sets;

  bool failed = each_subset(words.size(), max_B_size, [&](const std::vector<std::size_t>& idx) {
    std::vector<Word> B;
    for (std::size_t i : idx) B.push_back(words[i]);
    if (!seen_suffix_sets.insert(reduce_to_suffixes(s, B)).second) return false;
    if (follower_of_set(s, B).is_empty()) return false;
    for (const EvPeriodicPoint& p : points) {
      if (cost(s, B, p)) continue;
      Witness w;
      w.B = B;
      w.point = p;
      w.note = "cost of " + point_to_string(s->alphabet(), p) + " is infinite for " +
               class_note(s, B);
      v.holds = false;
      v.witness = std::move(w);
      return true;
    }
    return false;
  });
  if (failed) return v;
  v.holds = true;
  v.detail = "all bounded costs are finite";
  return v;
}

bool replay_condition_L_witness(const ShiftPtr& s, const Witness& w) {
  if (!w.gamma || w.gamma->empty()) return false;
  for (const Word& b : w.B)
    if (!s->in_language(b)) return false;
  ClopenSet F = follower_of_set(s, w.B);
  EvPeriodicPoint gp({}, *w.gamma);
  if (!s->contains(gp) || !F.contains(gp)) return false;
  std::vector<EvPeriodicPoint> pool =
      enumerate_points(s, w.gamma->size() + s->memory() + 3);
  return !second_point_in(s, F, gp, pool).has_value();
}

bool replay_cofinal_witness(const ShiftPtr& s, const Witness& w, std::size_t bound) {
  if (!w.point || w.B.empty()) return false;
  const EvPeriodicPoint& p = *w.point;
  if (!s->contains(p)) return false;
  for (const Word& b : w.B)
    if (!s->in_language(b)) return false;

  // Definition-direct bounded search for a repair; the witness replays iff
  // none exists.
  const std::size_t total = p.preperiod().size() + p.period().size();
  for (std::size_t k = 0; k < total && k <= bound; ++k) {
    EvPeriodicPoint x = p.dropped(k);
    for (std::size_t glen = 0; k + glen <= bound; ++glen) {
      std::vector<Word> gammas = glen == 0 ? std::vector<Word>{Word{}} : s->language(glen);
      for (const Word& gamma : gammas) {
        bool all = true;
        for (const Word& b : w.B)
          if (!s->contains(x.prepended(concat(b, gamma)))) {
            all = false;
            break;
          }
        if (all) return false;
      }
    }
  }
  return true;
}

std::vector<EvPeriodicPoint> enumerate_points(const ShiftPtr& s, std::size_t max_total_len) {
  s->require_nonempty();
  const std::size_t k = s->alphabet().size();
  std::set<EvPeriodicPoint> acc;
  std::function<void(Word&, std::size_t, const std::function<void(const Word&)>&)> each_word =
      [&](Word& buf, std::size_t len, const std::function<void(const Word&)>& fn) {
        if (buf.size() == len) {
          fn(buf);
          return;
        }
        for (SymbolId a = 0; a < k; ++a) {
          buf.push_back(a);
          each_word(buf, len, fn);
          buf.pop_back();
        }
      };
  for (std::size_t prelen = 0; prelen < max_total_len; ++prelen) {
    for (std::size_t perlen = 1; prelen + perlen <= max_total_len; ++perlen) {
      Word u;
      each_word(u, prelen, [&](const Word& pre) {
        Word v;
        each_word(v, perlen, [&](const Word& per) {
          EvPeriodicPoint p(pre, per);
          if (s->contains(p)) acc.insert(p);
        });
      });
    }
  }
  return {acc.begin(), acc.end()};
}

}  // namespace subshift
