/* acceptance.cpp -- end-to-end acceptance run, one pass/fail line per criterion.
 *
 * Every criterion is exact: a pass means zero violations over the whole
 * quantified range, not a statistical bound.  Randomness only selects the
 * sample set and is seeded, so runs are reproducible.
 */
#include <algorithm>
#include <cstdio>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "subshift/algebra.hpp"
#include "subshift/checks.hpp"
#include "subshift/clopen.hpp"
#include "subshift/errors.hpp"
#include "subshift/partial_action.hpp"
#include "subshift/simplicity.hpp"
#include "subshift/text.hpp"

using namespace subshift;
using testutil::w;

namespace {

struct Criterion {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (cond) return;
    ok = false;
    if (detail.size() < 400) detail += (detail.empty() ? "" : "; ") + what;
  }
};

std::vector<ShiftPtr> named_corpus() {
  return {testutil::full_2_shift(), testutil::golden_mean(), testutil::forbid_10(),
          testutil::one_point()};
}

ClopenSet follower_of(const ShiftPtr& s, const std::vector<Word>& B) {
  ClopenSet f = ClopenSet::whole(s);
  for (const Word& b : B) f = set_intersect(f, follower_set(s, b));
  return f;
}

std::optional<EvPeriodicPoint> try_act(const ShiftPtr& s, const FreeGroupElement& g,
                                       const EvPeriodicPoint& p) {
  try {
    return act_point(s, g, p);
  } catch (const Error&) {
    return std::nullopt;
  }
}

/// a >= b with nullopt as infinity.
bool cost_geq(const std::optional<long long>& a, const std::optional<long long>& b) {
  if (!a) return true;
  if (!b) return false;
  return *a >= *b;
}

// ---- criterion 1: corpus verdicts and witness replay --------------------

Criterion criterion_corpus_verdicts() {
  Criterion c;
  auto q = CoefficientRing::rationals();

  for (const auto& s : {testutil::full_2_shift(), testutil::golden_mean()}) {
    c.require(simplicity_verdict(s, q).holds, "expected a simple algebra");
    c.require(oracle_condition_L(s, 4).holds, "oracle refutes condition (L)");
    c.require(oracle_cofinal(s, 4).holds, "oracle refutes cofinality");
  }

  auto f10 = testutil::forbid_10();
  c.require(!simplicity_verdict(f10, q).holds, "forbid-10 algebra must not be simple");
  Verdict l = check_condition_L(f10);
  c.require(!l.holds, "condition (L) must fail on forbid-10");
  c.require(l.witness && replay_condition_L_witness(f10, *l.witness),
            "condition (L) witness does not replay");
  c.require(!is_minimal(f10).holds, "forbid-10 action must not be minimal");
  Verdict h = check_hyper_cofinal(f10);
  c.require(!h.holds, "hyper cofinality must fail on forbid-10");
  c.require(h.witness && replay_cofinal_witness(f10, *h.witness, 4),
            "cofinality witness does not replay");
  Verdict ol = oracle_condition_L(f10, 4);
  Verdict oc = oracle_cofinal(f10, 4);
  c.require(!ol.holds && ol.witness && replay_condition_L_witness(f10, *ol.witness),
            "oracle condition (L) witness does not replay");
  c.require(!oc.holds && oc.witness && replay_cofinal_witness(f10, *oc.witness, 4),
            "oracle cofinality witness does not replay");

  auto one = testutil::one_point();
  c.require(!simplicity_verdict(one, q).holds, "one-point algebra must not be simple");
  Verdict l1 = check_condition_L(one);
  c.require(!l1.holds && l1.witness && replay_condition_L_witness(one, *l1.witness),
            "one-point condition (L) witness does not replay");
  c.require(is_minimal(one).holds, "one-point action must be minimal");
  Verdict o1 = oracle_condition_L(one, 4);
  c.require(!o1.holds && o1.witness && replay_condition_L_witness(one, *o1.witness),
            "one-point oracle witness does not replay");
  return c;
}

// ---- criterion 2: defining identities exact to length 4 ------------------

Criterion criterion_identity_suites() {
  Criterion c;
  for (const auto& s : named_corpus()) {
    for (const auto& ring : {CoefficientRing::rationals(), CoefficientRing::mod(2)}) {
      CheckReport rep = check_partial_representation(s, ring, 4);
      CheckReport gen = check_generator_relations(s, ring, 4);
      c.require(rep.ok() && rep.checked > 0,
                ring.name() + " partial representation: " +
                    (rep.failures.empty() ? "no checks ran" : rep.failures.front()));
      c.require(gen.ok() && gen.checked > 0,
                ring.name() + " generator relations: " +
                    (gen.failures.empty() ? "no checks ran" : gen.failures.front()));
    }
  }
  return c;
}

// ---- criterion 3: chain factorization identities --------------------------

Criterion criterion_chain_identities() {
  Criterion c;
  auto s = testutil::golden_mean();
  auto q = CoefficientRing::rationals();
  std::vector<FreeGroupElement> pool = reduced_elements(2, 3);
  std::mt19937 rng(101);
  auto pick = [&] { return pool[rng() % pool.size()]; };
  auto pi = [&](const FreeGroupElement& g) { return pi_element(s, q, g); };
  auto eps = [&](const FreeGroupElement& g) { return pi(g) * pi(g.inverse()); };

  for (int t = 0; t < 500; ++t) {
    std::size_t n = 1 + rng() % 4;
    std::vector<FreeGroupElement> gs;
    for (std::size_t i = 0; i < n; ++i) gs.push_back(pick());
    const FreeGroupElement& g1 = gs[0];
    const FreeGroupElement& g2 = gs[n > 1 ? 1 : 0];

    AlgebraElement e1 = eps(g1);
    c.require(e1 * e1 == e1, "idempotence of eps fails");
    c.require(e1 * eps(g2) == eps(g2) * e1, "eps elements do not commute");
    c.require(pi(g1) * eps(g2) == eps(g1 * g2) * pi(g1), "pi does not twist eps");
    c.require(pi(g1) * pi(g1.inverse()) * pi(g1) == pi(g1), "pi is not partial isometric");

    AlgebraElement lhs = pi(gs[0]);
    for (std::size_t i = 1; i < n; ++i) lhs = lhs * pi(gs[i]);
    FreeGroupElement prefix = gs[0];
    AlgebraElement rhs = eps(prefix);
    for (std::size_t i = 1; i + 1 < n; ++i) {
      prefix = prefix * gs[i];
      rhs = rhs * eps(prefix);
    }
    FreeGroupElement total = gs[0];
    for (std::size_t i = 1; i < n; ++i) total = total * gs[i];
    rhs = n == 1 ? pi(total) : rhs * pi(total);
    c.require(lhs == rhs, "chain factorization fails for a tuple of length " +
                              std::to_string(n));
    if (!c.ok) break;
  }
  return c;
}

// ---- criterion 4: partial action laws -------------------------------------

Criterion criterion_partial_action_laws() {
  Criterion c;
  std::mt19937 rng(202);
  for (const auto& s : named_corpus()) {
    std::vector<EvPeriodicPoint> points = enumerate_points(s, 4);
    std::vector<Word> words = language_up_to(s, 2);
    std::vector<FreeGroupElement> simples;
    for (const Word& a : words)
      for (const Word& b : words)
        simples.push_back(FreeGroupElement::from_word(a) *
                          FreeGroupElement::from_word(b).inverse());
    std::vector<FreeGroupElement> hs =
        reduced_elements(s->alphabet().size(), 4);

    for (int t = 0; t < 200; ++t) {
      const EvPeriodicPoint& p = points[rng() % points.size()];
      const FreeGroupElement& g = simples[rng() % simples.size()];
      const FreeGroupElement& h = simples[rng() % simples.size()];

      // composition: tau_g tau_h extends to tau_{gh}
      if (auto q1 = try_act(s, h, p)) {
        if (auto q2 = try_act(s, g, *q1)) {
          auto direct = try_act(s, g * h, p);
          c.require(direct && *direct == *q2, "composition law fails");
        }
      }

      if (auto q1 = try_act(s, g, p)) {
        // inverse law
        auto back = try_act(s, g.inverse(), *q1);
        c.require(back && *back == p, "inverse law fails");
        // orbit filter equivariance: h in xi(gp) iff g^{-1} h in xi(p)
        for (const FreeGroupElement& k : hs) {
          bool left = xi_contains(s, *q1, k);
          bool right = xi_contains(s, p, g.inverse() * k);
          c.require(left == right, "equivariance fails at " + std::to_string(t));
          if (!c.ok) break;
        }
        // act_clopen agrees with act_point on the domain
        ClopenSet dom = domain_set(s, g.inverse());
        if (!dom.is_empty()) {
          ClopenSet image = act_clopen(s, g, dom);
          c.require(set_equal(act_clopen(s, g.inverse(), image), dom),
                    "set-level inverse law fails");
          for (const EvPeriodicPoint& x : points) {
            if (!dom.contains(x)) continue;
            c.require(image.contains(act_point(s, g, x)),
                      "set image misses a point image");
          }
        }
      }
      if (!c.ok) return c;
    }
  }
  return c;
}

// ---- criterion 5: associativity --------------------------------------------

Criterion criterion_associativity() {
  Criterion c;
  auto s = testutil::golden_mean();
  auto q = CoefficientRing::rationals();
  std::mt19937 rng(303);

  std::vector<AlgebraElement> atoms = {
      gen_s(s, q, 0),      gen_s(s, q, 1),          gen_s_star(s, q, 0),
      gen_s_star(s, q, 1), unit_element(s, q),      gen_p(q, ClopenSet::cylinder(s, w("0"))),
      gen_p(q, c_set(s, w("1"), w("0"))),           word_s(s, q, w("01")),
      pi_element(s, q, FreeGroupElement::generator(0) * FreeGroupElement::generator(1, true))};

  auto sample = [&] {
    AlgebraElement x = atoms[rng() % atoms.size()];
    std::size_t extra = rng() % 4;  // up to 4 factors total
    for (std::size_t i = 0; i < extra; ++i) x = x * atoms[rng() % atoms.size()];
    long long num = static_cast<long long>(rng() % 7) - 3;
    long long den = 1 + static_cast<long long>(rng() % 3);
    return x.scaled(q.make(num, den));
  };

  for (int t = 0; t < 200; ++t) {
    AlgebraElement x = sample(), y = sample(), z = sample();
    c.require((x * y) * z == x * (y * z), "associativity fails at sample " + std::to_string(t));
    if (!c.ok) break;
  }
  return c;
}

// ---- criterion 6: decisions vs oracles on a 10-shift corpus ----------------

std::vector<ShiftPtr> seeded_corpus(std::size_t want, unsigned seed) {
  std::vector<ShiftPtr> out;
  std::mt19937 rng(seed);
  while (out.size() < want) {
    std::size_t asz = 2 + rng() % 2;
    std::vector<std::string> symbols;
    for (std::size_t a = 0; a < asz; ++a) symbols.push_back(std::string(1, char('0' + a)));
    std::size_t max_len = 2 + rng() % 2;  // memory stays <= 2
    std::set<Word> forb;
    std::size_t n_forb = 1 + rng() % 3;
    for (std::size_t i = 0; i < n_forb; ++i) {
      Word word;
      std::size_t len = 2 + rng() % (max_len - 1);
      for (std::size_t j = 0; j < len; ++j) word.push_back(rng() % asz);
      forb.insert(word);
    }
    try {
      ShiftPtr s = build_shift(
          ShiftSpec{Alphabet(symbols), std::vector<Word>(forb.begin(), forb.end())});
      if (!s->empty()) out.push_back(s);
    } catch (const Error&) {
      // rejected spec; draw again
    }
  }
  return out;
}

Criterion criterion_decision_oracle_agreement() {
  Criterion c;
  std::vector<ShiftPtr> corpus = named_corpus();
  for (const auto& s : seeded_corpus(6, 404)) corpus.push_back(s);

  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const ShiftPtr& s = corpus[i];
    std::string tag = "shift " + std::to_string(i);

    Verdict dl = check_condition_L(s);
    Verdict ol = oracle_condition_L(s, 4);
    if (!ol.holds) {
      c.require(!dl.holds, tag + ": oracle refutes condition (L), decision disagrees");
      c.require(bool(ol.witness) && replay_condition_L_witness(s, *ol.witness),
                tag + ": oracle condition (L) witness does not replay");
      if (dl.witness && ol.witness)
        c.require(set_equal(follower_of(s, dl.witness->B), follower_of(s, ol.witness->B)),
                  tag + ": condition (L) witnesses name different classes");
    }
    if (!dl.holds)
      c.require(bool(dl.witness) && replay_condition_L_witness(s, *dl.witness),
                tag + ": decision condition (L) witness does not replay");
    else
      c.require(ol.holds, tag + ": condition (L) holds exactly but the oracle refutes it");

    Verdict dh = check_hyper_cofinal(s);
    Verdict ds = check_strongly_cofinal(s);
    Verdict oh = oracle_cofinal(s, 4);
    Verdict os = oracle_cofinal(s, 4, 1);
    if (!oh.holds) {
      c.require(!dh.holds, tag + ": oracle refutes hyper cofinality, decision disagrees");
      c.require(bool(oh.witness) && replay_cofinal_witness(s, *oh.witness, 4),
                tag + ": oracle cofinality witness does not replay");
    }
    if (!os.holds) c.require(!ds.holds, tag + ": oracle refutes strong cofinality");
    if (!dh.holds)
      c.require(bool(dh.witness) && replay_cofinal_witness(s, *dh.witness, 4),
                tag + ": decision cofinality witness does not replay");
    else
      c.require(oh.holds, tag + ": hyper cofinality holds exactly but the oracle refutes it");
    if (dh.holds) c.require(ds.holds, tag + ": hyper holds but strong fails");
  }
  return c;
}

// ---- criterion 7: Boolean set evaluation vs direct membership --------------

struct SetNode {
  int op;  // 0 leaf C(alpha,beta), 1 union, 2 intersection, 3 difference, 4 complement
  Word alpha, beta;
  std::unique_ptr<SetNode> l, r;
};

std::unique_ptr<SetNode> random_tree(std::mt19937& rng, const std::vector<Word>& words,
                                     int depth) {
  auto node = std::make_unique<SetNode>();
  if (depth == 0 || rng() % 3 == 0) {
    node->op = 0;
    node->alpha = words[rng() % words.size()];
    node->beta = words[rng() % words.size()];
    return node;
  }
  node->op = 1 + static_cast<int>(rng() % 4);
  node->l = random_tree(rng, words, depth - 1);
  if (node->op != 4) node->r = random_tree(rng, words, depth - 1);
  return node;
}

ClopenSet eval_set(const ShiftPtr& s, const SetNode& n) {
  switch (n.op) {
    case 0: return c_set(s, n.alpha, n.beta);
    case 1: return set_union(eval_set(s, *n.l), eval_set(s, *n.r));
    case 2: return set_intersect(eval_set(s, *n.l), eval_set(s, *n.r));
    case 3: return set_minus(eval_set(s, *n.l), eval_set(s, *n.r));
    default: return set_complement(eval_set(s, *n.l));
  }
}

bool eval_member(const ShiftPtr& s, const SetNode& n, const EvPeriodicPoint& p) {
  switch (n.op) {
    case 0:
      // direct reading: p = beta x with alpha x in the shift
      return p.word_prefix(n.beta.size()) == n.beta &&
             s->contains(p.dropped(n.beta.size()).prepended(n.alpha));
    case 1: return eval_member(s, *n.l, p) || eval_member(s, *n.r, p);
    case 2: return eval_member(s, *n.l, p) && eval_member(s, *n.r, p);
    case 3: return eval_member(s, *n.l, p) && !eval_member(s, *n.r, p);
    default: return !eval_member(s, *n.l, p);
  }
}

Criterion criterion_boolean_soundness() {
  Criterion c;
  auto s = testutil::golden_mean();
  std::mt19937 rng(505);
  std::vector<Word> words = language_up_to(s, 3);

  std::vector<EvPeriodicPoint> pool = enumerate_points(s, 6);
  std::shuffle(pool.begin(), pool.end(), rng);
  if (pool.size() > 50) pool.erase(pool.begin() + 50, pool.end());
  c.require(pool.size() == 50, "point pool is short");

  for (int t = 0; t < 1000 && c.ok; ++t) {
    auto tree = random_tree(rng, words, 3);
    ClopenSet u = eval_set(s, *tree);
    for (const EvPeriodicPoint& p : pool) {
      c.require(u.contains(p) == eval_member(s, *tree, p),
                "membership mismatch at expression " + std::to_string(t) + ", point " +
                    point_to_string(s->alphabet(), p));
      if (!c.ok) break;
    }
  }
  return c;
}

// ---- criterion 8: exact cost vs exhaustive search ---------------------------

Criterion criterion_cost_exactness() {
  Criterion c;
  std::mt19937 rng(606);
  for (const auto& s : named_corpus()) {
    std::vector<EvPeriodicPoint> pool = enumerate_points(s, 5);
    std::shuffle(pool.begin(), pool.end(), rng);
    if (pool.size() > 50) pool.erase(pool.begin() + 50, pool.end());

    std::vector<std::vector<Word>> sets;
    for (const Word& b : language_up_to(s, 2))
      if (!b.empty()) sets.push_back({b});
    std::vector<Word> nonempty;
    for (const Word& b : language_up_to(s, 2))
      if (!b.empty()) nonempty.push_back(b);
    for (int i = 0; i < 4; ++i) {
      std::vector<Word> pair = {nonempty[rng() % nonempty.size()],
                                nonempty[rng() % nonempty.size()]};
      if (pair[0] != pair[1]) sets.push_back(pair);
    }

    for (const auto& B : sets) {
      for (const EvPeriodicPoint& p : pool) {
        auto exact = cost(s, B, p);
        auto brute = testutil::naive_cost(s, B, p, 6);
        if (brute) {
          c.require(exact == brute,
                    "cost disagrees with exhaustive search (" +
                        point_to_string(s->alphabet(), p) + ")");
        } else {
          c.require(!exact || *exact > 6, "cost finds a repair the search excludes");
        }

        std::vector<Word> bigger = B;
        bigger.push_back(nonempty[rng() % nonempty.size()]);
        c.require(cost_geq(cost(s, bigger, p), exact), "cost is not monotone in B");
        if (!c.ok) return c;
      }
    }
  }
  return c;
}

}  // namespace

int main() {
  struct Entry {
    const char* label;
    std::function<Criterion()> run;
  };
  const std::vector<Entry> entries = {
      {"1. corpus simplicity verdicts with bounded oracle replay", criterion_corpus_verdicts},
      {"2. defining identity suites exact to word length 4", criterion_identity_suites},
      {"3. chain factorization identities on 500 sampled tuples", criterion_chain_identities},
      {"4. partial action laws on 200 samples per shift", criterion_partial_action_laws},
      {"5. associativity on 200 sampled element triples", criterion_associativity},
      {"6. decision procedures agree with bounded oracles on 10 shifts",
       criterion_decision_oracle_agreement},
      {"7. Boolean set evaluation vs direct membership, 1000 x 50", criterion_boolean_soundness},
      {"8. exact cost vs exhaustive search with monotonicity", criterion_cost_exactness},
  };

  int failures = 0;
  for (const Entry& e : entries) {
    Criterion c;
    try {
      c = e.run();
    } catch (const std::exception& ex) {
      c.ok = false;
      c.detail = std::string("unexpected exception: ") + ex.what();
    }
    if (c.ok) {
      std::printf("[PASS] %s\n", e.label);
    } else {
      std::printf("[FAIL] %s: %s\n", e.label, c.detail.c_str());
      ++failures;
    }
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(entries.size()) - failures,
              entries.size());
  return failures == 0 ? 0 : 1;
}
