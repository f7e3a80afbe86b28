/* json_out.cpp -- JSON renderings. */
#include "subshift/json_out.hpp"

#include "subshift/text.hpp"

namespace subshift {

Json clopen_json(const ClopenSet& u) {
  const Alphabet& alph = u.shift()->alphabet();
  Json words = Json::array();
  for (const Word& w : u.words()) words.push_back(word_to_string(alph, w));
  return Json{{"level", u.level()}, {"words", words}};
}

Json element_json(const AlgebraElement& x) {
  const Alphabet& alph = x.shift()->alphabet();
  Json terms = Json::array();
  for (const auto& [g, f] : x.terms()) {
    Json parts = Json::array();
    for (const auto& [coeff, set] : f.parts()) {
      Json words = Json::array();
      for (const Word& w : set.words()) words.push_back(word_to_string(alph, w));
      parts.push_back(Json{{"coeff", x.ring().to_string(coeff)},
                           {"level", set.level()},
                           {"words", std::move(words)}});
    }
    terms.push_back(Json{{"g", group_to_string(alph, g)}, {"parts", std::move(parts)}});
  }
  return Json{{"ring", x.ring().name()}, {"terms", std::move(terms)}};
}

Json verdict_json(const Verdict& v, const Alphabet& alph) {
  Json witness;
  if (v.witness) {
    Json b = Json::array();
    for (const Word& w : v.witness->B) b.push_back(word_to_string(alph, w));
    witness = Json{{"B", std::move(b)},
                   {"gamma", v.witness->gamma ? Json(word_to_string(alph, *v.witness->gamma))
                                              : Json(nullptr)},
                   {"point", v.witness->point ? Json(point_to_string(alph, *v.witness->point))
                                              : Json(nullptr)},
                   {"note", v.witness->note}};
  } else {
    witness = nullptr;
  }
  return Json{{"property", v.property},
              {"holds", v.holds},
              {"witness", std::move(witness)},
              {"method", v.method},
              {"bound", v.bound ? Json(*v.bound) : Json(nullptr)}};
}

Json check_report_json(const CheckReport& r) {
  Json failures = Json::array();
  for (const std::string& f : r.failures) failures.push_back(f);
  return Json{{"checked", r.checked}, {"failed", r.failed}, {"failures", std::move(failures)}};
}

}  // namespace subshift
