/* cli.cpp -- verb dispatch and report rendering. */
#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <vector>

#include "CLI11.hpp"
#include "subshift/algebra.hpp"
#include "subshift/checks.hpp"
#include "subshift/clopen.hpp"
#include "subshift/errors.hpp"
#include "subshift/expr.hpp"
#include "subshift/json_out.hpp"
#include "subshift/partial_action.hpp"
#include "subshift/simplicity.hpp"
#include "subshift/text.hpp"

namespace subshift::cli {

namespace {

struct Outcome {
  Json result;
  std::vector<std::string> lines;
  int exit_code = 0;
};

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string::npos) {
      out.push_back(text.substr(start));
      break;
    }
    out.push_back(text.substr(start, comma - start));
    start = comma + 1;
  }
  return out;
}

std::string verdict_line(const Verdict& v) {
  std::string line = v.property + ": " + (v.holds ? "holds" : "fails");
  if (v.method == "oracle") line += " (oracle, bound " + std::to_string(v.bound.value_or(0)) + ")";
  if (!v.holds && v.witness) line += "; witness: " + v.witness->note;
  if (v.holds && !v.detail.empty()) line += "; " + v.detail;
  return line;
}

}  // namespace

ShiftSpec parse_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::io_error, "cannot read spec file '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::malformed_spec, "spec file is not valid JSON: " + std::string(e.what()));
  }
  if (!j.is_object() || !j.contains("alphabet") || !j["alphabet"].is_array())
    fail(Errc::malformed_spec, "spec needs an \"alphabet\" array");
  std::vector<std::string> symbols;
  for (const Json& s : j["alphabet"]) {
    if (!s.is_string()) fail(Errc::malformed_spec, "alphabet entries must be strings");
    symbols.push_back(s.get<std::string>());
  }
  Alphabet alph(symbols);

  std::vector<Word> forbidden;
  if (j.contains("forbidden")) {
    if (!j["forbidden"].is_array()) fail(Errc::malformed_spec, "\"forbidden\" must be an array");
    for (const Json& f : j["forbidden"]) {
      if (f.is_string()) {
        try {
          forbidden.push_back(parse_word(alph, f.get<std::string>()));
        } catch (const SyntaxError& e) {
          fail(Errc::malformed_spec,
               "forbidden word '" + f.get<std::string>() + "': " + e.what());
        }
      } else if (f.is_array()) {
        Word w;
        for (const Json& sym : f) {
          std::optional<SymbolId> id =
              sym.is_string() ? alph.find(sym.get<std::string>()) : std::nullopt;
          if (!id) fail(Errc::malformed_spec, "forbidden word uses an unknown symbol");
          w.push_back(*id);
        }
        forbidden.push_back(std::move(w));
      } else {
        fail(Errc::malformed_spec, "forbidden entries must be strings or symbol arrays");
      }
    }
  }
  ShiftSpec spec{std::move(alph), std::move(forbidden)};
  spec.validate();
  return spec;
}

CoefficientRing parse_eval_ring(const std::string& text) {
  if (text == "Q") return CoefficientRing::rationals();
  if (text == "Z") return CoefficientRing::integers();
  if (text.rfind("Zn:", 0) == 0) return CoefficientRing::mod(std::stoll(text.substr(3)));
  fail(Errc::syntax_error, "unknown ring '" + text + "' (expected Q, Z or Zn:<n>)");
}

CoefficientRing parse_field_ring(const std::string& text) {
  if (text == "Q") return CoefficientRing::rationals();
  if (text.rfind("Fp:", 0) == 0) return CoefficientRing::mod(std::stoll(text.substr(3)));
  fail(Errc::syntax_error, "unknown ring '" + text + "' (expected Q or Fp:<p>)");
}

namespace {

Outcome do_info(const ShiftPtr& s) {
  Outcome out;
  const Alphabet& alph = s->alphabet();
  Json alphabet = Json::array();
  for (std::size_t a = 0; a < alph.size(); ++a) alphabet.push_back(alph.name(a));
  Json forbidden = Json::array();
  std::string forb_line;
  for (const Word& w : s->spec().forbidden) {
    std::string t = word_to_string(alph, w);
    forbidden.push_back(t);
    forb_line += (forb_line.empty() ? "" : " ") + t;
  }
  Json states = Json::array();
  std::string state_line;
  for (const Word& w : s->states()) {
    std::string t = word_to_string(alph, w);
    states.push_back(t);
    state_line += (state_line.empty() ? "" : " ") + t;
  }
  out.result = Json{{"alphabet", alphabet},
                    {"forbidden", forbidden},
                    {"memory", s->memory()},
                    {"empty", s->empty()},
                    {"states", states}};
  std::string alpha_line;
  for (std::size_t a = 0; a < alph.size(); ++a)
    alpha_line += (a ? " " : "") + alph.name(a);
  out.lines.push_back("alphabet: " + alpha_line);
  out.lines.push_back("forbidden: " + (forb_line.empty() ? "(none)" : forb_line));
  out.lines.push_back("memory: " + std::to_string(s->memory()));
  out.lines.push_back(s->empty() ? "the shift is empty"
                                 : "states (length-" + std::to_string(s->memory()) +
                                       " words): " + state_line);
  return out;
}

Outcome do_language(const ShiftPtr& s, long long n) {
  Outcome out;
  std::vector<Word> words = s->language(static_cast<std::size_t>(n));
  Json arr = Json::array();
  for (const Word& w : words) {
    std::string t = word_to_string(s->alphabet(), w);
    arr.push_back(t);
    out.lines.push_back(t);
  }
  if (words.empty()) out.lines.push_back("(no words)");
  out.result = Json{{"n", n}, {"words", arr}};
  return out;
}

Outcome do_clopen(const ShiftPtr& s, const std::string& expr) {
  Outcome out;
  ClopenSet u = parse_set_expr(s, expr);
  out.result = Json{{"canonical", set_to_string(u)},
                    {"level", u.level()},
                    {"words", clopen_json(u)["words"]}};
  out.lines.push_back("canonical: " + set_to_string(u));
  out.lines.push_back("level: " + std::to_string(u.level()) + ", cylinders: " +
                      std::to_string(u.words().size()));
  return out;
}

Outcome do_eval(const ShiftPtr& s, const CoefficientRing& ring, const std::string& expr) {
  Outcome out;
  AlgebraElement x = parse_algebra_expr(s, ring, expr);
  Json body = element_json(x);
  body["canonical"] = to_expression_string(x);
  body["display"] = to_display_string(x);
  out.result = std::move(body);
  out.lines.push_back(to_display_string(x));
  return out;
}

Outcome do_check(const ShiftPtr& s, long long max_len, unsigned seed) {
  Outcome out;
  CoefficientRing ring = CoefficientRing::rationals();
  CheckReport rep = check_partial_representation(s, ring, static_cast<std::size_t>(max_len));
  CheckReport gen = check_generator_relations(s, ring, static_cast<std::size_t>(max_len));
  CheckReport proj = check_projection_relations(s, ring, 50, seed);
  out.result = Json{{"partial_representation", check_report_json(rep)},
                    {"generator_relations", check_report_json(gen)},
                    {"projection_relations", check_report_json(proj)},
                    {"ok", rep.ok() && gen.ok() && proj.ok()}};
  auto line = [&](const char* name, const CheckReport& r) {
    out.lines.push_back(std::string(name) + ": checked " + std::to_string(r.checked) +
                        ", failed " + std::to_string(r.failed));
    for (const std::string& f : r.failures) out.lines.push_back("  " + f);
  };
  line("partial representation axioms", rep);
  line("generator relations", gen);
  line("projection relations", proj);
  if (!(rep.ok() && gen.ok() && proj.ok())) out.exit_code = 1;
  return out;
}

Outcome do_cost(const ShiftPtr& s, const std::string& b_text, const std::string& point_text) {
  Outcome out;
  std::vector<Word> B;
  Json b_json = Json::array();
  for (const std::string& piece : split_commas(b_text)) {
    Word w = parse_word(s->alphabet(), piece);
    b_json.push_back(word_to_string(s->alphabet(), w));
    B.push_back(std::move(w));
  }
  EvPeriodicPoint p = parse_point(s->alphabet(), point_text);
  std::optional<long long> c = cost(s, B, p);
  out.result = Json{{"B", std::move(b_json)},
                    {"point", point_to_string(s->alphabet(), p)},
                    {"cost", c ? Json(*c) : Json(nullptr)}};
  out.lines.push_back(c ? "cost: " + std::to_string(*c) : "cost: infinite");
  return out;
}

Outcome do_orbit(const ShiftPtr& s, const std::string& point_text, long long depth) {
  Outcome out;
  EvPeriodicPoint p = parse_point(s->alphabet(), point_text);
  std::vector<EvPeriodicPoint> pts = orbit(s, p, static_cast<std::size_t>(depth));
  Json arr = Json::array();
  for (const EvPeriodicPoint& q : pts) {
    std::string t = point_to_string(s->alphabet(), q);
    arr.push_back(t);
    out.lines.push_back(t);
  }
  out.result = Json{{"point", point_to_string(s->alphabet(), p)},
                    {"depth", depth},
                    {"orbit", std::move(arr)}};
  return out;
}

Outcome do_simplicity(const ShiftPtr& s, const CoefficientRing& ring,
                      std::optional<long long> oracle_bound) {
  Outcome out;
  Verdict v = simplicity_verdict(s, ring);
  Json oracles = Json::array();
  out.lines.push_back(verdict_line(v));
  if (!v.detail.empty() && !v.holds) out.lines.push_back(v.detail);
  if (oracle_bound) {
    std::size_t bound = static_cast<std::size_t>(*oracle_bound);
    Verdict ol = oracle_condition_L(s, bound);
    Verdict oc = oracle_cofinal(s, bound);
    oracles.push_back(verdict_json(ol, s->alphabet()));
    oracles.push_back(verdict_json(oc, s->alphabet()));
    out.lines.push_back(verdict_line(ol));
    out.lines.push_back(verdict_line(oc));
  }
  out.result = Json{{"verdict", verdict_json(v, s->alphabet())}, {"oracles", std::move(oracles)}};
  if (!v.holds) out.exit_code = 1;
  return out;
}

}  // namespace

int run(int argc, const char* const* argv) {
  CLI::App app{"exact workbench for one-sided shifts of finite type"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  bool json = false;
  std::string spec_path, expr, ring_text = "Q", b_text, point_text;
  long long n = 0, max_len = 3, depth = 3;
  long long oracle_bound_value = -1;
  unsigned seed = 17;

  auto common = [&](CLI::App* sub) {
    sub->add_flag("--json", json, "emit a JSON report");
    sub->add_option("spec", spec_path, "shift spec file (JSON)")->required();
    return sub;
  };

  CLI::App* c_info = common(app.add_subcommand("info", "describe the compiled shift"));
  CLI::App* c_lang = common(app.add_subcommand("language", "list language words of a length"));
  c_lang->add_option("-n,--length", n, "word length")->required();
  CLI::App* c_clopen = common(app.add_subcommand("clopen", "canonicalize a set expression"));
  c_clopen->add_option("expr", expr, "set expression")->required();
  CLI::App* c_eval = common(app.add_subcommand("eval", "evaluate an algebra expression"));
  c_eval->add_option("expr", expr, "algebra expression")->required();
  c_eval->add_option("--ring", ring_text, "coefficient ring: Q, Z or Zn:<n>");
  CLI::App* c_check = common(app.add_subcommand("check", "run the identity suites"));
  c_check->add_option("--max-len", max_len, "word and group length bound")->required();
  c_check->add_option("--seed", seed, "seed for the sampled suites");
  CLI::App* c_cost = common(app.add_subcommand("cost", "exact cost of repairing a point"));
  c_cost->add_option("--B", b_text, "comma-separated language words")->required();
  c_cost->add_option("--point", point_text, "eventually periodic point u|v")->required();
  CLI::App* c_orbit = common(app.add_subcommand("orbit", "enumerate a bounded orbit"));
  c_orbit->add_option("--point", point_text, "eventually periodic point u|v")->required();
  c_orbit->add_option("--depth", depth, "word-length bound for the acting pairs");
  CLI::App* c_simpl = common(app.add_subcommand("simplicity", "decide simplicity"));
  c_simpl->add_option("--ring", ring_text, "coefficient field: Q or Fp:<p>")->required();
  c_simpl->add_option("--oracle-bound", oracle_bound_value,
                      "also run the brute-force oracles up to this bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  const auto started = std::chrono::steady_clock::now();
  std::string verb;
  Json inputs;
  try {
    ShiftPtr s = build_shift(parse_spec(spec_path));
    Outcome out;
    if (app.got_subcommand(c_info)) {
      verb = "info";
      inputs = Json{{"spec", spec_path}};
      out = do_info(s);
    } else if (app.got_subcommand(c_lang)) {
      verb = "language";
      inputs = Json{{"spec", spec_path}, {"n", n}};
      out = do_language(s, n);
    } else if (app.got_subcommand(c_clopen)) {
      verb = "clopen";
      inputs = Json{{"spec", spec_path}, {"expr", expr}};
      out = do_clopen(s, expr);
    } else if (app.got_subcommand(c_eval)) {
      verb = "eval";
      inputs = Json{{"spec", spec_path}, {"expr", expr}, {"ring", ring_text}};
      out = do_eval(s, parse_eval_ring(ring_text), expr);
    } else if (app.got_subcommand(c_check)) {
      verb = "check";
      inputs = Json{{"spec", spec_path}, {"max_len", max_len}, {"seed", seed}};
      out = do_check(s, max_len, seed);
    } else if (app.got_subcommand(c_cost)) {
      verb = "cost";
      inputs = Json{{"spec", spec_path}, {"B", b_text}, {"point", point_text}};
      out = do_cost(s, b_text, point_text);
    } else if (app.got_subcommand(c_orbit)) {
      verb = "orbit";
      inputs = Json{{"spec", spec_path}, {"point", point_text}, {"depth", depth}};
      out = do_orbit(s, point_text, depth);
    } else {
      verb = "simplicity";
      inputs = Json{{"spec", spec_path}, {"ring", ring_text}};
      std::optional<long long> ob;
      if (c_simpl->count("--oracle-bound")) {
        inputs["oracle_bound"] = oracle_bound_value;
        ob = oracle_bound_value;
      }
      out = do_simplicity(s, parse_field_ring(ring_text), ob);
    }

    if (json) {
      const auto elapsed = std::chrono::steady_clock::now() - started;
      Json report{{"verb", verb},
                  {"inputs", std::move(inputs)},
                  {"result", std::move(out.result)},
                  {"timing_ms",
                   std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count()},
                  {"version", kVersion}};
      std::cout << report.dump(2) << "\n";
    } else {
      for (const std::string& line : out.lines) std::cout << line << "\n";
    }
    return out.exit_code;
  } catch (const SyntaxError& e) {
    std::cerr << "error [" << errc_name(e.code()) << "]: " << e.what() << " at offset "
              << e.offset() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error [" << errc_name(e.code()) << "]: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace subshift::cli
