/* expr.cpp -- recursive-descent parsers and canonical printers. */
#include "subshift/expr.hpp"

#include <cctype>
#include <stdexcept>

#include "subshift/errors.hpp"
#include "subshift/text.hpp"

namespace subshift {

namespace {

struct Cursor {
  const std::string& src;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
  }
  bool at_end() {
    skip_ws();
    return pos == src.size();
  }
  bool lookahead(const std::string& tok) {
    skip_ws();
    return src.compare(pos, tok.size(), tok) == 0;
  }
  bool consume(const std::string& tok) {
    if (!lookahead(tok)) return false;
    pos += tok.size();
    return true;
  }
  void expect(char c, const std::string& what) {
    skip_ws();
    if (pos >= src.size() || src[pos] != c)
      throw SyntaxError(pos, "expected '" + std::string(1, c) + "' " + what);
    ++pos;
  }
  // The raw text up to (not past) the next ',' or ')'.
  std::pair<std::string, std::size_t> until_delim() {
    skip_ws();
    std::size_t start = pos;
    while (pos < src.size() && src[pos] != ',' && src[pos] != ')') ++pos;
    std::size_t end = pos;
    while (end > start && std::isspace(static_cast<unsigned char>(src[end - 1]))) --end;
    if (pos == src.size()) throw SyntaxError(start, "missing ')'");
    return {src.substr(start, end - start), start};
  }
};

ClopenSet parse_or(Cursor& c, const ShiftPtr& s);

Word delim_word(Cursor& c, const ShiftPtr& s) {
  auto [text, at] = c.until_delim();
  return parse_word(s->alphabet(), text, at);
}

ClopenSet parse_set_primary(Cursor& c, const ShiftPtr& s) {
  c.skip_ws();
  if (c.consume("C(")) {
    Word alpha = delim_word(c, s);
    c.expect(',', "between the words of C");
    Word beta = delim_word(c, s);
    c.expect(')', "after C(...");
    return c_set(s, alpha, beta);
  }
  if (c.consume("Z(")) {
    Word w = delim_word(c, s);
    c.expect(')', "after Z(...");
    return ClopenSet::cylinder(s, w);
  }
  if (c.consume("F(")) {
    Word w = delim_word(c, s);
    c.expect(')', "after F(...");
    return follower_set(s, w);
  }
  if (c.consume("X")) return ClopenSet::whole(s);
  if (c.consume("0")) return ClopenSet::empty(s);
  if (c.consume("(")) {
    ClopenSet u = parse_or(c, s);
    c.expect(')', "after the grouped set expression");
    return u;
  }
  c.skip_ws();
  throw SyntaxError(c.pos, "expected a set expression");
}

ClopenSet parse_not(Cursor& c, const ShiftPtr& s) {
  if (c.consume("!")) return set_complement(parse_not(c, s));
  return parse_set_primary(c, s);
}

ClopenSet parse_and(Cursor& c, const ShiftPtr& s) {
  ClopenSet u = parse_not(c, s);
  while (c.consume("&")) u = set_intersect(u, parse_not(c, s));
  return u;
}

ClopenSet parse_or(Cursor& c, const ShiftPtr& s) {
  ClopenSet u = parse_and(c, s);
  while (c.consume("|")) u = set_union(u, parse_and(c, s));
  return u;
}

AlgebraElement parse_sum(Cursor& c, const ShiftPtr& s, const CoefficientRing& ring);

Scalar parse_rational(Cursor& c, const CoefficientRing& ring) {
  c.skip_ws();
  std::size_t start = c.pos;
  std::size_t i = c.pos;
  if (i < c.src.size() && c.src[i] == '-') ++i;
  std::size_t num_start = i;
  while (i < c.src.size() && std::isdigit(static_cast<unsigned char>(c.src[i]))) ++i;
  if (i == num_start) throw SyntaxError(start, "expected a number");
  std::size_t num_end = i;
  long long den = 1;
  if (i < c.src.size() && c.src[i] == '/') {
    std::size_t den_start = ++i;
    while (i < c.src.size() && std::isdigit(static_cast<unsigned char>(c.src[i]))) ++i;
    if (i == den_start) throw SyntaxError(den_start, "expected a denominator");
    try {
      den = std::stoll(c.src.substr(den_start, i - den_start));
    } catch (const std::out_of_range&) {
      throw SyntaxError(den_start, "denominator out of range");
    }
  }
  long long num = 0;
  try {
    num = std::stoll(c.src.substr(start, num_end - start));
  } catch (const std::out_of_range&) {
    throw SyntaxError(start, "number out of range");
  }
  c.pos = i;
  return ring.make(num, den);
}

AlgebraElement parse_factor(Cursor& c, const ShiftPtr& s, const CoefficientRing& ring) {
  c.skip_ws();
  if (c.consume("st(")) {
    Word w = delim_word(c, s);
    c.expect(')', "after st(...");
    return word_s_star(s, ring, w);
  }
  if (c.consume("s(")) {
    Word w = delim_word(c, s);
    c.expect(')', "after s(...");
    return word_s(s, ring, w);
  }
  if (c.consume("pi(")) {
    auto [text, at] = c.until_delim();
    c.expect(')', "after pi(...");
    return pi_element(s, ring, parse_group(s->alphabet(), text, at));
  }
  if (c.consume("p(")) {
    ClopenSet u = parse_or(c, s);
    c.expect(')', "after p(...");
    return gen_p(ring, u);
  }
  if (c.consume("(")) {
    AlgebraElement x = parse_sum(c, s, ring);
    c.expect(')', "after the grouped expression");
    return x;
  }
  c.skip_ws();
  if (c.pos < c.src.size() &&
      (std::isdigit(static_cast<unsigned char>(c.src[c.pos])) ||
       (c.src[c.pos] == '-' && c.pos + 1 < c.src.size() &&
        std::isdigit(static_cast<unsigned char>(c.src[c.pos + 1]))))) {
    Scalar sc = parse_rational(c, ring);
    return unit_element(s, ring).scaled(sc);
  }
  throw SyntaxError(c.pos, "expected a factor");
}

AlgebraElement parse_product(Cursor& c, const ShiftPtr& s, const CoefficientRing& ring) {
  AlgebraElement x = parse_factor(c, s, ring);
  while (c.consume("*")) x = x * parse_factor(c, s, ring);
  return x;
}

AlgebraElement parse_sum(Cursor& c, const ShiftPtr& s, const CoefficientRing& ring) {
  AlgebraElement x = parse_product(c, s, ring);
  while (true) {
    if (c.consume("+"))
      x = x + parse_product(c, s, ring);
    else if (c.consume("-"))
      x = x - parse_product(c, s, ring);
    else
      return x;
  }
}

}  // namespace

ClopenSet parse_set_expr(const ShiftPtr& s, const std::string& src) {
  Cursor c{src};
  ClopenSet u = parse_or(c, s);
  if (!c.at_end()) throw SyntaxError(c.pos, "unexpected trailing input");
  return u;
}

AlgebraElement parse_algebra_expr(const ShiftPtr& s, const CoefficientRing& ring,
                                  const std::string& src) {
  Cursor c{src};
  AlgebraElement x = parse_sum(c, s, ring);
  if (!c.at_end()) throw SyntaxError(c.pos, "unexpected trailing input");
  return x;
}

std::string set_to_string(const ClopenSet& u) {
  if (u.is_empty()) return "0";
  if (u.level() == 0) return "X";
  const Alphabet& alph = u.shift()->alphabet();
  std::string out;
  for (std::size_t i = 0; i < u.words().size(); ++i) {
    if (i) out += "|";
    out += "Z(" + word_to_string(alph, u.words()[i]) + ")";
  }
  return out;
}

std::string to_expression_string(const AlgebraElement& x) {
  if (x.is_zero()) return "0";
  const Alphabet& alph = x.shift()->alphabet();
  std::string out;
  bool first = true;
  for (const auto& [g, f] : x.terms()) {
    for (const auto& [coeff, set] : f.parts()) {
      if (!first) out += " + ";
      first = false;
      std::string piece = x.ring().to_string(coeff) + "*p(" + set_to_string(set) + ")";
      if (set.level() == 0 && !g.is_identity())
        piece = x.ring().to_string(coeff) + "*pi(" + group_to_string(alph, g) + ")";
      else if (!g.is_identity())
        piece += "*pi(" + group_to_string(alph, g) + ")";
      out += piece;
    }
  }
  return out;
}

std::string to_display_string(const AlgebraElement& x) {
  if (x.is_zero()) return "0";
  const Alphabet& alph = x.shift()->alphabet();
  std::string out;
  bool first = true;
  for (const auto& [g, f] : x.terms()) {
    for (const auto& [coeff, set] : f.parts()) {
      if (!first) out += " + ";
      first = false;
      out += x.ring().to_string(coeff) + "*1_{" + set_to_string(set) + "} d_{" +
             group_to_string(alph, g) + "}";
    }
  }
  return out;
}

}  // namespace subshift
