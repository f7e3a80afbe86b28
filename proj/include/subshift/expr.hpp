/* expr.hpp -- set and algebra expression parsing and printing.
 *
 * Set grammar:     setexpr := C(w,w) | Z(w) | F(w) | X | 0 | setexpr & setexpr
 *                             | setexpr '|' setexpr | ! setexpr | ( setexpr )
 *                  with precedence ! > & > |.
 * Algebra grammar: expr := term (('+'|'-') term)*
 *                  term := factor ('*' factor)*
 *                  factor := rational | s(word) | st(word) | p(setexpr)
 *                            | pi(group) | 1 | ( expr )
 * Multiplication is always explicit; a rational literal may carry a sign and
 * a denominator, so every canonical rendering re-parses to an equal value.
 */
#pragma once

#include <string>

#include "subshift/algebra.hpp"
#include "subshift/clopen.hpp"

namespace subshift {

ClopenSet parse_set_expr(const ShiftPtr& s, const std::string& src);
AlgebraElement parse_algebra_expr(const ShiftPtr& s, const CoefficientRing& ring,
                                  const std::string& src);

/// Canonical, re-parseable renderings.
std::string set_to_string(const ClopenSet& u);
std::string to_expression_string(const AlgebraElement& x);

/// Human-oriented rendering "c*1_{set} d_g + ...".
std::string to_display_string(const AlgebraElement& x);

}  // namespace subshift
