/* json_out.hpp -- stable JSON renderings of library values.
 *
 * Key order is fixed (ordered_json) so identical inputs serialize to
 * identical bytes; callers strip or ignore timing fields when comparing.
 */
#pragma once

#include "json.hpp"
#include "subshift/algebra.hpp"
#include "subshift/checks.hpp"
#include "subshift/clopen.hpp"
#include "subshift/simplicity.hpp"

namespace subshift {

using Json = nlohmann::ordered_json;

Json clopen_json(const ClopenSet& u);
Json element_json(const AlgebraElement& x);
Json verdict_json(const Verdict& v, const Alphabet& alph);
Json check_report_json(const CheckReport& r);

}  // namespace subshift
