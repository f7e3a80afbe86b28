/* text.hpp -- literal syntax for words, points and group elements.
 *
 * Words are symbols juxtaposed (greedy longest match); the bare token "w"
 * denotes the empty word unless the alphabet claims it.  A point literal is
 * "u|v" for u v v v ...  Group literals juxtapose symbols with ' marking an
 * inverse, and a bare "e" is the identity.  Multi-character symbols are
 * rendered dot-separated.
 */
#pragma once

#include <string>

#include "subshift/free_group.hpp"
#include "subshift/shift.hpp"

namespace subshift {

std::string word_to_string(const Alphabet& alph, const Word& w);
Word parse_word(const Alphabet& alph, const std::string& text, std::size_t offset_base = 0);

std::string point_to_string(const Alphabet& alph, const EvPeriodicPoint& p);
EvPeriodicPoint parse_point(const Alphabet& alph, const std::string& text);

std::string group_to_string(const Alphabet& alph, const FreeGroupElement& g);
FreeGroupElement parse_group(const Alphabet& alph, const std::string& text,
                             std::size_t offset_base = 0);

}  // namespace subshift
