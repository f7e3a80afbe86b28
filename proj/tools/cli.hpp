/* cli.hpp -- command-line front end, factored for testing. */
#pragma once

#include <string>

#include "subshift/ring.hpp"
#include "subshift/shift.hpp"

namespace subshift::cli {

inline constexpr const char* kVersion = "0.1.0";

/// Reads and validates a shift spec file:
///   {"alphabet": ["0","1"], "forbidden": ["11"]}
/// Forbidden words may be strings (parsed greedily) or arrays of symbols.
ShiftSpec parse_spec(const std::string& path);

CoefficientRing parse_eval_ring(const std::string& text);   // Q | Z | Zn:<n>
CoefficientRing parse_field_ring(const std::string& text);  // Q | Fp:<p>

/// Exit code 0 on success, 1 when a checked property fails, 2 on error.
int run(int argc, const char* const* argv);

}  // namespace subshift::cli
