#pragma once

#include <stdexcept>
#include <string>

namespace subshift {

enum class Errc {
  malformed_spec,
  empty_shift,
  shift_mismatch,
  point_not_in_shift,
  word_not_in_language,
  not_in_domain,
  non_simple_element,
  unknown_symbol,
  ring_mismatch,
  ring_not_field,
  internal_invariant,
  class_explosion,
  io_error,
  syntax_error,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::malformed_spec: return "MalformedSpec";
    case Errc::empty_shift: return "EmptyShift";
    case Errc::shift_mismatch: return "ShiftMismatch";
    case Errc::point_not_in_shift: return "PointNotInShift";
    case Errc::word_not_in_language: return "WordNotInLanguage";
    case Errc::not_in_domain: return "NotInDomain";
    case Errc::non_simple_element: return "NonSimpleElement";
    case Errc::unknown_symbol: return "UnknownSymbol";
    case Errc::ring_mismatch: return "RingMismatch";
    case Errc::ring_not_field: return "RingNotField";
    case Errc::internal_invariant: return "InternalInvariantViolation";
    case Errc::class_explosion: return "ClassExplosion";
    case Errc::io_error: return "IoError";
    case Errc::syntax_error: return "SyntaxError";
  }
  return "UnknownError";
}

/// Library error carrying a stable machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

/// Parse error with a byte offset into the source text.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, const std::string& what)
      : Error(Errc::syntax_error, what), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

[[noreturn]] inline void fail(Errc c, const std::string& msg) { throw Error(c, msg); }

}  // namespace subshift
