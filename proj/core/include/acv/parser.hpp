#pragma once

#include <stdexcept>
#include <string>

#include "acv/polynomial.hpp"

namespace acv {

struct ParseError : std::runtime_error {
  std::size_t offset; // byte offset into the input
  ParseError(const std::string &what, std::size_t off)
      : std::runtime_error(what + " at byte " + std::to_string(off)),
        offset(off) {}
};

/// Parses the expression grammar
///   poly := term (('+'|'-') term)*
///   term := factor ('*' factor)*
///   factor := base ('^' uint)?
///   base := rational | ident | '(' poly ')'
///   rational := int ('/' uint)?
/// with unary minus at term head and insignificant whitespace. Every
/// identifier must name a ring variable.
Poly<Rat> parse_polynomial(const std::string &text, const Ring &ring);

} // namespace acv
