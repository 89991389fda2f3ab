#pragma once

#include <string>
#include <string_view>

#include "termdepth/error.hpp"
#include "termdepth/hypersubstitution.hpp"
#include "termdepth/signature.hpp"
#include "termdepth/term.hpp"

// Text formats. Whitespace between tokens is ignored; `#` starts a comment
// that runs to the end of the line in signature and hypersubstitution files.
//
//   term       := variable | symbol "(" term ("," term)* ")"
//   variable   := "x" [1-9] [0-9]*
//   symbol     := letter (letter | digit | "_")*   (not of the form x<digits>)
//   signature  := one `symbol "/" arity` per line
//   hyp        := one `symbol "->" term` per line
//
// All parsers throw ParseError with a byte span into the input.

namespace termdepth {

Signature parse_signature(std::string_view text);
Term parse_term(std::string_view text, const Signature& sig);
Hypersubstitution parse_hyp(std::string_view text, const Signature& sig);

/// Canonical form: no whitespace, comma-separated arguments.
std::string render_term(const Term& t);
std::string render_signature(const Signature& sig);
/// One `symbol -> term` line per symbol, in declaration order.
std::string render_hyp(const Hypersubstitution& sigma);

}  // namespace termdepth
