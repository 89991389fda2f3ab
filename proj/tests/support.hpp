#pragma once

#include <string>

#include "termdepth/textio.hpp"

namespace support {

inline termdepth::Signature sig(const std::string& text) { return termdepth::parse_signature(text); }

inline termdepth::Term term(const std::string& text, const termdepth::Signature& s) {
  return termdepth::parse_term(text, s);
}

inline termdepth::Hypersubstitution hyp(const std::string& text, const termdepth::Signature& s) {
  return termdepth::parse_hyp(text, s);
}

inline std::string str(const termdepth::Term& t) { return termdepth::render_term(t); }

}  // namespace support
