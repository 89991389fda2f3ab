#include "termdepth/textio.hpp"

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "termdepth/measures.hpp"

namespace termdepth {

namespace {

constexpr std::size_t kMaxArity = 1u << 16;

bool is_space(char c) noexcept {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}
bool is_letter(char c) noexcept { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
bool is_digit(char c) noexcept { return c >= '0' && c <= '9'; }

/// Cursor over text[pos, end) that reports positions in the whole input.
struct Cursor {
  std::string_view text;
  std::size_t pos;
  std::size_t end;

  void skip_space() {
    while (pos < end && is_space(text[pos])) ++pos;
  }
  bool at_end() const { return pos >= end; }
  char peek() const { return text[pos]; }

  [[noreturn]] void fail(const std::string& message, std::size_t begin, std::size_t stop) const {
    throw ParseError(message, SourceSpan{begin, stop});
  }
  [[noreturn]] void fail_here(const std::string& message) const {
    fail(message, pos, pos < end ? pos + 1 : pos);
  }

  /// letter (letter | digit | '_')*; returns [begin, end) or nullopt.
  std::optional<SourceSpan> identifier() {
    if (at_end() || !is_letter(peek())) return std::nullopt;
    const std::size_t begin = pos;
    while (pos < end && (is_letter(text[pos]) || is_digit(text[pos]) || text[pos] == '_')) ++pos;
    return SourceSpan{begin, pos};
  }

  std::optional<SourceSpan> digits() {
    if (at_end() || !is_digit(peek())) return std::nullopt;
    const std::size_t begin = pos;
    while (pos < end && is_digit(text[pos])) ++pos;
    return SourceSpan{begin, pos};
  }

  std::string_view slice(SourceSpan s) const { return text.substr(s.begin, s.end - s.begin); }
};

std::optional<std::uint64_t> to_number(std::string_view digits, std::uint64_t limit) {
  std::uint64_t value = 0;
  for (char c : digits) {
    const auto d = static_cast<std::uint64_t>(c - '0');
    if (value > (limit - d) / 10) return std::nullopt;
    value = value * 10 + d;
  }
  return value;
}

struct Frame {
  std::string symbol;
  std::size_t arity;
  std::size_t begin;
  std::vector<Term> args;
};

/// Parses one term starting at cur.pos; leaves cur.pos just after it.
Term parse_one(Cursor& cur, const Signature& sig) {
  std::vector<Frame> stack;
  while (true) {
    cur.skip_space();
    auto word = cur.identifier();
    if (!word) cur.fail_here("expected a variable or an operation symbol");
    const std::string_view name = cur.slice(*word);

    std::optional<Term> done;
    if (is_variable_like(name)) {
      if (name[1] == '0') cur.fail("malformed variable '" + std::string(name) + "'", word->begin, word->end);
      auto index = to_number(name.substr(1), std::numeric_limits<VarIndex>::max());
      if (!index) cur.fail("variable index too large", word->begin, word->end);
      done = Term::variable(static_cast<VarIndex>(*index));
    } else {
      auto arity = sig.arity(name);
      if (!arity) cur.fail("unknown symbol '" + std::string(name) + "'", word->begin, word->end);
      cur.skip_space();
      if (cur.at_end() || cur.peek() != '(')
        cur.fail_here("expected '(' after symbol '" + std::string(name) + "'");
      ++cur.pos;
      stack.push_back(Frame{std::string(name), *arity, word->begin, {}});
      continue;
    }

    while (true) {
      if (stack.empty()) return std::move(*done);
      Frame& frame = stack.back();
      frame.args.push_back(std::move(*done));
      cur.skip_space();
      if (!cur.at_end() && cur.peek() == ',') {
        if (frame.args.size() >= frame.arity)
          cur.fail("symbol '" + frame.symbol + "' expects " + std::to_string(frame.arity) +
                       " arguments",
                   frame.begin, cur.pos + 1);
        ++cur.pos;
        break;
      }
      if (!cur.at_end() && cur.peek() == ')') {
        if (frame.args.size() != frame.arity)
          cur.fail("symbol '" + frame.symbol + "' expects " + std::to_string(frame.arity) +
                       " arguments, got " + std::to_string(frame.args.size()),
                   frame.begin, cur.pos + 1);
        ++cur.pos;
        done = Term::apply(std::move(frame.symbol), std::move(frame.args));
        stack.pop_back();
        continue;
      }
      cur.fail_here("expected ',' or ')'");
    }
  }
}

/// Calls `line(begin, end)` for each line with any `#` comment removed.
template <class F>
void for_each_line(std::string_view text, F&& line) {
  std::size_t begin = 0;
  while (begin <= text.size()) {
    std::size_t stop = text.find('\n', begin);
    if (stop == std::string_view::npos) stop = text.size();
    std::size_t content_end = text.find('#', begin);
    if (content_end == std::string_view::npos || content_end > stop) content_end = stop;
    line(begin, content_end);
    if (stop == text.size()) break;
    begin = stop + 1;
  }
}

}  // namespace

Signature parse_signature(std::string_view text) {
  std::vector<SymbolDecl> decls;
  for_each_line(text, [&](std::size_t begin, std::size_t end) {
    Cursor cur{text, begin, end};
    cur.skip_space();
    if (cur.at_end()) return;
    auto word = cur.identifier();
    if (!word) cur.fail_here("expected a symbol name");
    const std::string name(cur.slice(*word));
    if (is_variable_like(name)) cur.fail("symbol name '" + name + "' is reserved for variables", word->begin, word->end);
    for (std::size_t k = 0; k < decls.size(); ++k) {
      if (decls[k].name == name) cur.fail("duplicate symbol '" + name + "'", word->begin, word->end);
    }
    cur.skip_space();
    if (cur.at_end() || cur.peek() != '/') cur.fail_here("expected '/' after symbol name");
    ++cur.pos;
    cur.skip_space();
    auto num = cur.digits();
    if (!num) cur.fail_here("expected an arity");
    auto arity = to_number(cur.slice(*num), kMaxArity);
    if (!arity) cur.fail("arity too large", num->begin, num->end);
    if (*arity < 1) cur.fail("arity must be at least 1", num->begin, num->end);
    cur.skip_space();
    if (!cur.at_end()) cur.fail_here("unexpected input after arity");
    decls.push_back({name, static_cast<std::size_t>(*arity)});
  });
  if (decls.empty()) throw ParseError("signature declares no symbols", SourceSpan{0, text.size()});
  return Signature(std::move(decls));
}

Term parse_term(std::string_view text, const Signature& sig) {
  Cursor cur{text, 0, text.size()};
  Term t = parse_one(cur, sig);
  cur.skip_space();
  if (!cur.at_end()) cur.fail("trailing input after term", cur.pos, cur.end);
  return t;
}

Hypersubstitution parse_hyp(std::string_view text, const Signature& sig) {
  std::vector<std::optional<Term>> images(sig.size());
  for_each_line(text, [&](std::size_t begin, std::size_t end) {
    Cursor cur{text, begin, end};
    cur.skip_space();
    if (cur.at_end()) return;
    auto word = cur.identifier();
    if (!word) cur.fail_here("expected a symbol name");
    const std::string_view name = cur.slice(*word);
    auto k = sig.index_of(name);
    if (!k) cur.fail("unknown symbol '" + std::string(name) + "'", word->begin, word->end);
    if (images[*k]) cur.fail("symbol '" + std::string(name) + "' assigned twice", word->begin, word->end);
    cur.skip_space();
    if (cur.end - cur.pos < 2 || cur.text.substr(cur.pos, 2) != "->") cur.fail_here("expected '->'");
    cur.pos += 2;
    cur.skip_space();
    const std::size_t term_begin = cur.pos;
    Term image = parse_one(cur, sig);
    const std::size_t term_end = cur.pos;
    cur.skip_space();
    if (!cur.at_end()) cur.fail("trailing input after term", cur.pos, cur.end);
    const std::size_t arity = sig.symbols()[*k].arity;
    if (arity_bound(image) > arity)
      cur.fail("image of '" + std::string(name) + "' uses x" + std::to_string(arity_bound(image)) +
                   " but the symbol has arity " + std::to_string(arity),
               term_begin, term_end);
    images[*k] = std::move(image);
  });
  std::vector<Term> total;
  for (std::size_t k = 0; k < images.size(); ++k) {
    if (!images[k])
      throw ParseError("no image for symbol '" + sig.symbols()[k].name + "'",
                       SourceSpan{text.size(), text.size()});
    total.push_back(std::move(*images[k]));
  }
  return Hypersubstitution(sig, std::move(total));
}

std::string render_term(const Term& t) {
  std::string out;
  std::vector<std::pair<const Term*, std::size_t>> stack{{&t, 0}};
  while (!stack.empty()) {
    auto& [node, next] = stack.back();
    if (node->is_variable()) {
      out += 'x';
      out += std::to_string(node->index());
      stack.pop_back();
      continue;
    }
    if (next == 0) {
      out += node->symbol();
      out += '(';
    } else if (next < node->arity()) {
      out += ',';
    } else {
      out += ')';
      stack.pop_back();
      continue;
    }
    const Term* child = &node->args()[next];
    ++next;
    stack.emplace_back(child, 0);
  }
  return out;
}

std::string render_signature(const Signature& sig) {
  std::string out;
  for (const auto& d : sig.symbols()) out += d.name + "/" + std::to_string(d.arity) + "\n";
  return out;
}

std::string render_hyp(const Hypersubstitution& sigma) {
  std::string out;
  const auto& decls = sigma.signature().symbols();
  for (std::size_t k = 0; k < decls.size(); ++k)
    out += decls[k].name + " -> " + render_term(sigma.image(k)) + "\n";
  return out;
}

}  // namespace termdepth
