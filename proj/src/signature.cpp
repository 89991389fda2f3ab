#include "termdepth/signature.hpp"

#include <algorithm>

#include "termdepth/error.hpp"
#include "termdepth/term.hpp"
#include "termdepth/traverse.hpp"

namespace termdepth {

namespace {

bool is_ascii_letter(char c) noexcept { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
bool is_ascii_digit(char c) noexcept { return c >= '0' && c <= '9'; }

}  // namespace

bool is_variable_like(std::string_view name) noexcept {
  if (name.size() < 2 || name.front() != 'x') return false;
  return std::all_of(name.begin() + 1, name.end(), is_ascii_digit);
}

bool is_identifier(std::string_view name) noexcept {
  if (name.empty() || !is_ascii_letter(name.front())) return false;
  return std::all_of(name.begin() + 1, name.end(), [](char c) {
    return is_ascii_letter(c) || is_ascii_digit(c) || c == '_';
  });
}

Signature::Signature(std::vector<SymbolDecl> symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty()) throw TermError("signature has no operation symbols");
  for (std::size_t k = 0; k < symbols_.size(); ++k) {
    const auto& decl = symbols_[k];
    if (!is_identifier(decl.name)) throw TermError("invalid symbol name '" + decl.name + "'");
    if (is_variable_like(decl.name))
      throw TermError("symbol name '" + decl.name + "' is reserved for variables");
    if (decl.arity < 1) throw TermError("symbol '" + decl.name + "' must have arity >= 1");
    if (!index_.emplace(decl.name, k).second)
      throw TermError("duplicate symbol '" + decl.name + "'");
  }
}

std::optional<std::size_t> Signature::index_of(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> Signature::arity(std::string_view name) const {
  if (auto k = index_of(name)) return symbols_[*k].arity;
  return std::nullopt;
}

std::size_t Signature::arity_of(std::string_view name) const {
  if (auto a = arity(name)) return *a;
  throw TermError("unknown symbol '" + std::string(name) + "'");
}

std::size_t Signature::max_arity() const noexcept {
  std::size_t best = 0;
  for (const auto& d : symbols_) best = std::max(best, d.arity);
  return best;
}

std::size_t Signature::min_arity() const noexcept {
  std::size_t best = symbols_.front().arity;
  for (const auto& d : symbols_) best = std::min(best, d.arity);
  return best;
}

void check_well_formed(const Term& t, const Signature& sig) {
  detail::fold<bool>(
      t, [](const Term&) { return true; },
      [&](const Term& node, const std::vector<bool>&) {
        auto arity = sig.arity(node.symbol());
        if (!arity) throw TermError("unknown symbol '" + node.symbol() + "'");
        if (*arity != node.arity())
          throw TermError("symbol '" + node.symbol() + "' expects " + std::to_string(*arity) +
                          " arguments, got " + std::to_string(node.arity()));
        return true;
      });
}

}  // namespace termdepth
