#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace termdepth {

struct SymbolDecl {
  std::string name;
  std::size_t arity = 0;

  friend bool operator==(const SymbolDecl&, const SymbolDecl&) = default;
};

/// True for the reserved lexical form `x` followed by one or more digits.
bool is_variable_like(std::string_view name) noexcept;

/// True for `letter (letter | digit | '_')*`.
bool is_identifier(std::string_view name) noexcept;

/// The type of a term algebra: operation symbols with arities >= 1, kept in
/// declaration order.
class Signature {
 public:
  /// Throws TermError on an empty list, a duplicate or reserved name, or an
  /// arity of zero.
  explicit Signature(std::vector<SymbolDecl> symbols);

  const std::vector<SymbolDecl>& symbols() const noexcept { return symbols_; }
  std::size_t size() const noexcept { return symbols_.size(); }

  std::optional<std::size_t> index_of(std::string_view name) const;
  std::optional<std::size_t> arity(std::string_view name) const;
  /// Throws TermError for an unknown symbol.
  std::size_t arity_of(std::string_view name) const;

  std::size_t max_arity() const noexcept;
  std::size_t min_arity() const noexcept;
  bool single_arity() const noexcept { return min_arity() == max_arity(); }

  friend bool operator==(const Signature& a, const Signature& b) {
    return a.symbols_ == b.symbols_;
  }

 private:
  std::vector<SymbolDecl> symbols_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

class Term;

/// Throws TermError unless every application in `t` uses a symbol of `sig`
/// with exactly its declared number of arguments.
void check_well_formed(const Term& t, const Signature& sig);

}  // namespace termdepth
