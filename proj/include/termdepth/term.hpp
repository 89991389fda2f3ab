#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace termdepth {

using VarIndex = std::uint32_t;

class Term;

namespace detail {

struct TermNode {
  VarIndex index = 0;  // 0 marks an application
  std::string symbol;
  std::vector<Term> args;
  std::size_t depth = 0;
  VarIndex max_variable = 0;

  TermNode() = default;
  TermNode(const TermNode&) = delete;
  TermNode& operator=(const TermNode&) = delete;
  // Tears down uniquely owned subtrees iteratively so that very deep terms
  // do not exhaust the call stack.
  ~TermNode();
};

}  // namespace detail

/// Immutable term value: a variable x_i (i >= 1) or a symbol applied to a
/// nonempty argument list. Copies share structure; equality is structural.
///
/// Depth and the largest variable index are computed once at construction.
class Term {
 public:
  /// Throws TermError for index 0.
  static Term variable(VarIndex index);
  /// Throws TermError for an empty argument list or an empty symbol name.
  static Term apply(std::string symbol, std::vector<Term> args);

  bool is_variable() const noexcept { return node_->index != 0; }
  bool is_application() const noexcept { return node_->index == 0; }

  VarIndex index() const noexcept { return node_->index; }
  const std::string& symbol() const noexcept { return node_->symbol; }
  std::span<const Term> args() const noexcept { return node_->args; }
  std::size_t arity() const noexcept { return node_->args.size(); }

  std::size_t depth() const noexcept { return node_->depth; }
  /// Largest variable index occurring in the term.
  VarIndex max_variable() const noexcept { return node_->max_variable; }

  /// Node identity; equal ids imply equal terms (shared structure).
  const void* id() const noexcept { return node_.get(); }

  friend bool operator==(const Term& a, const Term& b);

 private:
  friend struct detail::TermNode;
  explicit Term(std::shared_ptr<detail::TermNode> node) : node_(std::move(node)) {}

  std::shared_ptr<detail::TermNode> node_;
};

}  // namespace termdepth
