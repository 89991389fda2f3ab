#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "termdepth/term.hpp"

namespace termdepth {

/// Depth of a term together with its depth along each variable.
struct DepthReport {
  std::size_t depth = 0;
  /// Entries for every l in 1..n; zero for variables not in `vars`.
  std::map<VarIndex, std::size_t> per_variable;
  std::set<VarIndex> vars;

  friend bool operator==(const DepthReport&, const DepthReport&) = default;
};

/// Least n such that t is an n-ary term (its largest variable index, >= 1).
VarIndex arity_bound(const Term& t) noexcept;

std::set<VarIndex> vars(const Term& t);

/// Tree height: 0 for a variable, 1 + max child depth otherwise.
std::size_t depth(const Term& t) noexcept;

/// Height measured only along paths that end in an occurrence of x_l.
/// Zero when t is a variable or x_l does not occur in t.
std::size_t depth_wrt(const Term& t, VarIndex l);

/// Throws TermError when n < arity_bound(t).
DepthReport depth_report(const Term& t, VarIndex n);

/// Variable indices at the leaves, left to right.
std::vector<VarIndex> yield_word(const Term& t);

/// Number of leaf positions (variable occurrences, with multiplicity).
/// Saturates at UINT64_MAX for heavily shared terms.
std::uint64_t length(const Term& t);

/// Number of positions in the tree expansion of t, saturating.
std::uint64_t node_count(const Term& t);

}  // namespace termdepth
