#pragma once

#include <unordered_map>
#include <utility>
#include <vector>

#include "termdepth/term.hpp"

namespace termdepth::detail {

/// Bottom-up evaluation over the distinct nodes of `t` with an explicit work
/// stack. Shared subterms are evaluated once. Returns the value of every
/// visited node keyed by Term::id().
///
/// `leaf(const Term&) -> V` handles variables;
/// `app(const Term&, const std::vector<V>&) -> V` receives child values in
/// argument order.
template <class V, class Leaf, class App>
std::unordered_map<const void*, V> fold_all(const Term& t, Leaf&& leaf, App&& app) {
  std::unordered_map<const void*, V> memo;
  std::vector<std::pair<const Term*, bool>> stack;
  stack.emplace_back(&t, false);
  std::vector<V> child_values;
  while (!stack.empty()) {
    auto [node, expanded] = stack.back();
    if (memo.contains(node->id())) {
      stack.pop_back();
      continue;
    }
    if (node->is_variable()) {
      memo.emplace(node->id(), leaf(*node));
      stack.pop_back();
      continue;
    }
    if (!expanded) {
      stack.back().second = true;
      for (const Term& a : node->args()) {
        if (!memo.contains(a.id())) stack.emplace_back(&a, false);
      }
      continue;
    }
    child_values.clear();
    for (const Term& a : node->args()) child_values.push_back(memo.at(a.id()));
    V value = app(*node, child_values);
    memo.emplace(node->id(), std::move(value));
    stack.pop_back();
  }
  return memo;
}

template <class V, class Leaf, class App>
V fold(const Term& t, Leaf&& leaf, App&& app) {
  auto memo = fold_all<V>(t, std::forward<Leaf>(leaf), std::forward<App>(app));
  return std::move(memo.at(t.id()));
}

/// Pre-order walk over every position of `t` (shared subterms are visited
/// once per occurrence). `visit(const Term&)` is called in left-to-right order.
template <class Visit>
void preorder(const Term& t, Visit&& visit) {
  std::vector<const Term*> stack{&t};
  while (!stack.empty()) {
    const Term* node = stack.back();
    stack.pop_back();
    visit(*node);
    auto args = node->args();
    for (auto it = args.rbegin(); it != args.rend(); ++it) stack.push_back(&*it);
  }
}

}  // namespace termdepth::detail
