#include "termdepth/term.hpp"

#include <algorithm>
#include <unordered_set>
#include <utility>

#include "termdepth/error.hpp"

namespace termdepth {

namespace detail {

TermNode::~TermNode() {
  std::vector<std::shared_ptr<TermNode>> pending;
  auto steal = [&pending](std::vector<Term>& children) {
    for (Term& c : children) {
      if (c.node_ && c.node_.use_count() == 1) pending.push_back(std::move(c.node_));
    }
  };
  steal(args);
  while (!pending.empty()) {
    std::shared_ptr<TermNode> node = std::move(pending.back());
    pending.pop_back();
    steal(node->args);
    // `node` now owns no unique children; its destructor returns immediately.
  }
}

}  // namespace detail

Term Term::variable(VarIndex index) {
  if (index == 0) throw TermError("variable indices start at 1");
  auto node = std::make_shared<detail::TermNode>();
  node->index = index;
  node->max_variable = index;
  return Term(std::move(node));
}

Term Term::apply(std::string symbol, std::vector<Term> args) {
  if (symbol.empty()) throw TermError("empty operation symbol");
  if (args.empty()) throw TermError("operation symbol '" + symbol + "' applied to no arguments");
  auto node = std::make_shared<detail::TermNode>();
  std::size_t child_depth = 0;
  VarIndex max_var = 0;
  for (const Term& a : args) {
    child_depth = std::max(child_depth, a.depth());
    max_var = std::max(max_var, a.max_variable());
  }
  node->symbol = std::move(symbol);
  node->args = std::move(args);
  node->depth = child_depth + 1;
  node->max_variable = max_var;
  return Term(std::move(node));
}

bool operator==(const Term& a, const Term& b) {
  // Pairs already expanded. Without this, two separately built DAGs with
  // heavy sharing would be compared in time proportional to their tree size.
  struct PairHash {
    std::size_t operator()(const std::pair<const void*, const void*>& p) const noexcept {
      const auto h = std::hash<const void*>{};
      return h(p.first) * 31 + h(p.second);
    }
  };
  std::unordered_set<std::pair<const void*, const void*>, PairHash> seen;
  std::vector<std::pair<const Term*, const Term*>> stack{{&a, &b}};
  while (!stack.empty()) {
    auto [x, y] = stack.back();
    stack.pop_back();
    if (x->id() == y->id()) continue;
    if (x->is_application() && !seen.insert({x->id(), y->id()}).second) continue;
    if (x->index() != y->index() || x->depth() != y->depth() ||
        x->max_variable() != y->max_variable() || x->arity() != y->arity() ||
        x->symbol() != y->symbol())
      return false;
    for (std::size_t k = 0; k < x->arity(); ++k) stack.emplace_back(&x->args()[k], &y->args()[k]);
  }
  return true;
}

}  // namespace termdepth
