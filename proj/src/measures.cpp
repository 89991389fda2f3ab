#include "termdepth/measures.hpp"

#include <algorithm>
#include <limits>
#include <unordered_set>

#include "termdepth/error.hpp"
#include "termdepth/traverse.hpp"

namespace termdepth {

namespace {

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) noexcept {
  return a > std::numeric_limits<std::uint64_t>::max() - b ? std::numeric_limits<std::uint64_t>::max()
                                                           : a + b;
}

constexpr std::int64_t kAbsent = -1;

}  // namespace

VarIndex arity_bound(const Term& t) noexcept { return t.max_variable(); }

std::set<VarIndex> vars(const Term& t) {
  std::set<VarIndex> out;
  std::unordered_set<const void*> seen;
  std::vector<const Term*> stack{&t};
  while (!stack.empty()) {
    const Term* node = stack.back();
    stack.pop_back();
    if (!seen.insert(node->id()).second) continue;
    if (node->is_variable()) {
      out.insert(node->index());
      continue;
    }
    for (const Term& a : node->args()) stack.push_back(&a);
  }
  return out;
}

std::size_t depth(const Term& t) noexcept { return t.depth(); }

std::size_t depth_wrt(const Term& t, VarIndex l) {
  if (t.is_variable()) return 0;
  // kAbsent marks subterms without an occurrence of x_l.
  auto value = detail::fold<std::int64_t>(
      t, [l](const Term& v) { return v.index() == l ? std::int64_t{0} : kAbsent; },
      [](const Term&, const std::vector<std::int64_t>& children) {
        std::int64_t best = kAbsent;
        for (auto c : children) best = std::max(best, c);
        return best == kAbsent ? kAbsent : best + 1;
      });
  return value == kAbsent ? 0 : static_cast<std::size_t>(value);
}

DepthReport depth_report(const Term& t, VarIndex n) {
  if (n < arity_bound(t))
    throw TermError("term uses x" + std::to_string(arity_bound(t)) + " and is not " +
                    std::to_string(n) + "-ary");
  DepthReport report;
  report.depth = depth(t);
  report.vars = vars(t);
  for (VarIndex l = 1; l <= n; ++l) report.per_variable[l] = 0;
  for (VarIndex l : report.vars) report.per_variable[l] = depth_wrt(t, l);
  return report;
}

std::vector<VarIndex> yield_word(const Term& t) {
  std::vector<VarIndex> word;
  detail::preorder(t, [&word](const Term& node) {
    if (node.is_variable()) word.push_back(node.index());
  });
  return word;
}

std::uint64_t length(const Term& t) {
  return detail::fold<std::uint64_t>(
      t, [](const Term&) { return std::uint64_t{1}; },
      [](const Term&, const std::vector<std::uint64_t>& children) {
        std::uint64_t sum = 0;
        for (auto c : children) sum = saturating_add(sum, c);
        return sum;
      });
}

std::uint64_t node_count(const Term& t) {
  return detail::fold<std::uint64_t>(
      t, [](const Term&) { return std::uint64_t{1}; },
      [](const Term&, const std::vector<std::uint64_t>& children) {
        std::uint64_t sum = 1;
        for (auto c : children) sum = saturating_add(sum, c);
        return sum;
      });
}

}  // namespace termdepth
