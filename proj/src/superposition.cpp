#include "termdepth/superposition.hpp"

#include <algorithm>

#include "termdepth/error.hpp"
#include "termdepth/measures.hpp"
#include "termdepth/traverse.hpp"

namespace termdepth {

namespace {

void check_composable(const Term& s, std::span<const Term> ts, std::size_t n) {
  if (ts.size() != n)
    throw TermError("expected " + std::to_string(n) + " argument terms, got " +
                    std::to_string(ts.size()));
  if (arity_bound(s) > n)
    throw TermError("outer term uses x" + std::to_string(arity_bound(s)) + " and is not " +
                    std::to_string(n) + "-ary");
}

}  // namespace

Term superpose(const Term& s, std::span<const Term> ts, std::size_t n) {
  check_composable(s, ts, n);
  return detail::fold<Term>(
      s, [ts](const Term& v) { return ts[v.index() - 1]; },
      [](const Term& node, const std::vector<Term>& children) {
        return Term::apply(node.symbol(), children);
      });
}

bool is_full(const Term& t) {
  return detail::fold<bool>(
      t, [](const Term&) { return false; },
      [](const Term& node, const std::vector<bool>& children_full) {
        auto args = node.args();
        const std::size_t k = args.size();
        // Base clause: the arguments are x_{p(1)}..x_{p(k)} for a permutation p.
        if (std::all_of(args.begin(), args.end(), [](const Term& a) { return a.is_variable(); })) {
          std::vector<bool> seen(k + 1, false);
          for (const Term& a : args) {
            if (a.index() > k || seen[a.index()]) return false;
            seen[a.index()] = true;
          }
          return true;
        }
        return std::all_of(children_full.begin(), children_full.end(), [](bool b) { return b; });
      });
}

std::size_t predict_depth_full(const Signature& sig, const Term& s, std::span<const Term> ts) {
  if (!sig.single_arity())
    throw TermError("the full-term depth formula needs a signature with a single arity");
  if (!is_full(s)) throw TermError("outer term is not full");
  if (ts.size() != sig.max_arity())
    throw TermError("expected " + std::to_string(sig.max_arity()) + " argument terms, got " +
                    std::to_string(ts.size()));
  std::size_t deepest = 0;
  for (const Term& t : ts) deepest = std::max(deepest, depth(t));
  return deepest + depth(s);
}

std::size_t predict_depth_general(const Term& s, std::span<const Term> ts, std::size_t n) {
  check_composable(s, ts, n);
  std::size_t best = 0;
  for (VarIndex j : vars(s)) best = std::max(best, depth_wrt(s, j) + depth(ts[j - 1]));
  return best;
}

}  // namespace termdepth
