#pragma once

#include <cstddef>
#include <vector>

#include "termdepth/hypersubstitution.hpp"
#include "termdepth/term.hpp"

namespace termdepth {

/// Chain of subterms from the i-th leaf (in yield order, 1-based) up to the
/// root. chain[0] is the leaf, chain.back() is the whole term, and
/// positions[k-1] is the argument place of chain[k-1] inside chain[k].
struct OccurrencePath {
  std::size_t occurrence_index = 0;
  std::vector<Term> chain;
  std::vector<std::size_t> positions;

  std::size_t beta() const noexcept { return chain.size() - 1; }
};

/// Per-step contributions along one occurrence path. b_values[0] is always 0;
/// b_values[k] = depth_wrt(sigma(f), a_k) for the symbol f of chain[k].
struct BTrace {
  std::size_t occurrence_index = 0;
  std::vector<std::size_t> b_values;
  std::size_t b_sum = 0;
  /// The topmost step (at the root) contributes a nonzero amount.
  bool top_nonzero = false;
  /// At every step the occurrence's argument variable x_{a_k} occurs in
  /// sigma(f), i.e. the occurrence survives into apply_hyp(sigma, t).
  bool retained = true;
};

/// depth_wrt(sigma(f), a) and whether x_a occurs in sigma(f), tabulated once
/// per (symbol, argument place).
class DepthTable {
 public:
  struct Entry {
    std::size_t depth = 0;
    bool present = false;
  };

  explicit DepthTable(const Hypersubstitution& sigma);

  /// `position` is 1-based. Throws TermError for an unknown symbol.
  const Entry& at(std::string_view symbol, std::size_t position) const;

 private:
  Signature sig_;
  std::vector<std::vector<Entry>> rows_;
};

/// Throws TermError unless 1 <= i <= length(t).
OccurrencePath occurrence_path(const Term& t, std::size_t i);

/// Number of applications between the i-th leaf and the root.
std::size_t beta(const Term& t, std::size_t i);

BTrace b_trace(const Hypersubstitution& sigma, const Term& t, std::size_t i);

/// Largest b_sum over occurrences whose top step is nonzero, or 0.
std::size_t b_of(const Hypersubstitution& sigma, const Term& t);
std::size_t b_of(const DepthTable& table, const Term& t);

/// Largest b_sum over occurrences that are retained at every step. Unlike
/// b_of this equals depth(apply_hyp(sigma, t)) for projections and
/// variable-deleting images as well.
std::size_t b_of_retained(const Hypersubstitution& sigma, const Term& t);
std::size_t b_of_retained(const DepthTable& table, const Term& t);

/// Closed-form prediction of depth(apply_hyp(sigma, t)); returns b_of.
std::size_t predict_depth_hyp(const Hypersubstitution& sigma, const Term& t);

}  // namespace termdepth
