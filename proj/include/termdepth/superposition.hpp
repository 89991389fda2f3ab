#pragma once

#include <cstddef>
#include <span>

#include "termdepth/signature.hpp"
#include "termdepth/term.hpp"

namespace termdepth {

/// Substitutes ts[i-1] for every occurrence of x_i in s.
///
/// Throws TermError if ts.size() != n or s is not n-ary
/// (arity_bound(s) > n). Shared subterms of s stay shared in the result.
Term superpose(const Term& s, std::span<const Term> ts, std::size_t n);

/// A full term is an application whose arguments are either a permutation
/// of x_1..x_k (k the symbol's arity) or are all full terms themselves.
/// Variables are never full.
bool is_full(const Term& t);

/// max depth(ts) + depth(s), the composition depth for a full outer term
/// over a signature where every symbol has the same arity.
///
/// Throws TermError for a mixed-arity signature, a non-full s, or
/// ts.size() different from the common arity.
std::size_t predict_depth_full(const Signature& sig, const Term& s,
                               std::span<const Term> ts);

/// max over x_j in vars(s) of depth_wrt(s, j) + depth(ts[j-1]).
/// Same preconditions as superpose.
std::size_t predict_depth_general(const Term& s, std::span<const Term> ts,
                                  std::size_t n);

}  // namespace termdepth
