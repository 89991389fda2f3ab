#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "termdepth/signature.hpp"
#include "termdepth/term.hpp"

namespace termdepth {

/// Assignment of an n-ary term to every n-ary symbol of a signature.
/// Images may be bare variables (projections).
class Hypersubstitution {
 public:
  /// `images[k]` is the image of `sig.symbols()[k]`. Throws TermError unless
  /// the assignment is total, every image is well formed over `sig`, and
  /// arity_bound(image) <= arity of its symbol.
  Hypersubstitution(Signature sig, std::vector<Term> images);

  const Signature& signature() const noexcept { return sig_; }
  const std::vector<Term>& images() const noexcept { return images_; }
  const Term& image(std::size_t symbol_index) const { return images_.at(symbol_index); }
  /// Throws TermError for an unknown symbol.
  const Term& image(std::string_view symbol) const;

  friend bool operator==(const Hypersubstitution&, const Hypersubstitution&) = default;

 private:
  Signature sig_;
  std::vector<Term> images_;
};

/// f -> f(x_1, ..., x_n) for every symbol.
Hypersubstitution identity_hyp(const Signature& sig);

/// Extension of the hypersubstitution to all terms: variables are fixed,
/// f(t_1..t_n) becomes sigma(f) with x_j replaced by the image of t_j.
/// `t` must be well formed over sigma's signature (not re-checked here).
Term apply_hyp(const Hypersubstitution& sigma, const Term& t);

/// (s1 o s2)(f) = apply_hyp(s1, s2(f)). Throws TermError when the
/// signatures differ.
Hypersubstitution compose_hyp(const Hypersubstitution& s1, const Hypersubstitution& s2);

/// Every image is a full term whose variables are exactly x_1..x_n.
bool is_full_hyp(const Hypersubstitution& sigma);

/// Every image uses exactly the variables x_1..x_n.
bool is_regular_hyp(const Hypersubstitution& sigma);

/// Largest image depth.
std::size_t hyp_depth(const Hypersubstitution& sigma);

/// depth(sigma(f)) * depth(t) for a single-symbol signature.
/// Throws TermError unless the signature has one symbol, sigma is full and
/// t is full.
std::size_t predict_depth_full_hyp(const Hypersubstitution& sigma, const Term& t);

}  // namespace termdepth
