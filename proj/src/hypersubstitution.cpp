#include "termdepth/hypersubstitution.hpp"

#include <algorithm>

#include "termdepth/error.hpp"
#include "termdepth/measures.hpp"
#include "termdepth/superposition.hpp"
#include "termdepth/traverse.hpp"

namespace termdepth {

Hypersubstitution::Hypersubstitution(Signature sig, std::vector<Term> images)
    : sig_(std::move(sig)), images_(std::move(images)) {
  if (images_.size() != sig_.size())
    throw TermError("hypersubstitution assigns " + std::to_string(images_.size()) +
                    " images for " + std::to_string(sig_.size()) + " symbols");
  for (std::size_t k = 0; k < images_.size(); ++k) {
    const auto& decl = sig_.symbols()[k];
    check_well_formed(images_[k], sig_);
    if (arity_bound(images_[k]) > decl.arity)
      throw TermError("image of '" + decl.name + "' uses x" +
                      std::to_string(arity_bound(images_[k])) + " but the symbol has arity " +
                      std::to_string(decl.arity));
  }
}

const Term& Hypersubstitution::image(std::string_view symbol) const {
  auto k = sig_.index_of(symbol);
  if (!k) throw TermError("unknown symbol '" + std::string(symbol) + "'");
  return images_[*k];
}

Hypersubstitution identity_hyp(const Signature& sig) {
  std::vector<Term> images;
  images.reserve(sig.size());
  for (const auto& decl : sig.symbols()) {
    std::vector<Term> args;
    for (std::size_t j = 1; j <= decl.arity; ++j) args.push_back(Term::variable(static_cast<VarIndex>(j)));
    images.push_back(Term::apply(decl.name, std::move(args)));
  }
  return Hypersubstitution(sig, std::move(images));
}

Term apply_hyp(const Hypersubstitution& sigma, const Term& t) {
  return detail::fold<Term>(
      t, [](const Term& v) { return v; },
      [&sigma](const Term& node, const std::vector<Term>& children) {
        return superpose(sigma.image(node.symbol()), children, children.size());
      });
}

Hypersubstitution compose_hyp(const Hypersubstitution& s1, const Hypersubstitution& s2) {
  if (!(s1.signature() == s2.signature()))
    throw TermError("cannot compose hypersubstitutions over different signatures");
  std::vector<Term> images;
  images.reserve(s2.images().size());
  for (const Term& img : s2.images()) images.push_back(apply_hyp(s1, img));
  return Hypersubstitution(s1.signature(), std::move(images));
}

namespace {

bool uses_exactly_first(const Term& t, std::size_t n) {
  auto vs = vars(t);
  return vs.size() == n && (n == 0 || *vs.rbegin() == n);
}

}  // namespace

bool is_full_hyp(const Hypersubstitution& sigma) {
  const auto& decls = sigma.signature().symbols();
  for (std::size_t k = 0; k < decls.size(); ++k) {
    const Term& img = sigma.image(k);
    if (!is_full(img) || !uses_exactly_first(img, decls[k].arity)) return false;
  }
  return true;
}

bool is_regular_hyp(const Hypersubstitution& sigma) {
  const auto& decls = sigma.signature().symbols();
  for (std::size_t k = 0; k < decls.size(); ++k) {
    if (!uses_exactly_first(sigma.image(k), decls[k].arity)) return false;
  }
  return true;
}

std::size_t hyp_depth(const Hypersubstitution& sigma) {
  std::size_t best = 0;
  for (const Term& img : sigma.images()) best = std::max(best, depth(img));
  return best;
}

std::size_t predict_depth_full_hyp(const Hypersubstitution& sigma, const Term& t) {
  if (sigma.signature().size() != 1)
    throw TermError("the multiplicative depth law needs a single-symbol signature");
  if (!is_full_hyp(sigma)) throw TermError("hypersubstitution is not full");
  if (!is_full(t)) throw TermError("term is not full");
  return depth(sigma.image(std::size_t{0})) * depth(t);
}

}  // namespace termdepth
