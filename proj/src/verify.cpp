#include "termdepth/verify.hpp"

#include <algorithm>
#include <exception>
#include <limits>
#include <numeric>
#include <sstream>

#include "termdepth/error.hpp"
#include "termdepth/measures.hpp"
#include "termdepth/occurrence_depth.hpp"
#include "termdepth/superposition.hpp"
#include "termdepth/textio.hpp"

#ifdef TERMDEPTH_HAVE_OPENMP
#include <omp.h>
#endif

namespace termdepth {

// --- Probability, Rng, config ----------------------------------------------

Probability Probability::from_parts(std::uint32_t parts) {
  if (parts > kScale) throw TermError("probability above 1");
  Probability p;
  p.parts_ = parts;
  return p;
}

Probability Probability::parse(std::string_view text) {
  auto bad = [&] { return TermError("invalid probability '" + std::string(text) + "'"); };
  if (text.empty()) throw bad();
  std::size_t dot = text.find('.');
  std::string_view whole = text.substr(0, dot);
  std::string_view frac = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
  if (whole.empty() && frac.empty()) throw bad();
  if (dot != std::string_view::npos && frac.empty()) throw bad();
  if (whole.size() > 1 || frac.size() > 9) throw bad();
  auto all_digits = [](std::string_view s) {
    return std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  if (!all_digits(whole) || !all_digits(frac)) throw bad();
  std::uint64_t parts = whole.empty() ? 0 : static_cast<std::uint64_t>(whole[0] - '0') * kScale;
  std::uint64_t scale = kScale / 10;
  for (char c : frac) {
    parts += static_cast<std::uint64_t>(c - '0') * scale;
    scale /= 10;
  }
  if (parts > kScale) throw bad();
  return from_parts(static_cast<std::uint32_t>(parts));
}

std::string Probability::str() const {
  if (parts_ == kScale) return "1";
  if (parts_ == 0) return "0";
  std::string frac = std::to_string(parts_);
  frac.insert(0, 9 - frac.size(), '0');
  while (frac.size() > 1 && frac.back() == '0') frac.pop_back();
  return "0." + frac;
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw TermError("empty range");
  const std::uint64_t threshold = (0 - bound) % bound;
  while (true) {
    const std::uint64_t r = engine_();
    if (r >= threshold) return r % bound;
  }
}

void GenConfig::validate() const {
  if (max_arity < 1) throw TermError("max_arity must be at least 1");
  if (num_symbols < 1) throw TermError("num_symbols must be at least 1");
  if (var_bound < 1) throw TermError("var_bound must be at least 1");
  if (image_depth < 1) throw TermError("image_depth must be at least 1");
}

std::string_view theorem_name(TheoremKind kind) noexcept {
  switch (kind) {
    case TheoremKind::Thm2_3: return "thm2.3";
    case TheoremKind::Thm3_3: return "thm3.3";
    case TheoremKind::Cor4_5: return "cor4.5";
    case TheoremKind::Cor4_6: return "cor4.6";
    case TheoremKind::Thm5_1: return "thm5.1";
    case TheoremKind::Closure2_2: return "lemma2.2";
    case TheoremKind::Closure4_2: return "lemma4.2";
  }
  return "?";
}

std::optional<TheoremKind> parse_theorem_name(std::string_view name) noexcept {
  for (TheoremKind k : kAllTheorems) {
    if (theorem_name(k) == name) return k;
  }
  return std::nullopt;
}

void check_signature_shape(TheoremKind kind, const Signature& sig) {
  switch (kind) {
    case TheoremKind::Thm2_3:
      if (!sig.single_arity())
        throw TermError("thm2.3 needs a signature in which every symbol has the same arity");
      break;
    case TheoremKind::Cor4_5:
    case TheoremKind::Cor4_6:
      if (sig.size() != 1)
        throw TermError(std::string(theorem_name(kind)) + " needs a single-symbol signature");
      break;
    default:
      break;
  }
}

std::uint64_t trial_seed(std::uint64_t seed, TheoremKind kind, std::uint64_t trial) noexcept {
  // splitmix64 finalizer over (seed, kind, trial).
  auto mix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  return mix(mix(mix(seed) ^ static_cast<std::uint64_t>(kind)) ^ trial);
}

// --- generators --------------------------------------------------------------

namespace {

std::vector<VarIndex> first_vars(std::size_t n) {
  std::vector<VarIndex> pool(n);
  std::iota(pool.begin(), pool.end(), VarIndex{1});
  return pool;
}

template <class T>
const T& pick(Rng& rng, const std::vector<T>& items) {
  return items[rng.below(items.size())];
}

Term frontier(const SymbolDecl& decl, Rng& rng) {
  std::vector<Term> args;
  auto perm = first_vars(decl.arity);
  for (std::size_t k = perm.size(); k > 1; --k) std::swap(perm[k - 1], perm[rng.below(k)]);
  for (VarIndex v : perm) args.push_back(Term::variable(v));
  return Term::apply(decl.name, std::move(args));
}

struct OpenFrame {
  std::size_t symbol;
  std::size_t child_budget;
  std::size_t exact_child;  // npos when no child must reach child_budget
  std::vector<Term> args;
};

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

/// Full term with depth <= budget (or exactly budget). Frontier symbols are
/// restricted to arity <= frontier_limit.
Term full_term(const GenConfig& cfg, const Signature& sig, Rng& rng, std::size_t budget,
               bool exact, std::size_t frontier_limit) {
  std::vector<SymbolDecl> frontier_syms;
  for (const auto& d : sig.symbols())
    if (d.arity <= frontier_limit) frontier_syms.push_back(d);
  if (frontier_syms.empty()) throw TermError("no symbol fits the frontier arity limit");
  budget = std::max<std::size_t>(budget, 1);

  std::vector<OpenFrame> stack;
  // Returns a finished term, or pushes a frame and returns nullopt.
  auto open = [&](std::size_t b, bool must_reach) -> std::optional<Term> {
    if (b <= 1 || (!must_reach && rng.chance(cfg.leaf_rate))) return frontier(pick(rng, frontier_syms), rng);
    const std::size_t sym = rng.below(sig.size());
    const std::size_t arity = sig.symbols()[sym].arity;
    stack.push_back({sym, b - 1, must_reach ? rng.below(arity) : kNone, {}});
    return std::nullopt;
  };

  std::optional<Term> root = open(budget, exact);
  if (root) return *root;
  while (true) {
    OpenFrame& top = stack.back();
    const auto& decl = sig.symbols()[top.symbol];
    if (top.args.size() == decl.arity) {
      Term done = Term::apply(decl.name, std::move(top.args));
      stack.pop_back();
      if (stack.empty()) return done;
      stack.back().args.push_back(std::move(done));
      continue;
    }
    const std::size_t slot = top.args.size();
    if (slot > 0 && slot != top.exact_child && rng.chance(cfg.repeat_rate)) {
      Term repeat = top.args.back();
      top.args.push_back(std::move(repeat));
      continue;
    }
    const std::size_t b = top.child_budget;
    const bool must_reach = slot == top.exact_child;
    if (auto t = open(b, must_reach)) stack.back().args.push_back(std::move(*t));
  }
}

Term random_term(const GenConfig& cfg, const Signature& sig, Rng& rng,
                 std::span<const VarIndex> pool, std::size_t budget, bool force_application) {
  if (pool.empty()) throw TermError("empty variable pool");
  std::vector<OpenFrame> stack;
  auto open = [&](std::size_t b, bool force) -> std::optional<Term> {
    if (!force && (b == 0 || rng.chance(cfg.leaf_rate)))
      return Term::variable(pool[rng.below(pool.size())]);
    stack.push_back({rng.below(sig.size()), b == 0 ? 0 : b - 1, kNone, {}});
    return std::nullopt;
  };
  std::optional<Term> root = open(budget, force_application);
  if (root) return *root;
  while (true) {
    OpenFrame& top = stack.back();
    const auto& decl = sig.symbols()[top.symbol];
    if (top.args.size() == decl.arity) {
      Term done = Term::apply(decl.name, std::move(top.args));
      stack.pop_back();
      if (stack.empty()) return done;
      stack.back().args.push_back(std::move(done));
      continue;
    }
    if (!top.args.empty() && rng.chance(cfg.repeat_rate)) {
      Term repeat = top.args.back();
      top.args.push_back(std::move(repeat));
      continue;
    }
    const std::size_t b = top.child_budget;
    if (auto t = open(b, false)) stack.back().args.push_back(std::move(*t));
  }
}

bool uses_exactly_first(const Term& t, std::size_t n) {
  auto vs = vars(t);
  return vs.size() == n && *vs.rbegin() == n;
}

constexpr int kResampleAttempts = 16;

}  // namespace

Signature gen_signature(const GenConfig& cfg, Rng& rng) {
  cfg.validate();
  std::vector<SymbolDecl> decls;
  for (std::size_t k = 1; k <= cfg.num_symbols; ++k)
    decls.push_back({"f" + std::to_string(k), rng.between(1, cfg.max_arity)});
  return Signature(std::move(decls));
}

Term gen_term(const GenConfig& cfg, const Signature& sig, Rng& rng) {
  const auto pool = first_vars(cfg.var_bound);
  return random_term(cfg, sig, rng, pool, cfg.max_depth, false);
}

Term gen_term(const GenConfig& cfg, const Signature& sig, Rng& rng, std::span<const VarIndex> pool,
              std::size_t budget) {
  return random_term(cfg, sig, rng, pool, budget, false);
}

Term gen_full_term(const GenConfig& cfg, const Signature& sig, Rng& rng) {
  return full_term(cfg, sig, rng, std::max<std::size_t>(cfg.max_depth, 1), false, sig.max_arity());
}

Term gen_full_term_exact(const GenConfig& cfg, const Signature& sig, Rng& rng, std::size_t depth) {
  if (depth < 1) throw TermError("full terms have depth at least 1");
  return full_term(cfg, sig, rng, depth, true, sig.max_arity());
}

Hypersubstitution gen_hyp(const GenConfig& cfg, const Signature& sig, Rng& rng) {
  cfg.validate();
  std::vector<Term> images;
  for (const auto& decl : sig.symbols()) {
    const auto all = first_vars(decl.arity);
    if (rng.chance(cfg.projection_rate)) {
      images.push_back(Term::variable(pick(rng, all)));
      continue;
    }
    if (decl.arity >= 2 && rng.chance(cfg.deletion_bias)) {
      // Nonempty proper subset of x_1..x_n.
      std::vector<VarIndex> kept;
      while (kept.empty() || kept.size() == all.size()) {
        kept.clear();
        for (VarIndex v : all)
          if (rng.below(2) == 1) kept.push_back(v);
      }
      images.push_back(random_term(cfg, sig, rng, kept, cfg.image_depth, true));
      continue;
    }
    std::optional<Term> image;
    for (int attempt = 0; attempt < kResampleAttempts && !image; ++attempt) {
      Term candidate = random_term(cfg, sig, rng, all, cfg.image_depth, true);
      if (uses_exactly_first(candidate, decl.arity)) image = std::move(candidate);
    }
    images.push_back(image ? std::move(*image) : frontier(decl, rng));
  }
  return Hypersubstitution(sig, std::move(images));
}

Hypersubstitution gen_full_hyp(const GenConfig& cfg, const Signature& sig, Rng& rng) {
  cfg.validate();
  std::vector<Term> images;
  for (const auto& decl : sig.symbols()) {
    std::optional<Term> image;
    for (int attempt = 0; attempt < kResampleAttempts && !image; ++attempt) {
      Term candidate = full_term(cfg, sig, rng, cfg.image_depth, false, decl.arity);
      if (uses_exactly_first(candidate, decl.arity)) image = std::move(candidate);
    }
    images.push_back(image ? std::move(*image) : frontier(decl, rng));
  }
  return Hypersubstitution(sig, std::move(images));
}

// --- cases -------------------------------------------------------------------

namespace {

struct Case {
  std::size_t n = 0;
  std::vector<Term> terms;  // compositions: s, t1..tn; hyp checks: t
  std::vector<Hypersubstitution> hyps;
};

bool is_composition(TheoremKind kind) {
  return kind == TheoremKind::Thm2_3 || kind == TheoremKind::Thm3_3 ||
         kind == TheoremKind::Closure2_2;
}

std::int64_t as_int(std::size_t v) { return static_cast<std::int64_t>(v); }

Outcome evaluate(TheoremKind kind, const Signature& sig, const Case& c, bool relaxed) {
  Outcome out;
  if (is_composition(kind)) {
    const Term& s = c.terms.at(0);
    std::span<const Term> ts(c.terms.data() + 1, c.terms.size() - 1);
    if (ts.size() != c.n || arity_bound(s) > c.n) return out;
    switch (kind) {
      case TheoremKind::Thm3_3:
        out = {true, as_int(predict_depth_general(s, ts, c.n)), as_int(depth(superpose(s, ts, c.n)))};
        break;
      case TheoremKind::Thm2_3: {
        if (!sig.single_arity() || c.n != sig.max_arity()) return out;
        if (!relaxed && !is_full(s)) return out;
        std::size_t deepest = 0;
        for (const Term& t : ts) deepest = std::max(deepest, depth(t));
        const std::size_t predicted = relaxed ? deepest + depth(s) : predict_depth_full(sig, s, ts);
        out = {true, as_int(predicted), as_int(depth(superpose(s, ts, c.n)))};
        break;
      }
      default: {
        if (!is_full(s) || !std::all_of(ts.begin(), ts.end(), [](const Term& t) { return is_full(t); }))
          return out;
        out = {true, 1, is_full(superpose(s, ts, c.n)) ? 1 : 0};
        break;
      }
    }
    return out;
  }
  switch (kind) {
    case TheoremKind::Thm5_1: {
      const auto& sigma = c.hyps.at(0);
      const Term& t = c.terms.at(0);
      return {true, as_int(predict_depth_hyp(sigma, t)), as_int(depth(apply_hyp(sigma, t)))};
    }
    case TheoremKind::Cor4_5: {
      const auto& sigma = c.hyps.at(0);
      const Term& t = c.terms.at(0);
      if (sig.size() != 1 || !is_full_hyp(sigma) || !is_full(t)) return out;
      return {true, as_int(predict_depth_full_hyp(sigma, t)), as_int(depth(apply_hyp(sigma, t)))};
    }
    case TheoremKind::Cor4_6: {
      const auto& s1 = c.hyps.at(0);
      const auto& s2 = c.hyps.at(1);
      if (sig.size() != 1 || !is_full_hyp(s1) || !is_full_hyp(s2)) return out;
      return {true, as_int(hyp_depth(s1) * hyp_depth(s2)), as_int(hyp_depth(compose_hyp(s1, s2)))};
    }
    case TheoremKind::Closure4_2: {
      const auto& s1 = c.hyps.at(0);
      const auto& s2 = c.hyps.at(1);
      if (!is_full_hyp(s1) || !is_full_hyp(s2)) return out;
      return {true, 1, is_full_hyp(compose_hyp(s1, s2)) ? 1 : 0};
    }
    default:
      return out;
  }
}

Case generate(TheoremKind kind, const GenConfig& cfg, const Signature& sig, Rng& rng, bool relaxed) {
  Case c;
  switch (kind) {
    case TheoremKind::Thm3_3: {
      c.n = rng.between(1, cfg.var_bound);
      const auto pool = first_vars(c.n);
      c.terms.push_back(gen_term(cfg, sig, rng, pool, cfg.max_depth));
      for (std::size_t j = 0; j < c.n; ++j) c.terms.push_back(gen_term(cfg, sig, rng));
      break;
    }
    case TheoremKind::Thm2_3: {
      c.n = sig.max_arity();
      const auto pool = first_vars(c.n);
      c.terms.push_back(relaxed ? gen_term(cfg, sig, rng, pool, cfg.max_depth)
                                : gen_full_term(cfg, sig, rng));
      for (std::size_t j = 0; j < c.n; ++j) c.terms.push_back(gen_term(cfg, sig, rng));
      break;
    }
    case TheoremKind::Closure2_2: {
      c.n = sig.max_arity();
      c.terms.push_back(gen_full_term(cfg, sig, rng));
      for (std::size_t j = 0; j < c.n; ++j) c.terms.push_back(gen_full_term(cfg, sig, rng));
      break;
    }
    case TheoremKind::Thm5_1:
      c.hyps.push_back(gen_hyp(cfg, sig, rng));
      c.terms.push_back(gen_term(cfg, sig, rng));
      break;
    case TheoremKind::Cor4_5:
      c.hyps.push_back(gen_full_hyp(cfg, sig, rng));
      c.terms.push_back(gen_full_term(cfg, sig, rng));
      break;
    case TheoremKind::Cor4_6:
    case TheoremKind::Closure4_2:
      c.hyps.push_back(gen_full_hyp(cfg, sig, rng));
      c.hyps.push_back(gen_full_hyp(cfg, sig, rng));
      break;
  }
  return c;
}

std::vector<std::pair<std::string, std::string>> render_inputs(TheoremKind kind, const Case& c) {
  std::vector<std::pair<std::string, std::string>> inputs;
  if (is_composition(kind)) {
    inputs.emplace_back("n", std::to_string(c.n));
    inputs.emplace_back("s", render_term(c.terms[0]));
    for (std::size_t j = 1; j < c.terms.size(); ++j)
      inputs.emplace_back("t" + std::to_string(j), render_term(c.terms[j]));
  } else if (c.hyps.size() == 1) {
    inputs.emplace_back("sigma", render_hyp(c.hyps[0]));
    inputs.emplace_back("t", render_term(c.terms[0]));
  } else {
    inputs.emplace_back("sigma1", render_hyp(c.hyps[0]));
    inputs.emplace_back("sigma2", render_hyp(c.hyps[1]));
  }
  return inputs;
}

Case parse_inputs(TheoremKind kind, const std::vector<std::pair<std::string, std::string>>& inputs,
                  const Signature& sig) {
  auto get = [&](const std::string& key) -> const std::string& {
    for (const auto& [k, v] : inputs)
      if (k == key) return v;
    throw TermError("discrepancy is missing input '" + key + "'");
  };
  Case c;
  if (is_composition(kind)) {
    c.n = std::stoul(get("n"));
    c.terms.push_back(parse_term(get("s"), sig));
    for (std::size_t j = 1; j <= c.n; ++j) c.terms.push_back(parse_term(get("t" + std::to_string(j)), sig));
  } else if (kind == TheoremKind::Thm5_1 || kind == TheoremKind::Cor4_5) {
    c.hyps.push_back(parse_hyp(get("sigma"), sig));
    c.terms.push_back(parse_term(get("t"), sig));
  } else {
    c.hyps.push_back(parse_hyp(get("sigma1"), sig));
    c.hyps.push_back(parse_hyp(get("sigma2"), sig));
  }
  return c;
}

// --- shrinking ---------------------------------------------------------------

using Path = std::vector<std::size_t>;

/// Pre-order paths to every position of t.
std::vector<Path> all_paths(const Term& t) {
  std::vector<Path> out;
  std::vector<std::pair<const Term*, Path>> stack{{&t, {}}};
  while (!stack.empty()) {
    auto [node, path] = std::move(stack.back());
    stack.pop_back();
    auto args = node->args();
    for (std::size_t a = args.size(); a-- > 0;) {
      Path child = path;
      child.push_back(a);
      stack.emplace_back(&args[a], std::move(child));
    }
    out.push_back(std::move(path));
  }
  return out;
}

const Term& subterm_at(const Term& t, const Path& path) {
  const Term* node = &t;
  for (std::size_t a : path) node = &node->args()[a];
  return *node;
}

Term replace_at(const Term& t, const Path& path, Term replacement) {
  std::vector<const Term*> spine{&t};
  for (std::size_t a : path) spine.push_back(&spine.back()->args()[a]);
  Term current = std::move(replacement);
  for (std::size_t depth = path.size(); depth-- > 0;) {
    const Term& parent = *spine[depth];
    std::vector<Term> args(parent.args().begin(), parent.args().end());
    args[path[depth]] = std::move(current);
    current = Term::apply(parent.symbol(), std::move(args));
  }
  return current;
}

/// Smaller variants of `t`, nearest the root first: an application replaced
/// by one of its arguments or by a low-index variable, or a variable replaced
/// by x_1. Each variant has fewer nodes or a smaller index sum.
std::vector<Term> smaller_variants(const Term& t) {
  std::vector<Term> out;
  for (const Path& p : all_paths(t)) {
    const Term& sub = subterm_at(t, p);
    if (sub.is_variable()) {
      if (sub.index() > 1) out.push_back(replace_at(t, p, Term::variable(1)));
      continue;
    }
    for (const Term& child : sub.args()) out.push_back(replace_at(t, p, child));
    // Collapse to a base clause, which keeps full terms full.
    if (sub.depth() > 1) {
      std::vector<Term> base;
      for (VarIndex v = 1; v <= sub.arity(); ++v) base.push_back(Term::variable(v));
      out.push_back(replace_at(t, p, Term::apply(sub.symbol(), std::move(base))));
    }
    const VarIndex top = std::min<VarIndex>(std::max<VarIndex>(arity_bound(sub), 1), 3);
    for (VarIndex v = 1; v <= top; ++v) out.push_back(replace_at(t, p, Term::variable(v)));
  }
  return out;
}

Case shrink(TheoremKind kind, const Signature& sig, Case c, bool relaxed) {
  bool improved = true;
  while (improved) {
    improved = false;
    for (std::size_t slot = 0; slot < c.terms.size() && !improved; ++slot) {
      for (Term& variant : smaller_variants(c.terms[slot])) {
        Case next = c;
        next.terms[slot] = std::move(variant);
        if (evaluate(kind, sig, next, relaxed).fails()) {
          c = std::move(next);
          improved = true;
          break;
        }
      }
    }
    for (std::size_t h = 0; h < c.hyps.size() && !improved; ++h) {
      for (std::size_t k = 0; k < sig.size() && !improved; ++k) {
        for (Term& variant : smaller_variants(c.hyps[h].image(k))) {
          std::vector<Term> images = c.hyps[h].images();
          images[k] = std::move(variant);
          Case next = c;
          try {
            next.hyps[h] = Hypersubstitution(sig, std::move(images));
          } catch (const TermError&) {
            continue;  // image no longer respects the arity
          }
          if (evaluate(kind, sig, next, relaxed).fails()) {
            c = std::move(next);
            improved = true;
            break;
          }
        }
      }
    }
  }
  return c;
}

std::string seed_state(TheoremKind kind, std::uint64_t seed, std::uint64_t trial) {
  std::ostringstream os;
  os << theorem_name(kind) << ':' << seed << ':' << trial << ":0x" << std::hex
     << trial_seed(seed, kind, trial);
  return os.str();
}

/// One independent trial; the unit of work for both trial loops.
std::optional<Discrepancy> run_trial(TheoremKind kind, std::size_t trial, const GenConfig& cfg,
                                     const Signature& sig, const CheckOptions& opts) {
  Rng rng(trial_seed(cfg.seed, kind, trial));
  Case c = generate(kind, cfg, sig, rng, opts.admit_non_full);
  Outcome o = evaluate(kind, sig, c, opts.admit_non_full);
  if (!o.fails()) return std::nullopt;
  if (opts.shrink) {
    c = shrink(kind, sig, std::move(c), opts.admit_non_full);
    o = evaluate(kind, sig, c, opts.admit_non_full);
  }
  Discrepancy d;
  d.kind = kind;
  d.inputs = render_inputs(kind, c);
  d.predicted = o.predicted;
  d.actual = o.actual;
  d.seed_state = seed_state(kind, cfg.seed, trial);
  d.relaxed = opts.admit_non_full;
  return d;
}

}  // namespace

Outcome replay(const Discrepancy& d, const Signature& sig) {
  return evaluate(d.kind, sig, parse_inputs(d.kind, d.inputs, sig), d.relaxed);
}

std::vector<Discrepancy> check_theorem(TheoremKind kind, std::size_t trials, const GenConfig& cfg,
                                       const Signature& sig, const CheckOptions& options) {
  if (trials < 1) throw TermError("trials must be at least 1");
  cfg.validate();
  check_signature_shape(kind, sig);

  std::vector<Discrepancy> found;
  if (kind == TheoremKind::Cor4_6) {
    const auto id = identity_hyp(sig);
    if (hyp_depth(id) != 1) {
      Discrepancy d;
      d.kind = kind;
      d.inputs = {{"sigma1", render_hyp(id)}, {"sigma2", render_hyp(id)}};
      d.predicted = 1;
      d.actual = as_int(hyp_depth(id));
      d.seed_state = std::string(theorem_name(kind)) + ":identity";
      found.push_back(std::move(d));
    }
  }

  std::vector<std::optional<Discrepancy>> results(trials);
  std::vector<std::exception_ptr> errors(trials);
  auto body = [&](std::size_t k) {
    try {
      results[k] = run_trial(kind, k, cfg, sig, options);
    } catch (...) {
      errors[k] = std::current_exception();
    }
  };

  const auto count = static_cast<std::int64_t>(trials);
  if (options.parallel) {
#ifdef TERMDEPTH_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic, 8)
#endif
    for (std::int64_t k = 0; k < count; ++k) body(static_cast<std::size_t>(k));
  } else {
    for (std::int64_t k = 0; k < count; ++k) body(static_cast<std::size_t>(k));
  }

  for (std::size_t k = 0; k < trials; ++k) {
    if (errors[k]) std::rethrow_exception(errors[k]);
    if (results[k]) found.push_back(std::move(*results[k]));
  }
  return found;
}

}  // namespace termdepth
