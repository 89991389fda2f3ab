#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "termdepth/hypersubstitution.hpp"
#include "termdepth/signature.hpp"
#include "termdepth/term.hpp"

namespace termdepth {

/// Exact probability in parts per billion.
class Probability {
 public:
  static constexpr std::uint32_t kScale = 1'000'000'000;

  constexpr Probability() = default;
  /// Throws TermError above kScale.
  static Probability from_parts(std::uint32_t parts);
  /// Decimal in [0, 1] with at most nine fractional digits ("0.25", "1").
  /// Throws TermError otherwise.
  static Probability parse(std::string_view text);

  constexpr std::uint32_t parts() const noexcept { return parts_; }
  std::string str() const;

  friend constexpr bool operator==(Probability, Probability) = default;

 private:
  std::uint32_t parts_ = 0;
};

/// Seeded generator. The engine is std::mt19937_64, whose output sequence is
/// fixed by the C++ standard; bounded draws use rejection sampling so results
/// are identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi].
  std::size_t between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }
  bool chance(Probability p) { return below(Probability::kScale) < p.parts(); }

 private:
  std::mt19937_64 engine_;
};

struct GenConfig {
  std::uint64_t seed = 0;
  std::size_t max_depth = 5;
  std::size_t max_arity = 3;
  std::size_t num_symbols = 2;
  VarIndex var_bound = 3;
  /// Chance that a hypersubstitution image is a bare variable.
  Probability projection_rate = Probability::from_parts(0);
  /// Chance that a non-projection image omits at least one of its variables.
  Probability deletion_bias = Probability::from_parts(0);
  /// Depth budget for hypersubstitution images.
  std::size_t image_depth = 3;
  /// Chance of emitting a variable while depth budget remains.
  Probability leaf_rate = Probability::from_parts(300'000'000);
  /// Chance that an argument repeats its left sibling, to stress ties.
  Probability repeat_rate = Probability::from_parts(200'000'000);

  /// Throws TermError when a bound is zero.
  void validate() const;
};

enum class TheoremKind {
  Thm2_3,      // depth of composition with a full outer term
  Thm3_3,      // depth of an arbitrary composition
  Cor4_5,      // depth of a full hypersubstitution applied to a full term
  Cor4_6,      // depth is multiplicative under composition of full hyps
  Thm5_1,      // depth of an arbitrary hypersubstitution applied to a term
  Closure2_2,  // composition of full terms is full
  Closure4_2,  // composition of full hypersubstitutions is full
};

inline constexpr TheoremKind kAllTheorems[] = {
    TheoremKind::Thm2_3, TheoremKind::Thm3_3,     TheoremKind::Cor4_5,     TheoremKind::Cor4_6,
    TheoremKind::Thm5_1, TheoremKind::Closure2_2, TheoremKind::Closure4_2,
};

/// "thm2.3", "thm3.3", "cor4.5", "cor4.6", "thm5.1", "lemma2.2", "lemma4.2".
std::string_view theorem_name(TheoremKind kind) noexcept;
std::optional<TheoremKind> parse_theorem_name(std::string_view name) noexcept;

/// Throws TermError when the signature does not have the shape the check
/// requires (single arity for thm2.3, a single symbol for cor4.5/cor4.6).
void check_signature_shape(TheoremKind kind, const Signature& sig);

/// A case where the closed form disagrees with the measured value. Boolean
/// properties use 1 for "holds" and 0 for "violated".
struct Discrepancy {
  TheoremKind kind = TheoremKind::Thm3_3;
  /// Rendered inputs in a fixed order: "n", "s", "t1".."tn" for
  /// compositions; "sigma" or "sigma1"/"sigma2" in hyp file syntax; "t".
  std::vector<std::pair<std::string, std::string>> inputs;
  std::int64_t predicted = 0;
  std::int64_t actual = 0;
  /// "<theorem>:<seed>:<trial>:<trial seed hex>"; regenerates the unshrunk
  /// case with the same GenConfig.
  std::string seed_state;
  /// Outer term was not required to be full (thm2.3 negative control).
  bool relaxed = false;

  friend bool operator==(const Discrepancy&, const Discrepancy&) = default;
};

struct Outcome {
  bool applicable = false;  // inputs satisfy the theorem's hypotheses
  std::int64_t predicted = 0;
  std::int64_t actual = 0;

  bool fails() const noexcept { return applicable && predicted != actual; }
};

/// Re-parses a discrepancy's inputs and re-evaluates it.
Outcome replay(const Discrepancy& d, const Signature& sig);

struct CheckOptions {
  /// Run trials with OpenMP when available; false selects the serial
  /// reference loop. Output is identical either way.
  bool parallel = true;
  bool shrink = true;
  /// thm2.3 only: draw arbitrary outer terms instead of full ones.
  bool admit_non_full = false;
};

/// Seed for trial `trial`, independent of all other trials.
std::uint64_t trial_seed(std::uint64_t seed, TheoremKind kind, std::uint64_t trial) noexcept;

/// Signature with `num_symbols` symbols f1, f2, ... of arity 1..max_arity.
Signature gen_signature(const GenConfig& cfg, Rng& rng);

/// Random term of depth <= cfg.max_depth over x_1..x_{var_bound}.
Term gen_term(const GenConfig& cfg, const Signature& sig, Rng& rng);
/// Random term of depth <= `budget` whose variables are drawn from `pool`
/// (nonempty).
Term gen_term(const GenConfig& cfg, const Signature& sig, Rng& rng,
              std::span<const VarIndex> pool, std::size_t budget);

/// Random full term of depth in 1..max(1, cfg.max_depth).
Term gen_full_term(const GenConfig& cfg, const Signature& sig, Rng& rng);
/// Random full term of depth exactly `depth` (>= 1).
Term gen_full_term_exact(const GenConfig& cfg, const Signature& sig, Rng& rng,
                         std::size_t depth);

/// Random hypersubstitution honoring projection_rate and deletion_bias.
/// With both at zero every image uses all of its variables.
Hypersubstitution gen_hyp(const GenConfig& cfg, const Signature& sig, Rng& rng);
/// Random full hypersubstitution (images of depth <= image_depth).
Hypersubstitution gen_full_hyp(const GenConfig& cfg, const Signature& sig, Rng& rng);

/// Runs `trials` independent cases comparing the closed form against direct
/// construction. Returns every discrepancy in trial order; empty means pass.
/// Throws TermError for trials == 0, an invalid config, or a signature of the
/// wrong shape.
std::vector<Discrepancy> check_theorem(TheoremKind kind, std::size_t trials,
                                       const GenConfig& cfg, const Signature& sig,
                                       const CheckOptions& options = {});

}  // namespace termdepth
