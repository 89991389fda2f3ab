// Acceptance suite. Prints one PASS/FAIL line per criterion.
//
//   acceptance                 run every criterion
//   acceptance --criterion N   run criterion N only
//
// Exit status is 0 when every selected criterion passes.

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "termdepth/error.hpp"
#include "termdepth/hypersubstitution.hpp"
#include "termdepth/measures.hpp"
#include "termdepth/occurrence_depth.hpp"
#include "termdepth/superposition.hpp"
#include "termdepth/textio.hpp"
#include "termdepth/verify.hpp"

using namespace termdepth;

namespace {

struct Result {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back("failed: " + what);
    }
  }
  void note(const std::string& text) { notes.push_back(text); }
};

struct Criterion {
  int number;
  const char* title;
  double limit_seconds;
  std::function<void(Result&)> body;
};

Term T(const char* text, const Signature& sig) { return parse_term(text, sig); }

std::string describe(const Discrepancy& d) {
  std::ostringstream os;
  os << theorem_name(d.kind) << " predicted " << d.predicted << ", actual " << d.actual << ";";
  for (const auto& [k, v] : d.inputs) {
    std::string flat = v;
    while (!flat.empty() && flat.back() == '\n') flat.pop_back();
    for (auto& c : flat)
      if (c == '\n') c = ';';
    os << " " << k << " = " << flat;
  }
  os << " [" << d.seed_state << "]";
  return os.str();
}

// 1. Composition of two non-full outer terms with the same argument pair.
void golden_composition(Result& r) {
  const Signature sig = parse_signature("f/2");
  const std::vector<Term> ts{T("f(x1,f(x1,x2))", sig), T("f(x2,x1)", sig)};
  const Term c1 = superpose(T("f(f(x2,x2),x1)", sig), ts, 2);
  const Term c2 = superpose(T("f(f(x1,x1),x2)", sig), ts, 2);
  r.require(render_term(c1) == "f(f(f(x2,x1),f(x2,x1)),f(x1,f(x1,x2)))",
            "rendered s1 composition, got " + render_term(c1));
  r.require(depth(c1) == 3, "depth of s1 composition is 3, got " + std::to_string(depth(c1)));
  r.require(depth(c2) == 4, "depth of s2 composition is 4, got " + std::to_string(depth(c2)));
}

// 2. Per-variable depths of four terms over type (2,3).
void golden_depth_per_variable(Result& r) {
  const Signature sig = parse_signature("f1/2\nf2/3");
  struct Row {
    const char* name;
    const char* text;
    std::size_t d[3];
  };
  const Row rows[] = {
      {"t1", "f2(f1(x1,x1),f1(x1,x2),x3)", {2, 2, 1}},
      {"t2", "f1(f2(x1,x1,x2),x1)", {2, 2, 0}},
      {"t3", "f1(f2(x1,x3,x3),x1)", {2, 0, 2}},
      {"s", "f2(f1(x1,x2),x2,x3)", {2, 2, 1}},
  };
  std::vector<Term> ts;
  for (const auto& row : rows) {
    const Term t = T(row.text, sig);
    for (VarIndex l = 1; l <= 3; ++l) {
      const auto got = depth_wrt(t, l);
      r.require(got == row.d[l - 1], std::string("Depth_") + std::to_string(l) + "(" + row.name +
                                         ") = " + std::to_string(row.d[l - 1]) + ", got " +
                                         std::to_string(got));
    }
    ts.push_back(t);
  }
  const Term s = ts.back();
  ts.pop_back();
  const auto measured = depth(superpose(s, ts, 3));
  const auto predicted = predict_depth_general(s, ts, 3);
  r.require(measured == 4, "composed depth 4, got " + std::to_string(measured));
  r.require(predicted == 4, "predicted depth 4, got " + std::to_string(predicted));
}

// 3. General composition formula on random inputs.
void general_composition_suite(Result& r) {
  const char* sigs[] = {"f/2", "f1/2\nf2/3", "f1/1\nf2/2\nf3/4"};
  const std::size_t depths[] = {4, 6, 8};
  std::size_t total = 0;
  std::size_t bad = 0;
  for (const char* text : sigs) {
    const Signature sig = parse_signature(text);
    for (std::size_t d : depths) {
      GenConfig cfg;
      cfg.seed = 3000 + d;
      cfg.max_depth = d;
      cfg.var_bound = 4;
      const std::size_t trials = 1200;
      const auto found = check_theorem(TheoremKind::Thm3_3, trials, cfg, sig);
      total += trials;
      bad += found.size();
      for (std::size_t k = 0; k < found.size() && k < 3; ++k) r.note(describe(found[k]));
    }
  }
  r.note(std::to_string(total) + " trials, " + std::to_string(bad) + " discrepancies");
  r.require(total >= 10000, "at least 10^4 trials");
  r.require(bad == 0, "no discrepancies");
}

// 4. Full-composition formula over single-arity types, plus the non-full
// counterexample showing the hypothesis matters.
void full_composition_suite(Result& r) {
  std::size_t total = 0;
  std::size_t bad = 0;
  for (const char* text : {"f/2", "f/3"}) {
    const Signature sig = parse_signature(text);
    GenConfig cfg;
    cfg.seed = 4000;
    cfg.max_depth = 5;
    const std::size_t trials = 5000;
    const auto found = check_theorem(TheoremKind::Thm2_3, trials, cfg, sig);
    total += trials;
    bad += found.size();
    for (std::size_t k = 0; k < found.size() && k < 3; ++k) r.note(describe(found[k]));
  }
  r.note(std::to_string(total) + " trials, " + std::to_string(bad) + " discrepancies");
  r.require(total >= 10000, "at least 10^4 trials");
  r.require(bad == 0, "no discrepancies");

  // s1 and s2 have the same depth and the same arguments, yet their
  // compositions differ in depth, so no formula in depths alone can work.
  const Signature sig = parse_signature("f/2");
  const Term s1 = T("f(f(x2,x2),x1)", sig);
  const Term s2 = T("f(f(x1,x1),x2)", sig);
  const std::vector<Term> ts{T("f(x1,f(x1,x2))", sig), T("f(x2,x1)", sig)};
  r.require(depth(s1) == depth(s2), "s1 and s2 have equal depth");
  r.require(!is_full(s1) && !is_full(s2), "s1 and s2 are not full");
  const auto d1 = depth(superpose(s1, ts, 2));
  const auto d2 = depth(superpose(s2, ts, 2));
  r.require(d1 == 3 && d2 == 4, "negative control depths 3 and 4, got " + std::to_string(d1) +
                                    " and " + std::to_string(d2));
  bool rejected = false;
  try {
    (void)predict_depth_full(sig, s1, ts);
  } catch (const TermError&) {
    rejected = true;
  }
  r.require(rejected, "predict_depth_full rejects a non-full outer term");

  CheckOptions relaxed;
  relaxed.admit_non_full = true;
  GenConfig cfg;
  cfg.seed = 4001;
  const auto found = check_theorem(TheoremKind::Thm2_3, 1000, cfg, sig, relaxed);
  r.note("non-full control: " + std::to_string(found.size()) + " of 1000 trials break the formula");
  r.require(!found.empty(), "admitting non-full outer terms produces discrepancies");
}

// 5. Closure of full terms and full hypersubstitutions; monoid laws.
void closure_suite(Result& r) {
  std::size_t bad = 0;
  for (const char* text : {"f/2", "f/3", "f1/2\nf2/3", "f1/1\nf2/2\nf3/4"}) {
    const Signature sig = parse_signature(text);
    GenConfig cfg;
    cfg.seed = 5000;
    cfg.max_depth = 4;
    for (auto kind : {TheoremKind::Closure2_2, TheoremKind::Closure4_2}) {
      const std::size_t trials = 1000;
      const auto found = check_theorem(kind, trials, cfg, sig);
      bad += found.size();
      std::string flat = text;
      for (auto& c : flat)
        if (c == '\n') c = ',';
      r.note(std::string(theorem_name(kind)) + " over " + flat + ": " + std::to_string(trials) +
             " trials, " + std::to_string(found.size()) + " violations");
      for (std::size_t k = 0; k < found.size() && k < 2; ++k) r.note("  " + describe(found[k]));
    }
  }
  r.require(bad == 0, "closure holds (" + std::to_string(bad) + " violations)");

  std::size_t laws = 0;
  std::size_t broken = 0;
  for (const char* text : {"f/2", "f1/2\nf2/3", "f1/1\nf2/2\nf3/4"}) {
    const Signature sig = parse_signature(text);
    const auto id = identity_hyp(sig);
    GenConfig cfg;
    cfg.projection_rate = Probability::parse("0.2");
    cfg.deletion_bias = Probability::parse("0.3");
    Rng rng(5100);
    for (int trial = 0; trial < 400; ++trial) {
      const auto a = gen_hyp(cfg, sig, rng);
      const auto b = gen_hyp(cfg, sig, rng);
      const auto c = gen_hyp(cfg, sig, rng);
      ++laws;
      if (!(compose_hyp(compose_hyp(a, b), c) == compose_hyp(a, compose_hyp(b, c)))) {
        ++broken;
        r.note("associativity fails for\n" + render_hyp(a) + render_hyp(b) + render_hyp(c));
      }
      if (!(compose_hyp(id, a) == a) || !(compose_hyp(a, id) == a)) {
        ++broken;
        r.note("unit law fails for\n" + render_hyp(a));
      }
    }
  }
  r.note("monoid laws: " + std::to_string(laws) + " triples and pairs, " +
         std::to_string(broken) + " violations");
  r.require(laws >= 1000, "at least 10^3 monoid instances");
  r.require(broken == 0, "monoid laws hold");
}

// 6. Depth is multiplicative for full hypersubstitutions.
void full_hyp_suite(Result& r) {
  std::size_t bad = 0;
  for (const char* text : {"f/2", "f/3"}) {
    const Signature sig = parse_signature(text);
    GenConfig cfg;
    cfg.seed = 6000;
    cfg.max_depth = 4;
    cfg.image_depth = 3;
    for (auto kind : {TheoremKind::Cor4_5, TheoremKind::Cor4_6}) {
      const auto found = check_theorem(kind, 1000, cfg, sig);
      bad += found.size();
      for (std::size_t k = 0; k < found.size() && k < 3; ++k) r.note(describe(found[k]));
    }
    r.require(hyp_depth(identity_hyp(sig)) == 1, std::string("identity has depth 1 over ") + text);
  }
  r.note("4000 trials, " + std::to_string(bad) + " discrepancies");
  r.require(bad == 0, "no discrepancies");
}

// 7. Occurrence-sum formula for arbitrary hypersubstitutions.
void occurrence_suite(Result& r) {
  const char* sigs[] = {"f/2", "f1/2\nf2/3", "f1/2\ng/1", "f1/1\nf2/2\nf3/4"};
  const std::size_t trials = 10000;
  std::size_t bad_total = 0;
  std::size_t identity_bad = 0;
  std::size_t retained_bad = 0;
  for (const char* text : sigs) {
    const Signature sig = parse_signature(text);
    GenConfig cfg;
    cfg.seed = 7000;
    cfg.max_depth = 5;
    cfg.projection_rate = Probability::parse("0.2");
    cfg.deletion_bias = Probability::parse("0.3");
    const auto found = check_theorem(TheoremKind::Thm5_1, trials, cfg, sig);
    bad_total += found.size();
    std::string flat = text;
    for (auto& c : flat)
      if (c == '\n') c = ',';
    r.note("signature " + flat + ": " + std::to_string(trials) + " trials, " +
           std::to_string(found.size()) + " discrepancies");
    for (std::size_t k = 0; k < found.size() && k < 3; ++k) {
      r.note("  shrunk counterexample: " + describe(found[k]));
      const auto o = replay(found[k], sig);
      r.require(o.fails() && o.predicted == found[k].predicted && o.actual == found[k].actual,
                "counterexample replays");
    }

    // The identity special case, and the retained-occurrence variant, over
    // the same kind of random inputs.
    const auto id = identity_hyp(sig);
    Rng rng(7100);
    for (std::size_t trial = 0; trial < trials; ++trial) {
      const Term t = gen_term(cfg, sig, rng);
      if (b_of(id, t) != depth(t)) ++identity_bad;
      const auto sigma = gen_hyp(cfg, sig, rng);
      if (b_of_retained(sigma, t) != depth(apply_hyp(sigma, t))) ++retained_bad;
    }
  }
  r.note("identity: b_of(id, t) = depth(t) failed on " + std::to_string(identity_bad) + " of " +
         std::to_string(trials * std::size(sigs)) + " trials");
  r.note("retained-occurrence sum disagreed with measured depth on " +
         std::to_string(retained_bad) + " trials");
  r.require(identity_bad == 0, "identity special case holds on all trials");
  r.require(bad_total == 0, "predict_depth_hyp equals depth(apply_hyp) on all trials (" +
                                std::to_string(bad_total) + " discrepancies)");
}

// 8. Parser round trip and fuzzing.
void parser_suite(Result& r) {
  const Signature sig = parse_signature("f/2\ng_1/1\nH3/3");
  GenConfig cfg;
  cfg.max_depth = 7;
  cfg.var_bound = 120;
  Rng rng(8000);
  std::size_t mismatches = 0;
  std::vector<std::string> corpus;
  for (int k = 0; k < 10000; ++k) {
    const Term t = gen_term(cfg, sig, rng);
    const std::string text = render_term(t);
    const Term back = parse_term(text, sig);
    if (!(back == t) || render_term(back) != text) ++mismatches;
    if (corpus.size() < 200) corpus.push_back(text);
  }
  r.note("round trip: 10000 terms, " + std::to_string(mismatches) + " mismatches");
  r.require(mismatches == 0, "byte-exact round trip");

  const std::string alphabet = "fgxH_13(), \t\n#0";
  std::size_t parsed = 0;
  std::size_t errors = 0;
  std::size_t other = 0;
  for (int k = 0; k < 10000; ++k) {
    std::string text;
    if (k % 2 == 0) {
      // Mutate a valid term.
      text = corpus[rng.below(corpus.size())];
      const std::size_t edits = 1 + rng.below(4);
      for (std::size_t e = 0; e < edits && !text.empty(); ++e) {
        const std::size_t at = rng.below(text.size());
        switch (rng.below(3)) {
          case 0: text.erase(at, 1); break;
          case 1: text.insert(at, 1, alphabet[rng.below(alphabet.size())]); break;
          default: text[at] = static_cast<char>(rng.below(256)); break;
        }
      }
    } else {
      const std::size_t len = rng.below(40);
      for (std::size_t c = 0; c < len; ++c) text += static_cast<char>(rng.below(256));
    }
    try {
      (void)parse_term(text, sig);
      ++parsed;
    } catch (const ParseError& e) {
      if (e.span().begin <= e.span().end && e.span().end <= text.size())
        ++errors;
      else
        ++other;
    } catch (...) {
      ++other;
    }
  }
  r.note("fuzz: 10000 inputs, " + std::to_string(parsed) + " parsed, " + std::to_string(errors) +
         " positioned errors, " + std::to_string(other) + " other outcomes");
  r.require(other == 0, "every fuzzed input yields a term or a positioned error");
}

// 9. Large terms.
void scale_suite(Result& r) {
  const Signature sig = parse_signature("f/2");
  constexpr std::size_t kDepth = 100000;
  Term comb = Term::variable(1);
  for (std::size_t k = 0; k < kDepth; ++k) comb = Term::apply("f", {comb, Term::variable(2)});
  const auto nodes = node_count(comb);
  r.note("comb: " + std::to_string(nodes) + " nodes");
  r.require(nodes >= 100000, "at least 10^5 nodes");
  r.require(depth(comb) == kDepth, "comb depth");
  r.require(depth_wrt(comb, 1) == kDepth, "comb depth along x1");
  r.require(b_of(identity_hyp(sig), comb) == kDepth, "b_of with identity on the comb");
  const auto sigma = parse_hyp("f -> f(f(x2,x1),x2)", sig);
  r.require(b_of(sigma, comb) == 2 * kDepth, "b_of with a depth-2 image on the comb");
  r.require(depth(apply_hyp(sigma, comb)) == 2 * kDepth, "measured depth of the image");

  // The same comb read back from text.
  const Term parsed = parse_term(render_term(comb), sig);
  r.require(parsed == comb, "comb survives a text round trip");

  // A wide random term with no sharing.
  GenConfig cfg;
  cfg.max_depth = 30;
  cfg.leaf_rate = Probability::parse("0.45");
  cfg.repeat_rate = Probability::from_parts(0);
  Rng rng(9000);
  Term wide = Term::variable(1);
  std::uint64_t wide_nodes = 1;
  while (wide_nodes < 100000) {
    Term part = gen_term(cfg, sig, rng);
    wide_nodes += node_count(part) + 1;
    wide = Term::apply("f", {wide, std::move(part)});
  }
  r.note("random term: " + std::to_string(node_count(wide)) + " nodes, depth " +
         std::to_string(depth(wide)));
  r.require(node_count(wide) >= 100000, "random term has at least 10^5 nodes");
  r.require(b_of(identity_hyp(sig), wide) == depth(wide), "b_of with identity on the random term");
}

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {1, "golden composition", 1, golden_composition},
      {2, "golden per-variable depths", 1, golden_depth_per_variable},
      {3, "general composition formula", 30, general_composition_suite},
      {4, "full composition formula", 30, full_composition_suite},
      {5, "closure and monoid laws", 30, closure_suite},
      {6, "full hypersubstitution depth", 10, full_hyp_suite},
      {7, "occurrence-sum formula", 60, occurrence_suite},
      {8, "parser robustness", 30, parser_suite},
      {9, "scale", 5, scale_suite},
  };
  return all;
}

bool run(const Criterion& c) {
  Result r;
  const auto start = std::chrono::steady_clock::now();
  try {
    c.body(r);
  } catch (const std::exception& e) {
    r.require(false, std::string("exception: ") + e.what());
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (seconds >= c.limit_seconds) {
    r.pass = false;
    r.notes.push_back("failed: over the time limit");
  }
  std::cout << (r.pass ? "PASS" : "FAIL") << "  criterion " << c.number << ": " << c.title
            << " (" << seconds << " s, limit " << c.limit_seconds << " s)\n";
  for (const auto& n : r.notes) {
    std::istringstream lines(n);
    std::string line;
    while (std::getline(lines, line)) std::cout << "      " << line << "\n";
  }
  std::cout.flush();
  return r.pass;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int k = 1; k < argc; ++k) {
    if (std::strcmp(argv[k], "--criterion") == 0 && k + 1 < argc) {
      only = std::atoi(argv[++k]);
    } else {
      std::cerr << "usage: acceptance [--criterion N]\n";
      return 2;
    }
  }
  bool all_pass = true;
  bool ran = false;
  for (const auto& c : criteria()) {
    if (only != 0 && c.number != only) continue;
    ran = true;
    all_pass = run(c) && all_pass;
  }
  if (!ran) {
    std::cerr << "no criterion " << only << "\n";
    return 2;
  }
  return all_pass ? 0 : 1;
}
