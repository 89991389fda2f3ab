// termdepth: command-line access to the term depth library.
//
// Exit status: 0 success / verification passed, 1 verification found
// discrepancies, 2 usage or parse error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
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

using json = nlohmann::ordered_json;
namespace td = termdepth;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDiscrepancy = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

/// Runs `parse`, prefixing any ParseError with the input's origin.
template <class F>
auto parse_from(const std::string& origin, F&& parse) {
  try {
    return parse();
  } catch (const td::ParseError& e) {
    throw UsageError(origin + ": " + e.what());
  }
}

td::Signature load_signature(const std::string& path) {
  const std::string text = read_file(path);
  return parse_from(path, [&] { return td::parse_signature(text); });
}

td::Term load_term(const std::string& origin, const std::string& text, const td::Signature& sig) {
  return parse_from(origin, [&] { return td::parse_term(text, sig); });
}

/// Term from --expr or a file path, exactly one of which must be given.
td::Term term_argument(const std::string& expr, const std::string& path, const td::Signature& sig) {
  if (!expr.empty() && !path.empty()) throw UsageError("give either --expr or a term file, not both");
  if (!expr.empty()) return load_term("--expr", expr, sig);
  if (!path.empty()) return load_term(path, read_file(path), sig);
  throw UsageError("no term given (use --expr or a term file)");
}

td::Hypersubstitution load_hyp(const std::string& path, const td::Signature& sig) {
  const std::string text = read_file(path);
  return parse_from(path, [&] { return td::parse_hyp(text, sig); });
}

json record(const std::string& command, json inputs, json result) {
  json out;
  out["command"] = command;
  out["inputs"] = std::move(inputs);
  out["result"] = std::move(result);
  out["discrepancies"] = json::array();
  return out;
}

json discrepancy_json(const td::Discrepancy& d) {
  json inputs = json::object();
  for (const auto& [k, v] : d.inputs) inputs[k] = v;
  return json{{"kind", std::string(td::theorem_name(d.kind))},
              {"inputs", std::move(inputs)},
              {"predicted", d.predicted},
              {"actual", d.actual},
              {"seed_state", d.seed_state},
              {"relaxed", d.relaxed}};
}

json report_json(const td::DepthReport& r) {
  json per = json::object();
  for (const auto& [l, v] : r.per_variable) per[std::to_string(l)] = v;
  return json{{"depth", r.depth}, {"per_variable", std::move(per)}, {"vars", r.vars}};
}

// --- commands ----------------------------------------------------------------

struct DepthArgs {
  std::string sig, term_path, expr;
  std::optional<td::VarIndex> wrt, n;
  bool json = false;
};

int cmd_depth(const DepthArgs& a) {
  const auto sig = load_signature(a.sig);
  const auto t = term_argument(a.expr, a.term_path, sig);
  json inputs{{"signature", td::render_signature(sig)}, {"term", td::render_term(t)}};
  if (a.wrt) {
    if (*a.wrt < 1) throw UsageError("--wrt must be at least 1");
    inputs["wrt"] = *a.wrt;
    const auto v = td::depth_wrt(t, *a.wrt);
    if (a.json)
      std::cout << record("depth", inputs, v).dump() << "\n";
    else
      std::cout << v << "\n";
    return kExitOk;
  }
  const auto report = td::depth_report(t, a.n.value_or(td::arity_bound(t)));
  if (a.json) {
    std::cout << record("depth", inputs, report_json(report)).dump() << "\n";
    return kExitOk;
  }
  std::cout << "depth " << report.depth << "\n";
  for (const auto& [l, v] : report.per_variable) std::cout << "depth_x" << l << " " << v << "\n";
  return kExitOk;
}

struct ComposeArgs {
  std::string sig, outer;
  std::vector<std::string> args;
  std::optional<std::size_t> n;
  bool predict_only = false, json = false;
};

int cmd_compose(const ComposeArgs& a) {
  const auto sig = load_signature(a.sig);
  const auto s = load_term("--outer", a.outer, sig);
  std::vector<td::Term> ts;
  for (std::size_t j = 0; j < a.args.size(); ++j)
    ts.push_back(load_term("--args[" + std::to_string(j + 1) + "]", a.args[j], sig));
  const std::size_t n = a.n.value_or(td::arity_bound(s));

  json inputs{{"signature", td::render_signature(sig)}, {"outer", td::render_term(s)}, {"n", n}};
  json rendered_args = json::array();
  for (const auto& t : ts) rendered_args.push_back(td::render_term(t));
  inputs["args"] = std::move(rendered_args);

  const auto predicted = td::predict_depth_general(s, ts, n);
  json result{{"predicted", predicted}};
  if (!a.predict_only) {
    const auto composed = td::superpose(s, ts, n);
    result["term"] = td::render_term(composed);
    result["depth"] = td::depth(composed);
    result["agree"] = td::depth(composed) == predicted;
  }
  if (a.json) {
    std::cout << record("compose", inputs, result).dump() << "\n";
    return kExitOk;
  }
  if (!a.predict_only) {
    std::cout << "term " << result["term"].get<std::string>() << "\n"
              << "depth " << result["depth"] << "\n";
  }
  std::cout << "predicted " << predicted << "\n";
  if (!a.predict_only) std::cout << "agree " << (result["agree"].get<bool>() ? "true" : "false") << "\n";
  return kExitOk;
}

struct ApplyArgs {
  std::string sig, hyp, term_path, expr;
  bool json = false;
};

int cmd_apply(const ApplyArgs& a) {
  const auto sig = load_signature(a.sig);
  const auto sigma = load_hyp(a.hyp, sig);
  const auto t = term_argument(a.expr, a.term_path, sig);
  const auto image = td::apply_hyp(sigma, t);
  const td::DepthTable table(sigma);
  const auto b = td::b_of(table, t);
  const auto b_retained = td::b_of_retained(table, t);
  json inputs{{"signature", td::render_signature(sig)}, {"hyp", td::render_hyp(sigma)},
              {"term", td::render_term(t)}};
  json result{{"term", td::render_term(image)},
              {"depth", td::depth(image)},
              {"b", b},
              {"b_retained", b_retained},
              {"agree", td::depth(image) == b}};
  if (a.json) {
    std::cout << record("apply", inputs, result).dump() << "\n";
    return kExitOk;
  }
  std::cout << "term " << td::render_term(image) << "\n"
            << "depth " << td::depth(image) << "\n"
            << "b " << b << "\n"
            << "b_retained " << b_retained << "\n"
            << "agree " << (td::depth(image) == b ? "true" : "false") << "\n";
  return kExitOk;
}

struct CheckArgs {
  std::string sig, full, full_hyp, regular;
  bool json = false;
};

int cmd_check(const CheckArgs& a) {
  const int given = !a.full.empty() + !a.full_hyp.empty() + !a.regular.empty();
  if (given != 1) throw UsageError("give exactly one of --full, --full-hyp, --regular");
  const auto sig = load_signature(a.sig);
  json inputs{{"signature", td::render_signature(sig)}};
  bool answer = false;
  if (!a.full.empty()) {
    const auto t = load_term("--full", a.full, sig);
    inputs["full"] = td::render_term(t);
    answer = td::is_full(t);
  } else if (!a.full_hyp.empty()) {
    const auto sigma = load_hyp(a.full_hyp, sig);
    inputs["full_hyp"] = td::render_hyp(sigma);
    answer = td::is_full_hyp(sigma);
  } else {
    const auto sigma = load_hyp(a.regular, sig);
    inputs["regular"] = td::render_hyp(sigma);
    answer = td::is_regular_hyp(sigma);
  }
  if (a.json)
    std::cout << record("check", inputs, answer).dump() << "\n";
  else
    std::cout << (answer ? "true" : "false") << "\n";
  return kExitOk;
}

struct VerifyArgs {
  std::string sig, theorem;
  std::size_t trials = 1000;
  std::uint64_t seed = 0;
  std::size_t max_depth = 5;
  td::VarIndex var_bound = 3;
  std::size_t image_depth = 3;
  std::string projection_rate = "0", deletion_bias = "0";
  bool serial = false, no_shrink = false, admit_non_full = false, json = false;
};

int cmd_verify(const VerifyArgs& a) {
  const auto sig = load_signature(a.sig);
  td::GenConfig cfg;
  cfg.seed = a.seed;
  cfg.max_depth = a.max_depth;
  cfg.var_bound = a.var_bound;
  cfg.image_depth = a.image_depth;
  cfg.max_arity = sig.max_arity();
  cfg.num_symbols = sig.size();
  cfg.projection_rate = td::Probability::parse(a.projection_rate);
  cfg.deletion_bias = td::Probability::parse(a.deletion_bias);
  cfg.validate();
  td::CheckOptions opts;
  opts.parallel = !a.serial;
  opts.shrink = !a.no_shrink;
  opts.admit_non_full = a.admit_non_full;

  std::vector<td::TheoremKind> kinds;
  if (a.theorem == "all") {
    kinds.assign(std::begin(td::kAllTheorems), std::end(td::kAllTheorems));
  } else if (auto k = td::parse_theorem_name(a.theorem)) {
    td::check_signature_shape(*k, sig);
    kinds.push_back(*k);
  } else {
    throw UsageError("unknown theorem '" + a.theorem + "'");
  }

  json inputs{{"signature", td::render_signature(sig)},
              {"theorem", a.theorem},
              {"trials", a.trials},
              {"seed", a.seed},
              {"max_depth", a.max_depth},
              {"var_bound", a.var_bound},
              {"image_depth", a.image_depth},
              {"projection_rate", cfg.projection_rate.str()},
              {"deletion_bias", cfg.deletion_bias.str()},
              {"admit_non_full", a.admit_non_full}};
  json result = json::array();
  json discrepancies = json::array();
  for (auto kind : kinds) {
    const std::string name(td::theorem_name(kind));
    try {
      td::check_signature_shape(kind, sig);
    } catch (const td::TermError& e) {
      result.push_back({{"theorem", name}, {"status", "skipped"}, {"reason", e.what()}});
      if (!a.json) std::cout << name << ": skipped (" << e.what() << ")\n";
      continue;
    }
    const auto found = td::check_theorem(kind, a.trials, cfg, sig, opts);
    result.push_back({{"theorem", name},
                      {"status", found.empty() ? "pass" : "fail"},
                      {"trials", a.trials},
                      {"discrepancies", found.size()}});
    if (!a.json)
      std::cout << name << ": " << a.trials << " trials, " << found.size() << " discrepancies\n";
    for (const auto& d : found) {
      auto dj = discrepancy_json(d);
      if (!a.json) std::cout << dj.dump() << "\n";
      discrepancies.push_back(std::move(dj));
    }
  }
  if (a.json) {
    json out = record("verify", inputs, result);
    out["discrepancies"] = discrepancies;
    std::cout << out.dump() << "\n";
  }
  return discrepancies.empty() ? kExitOk : kExitDiscrepancy;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Depth of terms under superposition and hypersubstitution"};
  app.require_subcommand(1);

  DepthArgs depth_args;
  auto* depth = app.add_subcommand("depth", "Depth of a term, or its depth along one variable");
  depth->add_option("signature", depth_args.sig, "Signature file")->required();
  depth->add_option("term", depth_args.term_path, "Term file");
  depth->add_option("--expr", depth_args.expr, "Term text");
  depth->add_option("--wrt", depth_args.wrt, "Variable index l: print depth along x_l");
  depth->add_option("--n", depth_args.n, "Report variables x_1..x_n (default: largest index used)");
  depth->add_flag("--json", depth_args.json, "Structured output");

  ComposeArgs compose_args;
  auto* compose = app.add_subcommand("compose", "Superpose argument terms into an outer term");
  compose->add_option("signature", compose_args.sig, "Signature file")->required();
  compose->add_option("--outer", compose_args.outer, "Outer term s")->required();
  compose->add_option("--args", compose_args.args, "Argument terms t_1..t_n")->required();
  compose->add_option("--n", compose_args.n, "Arity n of the outer term (default: largest index used)");
  compose->add_flag("--predict-only", compose_args.predict_only, "Only print the predicted depth");
  compose->add_flag("--json", compose_args.json, "Structured output");

  ApplyArgs apply_args;
  auto* apply = app.add_subcommand("apply", "Apply a hypersubstitution to a term");
  apply->add_option("signature", apply_args.sig, "Signature file")->required();
  apply->add_option("hyp", apply_args.hyp, "Hypersubstitution file")->required();
  apply->add_option("term", apply_args.term_path, "Term file");
  apply->add_option("--expr", apply_args.expr, "Term text");
  apply->add_flag("--json", apply_args.json, "Structured output");

  CheckArgs check_args;
  auto* check = app.add_subcommand("check", "Full-term, full-hypersubstitution or regularity test");
  check->add_option("signature", check_args.sig, "Signature file")->required();
  check->add_option("--full", check_args.full, "Term text to test for fullness");
  check->add_option("--full-hyp", check_args.full_hyp, "Hypersubstitution file to test for fullness");
  check->add_option("--regular", check_args.regular, "Hypersubstitution file to test for regularity");
  check->add_flag("--json", check_args.json, "Structured output");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Check depth formulas against direct construction");
  verify->add_option("signature", verify_args.sig, "Signature file")->required();
  verify->add_option("--theorem", verify_args.theorem,
                     "thm2.3, thm3.3, cor4.5, cor4.6, thm5.1, lemma2.2, lemma4.2 or all")
      ->required();
  verify->add_option("--trials", verify_args.trials, "Number of random trials")
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", verify_args.seed, "Base seed");
  verify->add_option("--max-depth", verify_args.max_depth, "Depth budget for generated terms");
  verify->add_option("--var-bound", verify_args.var_bound, "Largest variable index in generated terms")
      ->check(CLI::PositiveNumber);
  verify->add_option("--image-depth", verify_args.image_depth, "Depth budget for hypersubstitution images")
      ->check(CLI::PositiveNumber);
  verify->add_option("--projection-rate", verify_args.projection_rate, "Chance an image is a variable");
  verify->add_option("--deletion-bias", verify_args.deletion_bias, "Chance an image drops variables");
  verify->add_flag("--admit-non-full", verify_args.admit_non_full,
                   "thm2.3: draw arbitrary outer terms (negative control)");
  verify->add_flag("--serial", verify_args.serial, "Run trials on one thread");
  verify->add_flag("--no-shrink", verify_args.no_shrink, "Report discrepancies unshrunk");
  verify->add_flag("--json", verify_args.json, "Structured output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*depth) return cmd_depth(depth_args);
    if (*compose) return cmd_compose(compose_args);
    if (*apply) return cmd_apply(apply_args);
    if (*check) return cmd_check(check_args);
    if (*verify) return cmd_verify(verify_args);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const td::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const td::TermError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
