#include "rigiditykit/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <sstream>

#include "CLI11.hpp"
#include "rigiditykit/bounds.hpp"
#include "rigiditykit/corpus.hpp"
#include "rigiditykit/error.hpp"
#include "rigiditykit/expr.hpp"
#include "rigiditykit/fuzz.hpp"
#include "rigiditykit/json_io.hpp"
#include "rigiditykit/mterm.hpp"
#include "rigiditykit/rigidity.hpp"
#include "rigiditykit/search.hpp"
#include "rigiditykit/shadow.hpp"
#include "rigiditykit/trinomial.hpp"

namespace rigiditykit {

namespace {

struct Output {
  std::ostream& out;
  std::ostream& err;
  bool json = false;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r\n") - b + 1);
}

/// Reads `arg` as a file when such a file exists, otherwise returns it as text.
std::string file_or_text(const std::string& arg) {
  std::error_code ec;
  if (!arg.empty() && std::filesystem::is_regular_file(trim(arg), ec)) return read_text_file(trim(arg));
  return arg;
}

Json json_arg(const std::string& arg) {
  const std::string text = file_or_text(arg);
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::SchemaError, e.what());
  }
}

std::vector<UPoly> parse_family(const std::vector<std::string>& exprs, std::string& var) {
  std::vector<UPoly> out;
  std::optional<std::string> seen;
  for (const auto& e : exprs) {
    std::string v;
    out.push_back(parse_upoly(e, &v));
    if (!v.empty()) {
      if (seen && *seen != v) throw Error(ErrorCode::NotUnivariate, "inputs use both " + *seen + " and " + v);
      seen = v;
    }
  }
  var = seen.value_or("t");
  return out;
}

std::optional<std::set<VarName>> parse_vars(const std::string& list) {
  if (trim(list).empty()) return std::nullopt;
  std::set<VarName> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!is_valid_var_name(item)) throw Error(ErrorCode::InvalidArgument, "bad variable name '" + item + "'");
    out.insert(item);
  }
  return out;
}

/// "a..b" or "a,b,c".
std::vector<std::int64_t> parse_int_list(const std::string& text) {
  const std::string s = trim(text);
  std::vector<std::int64_t> out;
  try {
    const auto dots = s.find("..");
    if (dots != std::string::npos) {
      const std::int64_t lo = std::stoll(s.substr(0, dots));
      const std::int64_t hi = std::stoll(s.substr(dots + 2));
      if (hi < lo || hi - lo > 1000) throw Error(ErrorCode::InvalidArgument, "bad range '" + s + "'");
      for (std::int64_t v = lo; v <= hi; ++v) out.push_back(v);
      return out;
    }
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoll(trim(item)));
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::InvalidArgument, "bad integer list '" + s + "'");
  }
  return out;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

void print_json(const Output& o, const Json& j) { o.out << j.dump(2) << "\n"; }

void print_certificate(const Output& o, const Certificate& c) {
  if (o.json) {
    o.out << emit_certificate(c);
    return;
  }
  o.out << "verdict: " << to_string(c.verdict) << "\n";
  for (const auto& ch : c.checked) o.out << "check: " << ch.name << ": " << (ch.passed ? "passed" : "failed") << "\n";
  for (const auto& e : c.exponent_sums) {
    o.out << "exponent sum: " << e.sum.str() << " (threshold " << e.threshold.str() << ")\n";
  }
  for (const auto& a : c.assumptions) o.out << "assumption: " << a << "\n";
  if (c.factoriality) {
    o.out << "d:";
    for (auto d : c.factoriality->d) o.out << " " << d;
    o.out << " (pairwise coprime: " << yes_no(c.factoriality->pairwise_coprime) << ")\n";
  }
  if (c.split) {
    o.out << "core: " << format_poly(c.split->core) << "\n";
    o.out << "free variables:";
    for (const auto& v : c.split->free_variables) o.out << " " << v;
    o.out << "\n";
  }
  if (!c.ml_generators.empty()) {
    o.out << "ML generators:";
    for (const auto& v : c.ml_generators) o.out << " " << v;
    o.out << "\n";
  }
  o.out << "SML equals the whole ring: " << yes_no(c.sml_all) << "\n";
  if (!c.notes.empty()) o.out << "notes: " << c.notes << "\n";
}

int cmd_radical(const Output& o, const std::string& expr, bool count_only) {
  std::string var;
  const UPoly p = parse_upoly(expr, &var);
  if (var.empty()) var = "t";
  if (count_only) {
    const std::size_t n = distinct_root_count(p);
    if (o.json) {
      print_json(o, Json{{"input", format_upoly(p, var)}, {"nroots", n}});
    } else {
      o.out << n << "\n";
    }
    return kExitOk;
  }
  const UPoly r = radical(p);
  if (o.json) {
    print_json(o, Json{{"input", format_upoly(p, var)}, {"radical", format_upoly(r, var)},
                       {"degree", r.degree().value()}});
  } else {
    o.out << format_upoly(r, var) << "\n";
  }
  return kExitOk;
}

int cmd_ms(const Output& o, const std::vector<std::string>& exprs) {
  if (exprs.size() != 3) throw Error(ErrorCode::InvalidArgument, "ms takes exactly three polynomials");
  std::string var;
  const auto fs = parse_family(exprs, var);
  const MsReport r = check_ms_triple(fs[0], fs[1], fs[2]);
  if (o.json) {
    print_json(o, to_json(r));
  } else if (!r.hypotheses_ok) {
    o.out << "hypothesis failed: " << to_string(*r.failed_hypothesis) << "\n";
  } else {
    o.out << "max_degree: " << r.max_degree << "\nbound: " << r.bound << "\nholds: " << yes_no(r.holds)
          << "\ntight: " << yes_no(r.tight) << "\n";
  }
  if (!r.hypotheses_ok) return kExitInputError;
  return r.holds ? kExitOk : kExitInvariantBreach;
}

int cmd_gms(const Output& o, const std::vector<std::string>& exprs) {
  std::string var;
  const auto fs = parse_family(exprs, var);
  const GenMsReport r = check_generalized_ms(fs);
  if (o.json) {
    print_json(o, to_json(r));
  } else if (!r.hypotheses_ok) {
    o.out << "hypothesis failed: " << to_string(*r.failed_hypothesis);
    if (r.violating_subset) {
      o.out << " (subset";
      for (auto i : *r.violating_subset) o.out << " " << i;
      o.out << ")";
    }
    o.out << "\n";
  } else {
    o.out << "n: " << r.n << "\nroot counts:";
    for (auto c : r.root_counts) o.out << " " << c;
    o.out << "\nmax_degree: " << r.max_degree << "\nbound: " << r.bound << "\nholds: " << yes_no(r.holds) << "\n";
  }
  if (!r.hypotheses_ok) return kExitInputError;
  return r.holds ? kExitOk : kExitInvariantBreach;
}

int cmd_shadow(const Output& o, const std::string& mode, const std::string& terms_arg) {
  const auto terms = terms_from_json(json_arg(terms_arg));
  const ShadowReport r = mode == "zero" ? shadow_sum_zero(terms) : shadow_sum_const(terms);
  if (o.json) {
    print_json(o, to_json(r));
  } else {
    o.out << "verdict: " << to_string(r.verdict) << "\n";
    if (r.failed_hypothesis) o.out << "failed hypothesis: " << to_string(*r.failed_hypothesis) << "\n";
    o.out << "exponent sum: " << r.exponent_sum.str() << " (threshold " << r.threshold.str() << ")\n";
    const auto& c = r.chain;
    o.out << "max term degree: " << c.max_term_degree << "\n"
          << "degree bound step: ";
    if (c.max_term_degree == 0) {
      o.out << "not applicable (all terms constant)\n";
    } else {
      o.out << c.max_term_degree << " <= " << c.gms_bound << " (" << (c.gms_step_holds ? "holds" : "fails") << ")\n";
    }
    o.out << "sum of base root counts: " << c.sum_root_counts_bases << "\n"
          << "sum of base degrees: " << c.sum_base_degrees << "\n"
          << "degree * (threshold - exponent sum): " << c.final_product.str() << "\n";
  }
  switch (r.verdict) {
    case ShadowVerdict::TheoremViolation: return kExitInvariantBreach;
    case ShadowVerdict::HypothesisFailed: return kExitInputError;
    default: return kExitOk;
  }
}

int cmd_rigidity(const Output& o, const std::string& arg, bool assume_prime, const std::string& subst_arg,
                 const std::string& vars) {
  MPoly f = parse_poly(file_or_text(arg));
  auto ring = parse_vars(vars);
  if (!subst_arg.empty()) {
    const auto subst = parse_subst(file_or_text(subst_arg), ring ? *ring : f.vars());
    f = substitute(f, subst);
    if (ring) {
      std::set<VarName> moved = *ring;
      for (const auto& [old_var, image] : subst) {
        moved.erase(old_var);
        for (const auto& v : image.vars()) moved.insert(v);
      }
      ring = moved;
    }
  }
  print_certificate(o, certify_rigidity(validate_mterm(f), assume_prime, ring));
  return kExitOk;
}

int cmd_semirigid(const Output& o, const std::string& arg, bool assume_prime, const std::string& subst_arg,
                  const std::string& vars) {
  const MPoly f = parse_poly(file_or_text(arg));
  const auto ring = parse_vars(vars);
  std::optional<std::map<VarName, MPoly>> subst;
  if (!subst_arg.empty()) subst = parse_subst(file_or_text(subst_arg), ring ? *ring : f.vars());
  print_certificate(o, detect_semirigid(f, subst, assume_prime, ring));
  return kExitOk;
}

int cmd_trinomial(const Output& o, const std::string& arg, bool assume_factorial) {
  print_certificate(o, certify_trinomial_variety(trinomial_from_json(json_arg(arg)), assume_factorial));
  return kExitOk;
}

void print_fuzz(const Output& o, const FuzzReport& r) {
  if (o.json) {
    print_json(o, to_json(r));
    return;
  }
  o.out << "theorem: " << r.theorem << " (n = " << r.n << ")\n"
        << "seed: " << r.seed << "\ntrials: " << r.trials << "\nhypothesis rejections: " << r.hypothesis_rejections
        << "\nchecked: " << r.checked << "\nviolations: " << r.violations << "\ntight: " << r.tight_count
        << "\nnear tight (gap <= " << FuzzReport::kNearTightGap << "): " << r.near_tight_count << "\n";
  for (const auto& t : r.tight_instances) {
    o.out << "  trial " << t.trial << ", gap " << t.gap() << ":";
    for (const auto& p : t.polys) o.out << " [" << format_upoly(p) << "]";
    o.out << "\n";
  }
}

int cmd_fuzz(const Output& o, const std::string& which, std::size_t n, std::uint64_t trials, std::uint64_t seed,
             std::uint32_t max_deg, std::int64_t coeff_bound, bool timing) {
  if (trials < 1) throw Error(ErrorCode::InvalidArgument, "trials must be >= 1");
  const FuzzReport r =
      which == "ms" ? fuzz_ms(trials, seed, max_deg, coeff_bound) : fuzz_gms(n, trials, seed, max_deg, coeff_bound);
  print_fuzz(o, r);
  if (timing) o.err << "elapsed: " << r.elapsed_seconds << " s\n";
  if (r.violations != 0) {
    o.err << "invariant breach: " << r.violations << " violation(s)\n" << to_json(r).dump(2) << "\n";
    return kExitInvariantBreach;
  }
  return kExitOk;
}

int cmd_search(const Output& o, std::size_t m, std::uint32_t deg_cap, const std::string& coeffs,
               const std::string& exponents, std::uint64_t budget) {
  SearchSpace space;
  space.m = m;
  space.deg_cap = deg_cap;
  space.coeff_set = parse_int_list(coeffs);
  for (auto k : parse_int_list(exponents)) {
    if (k < 1 || k > 64) throw Error(ErrorCode::InvalidArgument, "exponents must lie in [1, 64]");
    space.exponent_set.push_back(static_cast<std::uint32_t>(k));
  }
  const SearchReport r = exhaustive_shadow_search(space, budget == 0 ? search_budget() : budget);
  if (o.json) {
    print_json(o, to_json(r));
  } else {
    o.out << "space: " << r.space_description << "\nbases: " << r.base_count
          << "\nexponent tuples: " << r.exponent_tuples << "\ninstances enumerated: " << r.instances_enumerated
          << "\nzero-sum instances: " << r.zero_sum_instances << "\n";
    for (const auto& [k, v] : r.verdict_counts) o.out << "  " << k << ": " << v << "\n";
    o.out << "counterexamples: " << r.counterexamples << "\n";
  }
  if (r.counterexamples != 0) {
    o.err << "invariant breach: " << r.counterexamples << " counterexample(s)\n" << to_json(r).dump(2) << "\n";
    return kExitInvariantBreach;
  }
  return kExitOk;
}

int cmd_corpus(const Output& o, const std::string& path) {
  const CorpusReport r = run_regression_corpus(path);
  for (const auto& w : r.warnings) o.err << "warning: " << w << "\n";
  if (o.json) {
    print_json(o, to_json(r));
  } else {
    o.out << "entries: " << r.entries << "\npassed: " << r.passed << "\nmismatches: " << r.mismatches.size() << "\n";
    for (const auto& m : r.mismatches) {
      o.out << "  " << m.entry << " " << m.path << ": expected " << m.expected.dump() << ", got " << m.actual.dump()
            << "\n";
    }
  }
  return r.ok() ? kExitOk : kExitInputError;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact polynomial degree bounds and rigidity certificates", "rigiditykit"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  app.add_flag("--json", json, "Machine-readable output");

  std::string expr;
  std::vector<std::string> exprs;
  bool assume_prime = false;
  bool assume_factorial = false;
  std::string subst;
  std::string vars;
  std::string mode = "zero";
  std::string which;
  std::size_t n = 4;
  std::uint64_t trials = 1000;
  std::uint64_t seed = 0;
  std::uint32_t max_deg = 10;
  std::int64_t coeff_bound = 9;
  bool timing = false;
  std::size_t m = 3;
  std::uint32_t deg_cap = 2;
  std::string coeffs = "-2..2";
  std::string exponents = "2..6";
  std::uint64_t budget = 0;

  auto* radical_cmd = app.add_subcommand("radical", "Squarefree part of a univariate polynomial");
  radical_cmd->add_option("expr", expr)->required();
  auto* nroots_cmd = app.add_subcommand("nroots", "Number of distinct roots");
  nroots_cmd->add_option("expr", expr)->required();

  auto* ms_cmd = app.add_subcommand("ms", "Check a + b + c = 0 against max deg <= N(abc) - 1");
  ms_cmd->add_option("exprs", exprs)->required()->expected(3);
  auto* gms_cmd = app.add_subcommand("gms", "Check f_1 + ... + f_n = 0 against (n-2)(sum N(f_i) - 1)");
  gms_cmd->add_option("exprs", exprs)->required()->expected(3, 1 << 20);

  auto* shadow_cmd = app.add_subcommand("shadow", "Run the univariate shadow of the kernel argument on a terms file");
  shadow_cmd->add_option("--mode", mode, "zero or const")->check(CLI::IsMember({"zero", "const"}));
  shadow_cmd->add_option("terms", expr, "Terms file or inline JSON")->required();

  auto* rigidity_cmd = app.add_subcommand("rigidity", "Certify rigidity of an m-term hypersurface");
  rigidity_cmd->add_option("expr", expr, "Expression or file")->required();
  rigidity_cmd->add_flag("--assume-prime", assume_prime, "Take the polynomial as prime");
  rigidity_cmd->add_option("--subst", subst, "Linear change of variables (file or text)");
  rigidity_cmd->add_option("--vars", vars, "Comma-separated ring generators");

  auto* trinomial_cmd = app.add_subcommand("trinomial", "Certify rigidity of a trinomial variety");
  trinomial_cmd->add_option("data", expr, "JSON file or inline JSON")->required();
  trinomial_cmd->add_flag("--assume-graded-factorial", assume_factorial, "Take the grading as factorial");

  auto* semirigid_cmd = app.add_subcommand("semirigid", "Look for a rigid core plus one free variable");
  semirigid_cmd->add_option("expr", expr, "Expression or file")->required();
  semirigid_cmd->add_option("--subst", subst, "Linear change of variables (file or text)");
  semirigid_cmd->add_flag("--assume-prime", assume_prime, "Take the core as prime");
  semirigid_cmd->add_option("--vars", vars, "Comma-separated ring generators");

  auto* fuzz_cmd = app.add_subcommand("fuzz", "Seeded random testing of the degree bounds");
  fuzz_cmd->add_option("theorem", which, "ms or gms")->required()->check(CLI::IsMember({"ms", "gms"}));
  fuzz_cmd->add_option("--trials", trials)->capture_default_str();
  fuzz_cmd->add_option("--seed", seed)->capture_default_str();
  fuzz_cmd->add_option("--max-deg", max_deg)->capture_default_str();
  fuzz_cmd->add_option("--coeff-bound", coeff_bound)->capture_default_str()->check(CLI::PositiveNumber);
  fuzz_cmd->add_option("--n", n, "Family size for gms")->capture_default_str();
  fuzz_cmd->add_flag("--timing", timing, "Report elapsed time on stderr");

  auto* search_cmd = app.add_subcommand("search", "Exhaustive small-instance search");
  search_cmd->add_option("target", which, "shadow")->required()->check(CLI::IsMember({"shadow"}));
  search_cmd->add_option("--m", m)->capture_default_str();
  search_cmd->add_option("--deg-cap", deg_cap)->capture_default_str();
  search_cmd->add_option("--coeffs", coeffs, "Base coefficients, a..b or a,b,c")->capture_default_str();
  search_cmd->add_option("--exponents", exponents, "Exponents, a..b or a,b,c")->capture_default_str();
  search_cmd->add_option("--budget", budget, "Instance cap (default RIGIDITYKIT_BUDGET or 10^7)");

  auto* corpus_cmd = app.add_subcommand("corpus", "Regression corpus");
  corpus_cmd->add_option("action", which, "run")->required()->check(CLI::IsMember({"run"}));
  corpus_cmd->add_option("path", expr, "Corpus file or directory")->required();

  // Expressions such as "-t^2" would otherwise read as short options.
  std::vector<std::string> argv;
  argv.reserve(args.size());
  for (const auto& a : args) {
    const bool dash_expr = a.size() > 1 && a[0] == '-' && a[1] != '-' && a != "-h";
    argv.push_back(dash_expr ? " " + a : a);
  }
  std::reverse(argv.begin(), argv.end());

  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitInputError;
  }

  const Output o{out, err, json};
  try {
    if (*radical_cmd) return cmd_radical(o, expr, false);
    if (*nroots_cmd) return cmd_radical(o, expr, true);
    if (*ms_cmd) return cmd_ms(o, exprs);
    if (*gms_cmd) return cmd_gms(o, exprs);
    if (*shadow_cmd) return cmd_shadow(o, mode, expr);
    if (*rigidity_cmd) return cmd_rigidity(o, expr, assume_prime, subst, vars);
    if (*trinomial_cmd) return cmd_trinomial(o, expr, assume_factorial);
    if (*semirigid_cmd) return cmd_semirigid(o, expr, assume_prime, subst, vars);
    if (*fuzz_cmd) return cmd_fuzz(o, which, n, trials, seed, max_deg, coeff_bound, timing);
    if (*search_cmd) return cmd_search(o, m, deg_cap, coeffs, exponents, budget);
    if (*corpus_cmd) return cmd_corpus(o, expr);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::logic_error& e) {
    err << "internal invariant breach: " << e.what() << "\n";
    return kExitInvariantBreach;
  }
  err << app.help();
  return kExitInputError;
}

}  // namespace rigiditykit
