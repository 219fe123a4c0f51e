#include "rd/cli.hpp"

#include <cstdlib>
#include <ostream>

#include "CLI11.hpp"
#include "rd/errors.hpp"
#include "rd/io.hpp"

namespace rd {

namespace {

constexpr int kExitPass = 0;
constexpr int kExitPredicateFail = 1;
constexpr int kExitMalformed = 2;
constexpr int kExitNoRoots = 3;
constexpr int kExitSpaceGuard = 4;

struct OutputOptions {
  std::string out_path;
  std::string format = "json";
};

void emit(const Json& report, const OutputOptions& opts, const std::string& summary,
          std::ostream& out) {
  if (!opts.out_path.empty()) {
    write_json_file(opts.out_path, report);
    out << summary << "\n";
    return;
  }
  if (opts.format == "text") {
    out << summary << "\n";
    return;
  }
  out << report.dump(2) << "\n";
}

Scalar parse_scalar_literal(const FieldDescriptor& f, const std::string& text) {
  Json j;
  if (f.is_prime_field()) {
    try {
      std::size_t pos = 0;
      std::int64_t v = std::stoll(text, &pos);
      if (pos != text.size()) {
        throw ParseError("trailing characters in scalar \"" + text + "\"");
      }
      if (v < 0 || v >= f.modulus()) {
        throw ParseError("residue " + text + " outside [0, " +
                         std::to_string(f.modulus()) + ")");
      }
      j = v;
    } catch (const std::logic_error&) {
      throw ParseError("malformed residue \"" + text + "\"");
    }
  } else {
    j = text;
  }
  return scalar_from_json(f, j);
}

// ---- verify ----

struct VerifyOutcome {
  bool passed = false;
  Json report;
};

VerifyOutcome run_single_check(const ResolvedTarget& t) {
  VerifyOutcome o;
  if (t.check == "rb-weight") {
    auto r = check_rb_weight(*t.algebra, *t.r, *t.lambda);
    o.passed = r.ok();
    o.report = rb_weight_report_to_json(r);
  } else if (t.check == "generalized-rb") {
    auto r = check_generalized_rb(*t.algebra, *t.rbar, *t.alpha, *t.beta);
    o.passed = r.ok();
    o.report = generalized_report_to_json(r);
  } else if (t.check == "rb-system") {
    auto r = check_rb_system(*t.algebra, *t.r, *t.s);
    o.passed = r.ok();
    o.report = system_report_to_json(r);
  } else if (t.check == "nijenhuis") {
    auto r = check_nijenhuis(*t.algebra, *t.nop);
    o.passed = r.ok();
    o.report = nijenhuis_report_to_json(r);
  } else if (t.check == "bimult") {
    auto r = check_bimultiplication(*t.algebra, *t.sigma);
    o.passed = r.ok();
    o.report = bimult_report_to_json(r);
  } else if (t.check == "self-permutable") {
    auto bi = check_bimultiplication(*t.algebra, *t.sigma);
    auto sp = check_self_permutable(*t.sigma);
    o.passed = bi.ok() && sp.ok();
    o.report = Json{{"passed", o.passed},
                    {"bimult", bimult_report_to_json(bi)},
                    {"self-permutable", self_perm_report_to_json(sp)}};
  } else if (t.check == "homothetic") {
    RBSystem sys{*t.algebra, *t.r, *t.s};
    auto system = check_rb_system(*t.algebra, *t.r, *t.s);
    auto bi = check_bimultiplication(*t.algebra, *t.sigma);
    auto sp = check_self_permutable(*t.sigma);
    auto compat = check_homothetic_compat(sys, *t.sigma);
    o.passed = system.ok() && bi.ok() && sp.ok() && compat.ok();
    o.report = Json{{"passed", o.passed},
                    {"rb-system", system_report_to_json(system)},
                    {"bimult", bimult_report_to_json(bi)},
                    {"self-permutable", self_perm_report_to_json(sp)},
                    {"compat", compat_report_to_json(compat)}};
  } else if (t.check == "dyck") {
    auto r = check_dyck_axioms(*t.dyck);
    o.passed = r.passed();
    o.report = dyck_report_to_json(r);
  } else {
    throw ParseError("unknown check \"" + t.check + "\"");
  }
  return o;
}

// Standalone artifacts are recognized by shape; workspaces need --name.
VerifyOutcome verify_artifact(const Json& j, const std::string& requested_check) {
  std::string kind;
  if (j.contains("kind")) {
    kind = j.at("kind").get<std::string>();
  } else if (j.contains("products") && j.contains("m")) {
    kind = "dyck";
  } else if (j.contains("structure_constants")) {
    kind = "algebra";
  } else {
    throw ParseError("cannot tell what this file holds; pass --name for workspaces");
  }

  if (kind == "dyck") {
    if (!requested_check.empty() && requested_check != "dyck") {
      throw ParseError("file holds a Dyck algebra but --check is \"" + requested_check + "\"");
    }
    ResolvedTarget t;
    t.check = "dyck";
    t.dyck = dyck_from_json(j);
    return run_single_check(t);
  }
  if (kind == "algebra") {
    // Loading already enforces associativity.
    Algebra a = algebra_from_json(j);
    VerifyOutcome o;
    o.passed = true;
    o.report = associativity_report_to_json(check_associative(a));
    return o;
  }
  if (kind == "rb_system") {
    Algebra a = algebra_from_json(j.at("algebra"));
    ResolvedTarget t;
    t.check = "rb-system";
    t.r = linop_from_json(a.field, a.dim, j.at("R"));
    t.s = linop_from_json(a.field, a.dim, j.at("S"));
    t.algebra = std::move(a);
    if (!requested_check.empty() && requested_check != t.check) {
      throw ParseError("file holds an rb-system but --check is \"" + requested_check + "\"");
    }
    return run_single_check(t);
  }
  if (kind == "rb_system_list") {
    Algebra a = algebra_from_json(j.at("algebra"));
    VerifyOutcome o;
    o.passed = true;
    Json items = Json::array();
    for (const Json& sj : j.at("systems")) {
      LinOp r = linop_from_json(a.field, a.dim, sj.at("R"));
      LinOp s = linop_from_json(a.field, a.dim, sj.at("S"));
      auto report = check_rb_system(a, r, s);
      o.passed = o.passed && report.ok();
      items.push_back(system_report_to_json(report));
    }
    o.report = Json{{"passed", o.passed}, {"systems", std::move(items)}};
    return o;
  }
  if (kind == "nijenhuis_embedding") {
    Algebra b = algebra_from_json(j.at("algebra"));
    ResolvedTarget t;
    t.check = "nijenhuis";
    t.nop = linop_from_json(b.field, b.dim, j.at("N"));
    t.algebra = std::move(b);
    if (!requested_check.empty() && requested_check != t.check) {
      throw ParseError("file holds a Nijenhuis embedding but --check is \"" +
                       requested_check + "\"");
    }
    return run_single_check(t);
  }
  if (kind == "homothetic_system") {
    Algebra a = algebra_from_json(j.at("algebra"));
    ResolvedTarget t;
    t.check = "homothetic";
    t.r = linop_from_json(a.field, a.dim, j.at("R"));
    t.s = linop_from_json(a.field, a.dim, j.at("S"));
    t.sigma = double_operator_from_json(a.field, a.dim, j.at("sigma"));
    t.algebra = std::move(a);
    if (!requested_check.empty() && requested_check != t.check) {
      throw ParseError("file holds a homothetic system but --check is \"" +
                       requested_check + "\"");
    }
    return run_single_check(t);
  }
  throw ParseError("unknown artifact kind \"" + kind + "\"");
}

int do_verify(const std::string& file, const std::string& name, const std::string& check,
              const OutputOptions& opts, std::ostream& out) {
  Json j = load_json_file(file);
  VerifyOutcome outcome;
  std::string effective_check = check;
  if (!name.empty()) {
    Workspace ws = workspace_from_json(j);
    ResolvedTarget t = resolve_target(ws, name);
    if (!check.empty() && check != t.check) {
      throw ParseError("target \"" + name + "\" declares check \"" + t.check +
                       "\" but --check says \"" + check + "\"");
    }
    effective_check = t.check;
    outcome = run_single_check(t);
  } else {
    outcome = verify_artifact(j, check);
    if (effective_check.empty()) {
      effective_check = "(inferred)";
    }
  }
  Json report{{"file", file},
              {"name", name.empty() ? Json() : Json(name)},
              {"check", effective_check},
              {"passed", outcome.passed},
              {"report", outcome.report}};
  emit(report, opts,
       std::string(outcome.passed ? "PASS" : "FAIL") + " " +
           (name.empty() ? file : name),
       out);
  return outcome.passed ? kExitPass : kExitPredicateFail;
}

// ---- construct ----

HomotheticRBSystem homothetic_from_source(const ResolvedTarget& src, int pick,
                                          Scalar* lambda_out, Scalar* mu_out) {
  if (src.check == "homothetic") {
    RBSystem sys{*src.algebra, *src.r, *src.s};
    return make_homothetic(std::move(sys), *src.sigma);
  }
  if (src.check == "rb-weight") {
    RBSystem sys = from_weighted({*src.algebra, *src.r, *src.lambda});
    DoubleOperator sigma = scalar_homothetism(*src.algebra, *src.lambda);
    return make_homothetic(std::move(sys), std::move(sigma));
  }
  if (src.check == "generalized-rb") {
    GeneralizedRBOperator g{*src.algebra, *src.rbar, *src.alpha, *src.beta};
    GeneralizedSplitResult split = from_generalized(g);
    if (!split.roots_found) {
      throw Error("noroots:" + split.discriminant.str());
    }
    if (pick < 0 || pick >= static_cast<int>(split.systems.size())) {
      throw ParseError("--pick " + std::to_string(pick) + " out of range; " +
                       std::to_string(split.systems.size()) + " root pairs exist");
    }
    const GeneralizedSplit& chosen = split.systems[static_cast<std::size_t>(pick)];
    if (lambda_out != nullptr) {
      *lambda_out = chosen.lambda;
    }
    if (mu_out != nullptr) {
      *mu_out = chosen.mu;
    }
    return gamma_from_weights(g, chosen.lambda, chosen.mu);
  }
  throw ParseError("target of check \"" + src.check +
                   "\" cannot seed this construction");
}

int do_construct(const std::string& file, const std::string& name, const std::string& make,
                 int level, int pick, const OutputOptions& opts, std::ostream& out) {
  Workspace ws = workspace_from_json(load_json_file(file));
  ResolvedTarget src = resolve_target(ws, name);
  Json artifact;
  std::string summary;

  if (make == "system-from-weighted") {
    if (src.check != "rb-weight") {
      throw ParseError("system-from-weighted needs an rb-weight target");
    }
    RBSystem sys = from_weighted({*src.algebra, *src.r, *src.lambda});
    if (!check_rb_system(sys.algebra, sys.r, sys.s).ok()) {
      throw Error("internal: constructed system failed re-verification");
    }
    artifact = Json{{"kind", "rb_system"},
                    {"algebra", algebra_to_json(sys.algebra)},
                    {"R", linop_to_json(sys.r)},
                    {"S", linop_to_json(sys.s)}};
    summary = "rb-system from weight " + src.lambda->str();
  } else if (make == "system-from-generalized") {
    if (src.check != "generalized-rb") {
      throw ParseError("system-from-generalized needs a generalized-rb target");
    }
    GeneralizedRBOperator g{*src.algebra, *src.rbar, *src.alpha, *src.beta};
    GeneralizedSplitResult split = from_generalized(g);
    Json systems = Json::array();
    for (const GeneralizedSplit& sp : split.systems) {
      if (!check_rb_system(sp.system.algebra, sp.system.r, sp.system.s).ok()) {
        throw Error("internal: split system failed re-verification");
      }
      systems.push_back(Json{{"lambda", scalar_to_json(sp.lambda)},
                             {"mu", scalar_to_json(sp.mu)},
                             {"discriminant", scalar_to_json(split.discriminant)},
                             {"R", linop_to_json(sp.system.r)},
                             {"S", linop_to_json(sp.system.s)}});
    }
    artifact = Json{{"kind", "rb_system_list"},
                    {"algebra", algebra_to_json(*src.algebra)},
                    {"discriminant", scalar_to_json(split.discriminant)},
                    {"systems", std::move(systems)}};
    if (!split.roots_found) {
      artifact["note"] = "NoRootsInField";
      emit(artifact, opts,
           "no roots in the field; discriminant " + split.discriminant.str(), out);
      return kExitNoRoots;
    }
    summary = std::to_string(split.systems.size()) + " systems, discriminant " +
              split.discriminant.str();
  } else if (make == "nijenhuis-embedding") {
    if (src.check != "rb-system") {
      throw ParseError("nijenhuis-embedding needs an rb-system target");
    }
    if (!check_rb_system(*src.algebra, *src.r, *src.s).ok()) {
      throw InvalidInput("source pair fails the Rota-Baxter system equations");
    }
    Algebra b = build_triple_algebra(*src.algebra);
    LinOp n = build_nijenhuis_matrix(*src.algebra, *src.r, *src.s);
    if (!check_nijenhuis(b, n).ok()) {
      throw Error("internal: embedding failed re-verification");
    }
    artifact = Json{{"kind", "nijenhuis_embedding"},
                    {"algebra", algebra_to_json(b)},
                    {"N", linop_to_json(n)}};
    summary = "Nijenhuis embedding on dimension " + std::to_string(b.dim);
  } else if (make == "gamma-homothetic") {
    if (src.check != "generalized-rb") {
      throw ParseError("gamma-homothetic needs a generalized-rb target");
    }
    Scalar lambda = Scalar::zero(src.algebra->field);
    Scalar mu = Scalar::zero(src.algebra->field);
    HomotheticRBSystem h;
    try {
      h = homothetic_from_source(src, pick, &lambda, &mu);
    } catch (const Error& e) {
      std::string what = e.what();
      if (what.rfind("noroots:", 0) == 0) {
        Json report{{"kind", "homothetic_system"},
                    {"note", "NoRootsInField"},
                    {"discriminant", what.substr(8)}};
        emit(report, opts, "no roots in the field; discriminant " + what.substr(8), out);
        return kExitNoRoots;
      }
      throw;
    }
    artifact = Json{{"kind", "homothetic_system"},
                    {"algebra", algebra_to_json(h.system.algebra)},
                    {"R", linop_to_json(h.system.r)},
                    {"S", linop_to_json(h.system.s)},
                    {"sigma", double_operator_to_json(h.sigma)},
                    {"lambda", scalar_to_json(lambda)},
                    {"mu", scalar_to_json(mu)}};
    summary = "homothetic system for (lambda, mu) = (" + lambda.str() + ", " +
              mu.str() + ")";
  } else if (make == "dyck") {
    if (level < 1) {
      throw ParseError("construct dyck needs --m with a level >= 1");
    }
    HomotheticRBSystem h;
    try {
      h = homothetic_from_source(src, pick, nullptr, nullptr);
    } catch (const Error& e) {
      std::string what = e.what();
      if (what.rfind("noroots:", 0) == 0) {
        Json report{{"note", "NoRootsInField"}, {"discriminant", what.substr(8)}};
        emit(report, opts, "no roots in the field; discriminant " + what.substr(8), out);
        return kExitNoRoots;
      }
      throw;
    }
    DyckAlgebra d = build_dyck(h, level);
    artifact = dyck_to_json(d);
    summary = "level-" + std::to_string(level) + " Dyck algebra of dimension " +
              std::to_string(d.dim);
  } else {
    throw ParseError("unknown construction \"" + make + "\"");
  }

  emit(artifact, opts, summary, out);
  return kExitPass;
}

// ---- search ----

int do_search(const std::string& file, const std::string& algebra_name,
              const std::string& target, const std::string& weight,
              const std::string& alpha, const std::string& beta, std::uint64_t guard,
              bool run_cross_validate, const OutputOptions& opts, std::ostream& out) {
  Workspace ws = workspace_from_json(load_json_file(file));
  auto it = ws.algebras.find(algebra_name);
  if (it == ws.algebras.end()) {
    throw ParseError("unknown algebra \"" + algebra_name + "\"");
  }
  SearchSpec spec;
  spec.algebra = it->second;
  auto t = target_from_name(target);
  if (!t) {
    throw ParseError("unknown search target \"" + target + "\"");
  }
  spec.target = *t;
  spec.guard = guard;
  if (!spec.algebra.field.is_prime_field()) {
    throw ParseError("search needs a prime-field algebra");
  }
  if (!weight.empty()) {
    spec.weight = parse_scalar_literal(spec.algebra.field, weight);
  }
  if (!alpha.empty()) {
    spec.alpha = parse_scalar_literal(spec.algebra.field, alpha);
  }
  if (!beta.empty()) {
    spec.beta = parse_scalar_literal(spec.algebra.field, beta);
  }
  if (spec.target == SearchTarget::weighted_rb && !spec.weight) {
    throw ParseError("weighted-rb search needs --weight");
  }
  if (spec.target == SearchTarget::generalized_rb && (!spec.alpha || !spec.beta)) {
    throw ParseError("generalized-rb search needs --alpha and --beta");
  }

  SearchResult result = enumerate_search(spec);
  Json report = search_result_to_json(result);
  if (run_cross_validate) {
    report["cross_validation"] = cross_validate_report_to_json(cross_validate(result));
  }
  emit(report, opts,
       std::to_string(result.hits.size()) + " hits out of " +
           std::to_string(result.total_scanned) + " candidates",
       out);
  return kExitPass;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact verifier and constructor for Rota-Baxter systems, "
               "homothetisms and Dyck algebras"};
  app.require_subcommand(1);

  std::string file;
  std::string name;
  std::string check;
  OutputOptions opts;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--file", file, "workspace or artifact JSON file")->required();
    cmd->add_option("--out", opts.out_path, "write the JSON report here");
    cmd->add_option("--format", opts.format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
  };

  CLI::App* verify = app.add_subcommand("verify", "run a predicate and report witnesses");
  add_common(verify);
  verify->add_option("--name", name, "target name inside a workspace file");
  verify->add_option("--check", check,
                     "rb-weight | generalized-rb | rb-system | nijenhuis | bimult | "
                     "self-permutable | homothetic | dyck");

  std::string make;
  int level = 0;
  int pick = 0;
  CLI::App* construct = app.add_subcommand("construct", "build and certify an artifact");
  add_common(construct);
  construct->add_option("--name", name, "source target name")->required();
  construct
      ->add_option("--make", make,
                   "system-from-weighted | system-from-generalized | "
                   "nijenhuis-embedding | gamma-homothetic | dyck")
      ->required();
  construct->add_option("--m", level, "Dyck level (>= 1)");
  construct->add_option("--pick", pick, "root-pair index for weight splittings");

  std::string algebra_name;
  std::string target;
  std::string weight;
  std::string alpha;
  std::string beta;
  std::uint64_t guard = kDefaultGuard;
  bool cross = false;
  if (const char* env = std::getenv("RD_GUARD")) {
    try {
      guard = std::stoull(env);
    } catch (const std::logic_error&) {
      err << "ignoring malformed RD_GUARD\n";
    }
  }
  CLI::App* search = app.add_subcommand("search", "exhaustive census over a prime field");
  add_common(search);
  search->add_option("--algebra", algebra_name, "algebra name inside the workspace")
      ->required();
  search
      ->add_option("--target", target,
                   "weighted-rb | generalized-rb | rb-system | bimult | "
                   "self-permutable | homothetic-triple")
      ->required();
  search->add_option("--weight", weight, "weight for weighted-rb");
  search->add_option("--alpha", alpha, "first weight for generalized-rb");
  search->add_option("--beta", beta, "second weight for generalized-rb");
  search->add_option("--guard", guard, "candidate-space guard");
  search->add_flag("--cross-validate", cross, "run downstream constructions on every hit");

  std::vector<const char*> argv;
  argv.push_back("rd");
  for (const std::string& a : args) {
    argv.push_back(a.c_str());
  }
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitMalformed;
  }

  try {
    if (verify->parsed()) {
      return do_verify(file, name, check, opts, out);
    }
    if (construct->parsed()) {
      return do_construct(file, name, make, level, pick, opts, out);
    }
    if (search->parsed()) {
      return do_search(file, algebra_name, target, weight, alpha, beta, guard, cross,
                       opts, out);
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitMalformed;
  } catch (const SpaceTooLarge& e) {
    err << "error: " << e.what() << "\n";
    return kExitSpaceGuard;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return kExitPredicateFail;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitMalformed;
  }
  return kExitMalformed;
}

}  // namespace rd
