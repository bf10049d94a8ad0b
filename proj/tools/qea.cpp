// Command-line interface for building modules over quantum elementary
// abelian groups, computing rank varieties, and running the theorem suites.
//
// Exit codes: 0 success, 1 suite failure, 2 usage or validation error.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qea/homological.hpp"
#include "qea/serialize.hpp"
#include "qea/suites.hpp"
#include "qea/variety.hpp"

namespace {

using namespace qea;

std::vector<std::uint32_t> parse_uint_list(const std::string& s) {
  std::vector<std::uint32_t> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(std::uint32_t(std::stoul(cur)));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(std::uint32_t(std::stoul(cur)));
  return out;
}

std::string out_dir() {
  const char* env = std::getenv("QEA_OUT_DIR");
  return env && *env ? env : ".";
}

std::string resolve_out(const std::string& given, const std::string& fallback_name) {
  if (!given.empty()) return given;
  return out_dir() + "/" + fallback_name;
}

Char parse_char(const FieldCtx& ctx, const std::string& s) {
  Char chi;
  chi.c.assign(ctx.n(), 0);
  if (s.empty()) return chi;
  auto vals = parse_uint_list(s);
  if (vals.size() != ctx.n()) fail(ErrorKind::ValidationFailure, "chi needs n entries");
  for (std::uint32_t i = 0; i < ctx.n(); ++i) chi.c[i] = vals[i] % ctx.ell();
  return chi;
}

std::vector<ffelt> parse_point(const FieldCtx& ctx, const std::string& s) {
  auto vals = parse_uint_list(s);
  if (vals.size() != ctx.n()) fail(ErrorKind::ValidationFailure, "lambda needs n coordinates");
  std::vector<ffelt> lam;
  for (auto v : vals) lam.push_back(ffelt(v % ctx.p()));
  return lam;
}

struct BuildArgs {
  std::string kind, chi, lambda, in, out, label;
  std::uint32_t p = 5, ell = 2, n = 2, budget = 40;
  std::uint64_t seed = 1;
};

int cmd_build(const BuildArgs& a) {
  LoadedModule in;
  FieldCtx ctx = [&] {
    if (a.kind == "induce-R") {
      in = module_from_json(read_file(a.in));
      return in.ctx();
    }
    return FieldCtx::make(a.p, a.ell, a.n);
  }();

  ModuleRep M;
  if (a.kind == "trivial") {
    M = trivial_module(ctx);
  } else if (a.kind == "simple") {
    M = simple_module(ctx, parse_char(ctx, a.chi));
  } else if (a.kind == "regular") {
    M = regular_rep(ctx);
  } else if (a.kind == "projcover") {
    M = projective_indecomposable(ctx, parse_char(ctx, a.chi));
  } else if (a.kind == "carlson") {
    if (a.lambda.empty()) fail(ErrorKind::ValidationFailure, "carlson needs --lambda");
    M = carlson_module(ctx, parse_point(ctx, a.lambda));
  } else if (a.kind == "induce-R") {
    if (in.kind != ModuleKind::kR) fail(ErrorKind::ValidationFailure, "induce-R needs an R-module file");
    M = induce_R(*in.r);
  } else if (a.kind == "random") {
    M = random_module(ctx, a.seed, a.budget);
  } else {
    fail(ErrorKind::ValidationFailure, "unknown build kind: " + a.kind);
  }
  M.validate();
  std::string path = resolve_out(a.out, a.kind + ".json");
  write_file_atomic(path, module_to_json(M, a.label));
  std::cout << "wrote " << path << " (dim " << M.dim() << ")\n";
  return 0;
}

struct OpArgs {
  std::string op, in1, in2, out, gvec, label;
  bool check_double = false;
  std::uint32_t trials = 32;
  std::uint64_t seed = 1;
};

int cmd_op(const OpArgs& a) {
  LoadedModule m1 = module_from_json(read_file(a.in1));
  auto need_a = [&](const LoadedModule& m) -> const ModuleRep& {
    if (m.kind != ModuleKind::kA) fail(ErrorKind::ValidationFailure, a.op + " needs an A-module file");
    return *m.a;
  };

  std::string content;
  std::uint32_t odim = 0;
  if (a.op == "tensor" || a.op == "dsum") {
    if (a.in2.empty()) fail(ErrorKind::ValidationFailure, a.op + " needs two module files");
    LoadedModule m2 = module_from_json(read_file(a.in2));
    ModuleRep R = a.op == "tensor" ? tensor(need_a(m1), need_a(m2)) : dsum(need_a(m1), need_a(m2));
    R.validate();
    odim = R.dim();
    content = module_to_json(R, a.label);
  } else if (a.op == "dual" || a.op == "dual-inv" || a.op == "omega" || a.op == "omega-inv" ||
             a.op == "reduce") {
    const ModuleRep& M = need_a(m1);
    ModuleRep R;
    if (a.op == "dual")
      R = dual(M);
    else if (a.op == "dual-inv")
      R = dual_inv(M);
    else if (a.op == "omega")
      R = omega(M);
    else if (a.op == "omega-inv")
      R = omega_inv(M);
    else
      R = stable_reduce(M);
    R.validate();
    if (a.op == "dual" && a.check_double) {
      IsoResult iso = is_isomorphic(dual(R), M, a.trials, a.seed);
      const char* verdict = iso.verdict == IsoVerdict::kIsomorphic
                                ? "isomorphic"
                                : iso.verdict == IsoVerdict::kNotIsomorphic ? "NOT isomorphic"
                                                                            : "undetermined";
      std::cout << "dual(dual(M)) vs M: " << verdict << "\n";
    }
    odim = R.dim();
    content = module_to_json(R, a.label);
  } else if (a.op == "restrict-R") {
    RModule R = restrict_to_R(need_a(m1));
    R.validate();
    odim = R.dim();
    content = rmodule_to_json(R, a.label);
  } else if (a.op == "restrict-Rq") {
    RqModule R = restrict_to_Rq(need_a(m1));
    R.validate();
    odim = R.dim();
    content = rqmodule_to_json(R, a.label);
  } else if (a.op == "induce-R") {
    if (m1.kind != ModuleKind::kR) fail(ErrorKind::ValidationFailure, "induce-R needs an R-module file");
    ModuleRep R = induce_R(*m1.r);
    R.validate();
    odim = R.dim();
    content = module_to_json(R, a.label);
  } else if (a.op == "induce-Rq") {
    if (m1.kind != ModuleKind::kRq) fail(ErrorKind::ValidationFailure, "induce-Rq needs an Rq-module file");
    ModuleRep R = induce_Rq(*m1.rq);
    R.validate();
    odim = R.dim();
    content = module_to_json(R, a.label);
  } else if (a.op == "twist") {
    if (m1.kind != ModuleKind::kRq) fail(ErrorKind::ValidationFailure, "twist needs an Rq-module file");
    if (a.gvec.empty()) fail(ErrorKind::ValidationFailure, "twist needs --g b1,...,bn");
    auto b = parse_uint_list(a.gvec);
    RqModule R = twist_g(*m1.rq, b);
    R.validate();
    odim = R.dim();
    content = rqmodule_to_json(R, a.label);
  } else {
    fail(ErrorKind::ValidationFailure, "unknown op: " + a.op);
  }
  std::string path = resolve_out(a.out, a.op + ".json");
  write_file_atomic(path, content);
  std::cout << "wrote " << path << " (dim " << odim << ")\n";
  return 0;
}

struct VarietyArgs {
  std::string in, out, psi_out, degrees = "1,2";
  bool emit_psi = false;
  int workers = 0;
};

int cmd_variety(const VarietyArgs& a) {
  LoadedModule lm = module_from_json(read_file(a.in));
  std::vector<std::uint32_t> degrees = parse_uint_list(a.degrees);
  VarietySet V;
  if (lm.kind == ModuleKind::kA)
    V = rank_variety(*lm.a, degrees, a.workers);
  else if (lm.kind == ModuleKind::kR)
    V = rank_variety_R(*lm.r, degrees, a.workers);
  else
    V = rank_variety_Rq(*lm.rq, degrees, a.workers);
  const FieldCtx& ctx = lm.ctx();
  std::string path = resolve_out(a.out, "variety.json");
  write_file_atomic(path, variety_to_json(ctx, V, "variety"));
  std::cout << "wrote " << path << " (" << V.total_points() << " orbit(s))\n";
  if (a.emit_psi || !a.psi_out.empty()) {
    std::string psi_path = !a.psi_out.empty() ? a.psi_out : path + ".psi.json";
    write_file_atomic(psi_path, variety_to_json(ctx, psi_image(ctx, V), "psi"));
    std::cout << "wrote " << psi_path << "\n";
  }
  return 0;
}

struct CheckArgs {
  std::string suite = "all", out, degrees;
  std::uint32_t p = 0, ell = 0, n = 0, battery = 20, budget = 0, trials = 32;
  std::uint64_t seed = 1;
  int workers = 0;
  bool negated_antipode = false, inject_fault = false;
};

int cmd_check(const CheckArgs& a) {
  if (a.suite != "all" && !is_suite_name(a.suite))
    fail(ErrorKind::ValidationFailure, "unknown suite: " + a.suite);

  std::vector<SuiteConfig> cfgs;
  if (a.p || a.ell || a.n) {
    SuiteConfig cfg;
    cfg.p = a.p ? a.p : 5;
    cfg.ell = a.ell ? a.ell : 2;
    cfg.n = a.n ? a.n : 2;
    cfg.seed = a.seed;
    cfgs.push_back(cfg);
  } else {
    cfgs = default_configs(a.seed);
  }
  for (auto& cfg : cfgs) {
    cfg.battery = a.battery;
    cfg.size_budget = a.budget;
    cfg.trials = a.trials;
    cfg.workers = a.workers;
    cfg.negated_antipode = a.negated_antipode;
    cfg.inject_fault = a.inject_fault;
    if (!a.degrees.empty()) cfg.ext_degrees = parse_uint_list(a.degrees);
  }

  std::vector<ConfigReport> reports;
  for (auto& cfg : cfgs) {
    ConfigReport cr;
    cr.cfg = cfg;
    if (a.suite == "all")
      cr.suites = run_all(cfg);
    else
      cr.suites.push_back(run_suite(a.suite, cfg));
    reports.push_back(std::move(cr));
  }

  std::string dir = !a.out.empty() ? a.out : out_dir();
  write_file_atomic(dir + "/report.json", report_to_json(reports));
  write_file_atomic(dir + "/report.txt", report_to_text(reports, false));
  std::cout << report_to_text(reports, true);
  std::cout << "reports written to " << dir << "/report.{json,txt}\n";

  for (auto& cr : reports)
    if (!cr.passed()) return 1;
  return 0;
}

int cmd_info(const std::string& in) {
  LoadedModule lm = module_from_json(read_file(in));
  const FieldCtx& ctx = lm.ctx();
  const char* type = lm.kind == ModuleKind::kA ? "A" : lm.kind == ModuleKind::kR ? "R" : "Rq";
  std::cout << "type: " << type << "-module\n"
            << "p=" << ctx.p() << " ell=" << ctx.ell() << " n=" << ctx.n() << " q=" << ctx.q()
            << "\n"
            << "dim: " << lm.dim() << "\n";
  if (!lm.label.empty()) std::cout << "label: " << lm.label << "\n";
  if (lm.kind == ModuleKind::kA) {
    std::cout << "projective: " << (is_projective(*lm.a) ? "yes" : "no") << "\n";
    std::cout << "head:";
    for (auto& [chi, mult] : head_decompose(*lm.a)) {
      Char c = char_from_index(ctx, chi);
      std::cout << " S(";
      for (std::uint32_t i = 0; i < ctx.n(); ++i) std::cout << (i ? "," : "") << c.c[i];
      std::cout << ")x" << mult;
    }
    std::cout << "\n";
  }
  std::cout << "relations: ok\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantum elementary abelian groups: modules, rank varieties, theorem suites"};
  app.require_subcommand(1);

  BuildArgs ba;
  auto* build = app.add_subcommand("build", "construct a module and write it as JSON");
  build->add_option("kind", ba.kind,
                    "trivial | simple | regular | projcover | carlson | induce-R | random")
      ->required();
  build->add_option("--p", ba.p, "prime modulus");
  build->add_option("--ell", ba.ell, "order of the grouplikes");
  build->add_option("--n", ba.n, "number of generator pairs");
  build->add_option("--chi", ba.chi, "character exponents c1,...,cn");
  build->add_option("--lambda", ba.lambda, "point coordinates l1,...,ln");
  build->add_option("--in", ba.in, "input module file (induce-R)");
  build->add_option("--seed", ba.seed, "battery seed (random)");
  build->add_option("--budget", ba.budget, "size budget (random)");
  build->add_option("--out", ba.out, "output path");
  build->add_option("--label", ba.label, "label stored in the file");

  OpArgs oa;
  auto* op = app.add_subcommand("op", "apply a functor to module files");
  op->add_option("op", oa.op,
                 "tensor | dual | dual-inv | dsum | omega | omega-inv | reduce | twist | "
                 "restrict-R | restrict-Rq | induce-R | induce-Rq")
      ->required();
  op->add_option("in1", oa.in1, "first input file")->required();
  op->add_option("in2", oa.in2, "second input file (tensor, dsum)");
  op->add_option("--g", oa.gvec, "group element exponents b1,...,bn (twist)");
  op->add_flag("--check-double", oa.check_double, "after dual: report dual(dual(M)) vs M");
  op->add_option("--trials", oa.trials, "isomorphism trials for --check-double");
  op->add_option("--seed", oa.seed, "randomness seed for --check-double");
  op->add_option("--out", oa.out, "output path");
  op->add_option("--label", oa.label, "label stored in the file");

  VarietyArgs va;
  auto* variety = app.add_subcommand("variety", "compute the rank variety of a module file");
  variety->add_option("module", va.in, "module file")->required();
  variety->add_option("--ext-degrees", va.degrees, "extension degrees, e.g. 1,2");
  variety->add_flag("--emit-psi", va.emit_psi, "also write the psi-image file");
  variety->add_option("--psi-out", va.psi_out, "psi-image output path");
  variety->add_option("--workers", va.workers, "worker threads (0 = hardware)");
  variety->add_option("--out", va.out, "output path");

  CheckArgs ca;
  auto* check = app.add_subcommand("check", "run theorem suites and write a report");
  check->add_option("suite", ca.suite, "suite name or 'all'");
  check->add_option("--p", ca.p, "prime (omit for the default four configs)");
  check->add_option("--ell", ca.ell, "ell");
  check->add_option("--n", ca.n, "n");
  check->add_option("--seed", ca.seed, "battery seed");
  check->add_option("--battery", ca.battery, "battery size per suite");
  check->add_option("--budget", ca.budget, "module size budget (0 = default)");
  check->add_option("--ext-degrees", ca.degrees, "extension degrees, e.g. 1,2");
  check->add_option("--trials", ca.trials, "isomorphism trial count");
  check->add_option("--workers", ca.workers, "worker threads (0 = hardware)");
  check->add_flag("--negated-antipode", ca.negated_antipode,
                  "force S(g_i) = -g_i^{-1}; the hopf suite must then fail");
  check->add_flag("--inject-fault", ca.inject_fault,
                  "corrupt one battery matrix entry (failure-path test hook)");
  check->add_option("--out", ca.out, "report directory");

  std::string info_in;
  auto* info = app.add_subcommand("info", "print a summary of a module file");
  info->add_option("module", info_in, "module file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*build) return cmd_build(ba);
    if (*op) return cmd_op(oa);
    if (*variety) return cmd_variety(va);
    if (*check) return cmd_check(ca);
    if (*info) return cmd_info(info_in);
  } catch (const qea::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
