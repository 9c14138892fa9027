// Copyright 2026 The pairq Authors.
// SPDX-License-Identifier: Apache-2.0

// pairq: resources, optimize, scan and compile on FCIDUMP inputs.
// Exit codes: 0 success, 2 usage or grammar error, 3 input error,
// 4 optimizer failure.

#include <glob.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "pairq/ansatz.hpp"
#include "pairq/compile.hpp"
#include "pairq/errors.hpp"
#include "pairq/io.hpp"
#include "pairq/parallel.hpp"
#include "pairq/report.hpp"
#include "pairq/spectrum.hpp"
#include "pairq/statevector.hpp"
#include "pairq/vqe.hpp"

using namespace pairq;

namespace {

constexpr int kUsage = 2;
constexpr int kInput = 3;
constexpr int kOptimizer = 4;

struct SystemArgs {
  std::string fcidump;
  std::vector<int> frozen;
  std::vector<int> active;
};

struct AnsatzArgs {
  std::string name;
  std::string arrangement = "ladder";
  bool hcb = false;
};

struct VqeArgs {
  std::string start = "zero";
  double start_value = 0.1;
  std::string grad = "adjoint";
  int n_starts = 1;
  std::uint64_t seed = 0;
  int max_iter = 200;
  double tol_grad = 1e-5;
};

void add_system(CLI::App* cmd, SystemArgs& a) {
  cmd->add_option("fcidump", a.fcidump, "FCIDUMP file")->required();
  cmd->add_option("--frozen", a.frozen, "frozen orbitals (0-based, comma separated)")->delimiter(',');
  cmd->add_option("--active", a.active, "active orbitals (0-based, comma separated)")->delimiter(',');
}

void add_ansatz(CLI::App* cmd, AnsatzArgs& a) {
  cmd->add_option("ansatz", a.name, "ansatz name, e.g. SPA, UpCCGSD, 2-SPA-GS, HCB-UpCCGD")->required();
  cmd->add_option("--direct-compiling", a.arrangement, "SPA arrangement")
      ->check(CLI::IsMember({"ladder", "canonical"}));
  cmd->add_flag("--hcb", a.hcb, "run in the hard-core boson representation (one qubit per orbital)");
}

void add_vqe(CLI::App* cmd, VqeArgs& a) {
  cmd->add_option("--start", a.start, "initial angles")->check(CLI::IsMember({"zero", "constant", "random"}));
  cmd->add_option("--start-value", a.start_value, "angle for --start constant");
  cmd->add_option("--grad", a.grad, "gradient method")
      ->check(CLI::IsMember({"adjoint", "shift", "fd"}));
  cmd->add_option("--starts", a.n_starts, "number of starts; extra starts are uniform in [-pi/2, pi/2]")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--seed", a.seed, "seed for random starts");
  cmd->add_option("--max-iter", a.max_iter, "BFGS iteration cap")->check(CLI::PositiveNumber);
  cmd->add_option("--tol", a.tol_grad, "gradient infinity-norm tolerance")->check(CLI::PositiveNumber);
}

AnsatzSpec make_spec(const AnsatzArgs& a) {
  AnsatzSpec spec = parse_ansatz(a.name);
  spec.arrangement = parse_arrangement(a.arrangement);
  if (a.hcb) spec.hcb = true;
  spec.validate();
  return spec;
}

OptimizeConfig make_config(const VqeArgs& a) {
  OptimizeConfig cfg;
  if (a.start == "constant") cfg.start = OptimizeConfig::Start::Constant;
  if (a.start == "random") cfg.start = OptimizeConfig::Start::Random;
  cfg.start_value = a.start_value;
  cfg.grad_mode = parse_grad_mode(a.grad);
  cfg.n_starts = a.n_starts;
  cfg.seed = a.seed;
  cfg.max_iter = a.max_iter;
  cfg.tol_grad = a.tol_grad;
  cfg.validate();
  return cfg;
}

LoadedSystem load(const SystemArgs& a) { return load_system(a.fcidump, a.frozen, a.active); }

PauliSum hamiltonian(const MolecularSystem& sys, const AnsatzSpec& spec) {
  return spec.hcb ? build_hcb_hamiltonian(sys) : build_qubit_hamiltonian(sys, spec.layout);
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

// ---- resources -------------------------------------------------------------

struct ResourcesCmd {
  SystemArgs sys;
  AnsatzArgs ansatz;
  int level = -1;
  bool json = false;
};

int run_resources(const ResourcesCmd& a) {
  const AnsatzSpec spec = make_spec(a.ansatz);
  const LoadedSystem ls = load(a.sys);
  const int level = a.level < 0 ? default_level(spec) : a.level;
  const ResourceReport r = resources(compile(build_ansatz(ls.active, spec), level));
  if (a.json) {
    nlohmann::ordered_json j = {{"input", a.sys.fcidump}, {"ansatz", spec.name()}, {"level", level},
                                {"n_qubits", r.n_qubits}, {"n_params", r.n_params},  {"n_cnot", r.n_cnot},
                                {"depth", r.depth}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "ansatz    " << spec.name() << "\nlevel     " << level << "\nn_qubits  " << r.n_qubits
              << "\nn_params  " << r.n_params << "\nn_cnot    " << r.n_cnot << "\ndepth     " << r.depth << "\n";
  }
  return 0;
}

// ---- compile ---------------------------------------------------------------

struct CompileCmd {
  SystemArgs sys;
  AnsatzArgs ansatz;
  int level = -1;
  std::string out;
};

int run_compile(const CompileCmd& a) {
  const AnsatzSpec spec = make_spec(a.ansatz);
  const LoadedSystem ls = load(a.sys);
  const int level = a.level < 0 ? default_level(spec) : a.level;
  std::ostringstream text;
  write_circuit(text, compile(build_ansatz(ls.active, spec), level));
  write_text(a.out, text.str());
  return 0;
}

// ---- optimize --------------------------------------------------------------

struct OptimizeCmd {
  SystemArgs sys;
  AnsatzArgs ansatz;
  VqeArgs vqe;
  int level = -1;
  bool oo = false;
  bool variance = false;
  bool fci = false;
  std::string out;
  std::string dump_state;
};

int run_optimize(const OptimizeCmd& a) {
  OptimizeRequest q;
  q.fcidump = a.sys.fcidump;
  q.frozen = a.sys.frozen;
  q.active = a.sys.active;
  q.ansatz = make_spec(a.ansatz);
  q.config = make_config(a.vqe);
  q.level = a.level;
  q.orbital_optimization = a.oo;
  q.variance = a.variance;
  q.fci = a.fci;
  q.dump_state = a.dump_state;
  write_text(a.out, to_json(run_optimize(q)) + "\n");
  return 0;
}

// ---- scan ------------------------------------------------------------------

struct ScanCmd {
  std::vector<std::string> patterns;
  std::vector<std::string> ansatze = {"SPA"};
  std::string arrangement = "ladder";
  VqeArgs vqe;
  bool fci = false;
  bool npe = false;
  std::string out;
};

std::vector<std::string> expand(const std::vector<std::string>& patterns) {
  std::vector<std::string> files;
  for (const auto& p : patterns) {
    glob_t g{};
    if (::glob(p.c_str(), 0, nullptr, &g) == 0)
      for (std::size_t i = 0; i < g.gl_pathc; ++i) files.emplace_back(g.gl_pathv[i]);
    globfree(&g);
  }
  return files;
}

std::string geometry_tag(const std::string& path, const LoadedSystem& ls) {
  if (ls.reference && !ls.reference->geometry_tag.empty()) return ls.reference->geometry_tag;
  return std::filesystem::path(path).stem().string();
}

struct ScanRow {
  std::string tag;
  std::vector<double> energies;  // one per ansatz
  std::optional<double> fci;
};

std::string fmt(double x) {
  std::ostringstream s;
  s << std::setprecision(12) << x;
  return s.str();
}

int run_scan(const ScanCmd& a) {
  std::vector<AnsatzSpec> specs;
  for (const auto& name : a.ansatze) {
    AnsatzArgs aa;
    aa.name = name;
    aa.arrangement = a.arrangement;
    specs.push_back(make_spec(aa));
  }
  const OptimizeConfig base = make_config(a.vqe);
  const std::vector<std::string> files = expand(a.patterns);
  if (files.empty()) throw InputError("no FCIDUMP file matches the given pattern(s)");
  const bool want_fci = a.fci || a.npe;

  std::vector<ScanRow> rows(files.size());
  parallel_for(files.size(), [&](std::size_t i) {
    const LoadedSystem ls = load_system(files[i]);
    ScanRow& row = rows[i];
    row.tag = geometry_tag(files[i], ls);
    // later ansatze reuse angles of earlier ones with the same names
    ParamMap warm;
    for (const auto& spec : specs) {
      OptimizeConfig cfg = base;
      if (!warm.empty() && cfg.start == OptimizeConfig::Start::Zero) {
        cfg.start = OptimizeConfig::Start::Given;
        cfg.initial = warm;
      }
      const VQEResult r = minimize(build_ansatz(ls.active, spec), hamiltonian(ls.active, spec), cfg);
      row.energies.push_back(r.energy);
      for (const auto& [k, v] : r.params) warm[k] = v;
    }
    if (want_fci) {
      const auto f = fci_energy(ls);
      if (!f) throw InputError("no FCI energy available for '" + files[i] + "'");
      row.fci = f->first;
    }
  });

  std::ostringstream csv;
  csv << "geometry,method,energy" << (a.fci ? ",fci" : "") << "\n";
  for (const auto& row : rows) {
    auto line = [&](const std::string& method, double e) {
      csv << row.tag << "," << method << "," << fmt(e);
      if (a.fci) csv << "," << fmt(*row.fci);
      csv << "\n";
    };
    for (std::size_t k = 0; k < specs.size(); ++k) line(specs[k].name(), row.energies[k]);
    if (a.fci) line("FCI", *row.fci);
  }
  write_text(a.out, csv.str());

  if (a.npe) {
    std::ostringstream t;
    if (a.out.empty() || a.out == "-") t << "\n";
    t << "method,npe\n";
    for (std::size_t k = 0; k < specs.size(); ++k) {
      double lo = INFINITY, hi = -INFINITY;
      for (const auto& row : rows) {
        const double err = std::abs(row.energies[k] - *row.fci);
        lo = std::min(lo, err);
        hi = std::max(hi, err);
      }
      t << specs[k].name() << "," << fmt(hi - lo) << "\n";
    }
    std::cout << t.str();
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Separable-pair and pair-restricted coupled-cluster circuits on FCIDUMP Hamiltonians", "pairq"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  ResourcesCmd res;
  auto* c_res = app.add_subcommand("resources", "parameter count, CNOT count and depth of a compiled ansatz");
  add_system(c_res, res.sys);
  add_ansatz(c_res, res.ansatz);
  c_res->add_option("--level", res.level, "optimization level (default 2 for SPA circuits, else 1)")
      ->check(CLI::Range(0, 2));
  c_res->add_flag("--json", res.json, "emit JSON");

  OptimizeCmd opt;
  auto* c_opt = app.add_subcommand("optimize", "minimize the energy and write a JSON run report");
  add_system(c_opt, opt.sys);
  add_ansatz(c_opt, opt.ansatz);
  add_vqe(c_opt, opt.vqe);
  c_opt->add_option("--level", opt.level, "optimization level for the resource report")->check(CLI::Range(0, 2));
  c_opt->add_flag("--oo", opt.oo, "optimize orbitals together with the circuit");
  c_opt->add_flag("--variance", opt.variance, "report energy variance of the reference and optimized states");
  c_opt->add_flag("--fci", opt.fci, "report the FCI energy of the active space");
  c_opt->add_option("--out", opt.out, "report path (default stdout)");
  c_opt->add_option("--dump-state", opt.dump_state, "write the optimized statevector (binary)");

  ScanCmd scan;
  auto* c_scan = app.add_subcommand("scan", "optimize several ansatze over a set of geometries, CSV output");
  c_scan->add_option("fcidumps", scan.patterns, "FCIDUMP files or glob patterns")->required();
  c_scan->add_option("--ansatz", scan.ansatze, "ansatz names (comma separated)")->delimiter(',');
  c_scan->add_option("--direct-compiling", scan.arrangement, "SPA arrangement")
      ->check(CLI::IsMember({"ladder", "canonical"}));
  add_vqe(c_scan, scan.vqe);
  c_scan->add_flag("--fci", scan.fci, "add FCI rows and column");
  c_scan->add_flag("--npe", scan.npe, "print the non-parallelity error per method");
  c_scan->add_option("--out", scan.out, "CSV path (default stdout)");

  CompileCmd cmp;
  auto* c_cmp = app.add_subcommand("compile", "print the compiled circuit, one gate per line");
  add_system(c_cmp, cmp.sys);
  add_ansatz(c_cmp, cmp.ansatz);
  c_cmp->add_option("--level", cmp.level, "optimization level (default 2 for SPA circuits, else 1)")
      ->check(CLI::Range(0, 2));
  c_cmp->add_option("--out", cmp.out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  const bool is_opt = c_opt->parsed();
  auto fail = [&](const char* kind, const std::exception& e, int code) {
    std::cerr << "pairq: " << e.what() << "\n";
    if (is_opt) std::cout << error_json(kind, e.what(), code, opt.sys.fcidump, opt.ansatz.name) << "\n";
    return code;
  };
  try {
    if (c_res->parsed()) return run_resources(res);
    if (is_opt) return run_optimize(opt);
    if (c_scan->parsed()) return run_scan(scan);
    if (c_cmp->parsed()) return run_compile(cmp);
  } catch (const GrammarError& e) {
    return fail("grammar", e, kUsage);
  } catch (const InputError& e) {
    return fail("input", e, kInput);
  } catch (const OptimizerError& e) {
    return fail("optimizer", e, kOptimizer);
  } catch (const std::invalid_argument& e) {
    return fail("usage", e, kUsage);
  } catch (const std::exception& e) {
    return fail("error", e, kInput);
  }
  return kUsage;
}
