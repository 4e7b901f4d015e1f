#include <CLI11.hpp>
#include <iostream>

#include "endolie/census.hpp"
#include "endolie/endo.hpp"
#include "endolie/io.hpp"
#include "endolie/repro.hpp"

using namespace endolie;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitError = 1;
constexpr int kExitFlagged = 2;
constexpr int kExitUsage = 64;

void emit(const json& j, const std::string& out) {
  if (out.empty())
    std::cout << j.dump(2) << "\n";
  else
    save_json(j, out);
}

json repro_to_json(const ReproReport& rep) {
  json j;
  j["suite"] = rep.suite;
  j["params"] = rep.params;
  json checks = json::array();
  for (const auto& c : rep.checks) {
    json e;
    e["name"] = c.name;
    e["source"] = c.source;
    e["expected"] = c.expected;
    e["computed"] = c.computed;
    e["verdict"] = c.verdict == Verdict::Pass
                       ? "pass"
                       : (c.verdict == Verdict::Fail ? "fail" : "flagged");
    checks.push_back(e);
  }
  j["checks"] = checks;
  j["notes"] = rep.notes;
  j["overall"] = rep.overall() == Verdict::Pass
                     ? "pass"
                     : (rep.overall() == Verdict::Fail ? "fail" : "flagged");
  return j;
}

int finish_repro(const ReproReport& rep, const std::string& out) {
  emit(repro_to_json(rep), out);
  for (const auto& c : rep.checks)
    std::cerr << (c.verdict == Verdict::Pass
                      ? "pass    "
                      : (c.verdict == Verdict::Fail ? "FAIL    " : "flagged "))
              << c.name << ": " << c.computed << "\n";
  switch (rep.overall()) {
    case Verdict::Pass:
      return kExitPass;
    case Verdict::Flagged:
      return kExitFlagged;
    default:
      return kExitError;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with modules over small restricted "
               "enveloping algebras"};
  app.require_subcommand(1);

  // algebra build
  auto* algebra = app.add_subcommand("algebra", "Algebra files");
  auto* abuild = algebra->add_subcommand("build", "Emit a preset algebra");
  std::string a_preset, a_out;
  i64 a_p = 2;
  abuild->add_option("--preset", a_preset, "Preset name")->required();
  abuild->add_option("-p", a_p, "Prime")->required();
  abuild->add_option("--out", a_out, "Output file (default stdout)");

  // module ops
  auto* module = app.add_subcommand("module", "Module files and operations");
  std::vector<std::string> m_files;
  std::string m_out, m_op;
  u64 m_seed = 0;
  for (const char* op : {"check", "tensor", "dual", "strip", "decompose"}) {
    auto* sc = module->add_subcommand(op, op);
    sc->add_option("--module", m_files, "Module file (twice for tensor)")
        ->required();
    sc->add_option("--out", m_out, "Output file");
    sc->add_option("--seed", m_seed, "Search seed");
    sc->callback([op, &m_op] { m_op = op; });
  }
  module->require_subcommand(1);

  // syzygy
  auto* syz = app.add_subcommand("syzygy", "Compute Omega^n");
  std::string s_file, s_out;
  int s_n = 1;
  syz->add_option("--module", s_file, "Module file")->required();
  syz->add_option("-n", s_n, "Syzygy index (may be negative)")->required();
  syz->add_option("--out", s_out, "Output file");

  // endo
  auto* endo = app.add_subcommand("endo", "Endotrivial classes");
  std::vector<std::string> e_files;
  std::string e_out, e_op;
  int e_bound = 6;
  for (const char* op : {"check", "add", "degree"}) {
    auto* sc = endo->add_subcommand(op, op);
    sc->add_option("--module", e_files, "Module file (twice for add)")
        ->required();
    sc->add_option("--out", e_out, "Output file");
    sc->add_option("--bound", e_bound, "Degree search bound");
    sc->callback([op, &e_op] { e_op = op; });
  }
  endo->require_subcommand(1);

  // census
  auto* census = app.add_subcommand("census", "Endotrivial census");
  std::string c_preset, c_out;
  i64 c_p = 2;
  int c_dim = 1;
  bool c_exhaustive = false;
  u64 c_sample = 0, c_seed = 0, c_budget = u64(1) << 26;
  census->add_option("--preset", c_preset, "Preset name")->required();
  census->add_option("-p", c_p, "Prime")->required();
  census->add_option("--dim", c_dim, "Module dimension")->required();
  census->add_flag("--exhaustive", c_exhaustive, "Exhaustive scan (default)");
  census->add_option("--sample", c_sample, "Sampled scan with K draws");
  census->add_option("--seed", c_seed, "Sampling seed");
  census->add_option("--budget", c_budget, "Exhaustive point budget");
  census->add_option("--out", c_out, "Output file");

  // repro
  auto* repro = app.add_subcommand("repro", "Reproduction suites");
  auto* rsl2 = repro->add_subcommand("sl2-table", "SL2 resolution table");
  i64 r_p = 3;
  int r_maxn = 4;
  std::string r_out, r_dot, r2_out;
  rsl2->add_option("-p", r_p, "Prime (2, 3 or 5)")->required();
  rsl2->add_option("--max-n", r_maxn, "Largest syzygy index");
  rsl2->add_option("--out", r_out, "Output file");
  auto* rsl3 = repro->add_subcommand("sl3-omega2", "SL3 p=2 Omega^2 suite");
  rsl3->add_option("--emit-dot", r_dot, "Write the weight diagram as DOT");
  rsl3->add_option("--out", r2_out, "Output file");
  repro->require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*abuild) {
      auto pres = preset(a_preset, a_p);
      build_algebra(pres);  // full consistency check
      emit(algebra_to_json(pres), a_out);
      return kExitPass;
    }
    if (*module) {
      std::vector<ModuleRep> ms;
      for (const auto& f : m_files) ms.push_back(load_module(f));
      if (m_op == "check") {
        auto rep = check_valid(ms.at(0));
        json j;
        j["ok"] = rep.ok;
        j["violation"] = rep.violation;
        emit(j, m_out);
        return rep.ok ? kExitPass : kExitFlagged;
      }
      if (m_op == "tensor") {
        if (ms.size() != 2) throw CLI::ValidationError("tensor needs two modules");
        emit(module_to_json(tensor(ms[0], ms[1])), m_out);
        return kExitPass;
      }
      if (m_op == "dual") {
        emit(module_to_json(dual(ms.at(0))), m_out);
        return kExitPass;
      }
      if (m_op == "strip") {
        emit(module_to_json(strip_projectives(ms.at(0))), m_out);
        return kExitPass;
      }
      // decompose
      json j = json::array();
      for (const auto& part : decompose(ms.at(0), m_seed))
        j.push_back(module_to_json(part));
      emit(j, m_out);
      return kExitPass;
    }
    if (*syz) {
      emit(module_to_json(syzygy(load_module(s_file), s_n)), s_out);
      return kExitPass;
    }
    if (*endo) {
      std::vector<ModuleRep> ms;
      for (const auto& f : e_files) ms.push_back(load_module(f));
      if (e_op == "check") {
        bool et = is_endotrivial(ms.at(0));
        json j;
        j["endotrivial"] = et;
        emit(j, e_out);
        return et ? kExitPass : kExitFlagged;
      }
      if (e_op == "add") {
        if (ms.size() != 2) throw CLI::ValidationError("add needs two modules");
        auto sum = class_add(endo_class(ms[0]), endo_class(ms[1]));
        emit(module_to_json(sum.rep), e_out);
        return kExitPass;
      }
      auto deg = syzygy_degree(ms.at(0), e_bound);
      json j;
      if (deg.n)
        j["degree"] = *deg.n;
      else
        j["degree"] = nullptr;
      j["indeterminate"] = deg.indeterminate;
      emit(j, e_out);
      return deg.n ? kExitPass : kExitFlagged;
    }
    if (*census) {
      CensusOptions opt;
      opt.exhaustive = c_sample == 0;
      opt.sample = c_sample;
      opt.seed = c_seed;
      opt.budget = c_budget;
      auto alg = build_algebra(preset(c_preset, c_p));
      auto rep = endotrivial_census(alg, c_dim, opt);
      emit(census_to_json(rep), c_out);
      std::cerr << "classes: " << rep.representatives.size() << "\n";
      return kExitPass;
    }
    if (*rsl2) return finish_repro(repro_sl2_table(r_p, r_maxn), r_out);
    if (*rsl3) return finish_repro(repro_sl3_omega2(r_dot), r2_out);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitUsage;
}
