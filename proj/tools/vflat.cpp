// Copyright 2026 The vflat Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command line front end.
//
//   vflat build   FILE [--b ...] [--retention all|sliding|final] [--out DIR]
//   vflat query   FILE --beta ... [--k K]
//   vflat levels  FILE [--k K] [--alpha A]
//   vflat lsm     FILE [--k K] [--at ...]
//   vflat mc      FILE [--at ...]
//   vflat path    FILE --from ... --to ...
//   vflat order   FILE
//   vflat verify  FILE [--check ID] [--format text|json] [--out DIR]
//   vflat export  FILE --out DIR [--k K] [--heatmap]
//
// Exit codes: 0 ok, 1 usage error, 2 invalid or malformed input,
// 3 verification FAIL.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "vflat/vflat.hpp"

namespace {

using vflat::Error;
using vflat::ErrorKind;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;
constexpr int kExitVerifyFail = 3;

struct RunConfig {
  std::string instance_path;
  std::vector<std::int64_t> b;
  std::string retention = "all";
  std::string config_path;
  std::string out_dir;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> optima_cap;
  std::optional<std::uint64_t> enumeration_cap;
  std::optional<std::uint64_t> pair_budget;

  std::optional<std::size_t> k;
  std::vector<std::string> beta;
  std::vector<std::string> at;
  std::vector<std::string> from;
  std::vector<std::string> to;
  std::optional<std::int64_t> alpha;
  std::string check;
  std::string format = "text";
  bool heatmap = false;
};

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kInvalidInput, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void WriteFile(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::kInvalidInput, "cannot write '" + path.string() + "'");
  out << text;
}

// Config file < VFLAT_SEED < explicit flags.
vflat::Config ResolveConfig(RunConfig& rc) {
  vflat::Config cfg;
  if (!rc.config_path.empty()) {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(ReadFile(rc.config_path));
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorKind::kInvalidInput, std::string("config: ") + e.what());
    }
    if (!doc.is_object()) throw Error(ErrorKind::kInvalidInput, "config must be an object");
    for (const auto& [key, value] : doc.items()) {
      auto count = [&](const char* name) {
        if (!value.is_number_unsigned() || value.get<std::uint64_t>() == 0) {
          throw Error(ErrorKind::kInvalidInput, std::string("config: ") + name + " must be a positive integer");
        }
        return value.get<std::uint64_t>();
      };
      if (key == "optima_cap") {
        cfg.optima_cap = count("optima_cap");
      } else if (key == "enumeration_cap") {
        cfg.enumeration_cap = count("enumeration_cap");
      } else if (key == "pair_budget") {
        cfg.pair_budget = count("pair_budget");
      } else if (key == "seed") {
        if (!value.is_number_unsigned() && !(value.is_number_integer() && value.get<std::int64_t>() == 0)) {
          throw Error(ErrorKind::kInvalidInput, "config: seed must be a nonnegative integer");
        }
        cfg.seed = value.get<std::uint64_t>();
      } else if (key == "retention") {
        if (!value.is_string()) throw Error(ErrorKind::kInvalidInput, "config: retention must be a string");
        rc.retention = value.get<std::string>();
      } else if (key == "out") {
        if (!value.is_string()) throw Error(ErrorKind::kInvalidInput, "config: out must be a string");
        if (rc.out_dir.empty()) rc.out_dir = value.get<std::string>();
      } else {
        throw Error(ErrorKind::kInvalidInput, "config: unknown key '" + key + "'");
      }
    }
  }
  if (const char* env = std::getenv("VFLAT_SEED"); env != nullptr && *env != '\0') {
    try {
      std::size_t used = 0;
      cfg.seed = std::stoull(env, &used);
      if (env[used] != '\0') throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw Error(ErrorKind::kInvalidInput, std::string("VFLAT_SEED is not an integer: ") + env);
    }
  }
  if (rc.seed) cfg.seed = *rc.seed;
  if (rc.optima_cap) cfg.optima_cap = *rc.optima_cap;
  if (rc.enumeration_cap) cfg.enumeration_cap = *rc.enumeration_cap;
  if (rc.pair_budget) cfg.pair_budget = *rc.pair_budget;
  if (cfg.optima_cap == 0 || cfg.enumeration_cap == 0 || cfg.pair_budget == 0) {
    throw Error(ErrorKind::kInvalidInput, "caps must be positive");
  }
  return cfg;
}

vflat::Instance LoadInstance(const RunConfig& rc) {
  vflat::Instance inst = vflat::ReadInstanceDocument(ReadFile(rc.instance_path));
  if (!rc.b.empty()) inst.b = rc.b;
  vflat::RequireValid(inst);
  return inst;
}

std::string Points(const std::vector<vflat::Point>& pts) {
  std::string out;
  for (const auto& p : pts) out += (out.empty() ? "" : " ") + vflat::FormatPoint(p);
  return out.empty() ? "(none)" : out;
}

std::string Axes(const std::vector<bool>& flags) {
  std::string out;
  for (std::size_t i = 0; i < flags.size(); ++i) {
    if (flags[i]) out += (out.empty() ? "axis " : ", axis ") + std::to_string(i + 1);
  }
  return out.empty() ? "none" : out;
}

std::size_t LevelOrFinal(const RunConfig& rc, const vflat::Instance& inst) {
  return rc.k ? *rc.k : inst.n();
}

int CmdBuild(RunConfig& rc) {
  ResolveConfig(rc);
  const vflat::Instance inst = LoadInstance(rc);
  const auto start = std::chrono::steady_clock::now();
  const vflat::ValueStack stack = vflat::BuildStack(inst, vflat::ParseRetention(rc.retention));
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  auto final_table = stack.table(inst.n());
  const auto [lo, hi] = std::minmax_element(final_table.begin(), final_table.end());
  std::cout << "instance: " << (inst.name.empty() ? "(unnamed)" : inst.name) << "  m=" << inst.m()
            << " n=" << inst.n() << " b=" << vflat::FormatPoint(inst.b) << "\n";
  std::cout << "cells: " << stack.box().cell_count() << "\n";
  std::cout << "retention: " << vflat::RetentionName(stack.retention()) << "\n";
  std::cout << "z_" << inst.n() << " range: [" << *lo << "," << *hi << "]\n";
  if (stack.retention() == vflat::Retention::kAllLevels) {
    const vflat::SolutionDag dag(inst, stack);
    std::cout << "solution dag: " << (inst.n() + 1) * stack.box().cell_count() << " flag cells\n";
  }
  std::cout << "build time: " << seconds << " s\n";
  if (!rc.out_dir.empty()) {
    std::filesystem::create_directories(rc.out_dir);
    WriteFile(std::filesystem::path(rc.out_dir) / "values.csv", vflat::ValueTableCsv(stack));
  }
  return kExitOk;
}

int CmdQuery(RunConfig& rc) {
  ResolveConfig(rc);
  const vflat::Instance inst = LoadInstance(rc);
  const vflat::ValueStack stack = vflat::BuildStack(inst, vflat::ParseRetention(rc.retention));
  const std::size_t k = LevelOrFinal(rc, inst);
  const vflat::DecimalPoint beta = vflat::ParseDecimalPoint(rc.beta);
  const vflat::Value z = vflat::Query(stack, k, beta);
  std::cout << "z_" << k << vflat::FormatPoint(vflat::FloorPoint(beta)) << " = " << z << "\n";
  return kExitOk;
}

int CmdLevels(RunConfig& rc) {
  ResolveConfig(rc);
  const vflat::Instance inst = LoadInstance(rc);
  const vflat::ValueStack stack = vflat::BuildStack(inst, vflat::ParseRetention(rc.retention));
  const std::size_t k = LevelOrFinal(rc, inst);
  if (rc.alpha) {
    const vflat::LevelSet s = vflat::ComputeLevelSet(stack, k, *rc.alpha);
    std::cout << "S_" << k << "(" << *rc.alpha << "): " << s.members.size() << " points\n";
    std::cout << Points(s.members) << "\n";
    return kExitOk;
  }
  const auto values = vflat::LevelValueSet(stack, k);
  std::cout << "values of z_" << k << ":\n";
  for (vflat::Value alpha : values) {
    std::cout << "  " << alpha << ": " << vflat::ComputeLevelSet(stack, k, alpha).members.size()
              << " points\n";
  }
  return kExitOk;
}

int CmdLsm(RunConfig& rc) {
  ResolveConfig(rc);
  const vflat::Instance inst = LoadInstance(rc);
  const vflat::ValueStack stack = vflat::BuildStack(inst, vflat::ParseRetention(rc.retention));
  const std::size_t k = LevelOrFinal(rc, inst);
  if (!rc.at.empty()) {
    const vflat::Point beta = vflat::FloorPoint(vflat::ParseDecimalPoint(rc.at));
    std::cout << vflat::FormatPoint(beta) << (vflat::IsLsm(stack, k, beta) ? " is" : " is not")
              << " level-set-minimal for z_" << k << "\n";
    return kExitOk;
  }
  const vflat::LsmSet lsm = vflat::ComputeLsmSet(stack, k);
  std::cout << "B_" << k << ": " << lsm.size() << " of " << stack.box().cell_count() << " points\n";
  std::cout << Points(lsm.Members()) << "\n";
  return kExitOk;
}

void PrintComponent(const vflat::ComponentMap& map, const vflat::ValueStack& stack,
                    const vflat::SolutionDag* dag, const vflat::Config& cfg, std::size_t id) {
  const vflat::Component& comp = map.component(id);
  std::cout << "component " << id << ": z = " << comp.value << ", " << comp.members.size()
            << " members\n";
  std::cout << "  members: " << Points(comp.members) << "\n";
  std::cout << "  minimal: " << Points(comp.minimal) << "\n";
  std::cout << "  frontier: " << Points(vflat::LsmFrontier(map, stack, id).points) << "\n";
  std::cout << "  boundary: " << Axes(comp.boundary_touching) << "\n";
  if (dag == nullptr) return;
  for (const auto& c : vflat::CommonOptima(map, stack, *dag, id, cfg.optima_cap)) {
    std::cout << "  optima at " << vflat::FormatPoint(c.anchor) << ":";
    for (const auto& s : c.optima) std::cout << " " << vflat::FormatSolution(s.x);
    if (c.truncated) std::cout << " ... (truncated)";
    std::cout << "\n    optimal throughout: " << Points(c.region) << "\n";
  }
}

int CmdMc(RunConfig& rc) {
  const vflat::Config cfg = ResolveConfig(rc);
  const vflat::Instance inst = LoadInstance(rc);
  const vflat::ValueStack stack = vflat::BuildStack(inst, vflat::ParseRetention(rc.retention));
  const vflat::ComponentMap map = vflat::LabelComponents(stack);
  std::optional<vflat::SolutionDag> dag;
  if (stack.retention() == vflat::Retention::kAllLevels) dag.emplace(inst, stack);
  if (!rc.at.empty()) {
    const std::size_t id = vflat::ComponentOf(map, vflat::ParseDecimalPoint(rc.at));
    PrintComponent(map, stack, dag ? &*dag : nullptr, cfg, id);
    return kExitOk;
  }
  std::cout << map.components().size() << " components\n";
  for (const auto& comp : map.components()) {
    std::cout << "  " << comp.id << ": z = " << comp.value << ", " << comp.members.size()
              << " members, minimal " << Points(comp.minimal) << ", boundary "
              << Axes(comp.boundary_touching) << "\n";
  }
  return kExitOk;
}

int CmdPath(RunConfig& rc) {
  ResolveConfig(rc);
  const vflat::Instance inst = LoadInstance(rc);
  const vflat::ValueStack stack = vflat::BuildStack(inst, vflat::ParseRetention(rc.retention));
  const vflat::ComponentMap map = vflat::LabelComponents(stack);
  const vflat::LatticePath path = vflat::IsovaluePath(map, vflat::ParseDecimalPoint(rc.from),
                                                      vflat::ParseDecimalPoint(rc.to));
  auto line = [](const char* label, const std::vector<vflat::DecimalPoint>& pts) {
    std::cout << label;
    for (const auto& p : pts) std::cout << " " << vflat::FormatDecimalPoint(p);
    std::cout << "\n";
  };
  line("head:", path.head);
  std::cout << "lattice: " << Points(path.lattice) << "\n";
  line("tail:", path.tail);
  return kExitOk;
}

int CmdOrder(RunConfig& rc) {
  ResolveConfig(rc);
  const vflat::Instance inst = LoadInstance(rc);
  const vflat::OrderedInstance ordered = vflat::OrderColumns(inst);
  const vflat::ValueStack stack = vflat::BuildStack(ordered.instance);
  const vflat::ColumnClassification cls =
      vflat::ClassifyColumns(ordered.instance, stack, ordered.permutation);
  std::cout << "permutation (ordered -> original):";
  for (std::size_t j : ordered.permutation) std::cout << " " << j + 1;
  std::cout << "\n";
  std::cout << "k  original  column  c  z_{k-1}(a_k)  case  lsm  necessary\n";
  for (std::size_t k = 0; k < cls.columns.size(); ++k) {
    const auto& info = cls.columns[k];
    std::cout << k + 1 << "  " << info.original + 1 << "  "
              << vflat::FormatPoint(ordered.instance.columns[k]) << "  " << ordered.instance.c[k]
              << "  " << info.previous_value << "  " << vflat::ColumnCaseName(info.tag) << "  "
              << (info.lsm ? "yes" : "no") << "  " << (info.necessary ? "yes" : "no") << "\n";
  }
  std::vector<std::size_t> necessary = cls.NecessaryOriginal();
  std::sort(necessary.begin(), necessary.end());
  std::cout << "necessary columns (original):";
  for (std::size_t j : necessary) std::cout << " " << j + 1;
  std::cout << "\n";
  return kExitOk;
}

int CmdVerify(RunConfig& rc) {
  const vflat::Config cfg = ResolveConfig(rc);
  const vflat::Instance inst = LoadInstance(rc);
  if (vflat::ParseRetention(rc.retention) != vflat::Retention::kAllLevels) {
    throw Error(ErrorKind::kNotRetained, "k not retained: verify needs retention 'all'");
  }
  const vflat::Analysis analysis = vflat::Analysis::Build(inst);
  vflat::Report report = vflat::NewReport(analysis, cfg);
  if (rc.check.empty()) {
    report = vflat::RunSuite(analysis, cfg);
  } else {
    report.entries.push_back(vflat::RunCheck(rc.check, analysis, cfg));
  }
  const std::string text =
      rc.format == "json" ? report.ToJson().dump(2) + "\n" : report.ToText();
  std::cout << text;
  if (!rc.out_dir.empty()) {
    std::filesystem::create_directories(rc.out_dir);
    WriteFile(std::filesystem::path(rc.out_dir) / (rc.format == "json" ? "report.json" : "report.txt"),
              text);
  }
  if (report.Count(vflat::Status::kDeclined) > 0) {
    std::cerr << "warning: " << report.Count(vflat::Status::kDeclined)
              << " check(s) declined to certify\n";
  }
  return report.Failed() ? kExitVerifyFail : kExitOk;
}

int CmdExport(RunConfig& rc) {
  ResolveConfig(rc);
  const vflat::Instance inst = LoadInstance(rc);
  if (rc.out_dir.empty()) throw Error(ErrorKind::kInvalidInput, "export needs --out");
  const vflat::ValueStack stack = vflat::BuildStack(inst, vflat::ParseRetention(rc.retention));
  if (rc.heatmap && inst.m() != 2) {
    throw Error(ErrorKind::kInvalidInput,
                "heatmap needs m = 2, instance has m = " + std::to_string(inst.m()));
  }
  const std::filesystem::path dir(rc.out_dir);
  std::filesystem::create_directories(dir);
  const std::optional<std::size_t> only =
      rc.k ? rc.k : (stack.retention() == vflat::Retention::kAllLevels ? std::nullopt
                                                                      : std::optional(inst.n()));
  if (rc.k) stack.RequireRetained(*rc.k);
  WriteFile(dir / "values.csv", vflat::ValueTableCsv(stack, only));
  WriteFile(dir / "components.csv", vflat::ComponentCsv(vflat::LabelComponents(stack)));
  std::cout << "wrote " << (dir / "values.csv").string() << "\n"
            << "wrote " << (dir / "components.csv").string() << "\n";
  if (inst.m() == 2) {
    const std::size_t k = LevelOrFinal(rc, inst);
    WriteFile(dir / "heatmap.pgm", vflat::ValueHeatmapPgm(stack, k));
    std::cout << "wrote " << (dir / "heatmap.pgm").string() << "\n";
  }
  return kExitOk;
}

int ExitCodeFor(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidInput:
    case ErrorKind::kValidation:
    case ErrorKind::kOverflow:
      return kExitInput;
    default:
      return kExitUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact IP value functions, level-set-minimal vectors and MC-level sets"};
  app.require_subcommand(1);
  RunConfig rc;

  auto common = [&](CLI::App* sub) {
    sub->add_option("instance", rc.instance_path, "instance JSON file")->required();
    sub->add_option("--b", rc.b, "override the right-hand-side bound b");
    sub->add_option("--retention", rc.retention, "all | sliding | final")
        ->check(CLI::IsMember({"all", "sliding", "final"}));
    sub->add_option("--config", rc.config_path, "JSON run configuration");
    sub->add_option("--seed", rc.seed, "sampling seed (default 0, env VFLAT_SEED)");
    sub->add_option("--optima-cap", rc.optima_cap, "maximum optima enumerated per point");
    sub->add_option("--enumeration-cap", rc.enumeration_cap, "brute-force enumeration cap");
    sub->add_option("--pair-budget", rc.pair_budget, "superadditivity pair budget");
    sub->add_option("--out", rc.out_dir, "output directory");
  };

  auto* build = app.add_subcommand("build", "build the value tables and print a summary");
  common(build);
  auto* query = app.add_subcommand("query", "z_k at a decimal right-hand side");
  common(query);
  query->add_option("--k", rc.k, "level (default n)");
  query->add_option("--beta", rc.beta, "right-hand side")->required();
  auto* levels = app.add_subcommand("levels", "level value set or one level set");
  common(levels);
  levels->add_option("--k", rc.k, "level (default n)");
  levels->add_option("--alpha", rc.alpha, "list S_k(alpha)");
  auto* lsm = app.add_subcommand("lsm", "level-set-minimal vectors");
  common(lsm);
  lsm->add_option("--k", rc.k, "level (default n)");
  lsm->add_option("--at", rc.at, "test one point");
  auto* mc = app.add_subcommand("mc", "maximal connected level sets of z_n");
  common(mc);
  mc->add_option("--at", rc.at, "show the component of this point");
  auto* path = app.add_subcommand("path", "isovalue path between two points");
  common(path);
  path->add_option("--from", rc.from, "start point")->required();
  path->add_option("--to", rc.to, "end point")->required();
  auto* order = app.add_subcommand("order", "order and classify columns");
  common(order);
  auto* verify = app.add_subcommand("verify", "run the verification suite");
  common(verify);
  verify->add_option("--check", rc.check, "run a single check");
  verify->add_option("--format", rc.format, "text | json")->check(CLI::IsMember({"text", "json"}));
  auto* exp = app.add_subcommand("export", "write CSV tables and a P2 heatmap");
  common(exp);
  exp->add_option("--k", rc.k, "level for the heatmap and value CSV (default: every retained level)");
  exp->add_flag("--heatmap", rc.heatmap, "require the heatmap (fails unless m = 2)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*build) return CmdBuild(rc);
    if (*query) return CmdQuery(rc);
    if (*levels) return CmdLevels(rc);
    if (*lsm) return CmdLsm(rc);
    if (*mc) return CmdMc(rc);
    if (*path) return CmdPath(rc);
    if (*order) return CmdOrder(rc);
    if (*verify) return CmdVerify(rc);
    if (*exp) return CmdExport(rc);
  } catch (const vflat::ValidationError& e) {
    std::cerr << "error: validation failed\n" << e.report().ToString();
    return kExitInput;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return ExitCodeFor(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
