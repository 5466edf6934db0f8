// Copyright 2023 The Authors.
//
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

#include "deltamat/cli.h"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

#include "deltamat/canon.h"
#include "deltamat/census.h"
#include "deltamat/gf2rep.h"
#include "deltamat/matroid.h"
#include "deltamat/setsystem.h"
#include "deltamat/slides.h"
#include "deltamat/text_format.h"

namespace deltamat {
namespace {

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

SetSystem LoadSystem(const std::string& path) {
  return ParseSetSystem(ReadFile(path));
}

SubsetMask LabelsToMask(const GroundSet& ground, const std::string& labels) {
  std::istringstream in(labels);
  SubsetMask mask = 0;
  for (std::string label; in >> label;) mask |= Bit(ground.IndexOf(label));
  return mask;
}

std::string LabelList(const GroundSet& ground, SubsetMask mask) {
  std::string out;
  for (const std::string& label : ground.LabelsOf(mask)) out += " " + label;
  return out;
}

struct Options {
  bool quiet = false;
  std::string file;
  std::string set;
  std::string deleted;
  std::string contracted;
  std::string trace_file;
  int census_n = 0;
  int depth = ReduceOptions{}.search_depth;
  bool dump = false;
};

int Check(const Options& o, std::ostream& out) {
  const SetSystem system = LoadSystem(o.file);
  const bool delta = !system.empty() && CheckSea(system);
  const bool matroid = !system.empty() && CheckEa(system);
  out << "delta-matroid: " << (delta ? "yes" : "no") << '\n';
  if (!o.quiet) out << "matroid: " << (matroid ? "yes" : "no") << '\n';
  return delta ? 0 : 1;
}

int PrintProfile(const Options& o, std::ostream& out) {
  const SetSystem system = LoadSystem(o.file);
  const StructureProfile p = Profile(system);
  out << "min_size: " << p.min_size << '\n'
      << "max_size: " << p.max_size << '\n'
      << "parity: " << (p.parity == Parity::kEven ? "even" : "odd") << '\n'
      << "loops:" << LabelList(system.ground(), p.loops) << '\n'
      << "everywhere:" << LabelList(system.ground(), p.everywhere_elements)
      << '\n';
  return 0;
}

int Binary(const Options& o, std::ostream& out) {
  const SetSystem system = LoadSystem(o.file);
  if (system.empty() || !CheckSea(system)) {
    throw Error("not a delta-matroid");
  }
  const auto certificate = RecognizeBinary(system);
  if (!certificate) {
    out << "not binary\n";
    return 1;
  }
  out << "binary: yes\n";
  if (!o.quiet) {
    out << "base:" << LabelList(system.ground(), certificate->base_feasible())
        << '\n'
        << FormatMatrix(certificate->matrix());
  }
  return 0;
}

int Canon(const Options& o, std::ostream& out) {
  const SetSystem system = LoadSystem(o.file);
  ReduceOptions options;
  options.search_depth = o.depth;
  const ReductionResult result = Reduce(system, options);
  out << "canonical: " << ToString(result.params) << '\n';
  if (!o.quiet) {
    out << FormatTrace(result.trace, system.ground())
        << FormatSetSystem(ApplyTrace(system, result.trace));
  }
  return 0;
}

int Census(const Options& o, std::ostream& out) {
  const CensusReport report = VerifySmall(o.census_n, o.depth);
  if (o.quiet) {
    out << "failures: " << report.failures.size() << '\n';
  } else {
    out << FormatReport(report);
    if (o.dump) out << DumpReport(report);
  }
  return report.failures.empty() ? 0 : 1;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Delta-matroid algebra and handle-slide canonical forms"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("-q,--quiet", o.quiet, "Print only the verdict line");

  auto file_arg = [&](CLI::App* sub, const std::string& name) {
    sub->add_option(name, o.file, "Input file")
        ->required()
        ->check(CLI::ExistingFile);
  };
  auto* check = app.add_subcommand("check", "Test the exchange axioms");
  file_arg(check, "FILE");
  auto* profile = app.add_subcommand("profile", "Sizes, parity and loops");
  file_arg(profile, "FILE");
  auto* twist = app.add_subcommand("twist", "Twist by a subset");
  file_arg(twist, "FILE");
  twist->add_option("--set", o.set, "Space-separated labels")->required();
  auto* dual = app.add_subcommand("dual", "Twist by the whole ground set");
  file_arg(dual, "FILE");
  auto* minor = app.add_subcommand("minor", "Delete and contract elements");
  file_arg(minor, "FILE");
  minor->add_option("--delete", o.deleted, "Labels to delete");
  minor->add_option("--contract", o.contracted, "Labels to contract");
  auto* slide = app.add_subcommand("slide", "Apply a handle-slide trace");
  file_arg(slide, "FILE");
  slide->add_option("--trace", o.trace_file, "Trace file")
      ->required()
      ->check(CLI::ExistingFile);
  auto* binary = app.add_subcommand("binary", "Binary representation");
  file_arg(binary, "FILE");
  auto* canon = app.add_subcommand("canon", "Reduce to canonical form");
  file_arg(canon, "FILE");
  canon->add_option("--depth", o.depth, "Middle-stage search depth")
      ->check(CLI::NonNegativeNumber);
  auto* census = app.add_subcommand("census", "Exhaustive small-case check");
  census->add_option("-n", o.census_n, "Ground set size")
      ->required()
      ->check(CLI::Range(1, kMaxCensusGround));
  census->add_option("--depth", o.depth, "Middle-stage search depth")
      ->check(CLI::NonNegativeNumber);
  census->add_flag("--dump", o.dump, "Append key: value lines");
  auto* from_graph =
      app.add_subcommand("from-graph", "Graphic matroid of a graph file");
  file_arg(from_graph, "GRAPHFILE");

  std::vector<const char*> argv;
  for (const std::string& arg : args) argv.push_back(arg.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (check->parsed()) return Check(o, out);
    if (profile->parsed()) return PrintProfile(o, out);
    if (binary->parsed()) return Binary(o, out);
    if (canon->parsed()) return Canon(o, out);
    if (census->parsed()) return Census(o, out);
    if (from_graph->parsed()) {
      out << FormatSetSystem(
          GraphicMatroid(ParseGraph(ReadFile(o.file))).carrier());
      return 0;
    }
    const SetSystem system = LoadSystem(o.file);
    if (twist->parsed()) {
      out << FormatSetSystem(
          Twist(system, LabelsToMask(system.ground(), o.set)));
    } else if (dual->parsed()) {
      out << FormatSetSystem(Dual(system));
    } else if (minor->parsed()) {
      out << FormatSetSystem(
          Minor(system, LabelsToMask(system.ground(), o.deleted),
                LabelsToMask(system.ground(), o.contracted)));
    } else if (slide->parsed()) {
      const SlideTrace trace =
          ResolveTrace(ParseTrace(ReadFile(o.trace_file)), system.ground());
      out << FormatSetSystem(ApplyTrace(system, trace));
    }
    return 0;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace deltamat
