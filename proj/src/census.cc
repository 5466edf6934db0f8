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

#include "deltamat/census.h"

#include <iomanip>
#include <sstream>

#include "deltamat/gf2rep.h"
#include "deltamat/matroid.h"
#include "deltamat/slides.h"

namespace deltamat {
namespace {

void CheckRange(int n) {
  if (n < 1 || n > kMaxCensusGround) {
    throw Error("census ground size must be between 1 and 4");
  }
}

std::string FamilyText(const SetSystem& system) {
  std::string out = "{";
  bool first = true;
  for (SubsetMask f : system.family()) {
    if (!first) out += ", ";
    first = false;
    out += "{";
    bool inner_first = true;
    for (const std::string& label : system.ground().LabelsOf(f)) {
      if (!inner_first) out += ",";
      inner_first = false;
      out += label;
    }
    out += "}";
  }
  return out + "}";
}

// Turns three odd atoms p, q, r into a pair atom {p, q} and the odd atom r.
void AppendPlane(int p, int q, int r, SlideTrace& trace) {
  trace.insert(trace.end(), {{r, q}, {r, p}, {q, p}, {p, r}});
}

class Verifier {
 public:
  Verifier(CensusReport& report, int depth_budget)
      : report_(report), options_{depth_budget, ReduceOptions{}.max_states} {}

  void Check(const SetSystem& delta) {
    ++report_.delta_matroids;
    const StructureProfile profile = Profile(delta);
    ++(profile.parity == Parity::kEven ? report_.even_count
                                       : report_.odd_count);
    CheckSpanning(delta);
    if (!RecognizeBinary(delta)) return;
    ++report_.binaries;
    CheckBinary(delta);
  }

 private:
  void Fail(std::string reason, const SetSystem& system) {
    report_.failures.push_back({std::move(reason), system});
  }

  void CheckSpanning(const SetSystem& delta) {
    try {
      const Matroid lower = BoundMatroid(delta, Bound::kLower);
      const Matroid upper = BoundMatroid(delta, Bound::kUpper);
      for (SubsetMask f : delta.family()) {
        if (!GetSetStatus(lower, f).spanning ||
            !GetSetStatus(upper, f).independent) {
          Fail("feasible set not spanning/independent", delta);
          return;
        }
      }
    } catch (const Error& e) {
      Fail(e.what(), delta);
    }
  }

  void CheckBinary(const SetSystem& delta) {
    const CanonicalParams params = ComputeCanonicalParams(delta);
    ++report_.params_histogram[params];
    if (params.ground_size() != delta.n() || params.j * params.k != 0) {
      Fail("canonical parameters inconsistent", delta);
    }

    ReductionResult result;
    try {
      result = Reduce(delta, options_);
    } catch (const Error& e) {
      Fail(e.what(), delta);
      return;
    }
    const SetSystem reduced = ApplyTrace(delta, result.trace);
    if (result.params != params ||
        !FindIsomorphism(reduced, BuildCanonical(params))) {
      Fail("reduction does not replay to canonical form", delta);
    }

    for (int a = 0; a < delta.n(); ++a) {
      for (int b = 0; b < delta.n(); ++b) {
        if (a == b) continue;
        const SetSystem slid = HandleSlide(delta, a, b);
        if (slid.empty() || !CheckSea(slid) || !RecognizeBinary(slid)) {
          Fail("slide leaves the binary class", delta);
          return;
        }
        if (ComputeCanonicalParams(slid) != params) {
          Fail("slide changes canonical parameters", delta);
          return;
        }
      }
    }

    if (params.k > 0) ExploreOddRange(reduced, params, result.witness);
  }

  void ExploreOddRange(const SetSystem& reduced, const CanonicalParams& params,
                       const Bijection& witness) {
    // Elements sent to the odd atoms, in atom order.
    std::vector<int> odd(params.k);
    for (int e = 0; e < reduced.n(); ++e) {
      const int slot = witness[e] - params.i - 2 * params.j;
      if (slot >= 0 && slot < params.k) odd[slot] = e;
    }
    const int width = params.k;
    for (int j = 0; j <= width / 2; ++j) {
      const CanonicalParams target{params.i, j, width - 2 * j, params.l};
      bool attained = false;
      if (width - 2 * j >= 1) {
        SlideTrace extra;
        for (int t = 0; t < j; ++t) {
          AppendPlane(odd[1 + 2 * t], odd[2 + 2 * t], odd[0], extra);
        }
        const auto match = MatchCanonical(ApplyTrace(reduced, extra));
        attained = match && *match == target;
      }
      ++(attained ? report_.odd_j_attained : report_.odd_j_unattained);
    }
  }

  CensusReport& report_;
  ReduceOptions options_;
};

}  // namespace

void ForEachDeltaMatroid(int n,
                         const std::function<void(const SetSystem&)>& visit) {
  CheckRange(n);
  const GroundSet ground = GroundSet::Numbered(n);
  const int subsets = 1 << n;
  const std::uint64_t limit = std::uint64_t{1} << subsets;
  for (std::uint64_t members = 1; members < limit; ++members) {
    std::vector<SubsetMask> family;
    for (int s = 0; s < subsets; ++s) {
      if ((members >> s) & 1) family.push_back(static_cast<SubsetMask>(s));
    }
    SetSystem system(ground, std::move(family));
    if (CheckSea(system)) visit(system);
  }
}

std::vector<SetSystem> EnumerateDeltaMatroids(int n) {
  std::vector<SetSystem> out;
  ForEachDeltaMatroid(n, [&](const SetSystem& s) { out.push_back(s); });
  return out;
}

CensusReport VerifySmall(int n, int depth_budget) {
  CheckRange(n);
  CensusReport report;
  report.n = n;
  report.total_families = (std::size_t{1} << (1 << n)) - 1;
  Verifier verifier(report, depth_budget);
  ForEachDeltaMatroid(n, [&](const SetSystem& s) { verifier.Check(s); });
  return report;
}

std::string FormatReport(const CensusReport& report) {
  std::ostringstream out;
  auto row = [&](const std::string& key, auto value) {
    out << std::left << std::setw(20) << key << std::right << std::setw(10)
        << value << '\n';
  };
  row("n", report.n);
  row("total families", report.total_families);
  row("delta-matroids", report.delta_matroids);
  row("binary", report.binaries);
  row("even", report.even_count);
  row("odd", report.odd_count);
  row("odd j attained", report.odd_j_attained);
  row("odd j unattained", report.odd_j_unattained);
  row("failures", report.failures.size());
  out << "canonical forms:\n";
  for (const auto& [params, count] : report.params_histogram) {
    out << "  " << std::left << std::setw(26) << ToString(params) << std::right
        << std::setw(10) << count << '\n';
  }
  for (const CensusFailure& failure : report.failures) {
    out << "FAIL " << failure.reason << ": " << FamilyText(failure.system)
        << '\n';
  }
  return out.str();
}

std::string DumpReport(const CensusReport& report) {
  std::ostringstream out;
  out << "n: " << report.n << '\n'
      << "total_families: " << report.total_families << '\n'
      << "delta_matroids: " << report.delta_matroids << '\n'
      << "binaries: " << report.binaries << '\n'
      << "even_count: " << report.even_count << '\n'
      << "odd_count: " << report.odd_count << '\n'
      << "odd_j_attained: " << report.odd_j_attained << '\n'
      << "odd_j_unattained: " << report.odd_j_unattained << '\n'
      << "failures: " << report.failures.size() << '\n';
  for (const auto& [params, count] : report.params_histogram) {
    out << "params[" << ToString(params) << "]: " << count << '\n';
  }
  for (const CensusFailure& failure : report.failures) {
    out << "failure: " << failure.reason << " " << FamilyText(failure.system)
        << '\n';
  }
  return out.str();
}

}  // namespace deltamat
