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

#ifndef DELTAMAT_CENSUS_H_
#define DELTAMAT_CENSUS_H_

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "deltamat/canon.h"
#include "deltamat/setsystem.h"

namespace deltamat {

inline constexpr int kMaxCensusGround = 4;

struct CensusFailure {
  std::string reason;
  SetSystem system;
};

struct CensusReport {
  int n = 0;
  std::size_t total_families = 0;
  std::size_t delta_matroids = 0;
  std::size_t binaries = 0;
  std::size_t even_count = 0;
  std::size_t odd_count = 0;
  std::map<CanonicalParams, std::size_t> params_histogram;
  // Odd binaries only: (instance, j) pairs with 0 <= j <= floor(w/2) for
  // which D_{i,j,w-2j,l} was or was not reached by extending the reduction.
  std::size_t odd_j_attained = 0;
  std::size_t odd_j_unattained = 0;
  std::vector<CensusFailure> failures;
};

// Calls `visit` for every nonempty family on the ground {1..n} that
// satisfies the symmetric exchange axiom. Families are visited in
// increasing order of their 2^n-bit membership mask.
void ForEachDeltaMatroid(int n,
                         const std::function<void(const SetSystem&)>& visit);

std::vector<SetSystem> EnumerateDeltaMatroids(int n);

// Reduces every binary delta-matroid on n elements and checks the
// reduction contract, slide closure and the spanning/independent property.
// Violations are collected in `failures`.
CensusReport VerifySmall(int n, int depth_budget);

// Aligned, human-readable table.
std::string FormatReport(const CensusReport& report);
// One "key: value" line per field.
std::string DumpReport(const CensusReport& report);

}  // namespace deltamat

#endif  // DELTAMAT_CENSUS_H_
