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

#ifndef DELTAMAT_CANON_H_
#define DELTAMAT_CANON_H_

#include <compare>
#include <cstddef>
#include <optional>
#include <string>

#include "deltamat/matroid.h"
#include "deltamat/setsystem.h"
#include "deltamat/slides.h"

namespace deltamat {

// Atom counts of D_{i,j,k,l}:
//   i  loop atoms  ({e}, {{}})
//   j  pair atoms  ({e,f}, {{}, {e,f}})
//   k  odd atoms   ({e}, {{}, {e}})
//   l  full atoms  ({e}, {{e}})
struct CanonicalParams {
  int i = 0;
  int j = 0;
  int k = 0;
  int l = 0;

  int ground_size() const { return i + 2 * j + k + l; }
  auto operator<=>(const CanonicalParams&) const = default;
};

// "i=1 j=1 k=0 l=1"
std::string ToString(const CanonicalParams& params);

// Reads the parameters off the size window and parity. Odd systems are
// normalized to j = 0. Throws Error("not binary") for non-binary input.
CanonicalParams ComputeCanonicalParams(const SetSystem& delta);

// Direct sum of the atoms, labelled i1.., j1a j1b .., k1.., l1.. in that
// order.
SetSystem BuildCanonical(const CanonicalParams& params);

// Parameters of the canonical system `system` is isomorphic to, if any.
std::optional<CanonicalParams> MatchCanonical(const SetSystem& system);

// Slides sending the matroid to the single basis `target`. Kills one
// length-1 basis per step and falls back to breadth-first search.
// Throws Error("no reduction found") when both fail.
SlideTrace ReduceMatroid(const Matroid& matroid, SubsetMask target);

struct ReduceOptions {
  // Depth limit for the fallback search of the middle stage.
  int search_depth = 12;
  // Visited-state cap for every fallback search.
  std::size_t max_states = 2'000'000;
};

struct ReductionResult {
  SlideTrace trace;
  CanonicalParams params;
  // Carries ApplyTrace(input, trace) onto BuildCanonical(params).
  Bijection witness;
};

// Slides taking a binary delta-matroid to its canonical form. The result is
// replayed and checked before it is returned.
ReductionResult Reduce(const SetSystem& delta, const ReduceOptions& options = {});

}  // namespace deltamat

#endif  // DELTAMAT_CANON_H_
