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

#include "deltamat/slides.h"

#include <algorithm>
#include <iterator>

namespace deltamat {

SetSystem HandleSlide(const SetSystem& system, int a, int b) {
  if (a < 0 || a >= system.n() || b < 0 || b >= system.n()) {
    throw Error("slide element not in ground set");
  }
  if (a == b) throw Error("slide needs two distinct elements");
  const SubsetMask bit_a = Bit(a);
  const SubsetMask bit_b = Bit(b);
  std::vector<SubsetMask> added;
  for (SubsetMask f : system.family()) {
    if ((f & bit_b) != 0 && (f & bit_a) == 0) {
      added.push_back(f ^ bit_b ^ bit_a);
    }
  }
  std::sort(added.begin(), added.end(), FamilyLess);
  std::vector<SubsetMask> family;
  family.reserve(system.family().size() + added.size());
  std::set_symmetric_difference(system.family().begin(),
                                system.family().end(), added.begin(),
                                added.end(), std::back_inserter(family),
                                FamilyLess);
  return SetSystem(system.ground(), std::move(family));
}

SetSystem ApplyTrace(const SetSystem& system, std::span<const Slide> trace) {
  SetSystem current = system;
  for (const Slide& step : trace) current = HandleSlide(current, step.a, step.b);
  return current;
}

}  // namespace deltamat
