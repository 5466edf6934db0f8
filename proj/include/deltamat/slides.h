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

#ifndef DELTAMAT_SLIDES_H_
#define DELTAMAT_SLIDES_H_

#include <span>
#include <vector>

#include "deltamat/setsystem.h"

namespace deltamat {

// Takes element `a` over element `b`.
struct Slide {
  int a = 0;
  int b = 0;

  bool operator==(const Slide&) const = default;
};

using SlideTrace = std::vector<Slide>;

// F_ab = F xor {X + a : X + b in F, X disjoint from {a, b}}. Defined for
// arbitrary set systems; the result need not be a delta-matroid.
SetSystem HandleSlide(const SetSystem& system, int a, int b);

SetSystem ApplyTrace(const SetSystem& system, std::span<const Slide> trace);

}  // namespace deltamat

#endif  // DELTAMAT_SLIDES_H_
