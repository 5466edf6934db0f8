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

#ifndef DELTAMAT_MATROID_H_
#define DELTAMAT_MATROID_H_

#include <span>
#include <string>
#include <vector>

#include "deltamat/setsystem.h"

namespace deltamat {

// A set system whose family satisfies the basis exchange axiom.
class Matroid {
 public:
  // Throws Error if `bases` violates the exchange axiom.
  explicit Matroid(SetSystem bases);

  const SetSystem& carrier() const { return carrier_; }
  int rank() const { return Size(carrier_.family().front()); }

 private:
  SetSystem carrier_;
};

enum class Bound { kUpper, kLower };

// Upper: the largest feasible sets. Lower: the smallest.
Matroid BoundMatroid(const SetSystem& delta, Bound which);

// Complements every basis.
Matroid DualMatroid(const Matroid& matroid);

struct SetStatus {
  bool independent = false;
  bool spanning = false;
  bool basis = false;

  bool operator==(const SetStatus&) const = default;
};

SetStatus GetSetStatus(const Matroid& matroid, SubsetMask subset);

enum class MinorMode { kDelete, kContract };

// Elementary minor along `element`. A coloop is never deleted and a loop
// is never contracted; both fall back to the other rule.
SetSystem MinorStep(const SetSystem& delta, int element, MinorMode mode);

// Deletes `deleted` and contracts `contracted`, one element at a time in
// ground order. The masks refer to `delta`'s ground.
SetSystem Minor(const SetSystem& delta, SubsetMask deleted,
                SubsetMask contracted);

struct GraphEdge {
  std::string label;
  int u = 0;
  int v = 0;
};

struct Graph {
  int vertices = 0;
  std::vector<GraphEdge> edges;
};

// Bases are the edge sets of spanning trees. Vertices are numbered
// 1..vertices. Throws Error("no spanning tree") for disconnected graphs.
Matroid GraphicMatroid(const Graph& graph);

// True iff some minor is isomorphic to U_{2,4}.
bool HasU24Pattern(const Matroid& matroid);

}  // namespace deltamat

#endif  // DELTAMAT_MATROID_H_
