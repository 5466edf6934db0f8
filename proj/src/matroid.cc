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

#include "deltamat/matroid.h"

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>

namespace deltamat {
namespace {

// Removes bit `element`, shifting the higher bits down.
SubsetMask DropBit(SubsetMask mask, int element) {
  const SubsetMask low = Bit(element) - 1;
  return (mask & low) | ((mask >> 1) & ~low);
}

}  // namespace

Matroid::Matroid(SetSystem bases) : carrier_(std::move(bases)) {
  if (carrier_.empty() || !CheckEa(carrier_)) {
    throw Error("basis exchange axiom violated");
  }
}

Matroid BoundMatroid(const SetSystem& delta, Bound which) {
  if (delta.empty()) throw Error("empty family");
  const auto family = delta.family();
  const int size =
      which == Bound::kUpper ? Size(family.back()) : Size(family.front());
  std::vector<SubsetMask> bases;
  for (SubsetMask f : family) {
    if (Size(f) == size) bases.push_back(f);
  }
  SetSystem carrier(delta.ground(), std::move(bases));
  if (!CheckEa(carrier)) {
    throw Error("delta-matroid axiom violated upstream");
  }
  return Matroid(std::move(carrier));
}

Matroid DualMatroid(const Matroid& matroid) {
  return Matroid(Dual(matroid.carrier()));
}

SetStatus GetSetStatus(const Matroid& matroid, SubsetMask subset) {
  SetStatus status;
  for (SubsetMask basis : matroid.carrier().family()) {
    status.independent |= (subset & ~basis) == 0;
    status.spanning |= (basis & ~subset) == 0;
  }
  status.basis = status.independent && status.spanning;
  return status;
}

SetSystem MinorStep(const SetSystem& delta, int element, MinorMode mode) {
  if (element < 0 || element >= delta.n()) {
    throw Error("element not in ground set");
  }
  if (delta.empty()) throw Error("empty family");
  const SubsetMask e = Bit(element);
  bool loop = true;
  bool coloop = true;
  for (SubsetMask f : delta.family()) {
    loop &= (f & e) == 0;
    coloop &= (f & e) != 0;
  }
  if (mode == MinorMode::kDelete && coloop) mode = MinorMode::kContract;
  if (mode == MinorMode::kContract && loop) mode = MinorMode::kDelete;

  std::vector<SubsetMask> family;
  for (SubsetMask f : delta.family()) {
    const bool has = (f & e) != 0;
    if (has == (mode == MinorMode::kContract)) {
      family.push_back(DropBit(f & ~e, element));
    }
  }
  return SetSystem(delta.ground().Without(element), std::move(family));
}

SetSystem Minor(const SetSystem& delta, SubsetMask deleted,
                SubsetMask contracted) {
  if ((deleted & contracted) != 0) {
    throw Error("delete and contract sets overlap");
  }
  const SubsetMask full = delta.ground().full_mask();
  if (((deleted | contracted) & ~full) != 0) {
    throw Error("element not in ground set");
  }
  SetSystem current = delta;
  for (int e = 0; e < delta.n(); ++e) {
    if (((deleted | contracted) & Bit(e)) == 0) continue;
    const int index = current.ground().IndexOf(delta.ground().label(e));
    const MinorMode mode =
        (deleted & Bit(e)) != 0 ? MinorMode::kDelete : MinorMode::kContract;
    current = MinorStep(current, index, mode);
  }
  return current;
}

namespace {

int FindRoot(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

void EnumerateForests(const Graph& graph, std::size_t next, int needed,
                      std::vector<int> parent, SubsetMask chosen,
                      std::vector<SubsetMask>& out) {
  if (needed == 0) {
    out.push_back(chosen);
    return;
  }
  if (graph.edges.size() - next < static_cast<std::size_t>(needed)) return;
  // Skip edge `next`.
  EnumerateForests(graph, next + 1, needed, parent, chosen, out);
  // Take it if it joins two components.
  const GraphEdge& edge = graph.edges[next];
  const int ru = FindRoot(parent, edge.u - 1);
  const int rv = FindRoot(parent, edge.v - 1);
  if (ru == rv) return;
  parent[ru] = rv;
  EnumerateForests(graph, next + 1, needed - 1, std::move(parent),
                   chosen | Bit(static_cast<int>(next)), out);
}

}  // namespace

Matroid GraphicMatroid(const Graph& graph) {
  if (graph.vertices < 1) throw Error("graph needs at least one vertex");
  if (graph.edges.size() > kMaxGroundSize) {
    throw Error("graph has more than 64 edges");
  }
  std::vector<std::string> labels;
  std::vector<int> parent(graph.vertices);
  std::iota(parent.begin(), parent.end(), 0);
  int components = graph.vertices;
  for (const GraphEdge& edge : graph.edges) {
    if (edge.u < 1 || edge.u > graph.vertices || edge.v < 1 ||
        edge.v > graph.vertices) {
      throw Error("edge endpoint out of range: " + edge.label);
    }
    labels.push_back(edge.label);
    const int ru = FindRoot(parent, edge.u - 1);
    const int rv = FindRoot(parent, edge.v - 1);
    if (ru != rv) {
      parent[ru] = rv;
      --components;
    }
  }
  if (components != 1) throw Error("no spanning tree");

  std::iota(parent.begin(), parent.end(), 0);
  std::vector<SubsetMask> trees;
  EnumerateForests(graph, 0, graph.vertices - 1, parent, 0, trees);
  return Matroid(SetSystem(GroundSet(std::move(labels)), std::move(trees)));
}

namespace {

// Minors are tracked in the original bit positions: `remaining` is the
// surviving ground and every basis is a subset of it.
class U24Search {
 public:
  bool Visit(SubsetMask remaining, std::vector<SubsetMask> bases) {
    std::sort(bases.begin(), bases.end());
    bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
    const int rank = Size(bases.front());
    const int corank = Size(remaining) - rank;
    // Rank and corank never grow under minors.
    if (rank < 2 || corank < 2) return false;
    if (Size(remaining) == 4) return bases.size() == 6;
    if (!seen_.emplace(remaining, bases).second) return false;

    for (SubsetMask rest = remaining; rest != 0; rest &= rest - 1) {
      const SubsetMask e = rest & -rest;
      std::vector<SubsetMask> without;
      std::vector<SubsetMask> with;
      for (SubsetMask b : bases) {
        ((b & e) != 0 ? with : without).push_back(b & ~e);
      }
      // A coloop leaves `without` empty and a loop leaves `with` empty;
      // both elementary minors then coincide.
      if (!without.empty() && Visit(remaining & ~e, without)) return true;
      if (!with.empty() && Visit(remaining & ~e, with)) return true;
    }
    return false;
  }

 private:
  std::set<std::pair<SubsetMask, std::vector<SubsetMask>>> seen_;
};

}  // namespace

bool HasU24Pattern(const Matroid& matroid) {
  const SetSystem& carrier = matroid.carrier();
  if (carrier.n() < 4) return false;
  std::vector<SubsetMask> bases(carrier.family().begin(),
                                carrier.family().end());
  return U24Search().Visit(carrier.ground().full_mask(), std::move(bases));
}

}  // namespace deltamat
