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

#ifndef DELTAMAT_TESTS_FIXTURES_H_
#define DELTAMAT_TESTS_FIXTURES_H_

#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "deltamat/gf2rep.h"
#include "deltamat/setsystem.h"

namespace deltamat::testing {

// Family given by label lists over a numbered ground 1..n.
inline SetSystem Numbered(int n,
                          std::initializer_list<std::vector<int>> members) {
  std::vector<SubsetMask> family;
  for (const auto& member : members) {
    SubsetMask mask = 0;
    for (int label : member) mask |= Bit(label - 1);
    family.push_back(mask);
  }
  return SetSystem(GroundSet::Numbered(n), std::move(family));
}

inline SubsetMask Labels(std::initializer_list<int> labels) {
  SubsetMask mask = 0;
  for (int label : labels) mask |= Bit(label - 1);
  return mask;
}

// The worked example on {1,2,3,4}.
inline SetSystem PaperExample() {
  return Numbered(4, {{1}, {2}, {1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}});
}

// Adjacency matrix of the path-plus-triangle graph 1-2, 2-3, 2-4, 3-4.
inline SymmetricBitMatrix ExampleAdjacency() {
  SymmetricBitMatrix a(4);
  a.Set(0, 1, true);
  a.Set(1, 2, true);
  a.Set(1, 3, true);
  a.Set(2, 3, true);
  return a;
}

// Spanning trees of the six-edge planar graph.
inline SetSystem FamilyOne() {
  return Numbered(6, {{1, 3, 4}, {1, 3, 5}, {1, 3, 6}, {1, 4, 5}, {1, 4, 6},
                      {2, 3, 4}, {2, 3, 5}, {2, 3, 6}, {2, 4, 5}, {2, 4, 6},
                      {3, 4, 5}, {3, 4, 6}});
}

// Toroidal embedding: adds {1,2,3,4,5} and {1,2,3,4,6}.
inline SetSystem FamilyTwo() {
  return Numbered(6, {{1, 3, 4}, {1, 3, 5}, {1, 3, 6}, {1, 4, 5}, {1, 4, 6},
                      {2, 3, 4}, {2, 3, 5}, {2, 3, 6}, {2, 4, 5}, {2, 4, 6},
                      {3, 4, 5}, {3, 4, 6}, {1, 2, 3, 4, 5},
                      {1, 2, 3, 4, 6}});
}

// Projective-plane embedding: adds {1,2,3,4} as well.
inline SetSystem FamilyThree() {
  return Numbered(6, {{1, 3, 4}, {1, 3, 5}, {1, 3, 6}, {1, 4, 5}, {1, 4, 6},
                      {2, 3, 4}, {2, 3, 5}, {2, 3, 6}, {2, 4, 5}, {2, 4, 6},
                      {3, 4, 5}, {3, 4, 6}, {1, 2, 3, 4, 5},
                      {1, 2, 3, 4, 6}, {1, 2, 3, 4}});
}

inline SetSystem U24() {
  return Numbered(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
}

inline std::string ReadGolden(const std::string& name) {
  std::ifstream in(std::string(DELTAMAT_GOLDEN_DIR) + "/" + name,
                   std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline std::string GoldenPath(const std::string& name) {
  return std::string(DELTAMAT_GOLDEN_DIR) + "/" + name;
}

}  // namespace deltamat::testing

#endif  // DELTAMAT_TESTS_FIXTURES_H_
