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

#ifndef DELTAMAT_SETSYSTEM_H_
#define DELTAMAT_SETSYSTEM_H_

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace deltamat {

// Bit i is set iff element i of the ground set belongs to the subset.
using SubsetMask = std::uint64_t;

inline constexpr int kMaxGroundSize = 64;

// Raised for semantic violations (unknown elements, axiom failures, ...).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr SubsetMask Bit(int element) {
  return SubsetMask{1} << element;
}

inline int Size(SubsetMask mask) { return std::popcount(mask); }

// Strict weak order used for every stored family: by size, then value.
inline bool FamilyLess(SubsetMask a, SubsetMask b) {
  const int sa = Size(a);
  const int sb = Size(b);
  return sa != sb ? sa < sb : a < b;
}

// Ordered, duplicate-free labels. Element i has label labels()[i].
class GroundSet {
 public:
  GroundSet() = default;
  explicit GroundSet(std::vector<std::string> labels);

  // Labels "1" .. "n".
  static GroundSet Numbered(int n);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int element) const { return labels_.at(element); }

  std::optional<int> Find(std::string_view label) const;
  // Throws Error("unknown element: ...") when absent.
  int IndexOf(std::string_view label) const;
  SubsetMask MaskOf(std::span<const std::string> labels) const;
  std::vector<std::string> LabelsOf(SubsetMask mask) const;

  SubsetMask full_mask() const {
    return size() == kMaxGroundSize ? ~SubsetMask{0}
                                    : Bit(size()) - 1;
  }

  // Ground set with `element` removed; later elements shift down by one.
  GroundSet Without(int element) const;

  bool operator==(const GroundSet&) const = default;

 private:
  std::vector<std::string> labels_;
};

// A ground set together with a family of subsets, kept sorted by
// (size, value) and free of duplicates.
class SetSystem {
 public:
  SetSystem() = default;
  // Sorts and deduplicates `family`. Throws if a member leaves the ground.
  SetSystem(GroundSet ground, std::vector<SubsetMask> family);

  const GroundSet& ground() const { return ground_; }
  std::span<const SubsetMask> family() const { return family_; }
  int n() const { return ground_.size(); }
  bool empty() const { return family_.empty(); }

  bool Contains(SubsetMask mask) const;

  bool operator==(const SetSystem&) const = default;

 private:
  GroundSet ground_;
  std::vector<SubsetMask> family_;
};

enum class Parity { kEven, kOdd };

struct StructureProfile {
  int min_size = 0;
  int max_size = 0;
  Parity parity = Parity::kEven;
  SubsetMask loops = 0;
  SubsetMask everywhere_elements = 0;

  bool operator==(const StructureProfile&) const = default;
};

// Symmetric exchange axiom, checked over every triple (F1, F2, x).
bool CheckSea(const SetSystem& system);

// Basis exchange axiom; requires an equicardinal family.
bool CheckEa(const SetSystem& system);

SetSystem Twist(const SetSystem& system, SubsetMask twist_set);

inline SetSystem Dual(const SetSystem& system) {
  return Twist(system, system.ground().full_mask());
}

// Ground sets must have pairwise disjoint labels. The result's ground lists
// the parts' labels in order.
SetSystem DirectSum(std::span<const SetSystem> parts);

StructureProfile Profile(const SetSystem& system);

// mapping[e] is the element of `to` that element e of `from` is sent to.
using Bijection = std::vector<int>;

// Searches for a relabelling carrying the family of `from` exactly onto the
// family of `to`. Candidates are pruned by element degree and by pairwise
// co-occurrence counts.
std::optional<Bijection> FindIsomorphism(const SetSystem& from,
                                         const SetSystem& to);

// Image of `mask` under `mapping`.
SubsetMask MapMask(SubsetMask mask, const Bijection& mapping);

}  // namespace deltamat

#endif  // DELTAMAT_SETSYSTEM_H_
