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

#include "deltamat/setsystem.h"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace deltamat {
namespace {

// Membership test over a family. Dense bitmap for small grounds, binary
// search otherwise.
class Lookup {
 public:
  explicit Lookup(const SetSystem& system) : system_(system) {
    if (system.n() <= kDenseLimit) {
      dense_.assign((std::size_t{1} << system.n()) / 64 + 1, 0);
      for (SubsetMask f : system.family()) dense_[f >> 6] |= Bit(f & 63);
    }
  }

  bool operator()(SubsetMask mask) const {
    if (!dense_.empty()) return (dense_[mask >> 6] >> (mask & 63)) & 1;
    return system_.Contains(mask);
  }

 private:
  static constexpr int kDenseLimit = 22;
  const SetSystem& system_;
  std::vector<std::uint64_t> dense_;
};

template <typename Fn>
void ForEachElement(SubsetMask mask, Fn&& fn) {
  while (mask != 0) {
    fn(std::countr_zero(mask));
    mask &= mask - 1;
  }
}

}  // namespace

GroundSet::GroundSet(std::vector<std::string> labels)
    : labels_(std::move(labels)) {
  if (size() > kMaxGroundSize) {
    throw Error("ground set larger than 64 elements");
  }
  std::unordered_set<std::string_view> seen;
  for (const std::string& label : labels_) {
    if (label.empty()) throw Error("empty element label");
    if (!seen.insert(label).second) {
      throw Error("duplicate element: " + label);
    }
  }
}

GroundSet GroundSet::Numbered(int n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  return GroundSet(std::move(labels));
}

std::optional<int> GroundSet::Find(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<int>(it - labels_.begin());
}

int GroundSet::IndexOf(std::string_view label) const {
  if (auto index = Find(label)) return *index;
  throw Error("unknown element: " + std::string(label));
}

SubsetMask GroundSet::MaskOf(std::span<const std::string> labels) const {
  SubsetMask mask = 0;
  for (const std::string& label : labels) mask |= Bit(IndexOf(label));
  return mask;
}

std::vector<std::string> GroundSet::LabelsOf(SubsetMask mask) const {
  std::vector<std::string> out;
  ForEachElement(mask, [&](int e) { out.push_back(label(e)); });
  return out;
}

GroundSet GroundSet::Without(int element) const {
  std::vector<std::string> labels = labels_;
  labels.erase(labels.begin() + element);
  return GroundSet(std::move(labels));
}

SetSystem::SetSystem(GroundSet ground, std::vector<SubsetMask> family)
    : ground_(std::move(ground)), family_(std::move(family)) {
  const SubsetMask full = ground_.full_mask();
  for (SubsetMask f : family_) {
    if ((f & ~full) != 0) throw Error("family member outside ground set");
  }
  std::sort(family_.begin(), family_.end(), FamilyLess);
  family_.erase(std::unique(family_.begin(), family_.end()), family_.end());
}

bool SetSystem::Contains(SubsetMask mask) const {
  return std::binary_search(family_.begin(), family_.end(), mask, FamilyLess);
}

bool CheckSea(const SetSystem& system) {
  if (system.empty()) throw Error("empty family");
  const Lookup contains(system);
  for (SubsetMask f1 : system.family()) {
    for (SubsetMask f2 : system.family()) {
      const SubsetMask diff = f1 ^ f2;
      bool ok = true;
      ForEachElement(diff, [&](int x) {
        if (!ok) return;
        bool found = false;
        // {x, y} is the singleton {x} when y == x.
        ForEachElement(diff, [&](int y) {
          if (!found && contains(f1 ^ (Bit(x) | Bit(y)))) found = true;
        });
        ok = found;
      });
      if (!ok) return false;
    }
  }
  return true;
}

bool CheckEa(const SetSystem& system) {
  if (system.empty()) throw Error("empty family");
  const auto family = system.family();
  const int rank = Size(family.front());
  if (Size(family.back()) != rank) return false;
  const Lookup contains(system);
  for (SubsetMask b1 : family) {
    for (SubsetMask b2 : family) {
      bool ok = true;
      ForEachElement(b1 & ~b2, [&](int x) {
        if (!ok) return;
        bool found = false;
        ForEachElement(b2 & ~b1, [&](int y) {
          if (!found && contains(b1 ^ Bit(x) ^ Bit(y))) found = true;
        });
        ok = found;
      });
      if (!ok) return false;
    }
  }
  return true;
}

SetSystem Twist(const SetSystem& system, SubsetMask twist_set) {
  if ((twist_set & ~system.ground().full_mask()) != 0) {
    throw Error("twist set outside ground set");
  }
  std::vector<SubsetMask> family;
  family.reserve(system.family().size());
  for (SubsetMask f : system.family()) family.push_back(f ^ twist_set);
  return SetSystem(system.ground(), std::move(family));
}

SetSystem DirectSum(std::span<const SetSystem> parts) {
  std::vector<std::string> labels;
  std::vector<SubsetMask> family = {0};
  int offset = 0;
  for (const SetSystem& part : parts) {
    const auto& part_labels = part.ground().labels();
    labels.insert(labels.end(), part_labels.begin(), part_labels.end());
    if (static_cast<int>(labels.size()) > kMaxGroundSize) {
      throw Error("ground set larger than 64 elements");
    }
    std::vector<SubsetMask> next;
    next.reserve(family.size() * part.family().size());
    for (SubsetMask prefix : family) {
      for (SubsetMask f : part.family()) next.push_back(prefix | (f << offset));
    }
    family = std::move(next);
    offset += part.n();
  }
  std::unordered_set<std::string_view> seen;
  for (const std::string& label : labels) {
    if (!seen.insert(label).second) throw Error("non-disjoint grounds");
  }
  return SetSystem(GroundSet(std::move(labels)), std::move(family));
}

StructureProfile Profile(const SetSystem& system) {
  if (system.empty()) throw Error("empty family");
  const auto family = system.family();
  StructureProfile profile;
  profile.min_size = Size(family.front());
  profile.max_size = Size(family.back());
  SubsetMask seen = 0;
  SubsetMask everywhere = system.ground().full_mask();
  bool mixed = false;
  for (SubsetMask f : family) {
    seen |= f;
    everywhere &= f;
    mixed |= (Size(f) - profile.min_size) % 2 != 0;
  }
  profile.parity = mixed ? Parity::kOdd : Parity::kEven;
  profile.loops = system.ground().full_mask() & ~seen;
  profile.everywhere_elements = everywhere;
  return profile;
}

SubsetMask MapMask(SubsetMask mask, const Bijection& mapping) {
  SubsetMask out = 0;
  ForEachElement(mask, [&](int e) { out |= Bit(mapping[e]); });
  return out;
}

namespace {

struct IsoData {
  std::vector<int> degree;
  std::vector<std::vector<int>> pair_count;
};

IsoData Invariants(const SetSystem& system) {
  const int n = system.n();
  IsoData data{std::vector<int>(n, 0),
               std::vector<std::vector<int>>(n, std::vector<int>(n, 0))};
  for (SubsetMask f : system.family()) {
    ForEachElement(f, [&](int u) {
      ++data.degree[u];
      ForEachElement(f, [&](int v) { ++data.pair_count[u][v]; });
    });
  }
  return data;
}

class IsoSearch {
 public:
  IsoSearch(const SetSystem& from, const SetSystem& to)
      : from_(from),
        to_(to),
        a_(Invariants(from)),
        b_(Invariants(to)),
        mapping_(from.n(), -1),
        used_(to.n(), false) {
    order_.resize(from.n());
    std::iota(order_.begin(), order_.end(), 0);
    // Most constrained first: elements whose degree class is smallest.
    std::vector<int> class_size(from.n(), 0);
    for (int u = 0; u < from.n(); ++u) {
      for (int v = 0; v < from.n(); ++v) {
        class_size[u] += a_.degree[u] == a_.degree[v];
      }
    }
    std::stable_sort(order_.begin(), order_.end(), [&](int x, int y) {
      return class_size[x] < class_size[y];
    });
  }

  std::optional<Bijection> Run() {
    if (Extend(0)) return mapping_;
    return std::nullopt;
  }

 private:
  bool Extend(int depth) {
    if (depth == from_.n()) return FamilyMatches();
    const int u = order_[depth];
    for (int v = 0; v < to_.n(); ++v) {
      if (used_[v] || a_.degree[u] != b_.degree[v]) continue;
      if (a_.pair_count[u][u] != b_.pair_count[v][v]) continue;
      bool consistent = true;
      for (int d = 0; d < depth && consistent; ++d) {
        const int w = order_[d];
        consistent = a_.pair_count[u][w] == b_.pair_count[v][mapping_[w]];
      }
      if (!consistent) continue;
      mapping_[u] = v;
      used_[v] = true;
      if (Extend(depth + 1)) return true;
      used_[v] = false;
      mapping_[u] = -1;
    }
    return false;
  }

  bool FamilyMatches() const {
    for (SubsetMask f : from_.family()) {
      if (!to_.Contains(MapMask(f, mapping_))) return false;
    }
    return true;
  }

  const SetSystem& from_;
  const SetSystem& to_;
  IsoData a_;
  IsoData b_;
  Bijection mapping_;
  std::vector<bool> used_;
  std::vector<int> order_;
};

}  // namespace

std::optional<Bijection> FindIsomorphism(const SetSystem& from,
                                         const SetSystem& to) {
  if (from.n() != to.n()) return std::nullopt;
  if (from.family().size() != to.family().size()) return std::nullopt;
  if (std::equal(from.family().begin(), from.family().end(),
                 to.family().begin())) {
    Bijection identity(from.n());
    std::iota(identity.begin(), identity.end(), 0);
    return identity;
  }
  const StructureProfile pa = Profile(from);
  const StructureProfile pb = Profile(to);
  if (pa.min_size != pb.min_size || pa.max_size != pb.max_size ||
      pa.parity != pb.parity || Size(pa.loops) != Size(pb.loops) ||
      Size(pa.everywhere_elements) != Size(pb.everywhere_elements)) {
    return std::nullopt;
  }
  return IsoSearch(from, to).Run();
}

}  // namespace deltamat
