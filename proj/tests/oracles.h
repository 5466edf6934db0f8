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

#ifndef DELTAMAT_TESTS_ORACLES_H_
#define DELTAMAT_TESTS_ORACLES_H_

// Literal-definition reimplementations used as independent oracles. They
// work on std::set values and never touch the library's bit tricks.

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "deltamat/setsystem.h"

namespace deltamat::testing {

using Elements = std::set<int>;
using Sets = std::set<Elements>;

inline Elements SymDiff(const Elements& a, const Elements& b) {
  Elements out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                std::inserter(out, out.end()));
  return out;
}

inline Elements Minus(const Elements& a, const Elements& b) {
  Elements out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::inserter(out, out.end()));
  return out;
}

inline Sets ToSets(const SetSystem& system) {
  Sets out;
  for (SubsetMask f : system.family()) {
    Elements e;
    for (int i = 0; i < system.n(); ++i) {
      if ((f >> i) & 1) e.insert(i);
    }
    out.insert(e);
  }
  return out;
}

inline SetSystem FromSets(const GroundSet& ground, const Sets& sets) {
  std::vector<SubsetMask> family;
  for (const Elements& e : sets) {
    SubsetMask mask = 0;
    for (int i : e) mask |= Bit(i);
    family.push_back(mask);
  }
  return SetSystem(ground, std::move(family));
}

inline bool OracleSea(const Sets& f) {
  for (const Elements& f1 : f) {
    for (const Elements& f2 : f) {
      const Elements d = SymDiff(f1, f2);
      for (int x : d) {
        bool found = false;
        for (int y : d) {
          if (f.count(SymDiff(f1, Elements{x, y}))) found = true;
        }
        if (!found) return false;
      }
    }
  }
  return true;
}

inline bool OracleEa(const Sets& b) {
  const std::size_t size = b.begin()->size();
  for (const Elements& x : b) {
    if (x.size() != size) return false;
  }
  for (const Elements& b1 : b) {
    for (const Elements& b2 : b) {
      for (int x : Minus(b1, b2)) {
        bool found = false;
        for (int y : Minus(b2, b1)) {
          Elements swapped = b1;
          swapped.erase(x);
          swapped.insert(y);
          if (b.count(swapped)) found = true;
        }
        if (!found) return false;
      }
    }
  }
  return true;
}

// F xor {X + a : X + b in F, a, b not in X}.
inline Sets OracleSlide(const Sets& f, int a, int b) {
  Sets modifier;
  for (const Elements& member : f) {
    if (member.count(b) && !member.count(a)) {
      Elements x = member;
      x.erase(b);
      x.insert(a);
      modifier.insert(x);
    }
  }
  Sets out;
  std::set_symmetric_difference(f.begin(), f.end(), modifier.begin(),
                                modifier.end(), std::inserter(out, out.end()));
  return out;
}

// Determinant over GF(2) by the Leibniz sum over permutations.
inline bool OracleDet(const std::vector<std::vector<int>>& m) {
  const int n = static_cast<int>(m.size());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  int total = 0;
  do {
    int term = 1;
    for (int i = 0; i < n && term; ++i) term &= m[i][perm[i]];
    total ^= term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total == 1;
}

// Tries every permutation of the ground.
inline bool OracleIsomorphic(const SetSystem& a, const SetSystem& b) {
  if (a.n() != b.n() || a.family().size() != b.family().size()) return false;
  std::vector<int> perm(a.n());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (SubsetMask f : a.family()) {
      SubsetMask image = 0;
      for (int i = 0; i < a.n(); ++i) {
        if ((f >> i) & 1) image |= Bit(perm[i]);
      }
      if (!b.Contains(image)) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Uniformly random nonempty family on {1..n}.
inline SetSystem RandomFamily(std::mt19937_64& rng, int n) {
  const int subsets = 1 << n;
  std::vector<SubsetMask> family;
  while (family.empty()) {
    for (int s = 0; s < subsets; ++s) {
      if (rng() & 1) family.push_back(static_cast<SubsetMask>(s));
    }
  }
  return SetSystem(GroundSet::Numbered(n), std::move(family));
}

}  // namespace deltamat::testing

#endif  // DELTAMAT_TESTS_ORACLES_H_
