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

#include "deltamat/canon.h"

#include <algorithm>
#include <deque>
#include <functional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "deltamat/gf2rep.h"

namespace deltamat {
namespace {

using Family = std::vector<SubsetMask>;

struct FamilyHash {
  std::size_t operator()(const Family& family) const {
    std::size_t h = family.size();
    for (SubsetMask f : family) {
      h ^= std::hash<SubsetMask>{}(f) + 0x9e3779b97f4a7c15ULL + (h << 6) +
           (h >> 2);
    }
    return h;
  }
};

Family FamilyOf(const SetSystem& system) {
  return Family(system.family().begin(), system.family().end());
}

// Breadth-first search over slide sequences drawn from `moves`, memoized on
// the exact family. Returns the first (shortest) trace reaching `goal`.
std::optional<SlideTrace> SearchSlides(
    const SetSystem& start, const std::vector<Slide>& moves,
    const std::function<bool(const SetSystem&)>& goal, int max_depth,
    std::size_t max_states) {
  if (goal(start)) return SlideTrace{};
  struct Node {
    SetSystem system;
    int parent;
    Slide move;
    int depth;
  };
  std::vector<Node> nodes = {{start, -1, {}, 0}};
  std::unordered_map<Family, int, FamilyHash> seen = {{FamilyOf(start), 0}};
  for (std::size_t head = 0; head < nodes.size(); ++head) {
    if (nodes[head].depth >= max_depth) continue;
    for (const Slide& move : moves) {
      SetSystem next = HandleSlide(nodes[head].system, move.a, move.b);
      if (!seen.emplace(FamilyOf(next), static_cast<int>(nodes.size()))
               .second) {
        continue;
      }
      const bool done = goal(next);
      nodes.push_back({std::move(next), static_cast<int>(head), move,
                       nodes[head].depth + 1});
      if (done) {
        SlideTrace trace;
        for (int at = static_cast<int>(nodes.size()) - 1; at > 0;
             at = nodes[at].parent) {
          trace.push_back(nodes[at].move);
        }
        std::reverse(trace.begin(), trace.end());
        return trace;
      }
      if (nodes.size() >= max_states) return std::nullopt;
    }
  }
  return std::nullopt;
}

std::vector<Slide> MovesWithin(SubsetMask elements) {
  std::vector<Slide> moves;
  for (int a = 0; a < kMaxGroundSize; ++a) {
    if ((elements & Bit(a)) == 0) continue;
    for (int b = 0; b < kMaxGroundSize; ++b) {
      if (a != b && (elements & Bit(b)) != 0) moves.push_back({a, b});
    }
  }
  return moves;
}

SubsetMask UnionOf(const SetSystem& system) {
  SubsetMask all = 0;
  for (SubsetMask f : system.family()) all |= f;
  return all;
}

CanonicalParams ParamsFromProfile(const SetSystem& delta) {
  const StructureProfile profile = Profile(delta);
  const int width = profile.max_size - profile.min_size;
  CanonicalParams params;
  params.i = delta.n() - profile.max_size;
  params.l = profile.min_size;
  if (profile.parity == Parity::kEven) {
    params.j = width / 2;
  } else {
    params.k = width;
  }
  return params;
}

// Structural decomposition into atoms; `witness` maps each element to its
// position in BuildCanonical of the returned parameters.
std::optional<CanonicalParams> Decompose(const SetSystem& system,
                                         Bijection* witness) {
  if (system.empty()) return std::nullopt;
  const StructureProfile profile = Profile(system);
  const SubsetMask full = system.ground().full_mask();
  const SubsetMask residual =
      full & ~profile.loops & ~profile.everywhere_elements;
  auto closed_under = [&](SubsetMask toggle) {
    for (SubsetMask f : system.family()) {
      if (!system.Contains(f ^ toggle)) return false;
    }
    return true;
  };
  auto co_occur = [&](int e, int f) {
    for (SubsetMask m : system.family()) {
      if (((m >> e) & 1) != ((m >> f) & 1)) return false;
    }
    return true;
  };

  std::vector<int> odd;
  std::vector<std::pair<int, int>> pairs;
  SubsetMask matched = 0;
  for (int e = 0; e < system.n(); ++e) {
    if ((residual & Bit(e)) == 0 || (matched & Bit(e)) != 0) continue;
    if (closed_under(Bit(e))) {
      odd.push_back(e);
      matched |= Bit(e);
      continue;
    }
    bool paired = false;
    for (int f = e + 1; f < system.n() && !paired; ++f) {
      if ((residual & ~matched & Bit(f)) == 0) continue;
      if (co_occur(e, f) && closed_under(Bit(e) | Bit(f))) {
        pairs.emplace_back(e, f);
        matched |= Bit(e) | Bit(f);
        paired = true;
      }
    }
    if (!paired) return std::nullopt;
  }

  CanonicalParams params;
  params.i = Size(profile.loops);
  params.j = static_cast<int>(pairs.size());
  params.k = static_cast<int>(odd.size());
  params.l = Size(profile.everywhere_elements);
  if (system.family().size() != std::size_t{1} << (params.j + params.k)) {
    return std::nullopt;
  }
  if (witness != nullptr) {
    witness->assign(system.n(), -1);
    int next = 0;
    for (int e = 0; e < system.n(); ++e) {
      if ((profile.loops & Bit(e)) != 0) (*witness)[e] = next++;
    }
    for (const auto& [e, f] : pairs) {
      (*witness)[e] = next++;
      (*witness)[f] = next++;
    }
    for (int e : odd) (*witness)[e] = next++;
    for (int e = 0; e < system.n(); ++e) {
      if ((profile.everywhere_elements & Bit(e)) != 0) (*witness)[e] = next++;
    }
  }
  return params;
}

// Elementary congruence A <- P A P^T with P = I + E_ab. On D(A) this is
// exactly the slide of a over b.
void Transvect(std::vector<SubsetMask>& rows, int a, int b,
               SlideTrace& trace) {
  rows[a] ^= rows[b];
  for (SubsetMask& row : rows) {
    if ((row >> b) & 1) row ^= Bit(a);
  }
  trace.push_back({a, b});
}

bool Entry(const std::vector<SubsetMask>& rows, int r, int c) {
  return (rows[r] >> c) & 1;
}

// Brings a nonsingular symmetric GF(2) matrix to a direct sum of 1x1 ones
// (odd case) or of hyperbolic planes (even case) using transvections only.
std::optional<SlideTrace> CongruenceTrace(std::vector<SubsetMask> rows) {
  const int n = static_cast<int>(rows.size());
  SlideTrace trace;
  SubsetMask remaining = n == 0 ? 0 : (Bit(n) - 1);
  std::vector<int> ones;
  std::vector<std::pair<int, int>> planes;
  while (remaining != 0) {
    int pivot = -1;
    for (SubsetMask rest = remaining; rest != 0; rest &= rest - 1) {
      const int p = std::countr_zero(rest);
      if (Entry(rows, p, p)) {
        pivot = p;
        break;
      }
    }
    if (pivot >= 0) {
      for (SubsetMask rest = remaining & ~Bit(pivot); rest != 0;
           rest &= rest - 1) {
        const int w = std::countr_zero(rest);
        if (Entry(rows, w, pivot)) Transvect(rows, w, pivot, trace);
      }
      remaining &= ~Bit(pivot);
      ones.push_back(pivot);
      continue;
    }
    const int p = std::countr_zero(remaining);
    const SubsetMask partners = rows[p] & remaining;
    if (partners == 0) return std::nullopt;  // singular
    const int q = std::countr_zero(partners);
    const SubsetMask others = remaining & ~Bit(p) & ~Bit(q);
    for (SubsetMask rest = others; rest != 0; rest &= rest - 1) {
      const int w = std::countr_zero(rest);
      if (Entry(rows, w, q)) Transvect(rows, w, p, trace);
    }
    for (SubsetMask rest = others; rest != 0; rest &= rest - 1) {
      const int w = std::countr_zero(rest);
      if (Entry(rows, w, p)) Transvect(rows, w, q, trace);
    }
    remaining &= ~Bit(p) & ~Bit(q);
    planes.emplace_back(p, q);
  }
  // A plane next to a one is congruent to three ones.
  if (!ones.empty()) {
    const int r = ones.front();
    for (const auto& [p, q] : planes) {
      Transvect(rows, p, r, trace);
      Transvect(rows, q, p, trace);
      Transvect(rows, r, p, trace);
      Transvect(rows, r, q, trace);
    }
  }
  return trace;
}

}  // namespace

std::string ToString(const CanonicalParams& params) {
  return "i=" + std::to_string(params.i) + " j=" + std::to_string(params.j) +
         " k=" + std::to_string(params.k) + " l=" + std::to_string(params.l);
}

CanonicalParams ComputeCanonicalParams(const SetSystem& delta) {
  if (delta.empty()) throw Error("empty family");
  if (!RecognizeBinary(delta)) throw Error("not binary");
  return ParamsFromProfile(delta);
}

SetSystem BuildCanonical(const CanonicalParams& params) {
  if (params.i < 0 || params.j < 0 || params.k < 0 || params.l < 0) {
    throw Error("negative canonical parameter");
  }
  if (params.ground_size() > kMaxGroundSize) {
    throw Error("ground set larger than 64 elements");
  }
  std::vector<SetSystem> atoms;
  auto atom = [&](std::vector<std::string> labels, Family family) {
    atoms.emplace_back(GroundSet(std::move(labels)), std::move(family));
  };
  for (int x = 1; x <= params.i; ++x) atom({"i" + std::to_string(x)}, {0});
  for (int x = 1; x <= params.j; ++x) {
    const std::string base = "j" + std::to_string(x);
    atom({base + "a", base + "b"}, {0, 3});
  }
  for (int x = 1; x <= params.k; ++x) atom({"k" + std::to_string(x)}, {0, 1});
  for (int x = 1; x <= params.l; ++x) atom({"l" + std::to_string(x)}, {1});
  return DirectSum(atoms);
}

std::optional<CanonicalParams> MatchCanonical(const SetSystem& system) {
  return Decompose(system, nullptr);
}

SlideTrace ReduceMatroid(const Matroid& matroid, SubsetMask target) {
  const SetSystem& bases = matroid.carrier();
  if (!bases.Contains(target)) throw Error("target is not a basis");
  const int n = bases.n();
  const std::size_t budget =
      n >= 20 ? std::size_t{1} << 40 : std::size_t{1} << (2 * n);

  SlideTrace trace;
  SetSystem current = bases;
  while (current.family().size() > 1 && trace.size() < budget) {
    // A basis of length one relative to the target: target - x + y.
    std::optional<Slide> step;
    for (SubsetMask b : current.family()) {
      if (b != target && Size(b & ~target) == 1) {
        const int x = std::countr_zero(target & ~b);
        const int y = std::countr_zero(b & ~target);
        step = Slide{y, x};
        break;
      }
    }
    if (!step) break;
    current = HandleSlide(current, step->a, step->b);
    trace.push_back(*step);
  }
  if (current.family().size() == 1 && current.family().front() == target) {
    return trace;
  }

  const std::vector<Slide> moves = MovesWithin(UnionOf(bases));
  auto goal = [&](const SetSystem& s) {
    return s.family().size() == 1 && s.family().front() == target;
  };
  auto rest = SearchSlides(current, moves, goal, 4 * n + 8,
                           ReduceOptions{}.max_states);
  if (!rest) throw Error("no reduction found");
  trace.insert(trace.end(), rest->begin(), rest->end());
  return trace;
}

ReductionResult Reduce(const SetSystem& delta, const ReduceOptions& options) {
  if (delta.empty()) throw Error("empty family");
  if (!CheckSea(delta)) throw Error("not a delta-matroid");
  if (!RecognizeBinary(delta)) throw Error("not binary");
  const CanonicalParams params = ParamsFromProfile(delta);

  // Upper matroid to a single basis; slides act size by size, so the trace
  // found on the top layer does the same to the top layer of `delta`.
  const Matroid upper = BoundMatroid(delta, Bound::kUpper);
  SlideTrace trace =
      ReduceMatroid(upper, upper.carrier().family().front());
  SetSystem current = ApplyTrace(delta, trace);
  const SubsetMask top = current.family().back();
  if (current.family().size() > 1 &&
      Size(current.family()[current.family().size() - 2]) == Size(top)) {
    throw Error("upper stage left several maximum feasible sets");
  }

  const Matroid lower = BoundMatroid(current, Bound::kLower);
  const SubsetMask bottom = lower.carrier().family().front();
  const SlideTrace lower_trace = ReduceMatroid(lower, bottom);
  for (const Slide& s : lower_trace) {
    if ((top & Bit(s.a)) == 0 || (top & Bit(s.b)) == 0) {
      throw Error("lower stage slide leaves the maximum feasible set");
    }
  }
  current = ApplyTrace(current, lower_trace);
  trace.insert(trace.end(), lower_trace.begin(), lower_trace.end());
  if (current.family().front() != bottom || current.family().back() != top ||
      (bottom & ~top) != 0 ||
      (current.family().size() > 1 && Size(current.family()[1]) == Size(bottom))) {
    throw Error("lower stage left several minimum feasible sets");
  }

  // Middle: contracting the bottom and deleting the loops leaves an
  // empty-set-feasible binary system D(A) on top - bottom. Slides inside
  // that set commute with the contraction.
  const SubsetMask middle = top & ~bottom;
  const SetSystem contracted =
      Minor(current, current.ground().full_mask() & ~top, bottom);
  if (!contracted.Contains(0)) {
    throw Error("contraction of the minimum feasible set lost the empty set");
  }
  std::vector<int> middle_elements;
  for (SubsetMask rest = middle; rest != 0; rest &= rest - 1) {
    middle_elements.push_back(std::countr_zero(rest));
  }
  auto is_target = [&](const SetSystem& s) {
    auto match = MatchCanonical(s);
    return match && *match == params;
  };

  std::optional<SlideTrace> middle_trace;
  const SymmetricBitMatrix candidate = CandidateMatrix(contracted);
  if (DeltaFromMatrix(candidate, contracted.ground()) == contracted) {
    const auto rows = candidate.rows();
    if (auto local = CongruenceTrace({rows.begin(), rows.end()})) {
      SlideTrace mapped;
      for (const Slide& s : *local) {
        mapped.push_back({middle_elements[s.a], middle_elements[s.b]});
      }
      if (is_target(ApplyTrace(current, mapped))) middle_trace = mapped;
    }
  }
  if (!middle_trace) {
    middle_trace = SearchSlides(current, MovesWithin(middle), is_target,
                                options.search_depth, options.max_states);
  }
  if (!middle_trace) throw Error("no reduction found");
  current = ApplyTrace(current, *middle_trace);
  trace.insert(trace.end(), middle_trace->begin(), middle_trace->end());

  ReductionResult result{std::move(trace), params, {}};
  const auto found = Decompose(current, &result.witness);
  if (!found || *found != params) throw Error("no reduction found");
  const SetSystem canonical = BuildCanonical(params);
  for (SubsetMask f : current.family()) {
    if (!canonical.Contains(MapMask(f, result.witness))) {
      throw Error("reduction witness does not verify");
    }
  }
  return result;
}

}  // namespace deltamat
