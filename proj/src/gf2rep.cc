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

#include "deltamat/gf2rep.h"

#include <array>
#include <utility>

namespace deltamat {
namespace {

// D(A) enumerates every principal submatrix.
constexpr int kMaxMatrixDim = 24;

void CheckDim(int dim) {
  if (dim > kMaxMatrixDim) {
    throw Error("matrix dimension above " + std::to_string(kMaxMatrixDim));
  }
}

// Compares D(A) against `target` subset by subset, stopping early.
bool MatrixReproduces(const SymmetricBitMatrix& matrix,
                      const SetSystem& target) {
  const SubsetMask limit = Bit(matrix.dim());
  std::size_t count = 0;
  for (SubsetMask w = 0; w < limit; ++w) {
    const bool invertible = PrincipalInvertible(matrix, w);
    if (invertible != target.Contains(w)) return false;
    count += invertible;
  }
  return count == target.family().size();
}

}  // namespace

SymmetricBitMatrix::SymmetricBitMatrix(int dim) {
  if (dim < 0 || dim > kMaxGroundSize) throw Error("bad matrix dimension");
  rows_.assign(dim, 0);
}

SymmetricBitMatrix SymmetricBitMatrix::FromRows(std::vector<SubsetMask> rows) {
  SymmetricBitMatrix matrix(static_cast<int>(rows.size()));
  const int n = matrix.dim();
  const SubsetMask full = n == kMaxGroundSize ? ~SubsetMask{0} : Bit(n) - 1;
  for (int i = 0; i < n; ++i) {
    if ((rows[i] & ~full) != 0) throw Error("matrix row wider than dim");
    for (int j = 0; j < i; ++j) {
      if (((rows[i] >> j) & 1) != ((rows[j] >> i) & 1)) {
        throw Error("matrix is not symmetric");
      }
    }
  }
  matrix.rows_ = std::move(rows);
  return matrix;
}

void SymmetricBitMatrix::Set(int row, int col, bool value) {
  if (value) {
    rows_.at(row) |= Bit(col);
    rows_.at(col) |= Bit(row);
  } else {
    rows_.at(row) &= ~Bit(col);
    rows_.at(col) &= ~Bit(row);
  }
}

int PrincipalRank(const SymmetricBitMatrix& matrix, SubsetMask subset) {
  std::array<SubsetMask, kMaxGroundSize> pivot{};
  int rank = 0;
  for (SubsetMask rest = subset; rest != 0; rest &= rest - 1) {
    SubsetMask row = matrix.rows()[std::countr_zero(rest)] & subset;
    while (row != 0) {
      const int top = 63 - std::countl_zero(row);
      if (pivot[top] == 0) {
        pivot[top] = row;
        ++rank;
        break;
      }
      row ^= pivot[top];
    }
  }
  return rank;
}

SetSystem DeltaFromMatrix(const SymmetricBitMatrix& matrix) {
  return DeltaFromMatrix(matrix, GroundSet::Numbered(matrix.dim()));
}

SetSystem DeltaFromMatrix(const SymmetricBitMatrix& matrix,
                          const GroundSet& ground) {
  CheckDim(matrix.dim());
  if (ground.size() != matrix.dim()) {
    throw Error("ground size does not match matrix dimension");
  }
  std::vector<SubsetMask> family;
  const SubsetMask limit = Bit(matrix.dim());
  for (SubsetMask w = 0; w < limit; ++w) {
    if (PrincipalInvertible(matrix, w)) family.push_back(w);
  }
  return SetSystem(ground, std::move(family));
}

BinaryCertificate::BinaryCertificate(const SetSystem& delta,
                                     SubsetMask base_feasible,
                                     SymmetricBitMatrix matrix)
    : base_feasible_(base_feasible), matrix_(std::move(matrix)) {
  if (!delta.Contains(base_feasible_) || matrix_.dim() != delta.n() ||
      !MatrixReproduces(matrix_, Twist(delta, base_feasible_))) {
    throw Error("binary certificate does not verify");
  }
}

SymmetricBitMatrix CandidateMatrix(const SetSystem& empty_feasible) {
  const int n = empty_feasible.n();
  SymmetricBitMatrix matrix(n);
  for (int v = 0; v < n; ++v) {
    matrix.Set(v, v, empty_feasible.Contains(Bit(v)));
  }
  for (int v = 0; v < n; ++v) {
    for (int w = v + 1; w < n; ++w) {
      // det [[a, c], [c, b]] = ab + c over GF(2).
      const bool pair = empty_feasible.Contains(Bit(v) | Bit(w));
      matrix.Set(v, w, pair != (matrix.at(v, v) && matrix.at(w, w)));
    }
  }
  return matrix;
}

std::optional<BinaryCertificate> RecognizeBinary(const SetSystem& delta) {
  CheckDim(delta.n());
  for (SubsetMask base : delta.family()) {
    const SetSystem twisted = Twist(delta, base);
    SymmetricBitMatrix candidate = CandidateMatrix(twisted);
    if (MatrixReproduces(candidate, twisted)) {
      return BinaryCertificate(delta, base, std::move(candidate));
    }
  }
  return std::nullopt;
}

}  // namespace deltamat
