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

#ifndef DELTAMAT_GF2REP_H_
#define DELTAMAT_GF2REP_H_

#include <optional>
#include <span>
#include <vector>

#include "deltamat/setsystem.h"

namespace deltamat {

// Symmetric matrix over GF(2); row i is a bit vector over the columns.
class SymmetricBitMatrix {
 public:
  SymmetricBitMatrix() = default;
  explicit SymmetricBitMatrix(int dim);
  // Throws Error if the rows are not symmetric or overflow the dimension.
  static SymmetricBitMatrix FromRows(std::vector<SubsetMask> rows);

  int dim() const { return static_cast<int>(rows_.size()); }
  std::span<const SubsetMask> rows() const { return rows_; }
  bool at(int row, int col) const { return (rows_[row] >> col) & 1; }
  // Sets both (row, col) and (col, row).
  void Set(int row, int col, bool value);

  bool operator==(const SymmetricBitMatrix&) const = default;

 private:
  std::vector<SubsetMask> rows_;
};

// Rank of the principal submatrix A[W] over GF(2).
int PrincipalRank(const SymmetricBitMatrix& matrix, SubsetMask subset);

// A[W] is nonsingular. The empty submatrix counts as invertible.
inline bool PrincipalInvertible(const SymmetricBitMatrix& matrix,
                                SubsetMask subset) {
  return PrincipalRank(matrix, subset) == Size(subset);
}

// D(A): all index sets of invertible principal submatrices. The ground is
// numbered 1..dim unless given.
SetSystem DeltaFromMatrix(const SymmetricBitMatrix& matrix);
SetSystem DeltaFromMatrix(const SymmetricBitMatrix& matrix,
                          const GroundSet& ground);

// Witness that twisting D by base_feasible gives D(matrix).
class BinaryCertificate {
 public:
  // Throws Error unless Twist(delta, base) == DeltaFromMatrix(matrix).
  BinaryCertificate(const SetSystem& delta, SubsetMask base_feasible,
                    SymmetricBitMatrix matrix);

  SubsetMask base_feasible() const { return base_feasible_; }
  const SymmetricBitMatrix& matrix() const { return matrix_; }

 private:
  SubsetMask base_feasible_;
  SymmetricBitMatrix matrix_;
};

// The only matrix that can represent an empty-set-feasible system: the
// diagonal is read off the singletons and each off-diagonal entry off the
// 2x2 principal minors.
SymmetricBitMatrix CandidateMatrix(const SetSystem& empty_feasible);

// Tries every feasible F in sorted order; the first whose twist is
// reproduced by its candidate matrix gives the certificate.
std::optional<BinaryCertificate> RecognizeBinary(const SetSystem& delta);

}  // namespace deltamat

#endif  // DELTAMAT_GF2REP_H_
