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

#include "deltamat/slides.h"

#include <random>

#include "deltamat/census.h"
#include "deltamat/gf2rep.h"
#include "deltamat/matroid.h"
#include "fixtures.h"
#include "gtest/gtest.h"
#include "oracles.h"

namespace deltamat {
namespace {

using testing::Numbered;

TEST(HandleSlideTest, WorkedExampleChain) {
  const SetSystem s12 = HandleSlide(testing::PaperExample(), 0, 1);
  EXPECT_EQ(s12, Numbered(4, {{2}, {1, 2, 3}, {1, 2, 4}, {2, 3, 4}}));
  const SetSystem s34 = HandleSlide(s12, 2, 3);
  EXPECT_EQ(s34, Numbered(4, {{2}, {1, 2, 4}, {2, 3, 4}}));
  const SetSystem s13 = HandleSlide(s34, 0, 2);
  EXPECT_EQ(s13, Numbered(4, {{2}, {2, 3, 4}}));
  EXPECT_EQ(ApplyTrace(testing::PaperExample(), SlideTrace{{0, 1}, {2, 3}, {0, 2}}),
            s13);
  EXPECT_EQ(ApplyTrace(s13, {}), s13);
}

TEST(HandleSlideTest, Errors) {
  const SetSystem d = testing::PaperExample();
  EXPECT_THROW(HandleSlide(d, 1, 1), Error);
  EXPECT_THROW(HandleSlide(d, 0, 4), Error);
}

TEST(HandleSlideTest, AgreesWithOracle) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const SetSystem f = testing::RandomFamily(rng, n);
    const int a = static_cast<int>(rng() % n);
    int b = static_cast<int>(rng() % (n - 1));
    if (b >= a) ++b;
    EXPECT_EQ(testing::ToSets(HandleSlide(f, a, b)),
              testing::OracleSlide(testing::ToSets(f), a, b));
  }
}

TEST(HandleSlideTest, IsAnInvolution) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 300; ++trial) {
    const SetSystem f = testing::RandomFamily(rng, 4);
    const int a = static_cast<int>(rng() % 4);
    const int b = (a + 1 + static_cast<int>(rng() % 3)) % 4;
    EXPECT_EQ(HandleSlide(HandleSlide(f, a, b), a, b), f);
  }
}

TEST(HandleSlideTest, MatrixCongruence) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const int dim = 2 + static_cast<int>(rng() % 5);
    SymmetricBitMatrix a(dim);
    for (int r = 0; r < dim; ++r) {
      for (int c = r; c < dim; ++c) a.Set(r, c, rng() & 1);
    }
    const int x = static_cast<int>(rng() % dim);
    const int y = (x + 1 + static_cast<int>(rng() % (dim - 1))) % dim;
    // P A P^T with P = I + E_xy, computed entrywise.
    SymmetricBitMatrix b(dim);
    auto p = [&](int r, int c) { return (r == c) != (r == x && c == y); };
    for (int r = 0; r < dim; ++r) {
      for (int c = r; c < dim; ++c) {
        int sum = 0;
        for (int s = 0; s < dim; ++s) {
          for (int t = 0; t < dim; ++t) sum ^= p(r, s) & a.at(s, t) & p(c, t);
        }
        b.Set(r, c, sum);
      }
    }
    EXPECT_EQ(HandleSlide(DeltaFromMatrix(a), x, y), DeltaFromMatrix(b));
  }
}

TEST(HandleSlideTest, BinaryClosureSizeWindowAndParity) {
  for (int n = 2; n <= 4; ++n) {
    ForEachDeltaMatroid(n, [&](const SetSystem& d) {
      if (!RecognizeBinary(d).has_value()) return;
      const StructureProfile before = Profile(d);
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
          if (a == b) continue;
          const SetSystem s = HandleSlide(d, a, b);
          ASSERT_TRUE(CheckSea(s));
          EXPECT_TRUE(RecognizeBinary(s).has_value());
          const StructureProfile after = Profile(s);
          EXPECT_EQ(after.min_size, before.min_size);
          EXPECT_EQ(after.max_size, before.max_size);
          EXPECT_EQ(after.parity, before.parity);
          EXPECT_EQ(BoundMatroid(s, Bound::kUpper).carrier(),
                    HandleSlide(BoundMatroid(d, Bound::kUpper).carrier(), a,
                                b));
        }
      }
    });
  }
}

}  // namespace
}  // namespace deltamat
