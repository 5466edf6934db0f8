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

#ifndef DELTAMAT_TEXT_FORMAT_H_
#define DELTAMAT_TEXT_FORMAT_H_

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "deltamat/gf2rep.h"
#include "deltamat/matroid.h"
#include "deltamat/setsystem.h"
#include "deltamat/slides.h"

// Line-oriented text formats. Blank lines and lines starting with '#' are
// ignored everywhere.
//
//   set system:  ground: a b c      trace:  slide: a b
//                feasible: a b      matrix: dim: 3
//                feasible:                  row: 0 1 0
//   graph:       vertices: 4
//                edge: a 1 2

namespace deltamat {

// Malformed input. `line` is 1-based (0 when not tied to a line).
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

SetSystem ParseSetSystem(std::string_view text);
// Sorted family order; round-trips through ParseSetSystem.
std::string FormatSetSystem(const SetSystem& system);

using LabelledSlide = std::pair<std::string, std::string>;

std::vector<LabelledSlide> ParseTrace(std::string_view text);
// Throws Error for labels missing from `ground`.
SlideTrace ResolveTrace(const std::vector<LabelledSlide>& steps,
                        const GroundSet& ground);
std::string FormatTrace(const SlideTrace& trace, const GroundSet& ground);

SymmetricBitMatrix ParseMatrix(std::string_view text);
std::string FormatMatrix(const SymmetricBitMatrix& matrix);

Graph ParseGraph(std::string_view text);

}  // namespace deltamat

#endif  // DELTAMAT_TEXT_FORMAT_H_
