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

#include "deltamat/text_format.h"

#include <charconv>
#include <set>
#include <sstream>

namespace deltamat {
namespace {

struct Line {
  int number;
  std::string key;
  std::vector<std::string> tokens;
};

// Splits "key: tok tok" lines, dropping blanks and comments.
std::vector<Line> Tokenize(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    pos = end + 1;
    ++number;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    const std::size_t first = raw.find_first_not_of(" \t");
    if (first == std::string_view::npos || raw[first] == '#') continue;
    const std::size_t colon = raw.find(':');
    if (colon == std::string_view::npos) {
      throw ParseError(number, "expected 'key: values'");
    }
    std::istringstream key_stream{std::string(raw.substr(0, colon))};
    std::istringstream value_stream{std::string(raw.substr(colon + 1))};
    Line line{number, {}, {}};
    key_stream >> line.key;
    std::string extra;
    if (key_stream >> extra) throw ParseError(number, "malformed key");
    for (std::string token; value_stream >> token;) {
      line.tokens.push_back(token);
    }
    lines.push_back(std::move(line));
  }
  return lines;
}

int ParseInt(const Line& line, const std::string& token) {
  int value = 0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(line.number, "expected an integer, got '" + token + "'");
  }
  return value;
}

void Expect(const Line& line, const std::string& key) {
  if (line.key != key) {
    throw ParseError(line.number,
                     "expected '" + key + ":', got '" + line.key + ":'");
  }
}

std::string Join(const std::vector<std::string>& labels) {
  std::string out;
  for (const std::string& label : labels) out += " " + label;
  return out;
}

}  // namespace

ParseError::ParseError(int line, const std::string& message)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " +
                                        message
                                  : message),
      line_(line) {}

SetSystem ParseSetSystem(std::string_view text) {
  const std::vector<Line> lines = Tokenize(text);
  if (lines.empty()) throw ParseError(0, "missing 'ground:' line");
  Expect(lines.front(), "ground");
  GroundSet ground;
  try {
    ground = GroundSet(lines.front().tokens);
  } catch (const Error& e) {
    throw ParseError(lines.front().number, e.what());
  }
  std::vector<SubsetMask> family;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    Expect(line, "feasible");
    SubsetMask mask = 0;
    for (const std::string& label : line.tokens) {
      const auto index = ground.Find(label);
      if (!index) throw ParseError(line.number, "unknown element: " + label);
      if ((mask & Bit(*index)) != 0) {
        throw ParseError(line.number, "repeated element: " + label);
      }
      mask |= Bit(*index);
    }
    family.push_back(mask);
  }
  return SetSystem(std::move(ground), std::move(family));
}

std::string FormatSetSystem(const SetSystem& system) {
  std::string out = "ground:" + Join(system.ground().labels()) + "\n";
  for (SubsetMask f : system.family()) {
    out += "feasible:" + Join(system.ground().LabelsOf(f)) + "\n";
  }
  return out;
}

std::vector<LabelledSlide> ParseTrace(std::string_view text) {
  std::vector<LabelledSlide> steps;
  for (const Line& line : Tokenize(text)) {
    Expect(line, "slide");
    if (line.tokens.size() != 2) {
      throw ParseError(line.number, "a slide needs exactly two elements");
    }
    steps.emplace_back(line.tokens[0], line.tokens[1]);
  }
  return steps;
}

SlideTrace ResolveTrace(const std::vector<LabelledSlide>& steps,
                        const GroundSet& ground) {
  SlideTrace trace;
  for (const auto& [a, b] : steps) {
    trace.push_back({ground.IndexOf(a), ground.IndexOf(b)});
    if (trace.back().a == trace.back().b) {
      throw Error("slide needs two distinct elements");
    }
  }
  return trace;
}

std::string FormatTrace(const SlideTrace& trace, const GroundSet& ground) {
  std::string out;
  for (const Slide& s : trace) {
    out += "slide: " + ground.label(s.a) + " " + ground.label(s.b) + "\n";
  }
  return out;
}

SymmetricBitMatrix ParseMatrix(std::string_view text) {
  const std::vector<Line> lines = Tokenize(text);
  if (lines.empty()) throw ParseError(0, "missing 'dim:' line");
  Expect(lines.front(), "dim");
  if (lines.front().tokens.size() != 1) {
    throw ParseError(lines.front().number, "'dim:' takes one integer");
  }
  const int dim = ParseInt(lines.front(), lines.front().tokens[0]);
  if (dim < 0 || dim > kMaxGroundSize) {
    throw ParseError(lines.front().number, "dimension out of range");
  }
  if (static_cast<int>(lines.size()) != dim + 1) {
    throw ParseError(lines.back().number, "expected " + std::to_string(dim) +
                                              " 'row:' lines");
  }
  std::vector<SubsetMask> rows;
  for (int r = 0; r < dim; ++r) {
    const Line& line = lines[r + 1];
    Expect(line, "row");
    if (static_cast<int>(line.tokens.size()) != dim) {
      throw ParseError(line.number, "row has wrong length");
    }
    SubsetMask row = 0;
    for (int c = 0; c < dim; ++c) {
      const std::string& token = line.tokens[c];
      if (token != "0" && token != "1") {
        throw ParseError(line.number, "entries must be 0 or 1");
      }
      if (token == "1") row |= Bit(c);
    }
    rows.push_back(row);
  }
  try {
    return SymmetricBitMatrix::FromRows(std::move(rows));
  } catch (const Error& e) {
    throw ParseError(lines.front().number, e.what());
  }
}

std::string FormatMatrix(const SymmetricBitMatrix& matrix) {
  std::string out = "dim: " + std::to_string(matrix.dim()) + "\n";
  for (int r = 0; r < matrix.dim(); ++r) {
    out += "row:";
    for (int c = 0; c < matrix.dim(); ++c) out += matrix.at(r, c) ? " 1" : " 0";
    out += "\n";
  }
  return out;
}

Graph ParseGraph(std::string_view text) {
  const std::vector<Line> lines = Tokenize(text);
  if (lines.empty()) throw ParseError(0, "missing 'vertices:' line");
  Expect(lines.front(), "vertices");
  if (lines.front().tokens.size() != 1) {
    throw ParseError(lines.front().number, "'vertices:' takes one integer");
  }
  Graph graph;
  graph.vertices = ParseInt(lines.front(), lines.front().tokens[0]);
  if (graph.vertices < 1) {
    throw ParseError(lines.front().number, "need at least one vertex");
  }
  std::set<std::string> labels;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    Expect(line, "edge");
    if (line.tokens.size() != 3) {
      throw ParseError(line.number, "'edge:' takes a label and two endpoints");
    }
    GraphEdge edge{line.tokens[0], ParseInt(line, line.tokens[1]),
                   ParseInt(line, line.tokens[2])};
    if (edge.u < 1 || edge.u > graph.vertices || edge.v < 1 ||
        edge.v > graph.vertices) {
      throw ParseError(line.number, "endpoint out of range");
    }
    if (!labels.insert(edge.label).second) {
      throw ParseError(line.number, "duplicate edge label: " + edge.label);
    }
    graph.edges.push_back(std::move(edge));
  }
  return graph;
}

}  // namespace deltamat
