// Copyright 2026 The arcdiag Authors.
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

#include "render.h"

#include <algorithm>
#include <map>
#include <sstream>
#include <vector>

namespace arcdiag::cli {

namespace {

struct Cell {
  int row;
  char glyph;
};

Cell CellOf(Step step, int height_before) {
  switch (step) {
    case Step::kUp: return {height_before, '/'};
    case Step::kDown: return {height_before - 1, '\\'};
    case Step::kFlat: return {height_before, '_'};
  }
  return {height_before, ' '};
}

void TrimRight(std::string& line) {
  line.erase(line.find_last_not_of(' ') + 1);
}

}  // namespace

std::string RenderAscii(const StepPath& path) {
  const int width = static_cast<int>(path.steps.size());
  std::vector<Cell> cells;
  int before = 0;
  for (int s = 0; s < width; ++s) {
    cells.push_back(CellOf(path.steps[s], before));
    before = path.heights[s];
  }
  std::ostringstream out;
  if (width > 0) {
    auto [lo, hi] = std::minmax_element(cells.begin(), cells.end(),
                                        [](const Cell& x, const Cell& y) { return x.row < y.row; });
    const int bottom = lo->row;
    for (int row = hi->row; row >= bottom; --row) {
      std::string line(width, ' ');
      for (int s = 0; s < width; ++s) {
        if (cells[s].row == row) line[s] = cells[s].glyph;
      }
      TrimRight(line);
      out << line << '\n';
    }
  }
  const int max_vertex = path.vertex.empty() ? 0 : *std::max_element(path.vertex.begin(), path.vertex.end());
  std::string tens(width, ' ');
  std::string units(width, ' ');
  for (int s = 0; s < width; ++s) {
    if (s > 0 && path.vertex[s] == path.vertex[s - 1]) continue;
    units[s] = static_cast<char>('0' + path.vertex[s] % 10);
    if (path.vertex[s] >= 10) tens[s] = static_cast<char>('0' + path.vertex[s] / 10 % 10);
  }
  TrimRight(tens);
  TrimRight(units);
  if (max_vertex >= 10) out << tens << '\n';
  out << units << '\n';
  return out.str();
}

std::string RenderSvg(const StepPath& path) {
  constexpr int kUnit = 20;
  constexpr int kMargin = 20;
  constexpr int kLabelSpace = 20;
  const int steps = static_cast<int>(path.steps.size());
  int lo = 0, hi = 0;
  for (int h : path.heights) {
    lo = std::min(lo, h);
    hi = std::max(hi, h);
  }
  const int width = steps * kUnit + 2 * kMargin;
  const int plot_height = (hi - lo) * kUnit;
  const int height = plot_height + 2 * kMargin + kLabelSpace;
  auto x_of = [&](int step) { return kMargin + step * kUnit; };
  auto y_of = [&](int h) { return kMargin + (hi - h) * kUnit; };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  out << "<g stroke=\"#dddddd\" stroke-width=\"1\">\n";
  for (int s = 0; s <= steps; ++s) {
    out << "<line x1=\"" << x_of(s) << "\" y1=\"" << y_of(hi) << "\" x2=\"" << x_of(s)
        << "\" y2=\"" << y_of(lo) << "\"/>\n";
  }
  for (int h = lo; h <= hi; ++h) {
    out << "<line x1=\"" << x_of(0) << "\" y1=\"" << y_of(h) << "\" x2=\"" << x_of(steps)
        << "\" y2=\"" << y_of(h) << "\"/>\n";
  }
  out << "</g>\n";
  out << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"2\" points=\"" << x_of(0) << ','
      << y_of(0);
  for (int s = 0; s < steps; ++s) out << ' ' << x_of(s + 1) << ',' << y_of(path.heights[s]);
  out << "\"/>\n";
  out << "<g font-family=\"monospace\" font-size=\"10\" text-anchor=\"middle\">\n";
  // Label each vertex under the centre of its step group.
  std::map<int, std::pair<int, int>> groups;
  for (int s = 0; s < steps; ++s) {
    auto [it, inserted] = groups.try_emplace(path.vertex[s], s, s + 1);
    if (!inserted) it->second.second = s + 1;
  }
  for (const auto& [vertex, span] : groups) {
    const int cx = kMargin + (span.first + span.second) * kUnit / 2;
    out << "<text x=\"" << cx << "\" y=\"" << y_of(lo) + kLabelSpace << "\">" << vertex
        << "</text>\n";
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace arcdiag::cli
