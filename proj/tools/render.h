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

// Text and SVG drawings of lattice step paths.

#ifndef ARCDIAG_TOOLS_RENDER_H_
#define ARCDIAG_TOOLS_RENDER_H_

#include <string>

#include "arcdiag/words.h"

namespace arcdiag::cli {

// One column per step: '/' up, '\' down, '_' flat, highest row first.
// Vertex indices are printed under the first column of their step group
// (tens digits on an extra line once an index reaches 10).
std::string RenderAscii(const StepPath& path);

std::string RenderSvg(const StepPath& path);

}  // namespace arcdiag::cli

#endif  // ARCDIAG_TOOLS_RENDER_H_
