// Copyright 2026 The aqsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>

namespace aqsim {

enum class PlotKind { butterfly, density, probability };

/// Renders a static SVG from CSV content. Throws aqs::InvalidSpec when the
/// CSV header does not match the plot kind.
std::string render_svg(const std::string &csv, PlotKind kind);

}  // namespace aqsim
