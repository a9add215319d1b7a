// Copyright 2026 The Speq Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SPEQ_SVG_HPP
#define SPEQ_SVG_HPP

#include <string>

#include "report.hpp"

namespace speq {

enum class PlotSpace {
  kStrategy,  // axes are the profile coordinates c_i
  kPayoff,    // axes are the payoffs u_i
};

PlotSpace ParsePlotSpace(const std::string& name);  // "strategy" | "payoff"

// Scatter plot of the report's rows: one panel for 2-player games, the
// three pairwise projections for 3-player ones. Oracle and evolved points
// use distinct markers. Byte-deterministic for identical reports. Throws
// Unsupported for more than three players (consume the CSV instead).
std::string RenderSvg(const Report& report, PlotSpace space);

}  // namespace speq

#endif  // SPEQ_SVG_HPP
