// Copyright 2026 The Coopetition Authors
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

#ifndef COOPETITION_SVG_HPP_
#define COOPETITION_SVG_HPP_

#include <string>

#include "coopetition/analysis.hpp"

namespace coopetition {

// SVG 1.1 chart of the analysis: payoff region and initial region, Pareto
// front, TU line, rebalancing segments, labeled solution points. Fixed
// 800x600 viewport with 5% margins, y axis pointing up; output is byte
// deterministic for a given analysis.
std::string render_svg(const CoopetitiveAnalysis& analysis,
                       const std::string& title);

}  // namespace coopetition

#endif  // COOPETITION_SVG_HPP_
