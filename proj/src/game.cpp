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

#include "coopetition/game.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <stdexcept>

namespace coopetition {

void GridSpec::validate() const {
  if (resolution < 2)
    throw std::invalid_argument("grid resolution must be >= 2");
}

std::vector<double> GridSpec::nodes(const Interval& iv) const {
  validate();
  std::vector<double> out(static_cast<std::size_t>(resolution));
  const double n1 = static_cast<double>(resolution - 1);
  for (int i = 0; i < resolution; ++i)
    out[static_cast<std::size_t>(i)] = iv.lo + (iv.hi - iv.lo) * (i / n1);
  out.front() = iv.lo;
  out.back() = iv.hi;
  return out;
}

NormalFormSection section(const CoopetitiveGame& game, double z) {
  if (!game.cube.c.contains(z))
    throw std::invalid_argument("cooperative strategy out of range");
  auto payoff = game.payoff;
  return NormalFormSection{
      game.cube.e, game.cube.f, z,
      [payoff, z](double x, double y) { return payoff(x, y, z); }};
}

CoopetitiveGame reassemble(const std::vector<NormalFormSection>& sections) {
  if (sections.empty())
    throw std::invalid_argument("empty section family");
  std::vector<NormalFormSection> family = sections;
  std::sort(family.begin(), family.end(),
            [](const NormalFormSection& a, const NormalFormSection& b) {
              return a.z < b.z;
            });
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (!(family[i].e == family[0].e) || !(family[i].f == family[0].f))
      throw std::invalid_argument("inconsistent strategy rectangles");
    if (i > 0 && family[i].z == family[i - 1].z)
      throw std::invalid_argument("duplicate cooperative strategy in family");
  }

  StrategyCube cube{family[0].e, family[0].f,
                    Interval{family.front().z, family.back().z}};
  auto shared = std::make_shared<std::vector<NormalFormSection>>(std::move(family));
  auto payoff = [shared](double x, double y, double z) -> PayoffPoint {
    const auto& fam = *shared;
    if (z <= fam.front().z) return fam.front().payoff(x, y);
    if (z >= fam.back().z) return fam.back().payoff(x, y);
    auto it = std::lower_bound(
        fam.begin(), fam.end(), z,
        [](const NormalFormSection& s, double v) { return s.z < v; });
    if (it->z == z) return it->payoff(x, y);  // exact node: no arithmetic
    const NormalFormSection& hi = *it;
    const NormalFormSection& lo = *(it - 1);
    const double t = (z - lo.z) / (hi.z - lo.z);
    const PayoffPoint a = lo.payoff(x, y);
    const PayoffPoint b = hi.payoff(x, y);
    return {a.p1 + t * (b.p1 - a.p1), a.p2 + t * (b.p2 - a.p2)};
  };
  return CoopetitiveGame{cube, std::move(payoff)};
}

std::vector<std::pair<double, double>> nash_equilibria(
    const NormalFormSection& g, const GridSpec& grid, double tol) {
  const std::vector<double> xs = grid.nodes(g.e);
  const std::vector<double> ys = grid.nodes(g.f);
  const std::size_t nx = xs.size(), ny = ys.size();

  std::vector<double> f1(nx * ny), f2(nx * ny);
  for (std::size_t i = 0; i < nx; ++i)
    for (std::size_t j = 0; j < ny; ++j) {
      const PayoffPoint p = g.payoff(xs[i], ys[j]);
      f1[i * ny + j] = p.p1;
      f2[i * ny + j] = p.p2;
    }

  std::vector<double> col_max1(ny, -std::numeric_limits<double>::infinity());
  std::vector<double> row_max2(nx, -std::numeric_limits<double>::infinity());
  for (std::size_t i = 0; i < nx; ++i)
    for (std::size_t j = 0; j < ny; ++j) {
      col_max1[j] = std::max(col_max1[j], f1[i * ny + j]);
      row_max2[i] = std::max(row_max2[i], f2[i * ny + j]);
    }

  std::vector<std::pair<double, double>> out;
  for (std::size_t i = 0; i < nx; ++i)
    for (std::size_t j = 0; j < ny; ++j)
      if (f1[i * ny + j] >= col_max1[j] - tol &&
          f2[i * ny + j] >= row_max2[i] - tol)
        out.emplace_back(xs[i], ys[j]);
  return out;
}

PayoffPoint conservative_bivalue(const NormalFormSection& g,
                                 const GridSpec& grid) {
  const std::vector<double> xs = grid.nodes(g.e);
  const std::vector<double> ys = grid.nodes(g.f);

  double v1 = -std::numeric_limits<double>::infinity();
  for (double x : xs) {
    double worst = std::numeric_limits<double>::infinity();
    for (double y : ys) worst = std::min(worst, g.payoff(x, y).p1);
    v1 = std::max(v1, worst);
  }
  double v2 = -std::numeric_limits<double>::infinity();
  for (double y : ys) {
    double worst = std::numeric_limits<double>::infinity();
    for (double x : xs) worst = std::min(worst, g.payoff(x, y).p2);
    v2 = std::max(v2, worst);
  }
  return {v1, v2};
}

PayoffPoint payoff_core_supremum(const NormalFormSection& g,
                                 const GridSpec& grid) {
  const std::vector<double> xs = grid.nodes(g.e);
  const std::vector<double> ys = grid.nodes(g.f);
  std::vector<PayoffPoint> cloud;
  cloud.reserve(xs.size() * ys.size());
  for (double x : xs)
    for (double y : ys) cloud.push_back(g.payoff(x, y));

  const ParetoFront front = pareto_front(cloud);
  const PayoffPoint threat = conservative_bivalue(g, grid);

  std::vector<PayoffPoint> core;
  for (const auto& p : front.points)
    if (p.p1 >= threat.p1 - kPointTol && p.p2 >= threat.p2 - kPointTol)
      core.push_back(p);
  if (core.empty()) throw NotSolvable("empty payoff core");
  return extrema(core).hi;
}

std::vector<NashPathEntry> nash_path(const CoopetitiveGame& game,
                                     const std::vector<double>& zgrid,
                                     const GridSpec& grid) {
  std::vector<NashPathEntry> path;
  path.reserve(zgrid.size());
  for (double z : zgrid) {
    const NormalFormSection g = section(game, z);
    NashPathEntry entry;
    entry.z = z;
    entry.equilibria = nash_equilibria(g, grid);
    entry.payoffs.reserve(entry.equilibria.size());
    for (const auto& [x, y] : entry.equilibria)
      entry.payoffs.push_back(g.payoff(x, y));
    path.push_back(std::move(entry));
  }
  return path;
}

std::vector<double> z_nodes(const CoopetitiveGame& game, int count) {
  if (count < 2) throw std::invalid_argument("z-grid size must be >= 2");
  GridSpec spec{count};
  return spec.nodes(game.cube.c);
}

}  // namespace coopetition
