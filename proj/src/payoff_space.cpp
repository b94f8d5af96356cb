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

#include "coopetition/payoff_space.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace coopetition {

namespace {

std::string section_source(const NormalFormSection& g, const GridSpec& grid) {
  std::ostringstream os;
  os << "section z=" << g.z << " grid=" << grid.resolution;
  return os.str();
}

ParetoFront front_of_hull(const Polygon& hull, const GridSpec& grid) {
  return hull_pareto_front(hull, grid.resolution);
}

}  // namespace

std::vector<PayoffPoint> transform_boundary(const NormalFormSection& g,
                                            const GridSpec& grid) {
  if (g.e.width() < 0 || g.f.width() < 0)
    throw std::invalid_argument("degenerate strategy rectangle");
  const std::vector<double> xs = grid.nodes(g.e);
  const std::vector<double> ys = grid.nodes(g.f);

  std::vector<PayoffPoint> cloud;
  cloud.reserve(4 * xs.size());
  for (double x : xs) {
    cloud.push_back(g.payoff(x, g.f.lo));
    cloud.push_back(g.payoff(x, g.f.hi));
  }
  for (double y : ys) {
    cloud.push_back(g.payoff(g.e.lo, y));
    cloud.push_back(g.payoff(g.e.hi, y));
  }
  return cloud;
}

JacobianFn finite_difference_jacobian(const NormalFormSection& g,
                                      double step) {
  auto payoff = g.payoff;
  return [payoff, step](double x, double y) -> std::array<double, 4> {
    const PayoffPoint xp = payoff(x + step, y);
    const PayoffPoint xm = payoff(x - step, y);
    const PayoffPoint yp = payoff(x, y + step);
    const PayoffPoint ym = payoff(x, y - step);
    const double inv = 1.0 / (2.0 * step);
    return {(xp.p1 - xm.p1) * inv, (yp.p1 - ym.p1) * inv,
            (xp.p2 - xm.p2) * inv, (yp.p2 - ym.p2) * inv};
  };
}

CriticalZone critical_zone(const NormalFormSection& g,
                           const JacobianFn& jacobian, const GridSpec& grid,
                           double tol) {
  const std::vector<double> xs = grid.nodes(g.e);
  const std::vector<double> ys = grid.nodes(g.f);
  CriticalZone zone;
  for (double x : xs)
    for (double y : ys) {
      const std::array<double, 4> j = jacobian(x, y);
      const double det = j[0] * j[3] - j[1] * j[2];
      if (std::fabs(det) < tol) zone.points.emplace_back(x, y);
    }
  return zone;
}

CriticalZone critical_zone(const NormalFormSection& g, const GridSpec& grid,
                           double tol) {
  return critical_zone(g, finite_difference_jacobian(g), grid, tol);
}

ParetoFront hull_pareto_front(const Polygon& hull, int samples) {
  const auto& v = hull.vertices;
  if (v.empty()) throw std::invalid_argument("empty polygon");
  if (v.size() == 1) return ParetoFront{{v[0]}};

  std::vector<PayoffPoint> dense;
  const std::size_t edges = v.size() == 2 ? 1 : v.size();
  const int per_edge = samples < 2 ? 2 : samples;
  for (std::size_t i = 0; i < edges; ++i) {
    const Segment edge{v[i], v[(i + 1) % v.size()]};
    for (int k = 0; k < per_edge; ++k)
      dense.push_back(edge.at(k / static_cast<double>(per_edge - 1)));
  }
  ParetoFront front = pareto_front(dense);
  front.points = simplify_collinear(front.points);
  return front;
}

PayoffRegion payoff_region(const NormalFormSection& g, const GridSpec& grid,
                           const JacobianFn& jacobian) {
  std::vector<PayoffPoint> cloud = transform_boundary(g, grid);
  const CriticalZone zone = critical_zone(g, jacobian, grid);
  for (const auto& [x, y] : zone.points) cloud.push_back(g.payoff(x, y));

  PayoffRegion region;
  region.hull = convex_hull(cloud);
  region.front = front_of_hull(region.hull, grid);
  region.source = section_source(g, grid);
  return region;
}

PayoffRegion payoff_region(const NormalFormSection& g, const GridSpec& grid) {
  return payoff_region(g, grid, finite_difference_jacobian(g));
}

PayoffRegion coopetitive_payoff_region(const CoopetitiveGame& game,
                                       const std::vector<double>& zgrid,
                                       const GridSpec& grid) {
  if (zgrid.empty()) throw std::invalid_argument("empty z-grid");
  // The union covers the whole game only when zgrid spans C; callers wanting
  // im f must include both endpoints (z_nodes does).
  std::vector<PayoffPoint> cloud;
  for (double z : zgrid) {
    const PayoffRegion r = payoff_region(section(game, z), grid);
    cloud.insert(cloud.end(), r.hull.vertices.begin(), r.hull.vertices.end());
  }

  PayoffRegion region;
  region.hull = convex_hull(cloud);
  region.front = front_of_hull(region.hull, grid);
  std::ostringstream os;
  os << "coopetitive zgrid=" << zgrid.size() << " grid=" << grid.resolution;
  region.source = os.str();
  return region;
}

}  // namespace coopetition
