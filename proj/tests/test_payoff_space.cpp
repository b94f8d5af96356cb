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
#include <random>

#include "coopetition/eurozone.hpp"
#include "doctest.h"

namespace coopetition {
namespace {

bool same_vertex_set(const std::vector<PayoffPoint>& a,
                     const std::vector<PayoffPoint>& b, double tol) {
  if (a.size() != b.size()) return false;
  for (const auto& p : a) {
    bool found = false;
    for (const auto& q : b)
      if (approx_equal(p, q, tol)) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

TEST_CASE("boundary transformation of the initial section") {
  const double m = 0.3;
  const auto game = build_model(EurozoneParams{m, 1.0});
  const auto g0 = section(game, 0.0);
  const GridSpec grid{41};
  const auto cloud = transform_boundary(g0, grid);

  // Every boundary image lies on one of the four image segments; the
  // bottom side maps into [(1,0),(3/2,0)] and the left side into
  // [(1,0),(1,1+m)].
  const Segment bottom{{1.0, 0.0}, {1.5, 0.0}};
  const Segment left{{1.0, 0.0}, {1.0, 1.0 + m}};
  const Segment right{{1.5, 0.0}, {1.5, 1.0 + m}};
  const Segment top{{1.0, 1.0 + m}, {1.5, 1.0 + m}};
  for (const auto& p : cloud) {
    const double d = std::min({point_segment_distance(p, bottom),
                               point_segment_distance(p, left),
                               point_segment_distance(p, right),
                               point_segment_distance(p, top)});
    CHECK(d < 1e-9);
  }
  bool bottom_hit = false, left_hit = false;
  for (const auto& p : cloud) {
    if (point_segment_distance(p, bottom) < 1e-12) bottom_hit = true;
    if (point_segment_distance(p, left) < 1e-12) left_hit = true;
  }
  CHECK(bottom_hit);
  CHECK(left_hit);
}

TEST_CASE("boundary transformation of a constant map is one point") {
  const NormalFormSection flat{
      {}, {}, 0.0, [](double, double) { return PayoffPoint{2.0, 2.0}; }};
  for (const auto& p : transform_boundary(flat, GridSpec{11}))
    CHECK(p == PayoffPoint{2.0, 2.0});
}

TEST_CASE("critical zone with the printed Jacobian is empty") {
  const EurozoneParams params{0.0, 1.0};
  const auto g0 = section(build_model(params), 0.0);
  const auto zone =
      critical_zone(g0, printed_jacobian(params), GridSpec{101});
  CHECK(zone.points.empty());
}

TEST_CASE("critical zone with finite differences is the x = 0 edge") {
  const auto g0 = section(build_model(EurozoneParams{0.0, 1.0}), 0.0);
  const auto zone = critical_zone(g0, GridSpec{101});
  REQUIRE(!zone.points.empty());
  for (const auto& [x, y] : zone.points) CHECK(x == 0.0);
  // The whole edge is critical: one point per y node.
  CHECK(zone.points.size() == 101);
}

TEST_CASE("critical zone of the identity map is empty") {
  const NormalFormSection id{
      {}, {}, 0.0, [](double x, double y) { return PayoffPoint{x, y}; }};
  CHECK(critical_zone(id, GridSpec{51}).points.empty());
}

TEST_CASE("payoff region of the initial section is the rectangle") {
  const auto g0 = section(build_model(EurozoneParams{0.0, 1.0}), 0.0);
  const auto region = payoff_region(g0, GridSpec{101});
  const std::vector<PayoffPoint> expected = {
      {1.0, 0.0}, {1.5, 0.0}, {1.5, 1.0}, {1.0, 1.0}};
  CHECK(same_vertex_set(region.hull.vertices, expected, 1e-6));
  // The rectangle's only maximal point is its upper-right corner.
  REQUIRE(region.front.points.size() == 1);
  CHECK(approx_equal(region.front.points[0], {1.5, 1.0}, 1e-9));
}

TEST_CASE("payoff region of the z = 1 section is the translated rectangle") {
  const auto g1 = section(build_model(EurozoneParams{0.0, 1.0}), 1.0);
  const auto region = payoff_region(g1, GridSpec{101});
  const std::vector<PayoffPoint> expected = {
      {0.0, 2.0}, {0.5, 2.0}, {0.5, 3.0}, {0.0, 3.0}};
  CHECK(same_vertex_set(region.hull.vertices, expected, 1e-6));
}

TEST_CASE("payoff region of an affine map is the corner parallelogram") {
  const NormalFormSection affine{
      {}, {}, 0.0, [](double x, double y) {
        return PayoffPoint{1.0 + 2.0 * x + y, -1.0 + x - y};
      }};
  const auto region = payoff_region(affine, GridSpec{41});
  const std::vector<PayoffPoint> expected = {
      {1.0, -1.0}, {3.0, 0.0}, {4.0, -1.0}, {2.0, -2.0}};
  CHECK(same_vertex_set(region.hull.vertices, expected, 1e-9));
}

TEST_CASE("coopetitive payoff region is the hexagon") {
  const auto game = build_model(EurozoneParams{0.0, 1.0});
  const auto region =
      coopetitive_payoff_region(game, z_nodes(game, 11), GridSpec{101});
  const Polygon expected{{{1.0, 0.0}, {1.5, 0.0}, {1.5, 1.0},
                          {0.5, 3.0}, {0.0, 3.0}, {0.0, 2.0}}};
  CHECK(same_vertex_set(region.hull.vertices, expected.vertices, 1e-6));
  CHECK(convex_hausdorff_distance(region.hull, expected) <= 1e-6);
}

TEST_CASE("the coopetitive front is the segment between the two suprema") {
  const double m = 0.0, n = 1.0;
  const auto game = build_model(EurozoneParams{m, n});
  const auto region =
      coopetitive_payoff_region(game, z_nodes(game, 2), GridSpec{101});
  REQUIRE(region.front.points.size() == 2);
  CHECK(approx_equal(region.front.points.front(), {0.5, 2.0 + m + n}, 1e-9));
  CHECK(approx_equal(region.front.points.back(), {1.5, 1.0 + m}, 1e-9));

  const double slope = (region.front.points.front().p2 -
                        region.front.points.back().p2) /
                       (region.front.points.front().p1 -
                        region.front.points.back().p1);
  CHECK(std::fabs(std::fabs(slope) - (1.0 + n)) < 1e-9);
}

TEST_CASE("a dense z-grid and the two extreme sections give the same hull") {
  const auto game = build_model(EurozoneParams{0.0, 1.0});
  const GridSpec grid{61};
  const auto dense = coopetitive_payoff_region(game, z_nodes(game, 21), grid);
  const auto coarse = coopetitive_payoff_region(game, z_nodes(game, 2), grid);
  CHECK(convex_hausdorff_distance(dense.hull, coarse.hull) <= 1e-6);
}

TEST_CASE("a single-z grid reproduces the section region") {
  const auto game = build_model(EurozoneParams{0.0, 1.0});
  const GridSpec grid{51};
  const auto via_union = coopetitive_payoff_region(game, {0.0}, grid);
  const auto direct = payoff_region(section(game, 0.0), grid);
  CHECK(convex_hausdorff_distance(via_union.hull, direct.hull) <= 1e-9);
}

TEST_CASE("collective payoff is maximal at the upper front endpoint") {
  const double m = 0.0, n = 1.0;
  const auto game = build_model(EurozoneParams{m, n});
  const auto region =
      coopetitive_payoff_region(game, z_nodes(game, 11), GridSpec{101});
  double best = -1e300;
  PayoffPoint arg{};
  for (const auto& p : region.front.points) {
    if (p.p1 + p.p2 > best) {
      best = p.p1 + p.p2;
      arg = p;
    }
  }
  CHECK(approx_equal(arg, {0.5, 2.0 + m + n}, 1e-9));
  // Not constant along the front.
  const auto& f = region.front.points;
  CHECK(std::fabs((f.front().p1 + f.front().p2) -
                  (f.back().p1 + f.back().p2)) > 0.1);
}

TEST_CASE("sampled interior payoffs lie inside the computed region") {
  const auto game = build_model(EurozoneParams{0.3, 0.5});
  const auto region =
      coopetitive_payoff_region(game, z_nodes(game, 11), GridSpec{101});
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 500; ++i) {
    const PayoffPoint p = game.payoff(u(rng), u(rng), u(rng));
    CHECK(point_in_convex_polygon(p, region.hull, 1e-6));
  }
}

TEST_CASE("front points lie on the hull boundary") {
  const auto game = build_model(EurozoneParams{0.0, 2.0});
  const auto region =
      coopetitive_payoff_region(game, z_nodes(game, 5), GridSpec{41});
  std::vector<PayoffPoint> ring = region.hull.vertices;
  ring.push_back(region.hull.vertices.front());
  for (const auto& p : region.front.points)
    CHECK(point_polyline_distance(p, ring) < 1e-9);
}

}  // namespace
}  // namespace coopetition
