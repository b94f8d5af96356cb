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

#ifndef COOPETITION_GEOMETRY_HPP_
#define COOPETITION_GEOMETRY_HPP_

#include <optional>
#include <vector>

#include "coopetition/errors.hpp"

namespace coopetition {

// Absolute tolerance used to merge coincident points. Dominance itself is
// compared exactly; the tolerance only collapses points that are equal up to
// floating noise.
inline constexpr double kPointTol = 1e-9;

// A point of the payoff plane: gains of player 1 and player 2, in the same
// conventional monetary unit.
struct PayoffPoint {
  double p1 = 0.0;
  double p2 = 0.0;

  friend bool operator==(const PayoffPoint&, const PayoffPoint&) = default;
};

PayoffPoint operator+(PayoffPoint a, PayoffPoint b);
PayoffPoint operator-(PayoffPoint a, PayoffPoint b);
PayoffPoint operator*(double s, PayoffPoint p);

// Weak component-wise order: a >= b in both coordinates.
bool weakly_dominates(const PayoffPoint& a, const PayoffPoint& b);
// Strict order of the plane: a > b in both coordinates.
bool strictly_dominates(const PayoffPoint& a, const PayoffPoint& b);
// Pareto dominance: weakly dominates and differs in some coordinate.
bool dominates(const PayoffPoint& a, const PayoffPoint& b);

bool approx_equal(const PayoffPoint& a, const PayoffPoint& b,
                  double tol = kPointTol);

// Order interval [lo, hi]: the box of points between lo and hi in the
// component-wise order (not a segment).
struct OrderInterval {
  PayoffPoint lo;
  PayoffPoint hi;

  bool contains(const PayoffPoint& p, double tol = kPointTol) const;
};

// Straight segment joining two payoff points.
struct Segment {
  PayoffPoint a;
  PayoffPoint b;

  PayoffPoint at(double t) const;  // a + t(b - a)
  double length() const;
};

// Convex polygon, vertices in counter-clockwise order, no three consecutive
// collinear vertices after normalization. One or two vertices denote the
// degenerate point / segment cases.
struct Polygon {
  std::vector<PayoffPoint> vertices;
};

// Finite polyline sample of a Pareto maximal boundary: pairwise incomparable
// points sorted by increasing p1 (hence non-increasing p2). Consecutive
// points are joined by linear interpolation when the front is a continuum.
struct ParetoFront {
  std::vector<PayoffPoint> points;
};

// Maximal elements of the input under component-wise dominance, sorted by
// p1 ascending. Points equal within tol are treated as one point.
// Throws std::invalid_argument("empty point set") on empty input.
ParetoFront pareto_front(const std::vector<PayoffPoint>& points,
                         double tol = kPointTol);

// Minimal convex polygon containing all inputs; collinear boundary points
// are dropped. Single input -> one-vertex polygon.
Polygon convex_hull(const std::vector<PayoffPoint>& points);

// Unique transversal intersection point of two segments, std::nullopt when
// they do not meet. Collinear overlap along a non-degenerate segment throws
// NotSolvable("non-unique intersection").
std::optional<PayoffPoint> segment_intersection(const Segment& s1,
                                                const Segment& s2,
                                                double tol = kPointTol);

// Component-wise infimum and supremum of a non-empty point set.
OrderInterval extrema(const std::vector<PayoffPoint>& points);

// --- Supporting predicates used across the solvers. ---

double point_segment_distance(const PayoffPoint& p, const Segment& s);

// Distance to a polyline (consecutive vertices joined by segments).
double point_polyline_distance(const PayoffPoint& p,
                               const std::vector<PayoffPoint>& polyline);

// Whether p lies inside or on a convex CCW polygon, within tol.
bool point_in_convex_polygon(const PayoffPoint& p, const Polygon& poly,
                             double tol = kPointTol);

// Distance from p to a filled convex polygon (0 when inside).
double point_convex_region_distance(const PayoffPoint& p, const Polygon& poly);

// Hausdorff distance between two filled convex polygons.
double convex_hausdorff_distance(const Polygon& a, const Polygon& b);

// Removes interior points of collinear runs; keeps endpoints.
std::vector<PayoffPoint> simplify_collinear(
    const std::vector<PayoffPoint>& polyline, double area_tol = 1e-12);

// All intersection points of the segment with the polyline, deduplicated
// within tol. Propagates the collinear-overlap error.
std::vector<PayoffPoint> segment_polyline_intersections(
    const Segment& seg, const std::vector<PayoffPoint>& polyline,
    double tol = kPointTol);

}  // namespace coopetition

#endif  // COOPETITION_GEOMETRY_HPP_
