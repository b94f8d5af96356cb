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

#include "coopetition/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace coopetition {

namespace {

double cross(const PayoffPoint& o, const PayoffPoint& a, const PayoffPoint& b) {
  return (a.p1 - o.p1) * (b.p2 - o.p2) - (a.p2 - o.p2) * (b.p1 - o.p1);
}

// Area tolerance for collinearity tests; coordinates in this library are
// O(1) monetary units, so a fixed absolute epsilon is adequate.
constexpr double kAreaTol = 1e-12;

}  // namespace

PayoffPoint operator+(PayoffPoint a, PayoffPoint b) {
  return {a.p1 + b.p1, a.p2 + b.p2};
}

PayoffPoint operator-(PayoffPoint a, PayoffPoint b) {
  return {a.p1 - b.p1, a.p2 - b.p2};
}

PayoffPoint operator*(double s, PayoffPoint p) { return {s * p.p1, s * p.p2}; }

bool weakly_dominates(const PayoffPoint& a, const PayoffPoint& b) {
  return a.p1 >= b.p1 && a.p2 >= b.p2;
}

bool strictly_dominates(const PayoffPoint& a, const PayoffPoint& b) {
  return a.p1 > b.p1 && a.p2 > b.p2;
}

bool dominates(const PayoffPoint& a, const PayoffPoint& b) {
  return weakly_dominates(a, b) && (a.p1 != b.p1 || a.p2 != b.p2);
}

bool approx_equal(const PayoffPoint& a, const PayoffPoint& b, double tol) {
  return std::fabs(a.p1 - b.p1) <= tol && std::fabs(a.p2 - b.p2) <= tol;
}

bool OrderInterval::contains(const PayoffPoint& p, double tol) const {
  return p.p1 >= lo.p1 - tol && p.p2 >= lo.p2 - tol && p.p1 <= hi.p1 + tol &&
         p.p2 <= hi.p2 + tol;
}

PayoffPoint Segment::at(double t) const {
  return {a.p1 + t * (b.p1 - a.p1), a.p2 + t * (b.p2 - a.p2)};
}

double Segment::length() const {
  return std::hypot(b.p1 - a.p1, b.p2 - a.p2);
}

ParetoFront pareto_front(const std::vector<PayoffPoint>& points, double tol) {
  if (points.empty()) throw std::invalid_argument("empty point set");
  for (const auto& p : points) {
    if (!std::isfinite(p.p1) || !std::isfinite(p.p2))
      throw std::invalid_argument("non-finite payoff point");
  }

  std::vector<PayoffPoint> sorted = points;
  std::sort(sorted.begin(), sorted.end(),
            [](const PayoffPoint& a, const PayoffPoint& b) {
              if (a.p1 != b.p1) return a.p1 > b.p1;
              return a.p2 > b.p2;
            });

  // Sweep by decreasing p1: a point is maximal iff its p2 strictly exceeds
  // the best p2 among points with larger-or-equal p1 seen so far. Within a
  // run of equal p1 only the first (largest p2) survives.
  std::vector<PayoffPoint> front;
  double best_p2 = -std::numeric_limits<double>::infinity();
  std::size_t i = 0;
  while (i < sorted.size()) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j].p1 == sorted[i].p1) ++j;
    if (sorted[i].p2 > best_p2) {
      front.push_back(sorted[i]);
      best_p2 = sorted[i].p2;
    }
    i = j;
  }

  std::reverse(front.begin(), front.end());  // p1 ascending

  // Collapse points that coincide within tol.
  std::vector<PayoffPoint> merged;
  for (const auto& p : front) {
    if (!merged.empty() && approx_equal(merged.back(), p, tol)) continue;
    merged.push_back(p);
  }
  return ParetoFront{std::move(merged)};
}

Polygon convex_hull(const std::vector<PayoffPoint>& points) {
  if (points.empty()) throw std::invalid_argument("empty point set");

  std::vector<PayoffPoint> pts = points;
  std::sort(pts.begin(), pts.end(),
            [](const PayoffPoint& a, const PayoffPoint& b) {
              if (a.p1 != b.p1) return a.p1 < b.p1;
              return a.p2 < b.p2;
            });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const PayoffPoint& a, const PayoffPoint& b) {
                          return approx_equal(a, b);
                        }),
            pts.end());

  const std::size_t n = pts.size();
  if (n <= 2) return Polygon{pts};

  // Andrew monotone chain; cross <= kAreaTol drops collinear points.
  std::vector<PayoffPoint> hull(2 * n);
  std::size_t k = 0;
  for (std::size_t idx = 0; idx < n; ++idx) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[idx]) <= kAreaTol)
      --k;
    hull[k++] = pts[idx];
  }
  const std::size_t lower_end = k + 1;
  for (std::size_t idx = n - 1; idx-- > 0;) {
    while (k >= lower_end && cross(hull[k - 2], hull[k - 1], pts[idx]) <= kAreaTol)
      --k;
    hull[k++] = pts[idx];
  }
  hull.resize(k - 1);  // last point repeats the first

  if (hull.size() == 2 && approx_equal(hull[0], hull[1])) hull.pop_back();

  // Normalize: lexicographically smallest vertex first (order stays CCW).
  auto min_it = std::min_element(hull.begin(), hull.end(),
                                 [](const PayoffPoint& a, const PayoffPoint& b) {
                                   if (a.p1 != b.p1) return a.p1 < b.p1;
                                   return a.p2 < b.p2;
                                 });
  std::rotate(hull.begin(), min_it, hull.end());
  return Polygon{std::move(hull)};
}

std::optional<PayoffPoint> segment_intersection(const Segment& s1,
                                                const Segment& s2, double tol) {
  const PayoffPoint d1 = s1.b - s1.a;
  const PayoffPoint d2 = s2.b - s2.a;
  const double denom = d1.p1 * d2.p2 - d1.p2 * d2.p1;
  const PayoffPoint w = s2.a - s1.a;

  if (std::fabs(denom) > kAreaTol) {
    const double t = (w.p1 * d2.p2 - w.p2 * d2.p1) / denom;
    const double u = (w.p1 * d1.p2 - w.p2 * d1.p1) / denom;
    const double pad1 = s1.length() > 0 ? tol / s1.length() : tol;
    const double pad2 = s2.length() > 0 ? tol / s2.length() : tol;
    if (t < -pad1 || t > 1.0 + pad1 || u < -pad2 || u > 1.0 + pad2)
      return std::nullopt;
    return s1.at(std::clamp(t, 0.0, 1.0));
  }

  // Parallel. Distinguish disjoint lines from collinear overlap.
  if (std::fabs(w.p1 * d1.p2 - w.p2 * d1.p1) > kAreaTol) return std::nullopt;

  // Collinear: project s2's endpoints onto s1's parameter.
  const double len2 = d1.p1 * d1.p1 + d1.p2 * d1.p2;
  if (len2 == 0.0) {
    // s1 degenerates to a point.
    if (point_segment_distance(s1.a, s2) <= tol) return s1.a;
    return std::nullopt;
  }
  double t0 = ((s2.a.p1 - s1.a.p1) * d1.p1 + (s2.a.p2 - s1.a.p2) * d1.p2) / len2;
  double t1 = ((s2.b.p1 - s1.a.p1) * d1.p1 + (s2.b.p2 - s1.a.p2) * d1.p2) / len2;
  if (t0 > t1) std::swap(t0, t1);
  const double lo = std::max(0.0, t0);
  const double hi = std::min(1.0, t1);
  const double pad = s1.length() > 0 ? tol / s1.length() : tol;
  if (lo > hi + pad) return std::nullopt;
  if (hi - lo <= pad) return s1.at(std::clamp(0.5 * (lo + hi), 0.0, 1.0));
  throw NotSolvable("non-unique intersection");
}

OrderInterval extrema(const std::vector<PayoffPoint>& points) {
  if (points.empty()) throw std::invalid_argument("empty point set");
  OrderInterval box{points.front(), points.front()};
  for (const auto& p : points) {
    box.lo.p1 = std::min(box.lo.p1, p.p1);
    box.lo.p2 = std::min(box.lo.p2, p.p2);
    box.hi.p1 = std::max(box.hi.p1, p.p1);
    box.hi.p2 = std::max(box.hi.p2, p.p2);
  }
  return box;
}

double point_segment_distance(const PayoffPoint& p, const Segment& s) {
  const PayoffPoint d = s.b - s.a;
  const double len2 = d.p1 * d.p1 + d.p2 * d.p2;
  double t = 0.0;
  if (len2 > 0.0) {
    t = ((p.p1 - s.a.p1) * d.p1 + (p.p2 - s.a.p2) * d.p2) / len2;
    t = std::clamp(t, 0.0, 1.0);
  }
  const PayoffPoint q = s.at(t);
  return std::hypot(p.p1 - q.p1, p.p2 - q.p2);
}

double point_polyline_distance(const PayoffPoint& p,
                               const std::vector<PayoffPoint>& polyline) {
  if (polyline.empty()) throw std::invalid_argument("empty polyline");
  if (polyline.size() == 1)
    return std::hypot(p.p1 - polyline[0].p1, p.p2 - polyline[0].p2);
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < polyline.size(); ++i)
    best = std::min(best,
                    point_segment_distance(p, Segment{polyline[i], polyline[i + 1]}));
  return best;
}

bool point_in_convex_polygon(const PayoffPoint& p, const Polygon& poly,
                             double tol) {
  const auto& v = poly.vertices;
  if (v.empty()) return false;
  if (v.size() == 1) return approx_equal(p, v[0], tol);
  if (v.size() == 2) return point_segment_distance(p, Segment{v[0], v[1]}) <= tol;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const PayoffPoint& a = v[i];
    const PayoffPoint& b = v[(i + 1) % v.size()];
    const double len = std::hypot(b.p1 - a.p1, b.p2 - a.p2);
    if (cross(a, b, p) < -tol * std::max(len, 1.0)) return false;
  }
  return true;
}

double point_convex_region_distance(const PayoffPoint& p, const Polygon& poly) {
  if (point_in_convex_polygon(p, poly, 0.0)) return 0.0;
  const auto& v = poly.vertices;
  if (v.size() == 1) return std::hypot(p.p1 - v[0].p1, p.p2 - v[0].p2);
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < v.size(); ++i)
    best = std::min(best, point_segment_distance(
                              p, Segment{v[i], v[(i + 1) % v.size()]}));
  return best;
}

double convex_hausdorff_distance(const Polygon& a, const Polygon& b) {
  // The distance-to-region function is convex, so its maximum over a convex
  // polygon is attained at a vertex; vertices suffice on both sides.
  double h = 0.0;
  for (const auto& p : a.vertices)
    h = std::max(h, point_convex_region_distance(p, b));
  for (const auto& p : b.vertices)
    h = std::max(h, point_convex_region_distance(p, a));
  return h;
}

std::vector<PayoffPoint> simplify_collinear(
    const std::vector<PayoffPoint>& polyline, double area_tol) {
  if (polyline.size() <= 2) return polyline;
  std::vector<PayoffPoint> out;
  out.push_back(polyline.front());
  for (std::size_t i = 1; i + 1 < polyline.size(); ++i) {
    if (std::fabs(cross(out.back(), polyline[i], polyline[i + 1])) > area_tol)
      out.push_back(polyline[i]);
  }
  out.push_back(polyline.back());
  return out;
}

std::vector<PayoffPoint> segment_polyline_intersections(
    const Segment& seg, const std::vector<PayoffPoint>& polyline, double tol) {
  std::vector<PayoffPoint> hits;
  auto record = [&](const PayoffPoint& p) {
    for (const auto& q : hits)
      if (approx_equal(p, q, tol)) return;
    hits.push_back(p);
  };
  if (polyline.size() == 1) {
    if (point_segment_distance(polyline[0], seg) <= tol) record(polyline[0]);
    return hits;
  }
  for (std::size_t i = 0; i + 1 < polyline.size(); ++i) {
    auto p = segment_intersection(seg, Segment{polyline[i], polyline[i + 1]}, tol);
    if (p) record(*p);
  }
  return hits;
}

}  // namespace coopetition
