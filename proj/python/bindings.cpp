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

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "coopetition/analysis.hpp"
#include "coopetition/bargaining.hpp"
#include "coopetition/eurozone.hpp"
#include "coopetition/expression.hpp"
#include "coopetition/game.hpp"
#include "coopetition/geometry.hpp"
#include "coopetition/payoff_space.hpp"
#include "coopetition/report.hpp"
#include "coopetition/svg.hpp"
#include "coopetition/version.hpp"

namespace py = pybind11;

using namespace coopetition;

namespace {

// Bindings exchange payoff points as (p1, p2) tuples.
PayoffPoint to_point(const std::pair<double, double>& t) {
  return {t.first, t.second};
}

std::pair<double, double> from_point(const PayoffPoint& p) {
  return {p.p1, p.p2};
}

std::vector<PayoffPoint> to_points(
    const std::vector<std::pair<double, double>>& ts) {
  std::vector<PayoffPoint> out;
  out.reserve(ts.size());
  for (const auto& t : ts) out.push_back(to_point(t));
  return out;
}

std::vector<std::pair<double, double>> from_points(
    const std::vector<PayoffPoint>& ps) {
  std::vector<std::pair<double, double>> out;
  out.reserve(ps.size());
  for (const auto& p : ps) out.push_back(from_point(p));
  return out;
}

py::dict entry_dict(const SolutionEntry& e) {
  py::dict d;
  d["concept"] = e.concept_name;
  d["exists"] = e.exists;
  d["point"] = e.exists ? py::object(py::cast(from_point(e.point)))
                        : py::object(py::none());
  if (e.problem) {
    py::dict prob;
    prob["candidate"] = from_points(e.problem->candidate);
    prob["disagreement"] = from_point(e.problem->disagreement);
    prob["utopia"] = from_point(e.problem->utopia);
    d["problem"] = prob;
  } else {
    d["problem"] = py::none();
  }
  d["note"] = e.note;
  return d;
}

}  // namespace

PYBIND11_MODULE(_coopetition, m) {
  m.doc() = "coopetitive game solver core";
  m.attr("__version__") = kVersion;

  py::register_exception<NotSolvable>(m, "NotSolvableError");

  py::class_<Interval>(m, "Interval")
      .def(py::init<double, double>(), py::arg("lo"), py::arg("hi"))
      .def_readonly("lo", &Interval::lo)
      .def_readonly("hi", &Interval::hi);

  py::class_<StrategyCube>(m, "StrategyCube")
      .def(py::init([](const Interval& e, const Interval& f, const Interval& c) {
             return StrategyCube{e, f, c};
           }),
           py::arg("e"), py::arg("f"), py::arg("c"))
      .def(py::init<>())
      .def_readonly("e", &StrategyCube::e)
      .def_readonly("f", &StrategyCube::f)
      .def_readonly("c", &StrategyCube::c);

  py::class_<GridSpec>(m, "GridSpec")
      .def(py::init<int>(), py::arg("resolution") = 101)
      .def_readonly("resolution", &GridSpec::resolution);

  py::class_<CoopetitiveGame>(m, "CoopetitiveGame")
      .def(py::init([](const StrategyCube& cube,
                       std::function<std::pair<double, double>(double, double,
                                                               double)> payoff) {
             return CoopetitiveGame{
                 cube, [payoff](double x, double y, double z) {
                   return to_point(payoff(x, y, z));
                 }};
           }),
           py::arg("cube"), py::arg("payoff"))
      .def_readonly("cube", &CoopetitiveGame::cube)
      .def("payoff",
           [](const CoopetitiveGame& g, double x, double y, double z) {
             return from_point(g.payoff(x, y, z));
           });

  py::class_<NormalFormSection>(m, "NormalFormSection")
      .def_readonly("z", &NormalFormSection::z)
      .def("payoff", [](const NormalFormSection& g, double x, double y) {
        return from_point(g.payoff(x, y));
      });

  py::class_<Polygon>(m, "Polygon")
      .def_property_readonly(
          "vertices", [](const Polygon& p) { return from_points(p.vertices); });

  py::class_<ParetoFront>(m, "ParetoFront")
      .def_property_readonly(
          "points", [](const ParetoFront& f) { return from_points(f.points); });

  py::class_<PayoffRegion>(m, "PayoffRegion")
      .def_readonly("hull", &PayoffRegion::hull)
      .def_readonly("front", &PayoffRegion::front)
      .def_readonly("source", &PayoffRegion::source);

  py::class_<TUBoundary>(m, "TUBoundary")
      .def_readonly("vmax", &TUBoundary::vmax)
      .def_property_readonly(
          "attained", [](const TUBoundary& t) { return from_point(t.attained); });

  py::class_<RebalancingTrace>(m, "RebalancingTrace")
      .def_readonly("tu_level", &RebalancingTrace::tu_level)
      .def_property_readonly("threat",
                             [](const RebalancingTrace& t) {
                               return from_point(t.threat);
                             })
      .def_property_readonly("utopia",
                             [](const RebalancingTrace& t) {
                               return from_point(t.utopia);
                             })
      .def_property_readonly("compromise", [](const RebalancingTrace& t) {
        return from_point(t.compromise);
      });

  py::class_<EurozoneParams>(m, "EurozoneParams")
      .def(py::init<double, double>(), py::arg("m") = 0.0, py::arg("n") = 1.0)
      .def_readonly("m", &EurozoneParams::m)
      .def_readonly("n", &EurozoneParams::n);

  py::class_<ReferenceSolution>(m, "ReferenceSolution")
      .def_readonly("tu_level", &ReferenceSolution::tu_level)
      .def_property_readonly("initial_supremum",
                             [](const ReferenceSolution& r) {
                               return from_point(r.initial_supremum);
                             })
      .def_property_readonly("compromise",
                             [](const ReferenceSolution& r) {
                               return from_point(r.compromise);
                             })
      .def_readonly("generic", &ReferenceSolution::generic);

  py::class_<WinWinPlan>(m, "WinWinPlan")
      .def_readonly("z_star", &WinWinPlan::z_star)
      .def_readonly("bistrategy", &WinWinPlan::bistrategy)
      .def_readonly("social_pie", &WinWinPlan::social_pie)
      .def_property_readonly(
          "raw", [](const WinWinPlan& p) { return from_point(p.raw); })
      .def_property_readonly(
          "split", [](const WinWinPlan& p) { return from_point(p.split); })
      .def_readonly("transfer", &WinWinPlan::transfer);

  // geometry
  m.def("pareto_front",
        [](const std::vector<std::pair<double, double>>& pts) {
          return from_points(pareto_front(to_points(pts)).points);
        },
        py::arg("points"));
  m.def("convex_hull",
        [](const std::vector<std::pair<double, double>>& pts) {
          return from_points(convex_hull(to_points(pts)).vertices);
        },
        py::arg("points"));
  m.def("segment_intersection",
        [](std::pair<double, double> a1, std::pair<double, double> b1,
           std::pair<double, double> a2, std::pair<double, double> b2)
            -> std::optional<std::pair<double, double>> {
          auto hit = segment_intersection(Segment{to_point(a1), to_point(b1)},
                                          Segment{to_point(a2), to_point(b2)});
          if (!hit) return std::nullopt;
          return from_point(*hit);
        });
  m.def("extrema", [](const std::vector<std::pair<double, double>>& pts) {
    const OrderInterval box = extrema(to_points(pts));
    return std::make_pair(from_point(box.lo), from_point(box.hi));
  });

  // game core
  m.def("section", &section, py::arg("game"), py::arg("z"));
  m.def("nash_equilibria",
        [](const NormalFormSection& g, const GridSpec& grid) {
          return nash_equilibria(g, grid);
        },
        py::arg("section"), py::arg("grid") = GridSpec{});
  m.def("conservative_bivalue",
        [](const NormalFormSection& g, const GridSpec& grid) {
          return from_point(conservative_bivalue(g, grid));
        },
        py::arg("section"), py::arg("grid") = GridSpec{});
  m.def("payoff_core_supremum",
        [](const NormalFormSection& g, const GridSpec& grid) {
          return from_point(payoff_core_supremum(g, grid));
        },
        py::arg("section"), py::arg("grid") = GridSpec{});

  // payoff space
  m.def("payoff_region",
        [](const NormalFormSection& g, const GridSpec& grid) {
          return payoff_region(g, grid);
        },
        py::arg("section"), py::arg("grid") = GridSpec{});
  m.def("coopetitive_payoff_region", &coopetitive_payoff_region,
        py::arg("game"), py::arg("zgrid"), py::arg("grid") = GridSpec{});
  m.def("z_nodes", &z_nodes, py::arg("game"), py::arg("count"));

  // bargaining
  m.def("kalai_smorodinsky",
        [](const std::vector<std::pair<double, double>>& candidate,
           std::pair<double, double> a, std::pair<double, double> b) {
          return from_point(kalai_smorodinsky(
              BargainingProblem{to_points(candidate), to_point(a), to_point(b)}));
        },
        py::arg("candidate"), py::arg("disagreement"), py::arg("utopia"));
  m.def("nash_bargaining",
        [](const std::vector<std::pair<double, double>>& front,
           std::pair<double, double> a) {
          return from_point(nash_bargaining(to_points(front), to_point(a)));
        },
        py::arg("front"), py::arg("disagreement"));
  m.def("properly_coopetitive_solution",
        [](const CoopetitiveGame& game, const std::vector<double>& zgrid,
           const GridSpec& grid) {
          return from_point(properly_coopetitive_solution(game, zgrid, grid));
        },
        py::arg("game"), py::arg("zgrid"), py::arg("grid") = GridSpec{});
  m.def("tu_boundary", &tu_boundary, py::arg("region"));
  m.def("rebalancing_win_win", &rebalancing_win_win, py::arg("game"),
        py::arg("zgrid"), py::arg("grid") = GridSpec{});
  m.def("win_win_check",
        [](std::pair<double, double> candidate, std::pair<double, double> L) {
          return win_win_check(to_point(candidate), to_point(L));
        });

  // eurozone model
  m.def("build_model", &build_model, py::arg("params"));
  m.def("translation_vector",
        [](const EurozoneParams& params, double z) {
          return from_point(translation_vector(params, z));
        },
        py::arg("params"), py::arg("z"));
  m.def("reference_solution", &reference_solution, py::arg("params"),
        py::arg("grid") = GridSpec{});
  m.def("win_win_procedure", &win_win_procedure, py::arg("params"),
        py::arg("grid") = GridSpec{});

  // reports
  m.def("solve_report_json",
        [](const std::string& model, double m_param, double n_param, int grid,
           int zgrid) {
          RunConfig config;
          config.model = model;
          config.m = m_param;
          config.n = n_param;
          config.grid_resolution = grid;
          config.zgrid_size = zgrid;
          const SolveResult result = run_solve(config);
          return dump_json(report_json(config, result));
        },
        py::arg("model") = "eurozone", py::arg("m") = 0.0, py::arg("n") = 1.0,
        py::arg("grid") = 101, py::arg("zgrid") = 11);
  m.def("solve_entries",
        [](const std::string& model, double m_param, double n_param, int grid,
           int zgrid) {
          RunConfig config;
          config.model = model;
          config.m = m_param;
          config.n = n_param;
          config.grid_resolution = grid;
          config.zgrid_size = zgrid;
          const SolveResult result = run_solve(config);
          py::list out;
          for (const auto& e : result.analysis.solutions.entries)
            out.append(entry_dict(e));
          return out;
        },
        py::arg("model") = "eurozone", py::arg("m") = 0.0, py::arg("n") = 1.0,
        py::arg("grid") = 101, py::arg("zgrid") = 11);
  m.def("plot_svg",
        [](const std::string& model, double m_param, double n_param, int grid,
           int zgrid) {
          RunConfig config;
          config.model = model;
          config.m = m_param;
          config.n = n_param;
          config.grid_resolution = grid;
          config.zgrid_size = zgrid;
          const SolveResult result = run_solve(config);
          std::ostringstream title;
          title << "coopetitive payoff space: " << model;
          return render_svg(result.analysis, title.str());
        },
        py::arg("model") = "eurozone", py::arg("m") = 0.0, py::arg("n") = 1.0,
        py::arg("grid") = 101, py::arg("zgrid") = 11);
}
