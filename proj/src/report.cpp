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

#include "coopetition/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "coopetition/expression.hpp"
#include "coopetition/version.hpp"

namespace coopetition {

namespace {

using Json = nlohmann::ordered_json;

Json point_json(const PayoffPoint& p) { return Json::array({p.p1, p.p2}); }

Json points_json(const std::vector<PayoffPoint>& pts) {
  Json arr = Json::array();
  for (const auto& p : pts) arr.push_back(point_json(p));
  return arr;
}

Json segment_json(const Segment& s) {
  return Json::array({point_json(s.a), point_json(s.b)});
}

Json problem_json(const BargainingProblem& p) {
  Json j = Json::object();
  j["candidate"] = points_json(p.candidate);
  j["disagreement"] = point_json(p.disagreement);
  j["utopia"] = point_json(p.utopia);
  return j;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void append_escaped(const std::string& s, std::string& out) {
  out.push_back('"');
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\b': out += "\\b"; break;
      case '\f': out += "\\f"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out.push_back(c);
        }
    }
  }
  out.push_back('"');
}

void dump_value(const Json& v, std::string& out, int indent, int depth) {
  const std::string pad(static_cast<std::size_t>(indent) * depth, ' ');
  const std::string pad_in(static_cast<std::size_t>(indent) * (depth + 1), ' ');
  switch (v.type()) {
    case Json::value_t::null:
      out += "null";
      break;
    case Json::value_t::boolean:
      out += v.get<bool>() ? "true" : "false";
      break;
    case Json::value_t::number_integer:
      out += std::to_string(v.get<long long>());
      break;
    case Json::value_t::number_unsigned:
      out += std::to_string(v.get<unsigned long long>());
      break;
    case Json::value_t::number_float:
      out += format_double(v.get<double>());
      break;
    case Json::value_t::string:
      append_escaped(v.get<std::string>(), out);
      break;
    case Json::value_t::array: {
      if (v.empty()) {
        out += "[]";
        break;
      }
      out += "[\n";
      for (std::size_t i = 0; i < v.size(); ++i) {
        out += pad_in;
        dump_value(v[i], out, indent, depth + 1);
        if (i + 1 < v.size()) out += ",";
        out += "\n";
      }
      out += pad + "]";
      break;
    }
    case Json::value_t::object: {
      if (v.empty()) {
        out += "{}";
        break;
      }
      out += "{\n";
      std::size_t i = 0;
      for (auto it = v.begin(); it != v.end(); ++it, ++i) {
        out += pad_in;
        append_escaped(it.key(), out);
        out += ": ";
        dump_value(it.value(), out, indent, depth + 1);
        if (i + 1 < v.size()) out += ",";
        out += "\n";
      }
      out += pad + "}";
      break;
    }
    default:
      out += "null";
      break;
  }
}

}  // namespace

void RunConfig::validate() const {
  if (model.empty()) throw ConfigError("invalid --model: must not be empty");
  if (!std::isfinite(m) || m < 0.0)
    throw ConfigError("invalid --m: must be a finite number >= 0");
  if (!std::isfinite(n))
    throw ConfigError("invalid --n: must be a finite number");
  if (model == "eurozone" && !(n > 0.0))
    throw ConfigError("invalid --n: must be > 0 for the eurozone model");
  if (grid_resolution < 2)
    throw ConfigError("invalid --grid: resolution must be >= 2");
  if (zgrid_size < 2) throw ConfigError("invalid --zgrid: size must be >= 2");
  if (concepts.empty())
    throw ConfigError("invalid --concepts: at least one concept required");
  const auto& known = solution_concepts();
  for (const auto& c : concepts)
    if (std::find(known.begin(), known.end(), c) == known.end())
      throw ConfigError("invalid --concepts: unknown concept '" + c + "'");
}

SolveResult run_solve(const RunConfig& config) {
  config.validate();

  SolveResult result;
  const bool builtin = config.model == "eurozone";
  if (builtin) {
    EurozoneParams params{config.m, config.n};
    try {
      result.game = build_model(params);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(std::string("invalid model parameters: ") + e.what());
    }
  } else {
    try {
      result.game = game_from_definition(load_game_definition(config.model));
    } catch (const std::invalid_argument& e) {
      throw ConfigError(std::string("invalid --model file: ") + e.what());
    }
    result.notes.push_back(
        "payoff region is a convex hull and may over-approximate a "
        "non-convex payoff image");
  }

  AnalysisOptions options;
  options.grid = GridSpec{config.grid_resolution};
  options.zgrid_size = config.zgrid_size;
  options.concepts = config.concepts;
  result.analysis = analyze(result.game, options);
  result.notes.push_back(
      "all grid Nash equilibria are treated as reasonable; no refinement is "
      "applied");

  if (builtin && config.m == 0.0) {
    result.reference = reference_solution(EurozoneParams{0.0, config.n},
                                          options.grid);
    result.plan = win_win_procedure(EurozoneParams{0.0, config.n},
                                    options.grid);
  } else if (builtin) {
    result.notes.push_back(
        "win-win plan omitted: the reference construction requires m = 0");
    if (result.analysis.rebalancing) {
      result.analysis.rebalancing->beyond_reference = true;
      for (auto& entry : result.analysis.solutions.entries) {
        if (entry.concept_name != "tu_rebalancing" || !entry.exists) continue;
        if (!entry.note.empty()) entry.note += "; ";
        entry.note += "band generalized beyond the m = 0 construction";
      }
    }
  }
  return result;
}

Json report_json(const RunConfig& config, const SolveResult& result) {
  Json doc = Json::object();
  doc["version"] = kVersion;

  Json cfg = Json::object();
  cfg["model"] = config.model;
  cfg["m"] = config.m;
  cfg["n"] = config.n;
  cfg["grid"] = config.grid_resolution;
  cfg["zgrid"] = config.zgrid_size;
  cfg["concepts"] = config.concepts;
  cfg["out"] = config.out;
  cfg["plot_out"] = config.plot_out;
  cfg["strict"] = config.strict;
  doc["config"] = cfg;

  const CoopetitiveAnalysis& a = result.analysis;
  doc["zgrid"] = a.zgrid;

  auto region_json = [](const PayoffRegion& r) {
    Json j = Json::object();
    j["vertices"] = points_json(r.hull.vertices);
    j["front"] = points_json(r.front.points);
    j["source"] = r.source;
    return j;
  };
  doc["region"] = region_json(a.region);
  doc["initial_region"] = region_json(a.initial_region);

  Json tu = Json::object();
  tu["vmax"] = a.tu.vmax;
  tu["attained"] = point_json(a.tu.attained);
  tu["clip_lo"] = point_json(a.tu.clip.lo);
  tu["clip_hi"] = point_json(a.tu.clip.hi);
  const auto clipped = a.tu.clipped();
  tu["clipped_segment"] = clipped ? segment_json(*clipped) : Json();
  doc["tu"] = tu;

  Json path = Json::array();
  for (const auto& entry : a.nash) {
    Json e = Json::object();
    e["z"] = entry.z;
    Json eq = Json::array();
    for (const auto& [x, y] : entry.equilibria)
      eq.push_back(Json::array({x, y}));
    e["equilibria"] = eq;
    e["payoffs"] = points_json(entry.payoffs);
    path.push_back(std::move(e));
  }
  doc["nash_path"] = path;

  Json cons = Json::array();
  for (const auto& [z, v] : a.conservative) {
    Json e = Json::object();
    e["z"] = z;
    e["value"] = point_json(v);
    cons.push_back(std::move(e));
  }
  doc["conservative"] = cons;

  doc["initial_core_supremum"] =
      a.initial_core_supremum ? point_json(*a.initial_core_supremum) : Json();

  Json sols = Json::array();
  for (const auto& entry : a.solutions.entries) {
    Json e = Json::object();
    e["concept"] = entry.concept_name;
    e["exists"] = entry.exists;
    e["point"] = entry.exists ? point_json(entry.point) : Json();
    e["problem"] = entry.problem ? problem_json(*entry.problem) : Json();
    e["note"] = entry.note;
    sols.push_back(std::move(e));
  }
  doc["solutions"] = sols;

  if (result.plan) {
    Json plan = Json::object();
    plan["z_star"] = result.plan->z_star;
    plan["bistrategy"] = Json::array(
        {result.plan->bistrategy.first, result.plan->bistrategy.second});
    plan["social_pie"] = result.plan->social_pie;
    plan["raw_payoff"] = point_json(result.plan->raw);
    plan["split"] = point_json(result.plan->split);
    plan["transfer"] = result.plan->transfer;
    plan["win_win"] =
        result.analysis.initial_core_supremum &&
        win_win_check(result.plan->split,
                      *result.analysis.initial_core_supremum);
    doc["win_win_plan"] = plan;
  } else {
    doc["win_win_plan"] = Json();
  }

  doc["notes"] = result.notes;
  return doc;
}

std::string dump_json(const Json& value, int indent) {
  std::string out;
  dump_value(value, out, indent, 0);
  out += "\n";
  return out;
}

bool all_concepts_exist(const SolveResult& result) {
  for (const auto& entry : result.analysis.solutions.entries)
    if (!entry.exists) return false;
  return true;
}

std::string scan_csv(double n_min, double n_max, int samples,
                     const GridSpec& grid) {
  if (!(n_min > 0.0) || !std::isfinite(n_min) || !std::isfinite(n_max))
    throw ConfigError("invalid --n-min: range must lie within (0, inf)");
  if (n_max < n_min)
    throw ConfigError("invalid --n-max: must be >= --n-min");
  if (samples < 2) throw ConfigError("invalid --samples: need >= 2 samples");

  std::string out = "n,K1,K2,pie,transfer\n";
  for (int i = 0; i < samples; ++i) {
    const double t = i / static_cast<double>(samples - 1);
    const double n = n_min + (n_max - n_min) * t;
    const WinWinPlan plan = win_win_procedure(EurozoneParams{0.0, n}, grid);
    out += format_double(n);
    out += ",";
    out += format_double(plan.split.p1);
    out += ",";
    out += format_double(plan.split.p2);
    out += ",";
    out += format_double(plan.social_pie);
    out += ",";
    out += format_double(plan.transfer);
    out += "\n";
  }
  return out;
}

}  // namespace coopetition
