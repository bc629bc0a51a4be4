// Copyright 2026 The nonauto Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "nonauto/scenario.hpp"

#include <algorithm>
#include <cstdio>
#include <map>

namespace nonauto {

using nlohmann::json;

namespace {

std::string approx12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return std::string(buf);
}

// ---------------------------------------------------------------------------
// Family <-> JSON.

json plmap_to_json(const PLMap& f) {
  json points = json::array();
  for (size_t i = 0; i < f.breakpoint_count(); ++i) {
    points.push_back(json::array({f.breakpoints()[i].str(),
                                  f.values()[i].str()}));
  }
  return json{{"points", std::move(points)}};
}

PLMap plmap_from_json(const json& j) {
  if (!j.contains("points") || !j["points"].is_array()) {
    throw ParseError("map", "expected a \"points\" array");
  }
  std::vector<std::pair<Rat, Rat>> points;
  for (const auto& p : j["points"]) {
    if (!p.is_array() || p.size() != 2) {
      throw ParseError("map points", "each entry must be [x, y]");
    }
    points.emplace_back(Rat::parse(p[0].get<std::string>()),
                        Rat::parse(p[1].get<std::string>()));
  }
  return PLMap::from_points(std::move(points));
}

json family_to_json(const Family& family) {
  json out;
  if (const auto* pl = std::get_if<Family::FiniteCyclicPL>(&family.kind())) {
    out["kind"] = "finite_cyclic";
    json maps = json::array();
    for (const PLMap& f : pl->maps) maps.push_back(plmap_to_json(f));
    out["maps"] = std::move(maps);
  } else if (const auto* rot =
                 std::get_if<Family::FiniteCyclicRotation>(&family.kind())) {
    out["kind"] = "finite_cyclic";
    json deltas = json::array();
    for (const QAlpha& d : rot->deltas) deltas.push_back(d.str());
    out["rotations"] = std::move(deltas);
  } else if (const auto* sh =
                 std::get_if<Family::FiniteCyclicShift>(&family.kind())) {
    out["kind"] = "finite_cyclic";
    json dirs = json::array();
    for (ShiftDirection d : sh->dirs) {
      dirs.push_back(d == ShiftDirection::left ? "left" : "right");
    }
    out["shifts"] = std::move(dirs);
  } else if (const auto* tw =
                 std::get_if<Family::FiniteCyclicTwist>(&family.kind())) {
    out["kind"] = "finite_cyclic";
    out["twists"] = tw->signs;
  } else if (std::holds_alternative<Family::ConstantEnumeration>(
                 family.kind())) {
    out["kind"] = "constant_enumeration";
  } else if (const auto* rs =
                 std::get_if<Family::RotationSequence>(&family.kind())) {
    out["kind"] = "rotation_sequence";
    out["theta"] = rs->theta.str();
    out["base"] = rs->base;
  }
  return out;
}

Family family_from_json(SpaceKind space, const json& j) {
  const std::string kind = j.value("kind", "");
  if (kind == "constant_enumeration") {
    if (space != SpaceKind::interval) {
      throw ValidationError("constant_enumeration lives on the interval");
    }
    return Family(Family::ConstantEnumeration{});
  }
  if (kind == "rotation_sequence") {
    if (space != SpaceKind::circle) {
      throw ValidationError("rotation_sequence lives on the circle");
    }
    return Family(Family::RotationSequence{
        QAlpha::parse(j.at("theta").get<std::string>()),
        j.value("base", 3u)});
  }
  if (kind != "finite_cyclic") {
    throw ParseError("family", "unknown kind \"" + kind + "\"");
  }
  switch (space) {
    case SpaceKind::interval: {
      Family::FiniteCyclicPL pl;
      for (const auto& m : j.at("maps")) pl.maps.push_back(plmap_from_json(m));
      return Family(std::move(pl));
    }
    case SpaceKind::circle: {
      Family::FiniteCyclicRotation rot;
      for (const auto& d : j.at("rotations")) {
        rot.deltas.push_back(QAlpha::parse(d.get<std::string>()));
      }
      return Family(std::move(rot));
    }
    case SpaceKind::shift: {
      Family::FiniteCyclicShift sh;
      for (const auto& d : j.at("shifts")) {
        const std::string dir = d.get<std::string>();
        if (dir == "left") {
          sh.dirs.push_back(ShiftDirection::left);
        } else if (dir == "right") {
          sh.dirs.push_back(ShiftDirection::right);
        } else {
          throw ParseError("family shifts", "direction must be left|right");
        }
      }
      return Family(std::move(sh));
    }
    case SpaceKind::cylinder: {
      Family::FiniteCyclicTwist tw;
      for (const auto& s : j.at("twists")) tw.signs.push_back(s.get<int>());
      return Family(std::move(tw));
    }
  }
  throw ParseError("family", "unknown space");
}

SpaceKind space_from_string(const std::string& s) {
  if (s == "interval") return SpaceKind::interval;
  if (s == "circle") return SpaceKind::circle;
  if (s == "shift") return SpaceKind::shift;
  if (s == "cylinder") return SpaceKind::cylinder;
  throw ParseError("space", "unknown space \"" + s + "\"");
}

// ---------------------------------------------------------------------------
// Detector registry and applicability.

const std::map<std::string, std::vector<SpaceKind>>& detector_spaces() {
  static const std::map<std::string, std::vector<SpaceKind>> table{
      {"check_transitivity", {SpaceKind::interval, SpaceKind::shift}},
      {"check_weak_mixing", {SpaceKind::interval}},
      {"check_topological_mixing", {SpaceKind::interval, SpaceKind::shift}},
      {"check_dense_periodicity",
       {SpaceKind::interval, SpaceKind::circle, SpaceKind::shift,
        SpaceKind::cylinder}},
      {"check_minimality",
       {SpaceKind::interval, SpaceKind::circle, SpaceKind::shift}},
      {"check_sensitivity", {SpaceKind::interval, SpaceKind::cylinder}},
      {"find_scrambled_pairs", {SpaceKind::interval, SpaceKind::shift}},
      {"find_periodic_points",
       {SpaceKind::interval, SpaceKind::circle, SpaceKind::shift,
        SpaceKind::cylinder}},
      {"find_invariant_trap", {SpaceKind::interval}},
      {"reduce_to_autonomous", {SpaceKind::interval}},
      {"lap_entropy", {SpaceKind::interval}},
      {"cover_entropy", {SpaceKind::interval}},
      {"compare_family_vs_composition", {SpaceKind::interval}},
  };
  return table;
}

void validate_analysis(const Scenario& scenario, const AnalysisSpec& a) {
  const auto& table = detector_spaces();
  auto it = table.find(a.detector);
  if (it == table.end()) {
    throw ValidationError("unknown detector \"" + a.detector + "\"");
  }
  const auto& spaces = it->second;
  if (std::find(spaces.begin(), spaces.end(), scenario.space()) ==
      spaces.end()) {
    throw ValidationError("detector " + a.detector +
                          " is not applicable to the " +
                          space_kind_name(scenario.space()) + " space");
  }
}

// ---------------------------------------------------------------------------
// Result serialization.

json entropy_estimate_to_json(const EntropyEstimate& est) {
  json per_k = json::array();
  for (const auto& row : est.per_k) {
    per_k.push_back(json{{"k", row.k},
                         {"count", row.count.str()},
                         {"exact", row.exact},
                         {"log_nat", approx12(row.log_nat)},
                         {"log2", approx12(row.log_nat / std::log(2.0))},
                         {"per_step_nat", approx12(row.per_step)},
                         {"per_step_log2",
                          approx12(row.per_step / std::log(2.0))}});
  }
  return json{{"method", est.method},
              {"per_k", std::move(per_k)},
              {"limsup_tail_nat", approx12(est.limsup_tail)},
              {"liminf_tail_nat", approx12(est.liminf_tail)},
              {"limsup_tail_log2", approx12(est.limsup_tail / std::log(2.0))},
              {"liminf_tail_log2", approx12(est.liminf_tail / std::log(2.0))},
              {"upper_bound_only", est.any_upper_bound_only}};
}

json periodic_witnesses_to_json(const std::vector<PeriodicWitness>& ws) {
  json out = json::array();
  for (const auto& w : ws) {
    json entry{{"point", point_str(w.point)},
               {"period", w.period},
               {"multiples_verified", w.multiples_verified},
               {"all_multiples_certified", w.all_multiples_certified}};
    if (w.range) entry["fixed_interval"] = w.range->str();
    out.push_back(std::move(entry));
  }
  return out;
}

json scrambled_report_to_json(const ScrambledReport& rep) {
  json pairs = json::array();
  for (const auto& p : rep.pairs) {
    if (!p.scrambled_at_scale && pairs.size() >= 64) continue;
    pairs.push_back(json{{"x", point_str(p.x)},
                         {"y", point_str(p.y)},
                         {"limsup_est", p.limsup_est.str()},
                         {"liminf_est", p.liminf_est.str()},
                         {"scrambled_at_scale", p.scrambled_at_scale}});
  }
  json out{{"verdict", verdict_to_json(rep.verdict)},
           {"pairs_total", rep.pairs.size()},
           {"pairs", std::move(pairs)}};
  if (rep.period3_cycle) {
    json cycle = json::array();
    for (const Rat& x : *rep.period3_cycle) cycle.push_back(x.str());
    out["period3_cycle"] = std::move(cycle);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Detector dispatch.

MeshParams mesh_params_from(const Scenario& scenario, const json& params) {
  MeshParams p;
  p.mesh = params.value("mesh", scenario.default_mesh);
  p.horizon = params.value("horizon", scenario.default_horizon);
  if (params.contains("eps")) {
    p.eps = Rat::parse(params["eps"].get<std::string>());
  }
  if (params.contains("eps_prime")) {
    p.eps_prime = Rat::parse(params["eps_prime"].get<std::string>());
  }
  p.tail = params.value("tail", 0u);
  p.breakpoint_budget = scenario.breakpoint_budget;
  p.fill_defaults();
  return p;
}

// "family" (default), "composition", or "member:<i>" (1-based).
Family resolve_target(const Scenario& scenario, const json& params) {
  const std::string target = params.value("target", "family");
  if (target == "family") return scenario.family();
  const auto* pl =
      std::get_if<Family::FiniteCyclicPL>(&scenario.family().kind());
  if (!pl) {
    throw ValidationError("target \"" + target +
                          "\" needs a finite cyclic PL family");
  }
  if (target == "composition") {
    const auto red = reduce_to_autonomous(scenario.family());
    return Family(Family::FiniteCyclicPL{{red.g}});
  }
  if (target.rfind("member:", 0) == 0) {
    const size_t i = std::stoul(target.substr(7));
    if (i < 1 || i > pl->maps.size()) {
      throw ValidationError("member index out of range in \"" + target +
                            "\"");
    }
    return Family(Family::FiniteCyclicPL{{pl->maps[i - 1]}});
  }
  throw ValidationError("unknown target \"" + target + "\"");
}

std::vector<PointVar> parse_points(const Scenario& scenario, const json& arr) {
  std::vector<PointVar> out;
  for (const auto& e : arr) {
    const std::string s = e.get<std::string>();
    switch (scenario.space()) {
      case SpaceKind::interval:
        out.push_back(PointVar(Rat::parse(s)));
        break;
      case SpaceKind::circle:
        out.push_back(PointVar(CirclePoint(QAlpha::parse(s))));
        break;
      case SpaceKind::shift:
        out.push_back(PointVar(ShiftPoint::parse(s)));
        break;
      case SpaceKind::cylinder:
        throw ValidationError("cylinder sample points are not supported");
    }
  }
  return out;
}

json run_detector(const Scenario& scenario, const AnalysisSpec& a) {
  const json& params = a.params;
  const std::string& d = a.detector;

  if (d == "check_transitivity") {
    const Family target = resolve_target(scenario, params);
    return verdict_to_json(
        check_transitivity(target, mesh_params_from(scenario, params)));
  }
  if (d == "check_weak_mixing") {
    const Family target = resolve_target(scenario, params);
    std::vector<IntervalSet> sets;
    if (params.contains("sets")) {
      for (const auto& s : params["sets"]) {
        std::vector<Interval> comps;
        for (const auto& iv : s) {
          comps.push_back(Interval(Rat::parse(iv.at("lo").get<std::string>()),
                                   iv.value("lo_open", true),
                                   Rat::parse(iv.at("hi").get<std::string>()),
                                   iv.value("hi_open", true)));
        }
        sets.push_back(IntervalSet(std::move(comps)));
      }
    }
    return verdict_to_json(check_weak_mixing(
        target, sets, mesh_params_from(scenario, params)));
  }
  if (d == "check_topological_mixing") {
    const Family target = resolve_target(scenario, params);
    return verdict_to_json(check_topological_mixing(
        target, mesh_params_from(scenario, params)));
  }
  if (d == "check_dense_periodicity") {
    const Family target = resolve_target(scenario, params);
    return verdict_to_json(check_dense_periodicity(
        target, mesh_params_from(scenario, params),
        params.value("period_cap", 8u), params.value("multiple_cap", 3u)));
  }
  if (d == "check_minimality") {
    std::vector<PointVar> samples;
    if (params.contains("samples")) {
      samples = parse_points(scenario, params["samples"]);
    }
    return verdict_to_json(check_minimality(
        scenario.family(), samples, mesh_params_from(scenario, params)));
  }
  if (d == "check_sensitivity") {
    const Family target = resolve_target(scenario, params);
    const Rat delta = Rat::parse(params.value("delta", "1/4"));
    return verdict_to_json(check_sensitivity(
        target, mesh_params_from(scenario, params), delta));
  }
  if (d == "find_scrambled_pairs") {
    std::vector<PointVar> candidates;
    if (params.contains("candidates")) {
      candidates = parse_points(scenario, params["candidates"]);
    }
    return scrambled_report_to_json(find_scrambled_pairs(
        scenario.family(), candidates, mesh_params_from(scenario, params)));
  }
  if (d == "find_periodic_points") {
    const Family target = resolve_target(scenario, params);
    OmegaChain chain(target, scenario.breakpoint_budget);
    const auto ws =
        find_periodic_points(chain, params.value("period_cap", 8u),
                             params.value("multiple_cap", 3u));
    return json{{"witnesses", periodic_witnesses_to_json(ws)}};
  }
  if (d == "find_invariant_trap") {
    json p2 = params;
    if (!p2.contains("target")) p2["target"] = "composition";
    const Family target = resolve_target(scenario, p2);
    const auto red = reduce_to_autonomous(target);
    TrapSearchParams tp;
    tp.max_denominator = params.value("max_denominator", 16u);
    const auto trap = find_invariant_trap(red.g, tp);
    json out{{"found", trap.has_value()}};
    if (trap) out["trap"] = interval_set_to_json(*trap);
    return out;
  }
  if (d == "reduce_to_autonomous") {
    const auto red = reduce_to_autonomous(scenario.family());
    json surjective = json::array();
    for (bool s : red.member_surjective) surjective.push_back(s);
    return json{{"g", plmap_to_json(red.g)},
                {"family_size", red.family_size},
                {"member_surjective", std::move(surjective)},
                {"commutative", red.commutative},
                {"g_surjective", red.g.is_surjective()},
                {"lap_count", red.g.lap_count()}};
  }
  if (d == "lap_entropy") {
    const Family target = resolve_target(scenario, params);
    OmegaChain chain(target, scenario.breakpoint_budget);
    return entropy_estimate_to_json(
        lap_entropy(chain, params.value("depth", 12u)));
  }
  if (d == "cover_entropy") {
    const Family target = resolve_target(scenario, params);
    if (params.contains("cover")) {
      Cover cover;
      for (const auto& e : params["cover"]) {
        cover.elements.emplace_back(Rat::parse(e[0].get<std::string>()),
                                    Rat::parse(e[1].get<std::string>()));
      }
      OmegaChain chain(target, scenario.breakpoint_budget);
      return entropy_estimate_to_json(
          cover_entropy(chain, cover, params.value("depth", 8u)));
    }
    const auto ladder = cover_entropy_ladder(target, params.value("depth", 8u),
                                             params.value("max_mesh", 8u));
    json rungs = json::array();
    for (const auto& rung : ladder.rungs) {
      json r{{"mesh", rung.mesh}, {"completed", rung.completed}};
      if (rung.completed) r["estimate"] = entropy_estimate_to_json(rung.estimate);
      rungs.push_back(std::move(r));
    }
    return json{{"ladder", std::move(rungs)},
                {"best_limsup_nat", approx12(ladder.best_limsup)},
                {"best_liminf_nat", approx12(ladder.best_liminf)},
                {"lap_oracle", entropy_estimate_to_json(ladder.lap_oracle)}};
  }
  if (d == "compare_family_vs_composition") {
    const auto cmp = compare_family_vs_composition(
        scenario.family(), params.value("depth", 10u),
        params.value("tolerance", 0.05));
    return json{{"family_estimate_nat", approx12(cmp.family_estimate)},
                {"composition_estimate_nat",
                 approx12(cmp.composition_estimate)},
                {"family_size", cmp.family_size},
                {"depth_family", cmp.depth_family},
                {"depth_composition", cmp.depth_composition},
                {"gap_nat", approx12(cmp.gap)},
                {"inequality_holds", cmp.inequality_holds},
                {"family_detail", entropy_estimate_to_json(cmp.family_detail)},
                {"composition_detail",
                 entropy_estimate_to_json(cmp.composition_detail)}};
  }
  throw ValidationError("unknown detector \"" + d + "\"");
}

}  // namespace

// ---------------------------------------------------------------------------

Scenario::Scenario(std::string name, Family family,
                   std::vector<AnalysisSpec> analyses)
    : name_(std::move(name)),
      family_(std::move(family)),
      analyses_(std::move(analyses)) {
  for (const AnalysisSpec& a : analyses_) validate_analysis(*this, a);
}

json Scenario::to_json() const {
  json analyses = json::array();
  for (const auto& a : analyses_) {
    analyses.push_back(json{{"detector", a.detector}, {"params", a.params}});
  }
  json out{{"name", name_},
           {"space", space_kind_name(space())},
           {"family", family_to_json(family_)},
           {"analyses", std::move(analyses)},
           {"defaults", json{{"mesh", default_mesh},
                             {"horizon", default_horizon}}},
           {"seed", seed},
           {"breakpoint_budget", breakpoint_budget}};
  if (!description.empty()) out["description"] = description;
  if (!output_path.empty()) out["output"] = output_path;
  return out;
}

Scenario parse_scenario(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("byte " + std::to_string(e.byte), e.what());
  }
  return parse_scenario_json(j);
}

Scenario parse_scenario_json(const json& j) {
  try {
    const SpaceKind space =
        space_from_string(j.at("space").get<std::string>());
    Family family = family_from_json(space, j.at("family"));
    std::vector<AnalysisSpec> analyses;
    if (j.contains("analyses")) {
      for (const auto& a : j["analyses"]) {
        AnalysisSpec spec;
        spec.detector = a.at("detector").get<std::string>();
        spec.params = a.value("params", json::object());
        analyses.push_back(std::move(spec));
      }
    }
    Scenario s(j.value("name", "custom"), std::move(family),
               std::move(analyses));
    if (j.contains("defaults")) {
      s.default_mesh = j["defaults"].value("mesh", s.default_mesh);
      s.default_horizon = j["defaults"].value("horizon", s.default_horizon);
    }
    s.seed = j.value("seed", 0u);
    s.breakpoint_budget = j.value("breakpoint_budget", s.breakpoint_budget);
    s.description = j.value("description", "");
    s.output_path = j.value("output", "");
    return s;
  } catch (const json::exception& e) {
    throw ParseError("scenario", e.what());
  }
}

json run_scenario(const Scenario& scenario) {
  json results = json::array();
  for (const auto& a : scenario.analyses()) {
    json entry{{"detector", a.detector}, {"params", a.params}};
    try {
      entry["result"] = run_detector(scenario, a);
    } catch (const Error& e) {
      entry["error"] = json{{"message", e.what()}};
    }
    results.push_back(std::move(entry));
  }
  return json{{"artifact", json{{"name", kArtifactName},
                                {"version", kArtifactVersion}}},
              {"scenario", scenario.to_json()},
              {"seed", scenario.seed},
              {"results", std::move(results)}};
}

std::string report_to_string(const json& report) {
  return report.dump(2) + "\n";
}

std::vector<std::string> detector_names() {
  std::vector<std::string> names;
  for (const auto& [name, spaces] : detector_spaces()) names.push_back(name);
  return names;
}

// ---------------------------------------------------------------------------
// Built-in scenarios: one per worked example, plus reference systems.

namespace {

PLMap pl(std::vector<std::pair<std::string, std::string>> pts) {
  std::vector<std::pair<Rat, Rat>> points;
  for (auto& [x, y] : pts) points.emplace_back(Rat::parse(x), Rat::parse(y));
  return PLMap::from_points(std::move(points));
}

json jparams(std::initializer_list<std::pair<std::string, json>> kv) {
  json p = json::object();
  for (const auto& [k, v] : kv) p[k] = v;
  return p;
}

Scenario make_ex1() {
  Family family(Family::FiniteCyclicShift{
      {ShiftDirection::left, ShiftDirection::right}});
  std::vector<AnalysisSpec> analyses{
      {"check_transitivity", jparams({})},
      {"check_topological_mixing", jparams({})},
      {"find_scrambled_pairs", jparams({})},
      {"check_dense_periodicity", jparams({{"period_cap", json(4u)}})},
  };
  Scenario s("ex1", std::move(family), std::move(analyses));
  s.description =
      "Alternating left/right full-shift maps; each shift is transitive and "
      "chaotic but the alternation composes to the identity.";
  return s;
}

Scenario make_ex2() {
  Family family(Family::FiniteCyclicPL{
      {pl({{"0", "0"}, {"1/2", "1"}, {"1", "1/2"}}),
       pl({{"0", "1/2"}, {"1/2", "0"}, {"1", "1"}})}});
  std::vector<AnalysisSpec> analyses{
      {"check_transitivity", jparams({{"target", "family"}})},
      {"check_transitivity", jparams({{"target", "composition"}})},
      {"check_transitivity", jparams({{"target", "member:1"}})},
      {"check_transitivity", jparams({{"target", "member:2"}})},
      {"compare_family_vs_composition", jparams({{"depth", json(10u)}})},
  };
  Scenario s("ex2", std::move(family), std::move(analyses));
  s.description =
      "Two non-transitive interval maps whose alternation is transitive; "
      "each member has an invariant half.";
  return s;
}

Scenario make_ex3() {
  Family family(Family::RotationSequence{QAlpha(Rat(1, 2)), 3});
  std::vector<AnalysisSpec> analyses{
      {"check_dense_periodicity", jparams({{"period_cap", json(10000u)},
                                           {"multiple_cap", json(2u)}})},
  };
  Scenario s("ex3", std::move(family), std::move(analyses));
  s.description =
      "Rotations by theta/3^n with rational theta: every member has all "
      "points periodic, yet the cumulative angle never returns to zero.";
  return s;
}

Scenario make_ex4() {
  Family family(Family::FiniteCyclicRotation{
      {QAlpha(Rat(0), Rat(1)), QAlpha(Rat(0), Rat(-1))}});
  std::vector<AnalysisSpec> analyses{
      {"check_dense_periodicity", jparams({{"period_cap", json(4u)}})},
      {"check_minimality", jparams({})},
  };
  Scenario s("ex4", std::move(family), std::move(analyses));
  s.description =
      "Irrational rotation followed by its inverse: members have no "
      "periodic points, the composition is the identity.";
  return s;
}

Scenario make_ex5() {
  Family family(Family::ConstantEnumeration{});
  std::vector<AnalysisSpec> analyses{
      {"check_minimality", jparams({{"horizon", json(256u)}})},
  };
  Scenario s("ex5", std::move(family), std::move(analyses));
  s.description =
      "Constant maps onto an enumeration of the rationals: every orbit is "
      "the enumeration itself, so the system is minimal.";
  return s;
}

Scenario make_ex6() {
  Family family(Family::FiniteCyclicPL{
      {pl({{"0", "1/2"}, {"1/4", "1"}, {"3/4", "0"}, {"1", "1/2"}}),
       pl({{"0", "0"}, {"1/2", "1"}, {"1", "1/2"}})}});
  std::vector<AnalysisSpec> analyses{
      {"check_weak_mixing", jparams({})},
      {"check_topological_mixing", jparams({})},
  };
  Scenario s("ex6", std::move(family), std::move(analyses));
  s.description =
      "Neither member is weakly mixing, but composed images of every open "
      "set reach the whole interval exactly.";
  return s;
}

Scenario make_ex7() {
  Family family(Family::FiniteCyclicTwist{{1, -1}});
  std::vector<AnalysisSpec> analyses{
      {"check_sensitivity", jparams({{"delta", "1/4"}})},
      {"check_sensitivity", jparams({{"delta", "1/4"},
                                     {"target", "member:1"}})},
  };
  Scenario s("ex7", std::move(family), std::move(analyses));
  s.description =
      "Opposite twists on the cylinder: each member is cofinitely "
      "sensitive, the alternation is the identity.";
  return s;
}

Scenario make_ex8() {
  // Conjugated composition of x -> |x| and x -> 2x-1 from [-1,1] onto
  // [0,1] via u = (x+1)/2; the second map alone does not preserve any
  // interval, so the built-in runs the composed map u -> |2u-1|.
  // Original coordinates recover as x = 2u-1.
  Family family(Family::FiniteCyclicPL{
      {pl({{"0", "1"}, {"1/2", "0"}, {"1", "1"}})}});
  std::vector<AnalysisSpec> analyses{
      {"find_periodic_points", jparams({{"period_cap", json(3u)},
                                        {"multiple_cap", json(2u)}})},
      {"find_scrambled_pairs", jparams({})},
  };
  Scenario s("ex8", std::move(family), std::move(analyses));
  s.description =
      "Composition |2u-1| of the absolute-value and doubling maps, "
      "conjugated from [-1,1] to [0,1] (x = 2u-1): carries an exact "
      "period-3 orbit, hence Li-Yorke chaos.";
  return s;
}

Scenario make_ex9() {
  Family family(Family::FiniteCyclicPL{
      {pl({{"0", "1/2"}, {"1/4", "1"}, {"3/4", "0"}, {"1", "1/2"}}),
       pl({{"0", "1/2"}, {"1/2", "1"}, {"3/4", "0"}, {"1", "1/2"}})}});
  std::vector<AnalysisSpec> analyses{
      {"check_transitivity", jparams({{"target", "family"}})},
      {"check_transitivity", jparams({{"target", "composition"}})},
      {"find_invariant_trap", jparams({})},
  };
  Scenario s("ex9", std::move(family), std::move(analyses));
  s.description =
      "The composition traps [1/2,1] and is not transitive, while the "
      "alternating family is transitive.";
  return s;
}

Scenario make_post_lemma18() {
  Family family(Family::FiniteCyclicPL{
      {pl({{"0", "0"}, {"1/2", "1"}, {"1", "1/2"}}),
       pl({{"0", "1/2"}, {"1/4", "0"}, {"1/2", "1/2"}, {"3/4", "0"},
           {"1", "1/2"}})}});
  std::vector<AnalysisSpec> analyses{
      {"reduce_to_autonomous", jparams({})},
      {"check_transitivity", jparams({{"target", "composition"}})},
      {"check_weak_mixing", jparams({})},
      {"find_invariant_trap", jparams({})},
  };
  Scenario s("nonsurjective_pair", std::move(family), std::move(analyses));
  s.description =
      "A surjective map alternated with a non-surjective one: the "
      "composition traps [0,1/2], yet odd-index images cover [0,1] and the "
      "family is weakly mixing.";
  return s;
}

Scenario make_identity() {
  Family family(Family::FiniteCyclicPL{{PLMap::identity()}});
  std::vector<AnalysisSpec> analyses{
      {"check_transitivity", jparams({})},
      {"check_weak_mixing", jparams({})},
      {"check_topological_mixing", jparams({})},
      {"check_dense_periodicity", jparams({})},
      {"check_minimality", jparams({})},
      {"check_sensitivity", jparams({{"delta", "1/4"}})},
      {"find_scrambled_pairs", jparams({})},
      {"lap_entropy", jparams({{"depth", json(8u)}})},
  };
  Scenario s("identity", std::move(family), std::move(analyses));
  s.description = "The identity system: every detector's negative case.";
  return s;
}

Scenario make_tent() {
  Family family(Family::FiniteCyclicPL{{PLMap::tent()}});
  std::vector<AnalysisSpec> analyses{
      {"check_transitivity", jparams({})},
      {"check_sensitivity", jparams({{"delta", "1/2"},
                                     {"horizon", json(20u)}})},
      {"check_dense_periodicity", jparams({{"mesh", json(8u)},
                                           {"period_cap", json(6u)}})},
      {"find_invariant_trap", jparams({{"max_denominator", json(64u)}})},
      {"lap_entropy", jparams({{"depth", json(12u)}})},
      {"cover_entropy", jparams({{"depth", json(10u)},
                                 {"max_mesh", json(4u)}})},
  };
  Scenario s("tent", std::move(family), std::move(analyses));
  s.description = "The full tent map: the positive-entropy reference system.";
  return s;
}

const std::vector<std::pair<std::string, Scenario (*)()>>& builtin_table() {
  static const std::vector<std::pair<std::string, Scenario (*)()>> table{
      {"ex1", make_ex1},
      {"ex2", make_ex2},
      {"ex3", make_ex3},
      {"ex4", make_ex4},
      {"ex5", make_ex5},
      {"ex6", make_ex6},
      {"ex7", make_ex7},
      {"ex8", make_ex8},
      {"ex9", make_ex9},
      {"nonsurjective_pair", make_post_lemma18},
      {"identity", make_identity},
      {"tent", make_tent},
  };
  return table;
}

}  // namespace

std::vector<std::string> builtin_scenario_names() {
  std::vector<std::string> names;
  for (const auto& [name, make] : builtin_table()) names.push_back(name);
  return names;
}

Scenario builtin_scenario(const std::string& name) {
  for (const auto& [n, make] : builtin_table()) {
    if (n == name) return make();
  }
  throw ValidationError("unknown built-in scenario \"" + name + "\"");
}

std::string explain_detector(const std::string& name) {
  static const std::map<std::string, std::string> texts{
      {"check_transitivity",
       "For every ordered pair of mesh cells (U, V), looks for n <= horizon "
       "with omega_n(U) meeting V (exact interval images). Certifies failure "
       "through an invariant trap or an identity collapse of the composed "
       "maps; shift families are decided through net-displacement analysis."},
      {"check_weak_mixing",
       "Simultaneous Hausdorff criterion: a single index r <= horizon with "
       "d_H(omega_r(U_i), X) < eps for all supplied sets at once (default: "
       "the full mesh, which exercises the m-fold product criterion)."},
      {"check_topological_mixing",
       "Per mesh cell, the least K with d_H(omega_n(U), X) < eps for every "
       "n in [K, horizon]; reports the per-cell stabilization profile."},
      {"check_dense_periodicity",
       "Solves omega_n(x) = x exactly for n <= period_cap, verifies "
       "multiples, and checks that every mesh cell holds a witness. Identity "
       "collapses certify every point periodic at once."},
      {"check_minimality",
       "Dense-orbit proxy: sampled orbits must visit every mesh cell by the "
       "horizon. Necessary, not sufficient, for minimality; reports are "
       "labeled as a dense-orbit check."},
      {"check_sensitivity",
       "Looks for exact diam(omega_n(U)) > delta on mesh cells, with a "
       "cofinite flag when the spread persists to the horizon. Bounded "
       "families of composed isometries/shears certify insensitivity."},
      {"find_scrambled_pairs",
       "Exact orbit distances over the tail window for candidate pairs: "
       "limsup/liminf estimates and the scrambled-at-scale flag. A period-3 "
       "orbit of the cyclic composition certifies Li-Yorke chaos."},
      {"find_periodic_points",
       "Exact periodic witnesses: fixed points of composed maps with "
       "verified multiples, cumulative-rotation integrality on the circle, "
       "word periodicity on the shift."},
      {"find_invariant_trap",
       "Searches closures of breakpoint-lattice seeds for a proper closed "
       "set with interior mapped into itself: an exact non-transitivity "
       "certificate."},
      {"reduce_to_autonomous",
       "Composes a finite cyclic family into g = f_n o ... o f_1 and "
       "reports per-member surjectivity and exact commutativity (the "
       "hypotheses of the reduction lemmas)."},
      {"lap_entropy",
       "(1/k) log lap(omega_k) with exact lap integers: the growth rate of "
       "monotone pieces, the desk oracle for PL entropy."},
      {"cover_entropy",
       "Exact joined-pullback cover entropy H(U v omega_1^-1 U v ...)/k "
       "with minimal subcovers by branch and bound (greedy beyond the cap, "
       "flagged); the mesh-cover ladder gives monotone lower bounds."},
      {"compare_family_vs_composition",
       "Runs the lap estimator for the family and its cyclic composition "
       "and tests h(F) >= (1/n) h(g) - tolerance with exact lap integers at "
       "matched depths."},
  };
  auto it = texts.find(name);
  if (it == texts.end()) {
    throw ValidationError("unknown detector \"" + name + "\"");
  }
  return it->second;
}

}  // namespace nonauto
