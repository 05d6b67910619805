#include "rtl/report_json.hpp"

#include <cmath>

namespace rtl {

using nlohmann::json;

json to_json(const ConstructionReport& r) {
  json params = json::object();
  for (const auto& [key, value] : r.params) params[key] = value;
  return {
      {"construction", r.construction},
      {"params", params},
      {"vertices", r.graph.vertex_count()},
      {"edges", r.graph.edge_count()},
      {"scale", r.scale},
      {"predicted_count",
       {{"target", r.predicted.target.to_string()}, {"value", r.predicted.value}, {"exact", r.predicted.exact}}},
      {"forbidden", r.forbidden},
  };
}

json to_json(const CycleInstance& c) { return {{"cycle", c.vertices}, {"colours", c.colours}}; }

json to_json(const Pattern& p) {
  json pairs = json::array();
  for (auto [i, j] : p.equal_colour_pairs) pairs.push_back({i, j});
  return {{"good_positions", p.good_positions}, {"equal_colour_pairs", pairs}, {"rainbow", p.rainbow()}};
}

json to_json(const ExponentFit& f) {
  json points = json::array();
  for (const FitPoint& p : f.points) {
    json pt = {{"parameter", p.parameter},
               {"scale", p.scale},
               {"vertex_count", p.vertex_count},
               {"count", p.count},
               {"rainbow_checked", p.rainbow_checked}};
    if (p.rainbow_checked) pt["rainbow_free"] = p.rainbow_free;
    points.push_back(pt);
  }
  return {{"points", points},
          {"slope", f.slope},
          {"intercept", f.intercept},
          {"r_squared", f.r_squared},
          {"expected", f.expected.to_string()},
          {"expected_value", f.expected.value()},
          {"tolerance", f.tolerance},
          {"within_tolerance", f.within_tolerance}};
}

json to_json(const P2Report& r) {
  json points = json::array();
  for (const P2Point& p : r.points) {
    points.push_back({{"parameter", p.parameter},
                      {"vertex_count", p.vertex_count},
                      {"max_paths_from_vertex", p.max_paths},
                      {"ratio", p.ratio}});
  }
  json growth = json::array();
  for (double g : r.growth_per_doubling) growth.push_back(std::isfinite(g) ? json(g) : json("inf"));
  return {{"points", points}, {"growth_per_doubling", growth}, {"growth_limit", r.growth_limit},
          {"flagged", r.flagged}};
}

json edges_json(const ColoredGraph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v, e.c});
  return edges;
}

json to_json(const ExtremalRecord& r) {
  return {{"n", r.n},
          {"target", r.target.to_string()},
          {"forbidden", r.forbidden},
          {"max_count", r.max_count},
          {"graphs_examined", r.graphs_examined},
          {"witness", {{"vertices", r.witness.vertex_count()}, {"edges", edges_json(r.witness)}}}};
}

json to_json(const BkSet& b) {
  return {{"k", b.k}, {"modulus", b.modulus}, {"size", b.elements.size()}, {"elements", b.elements}};
}

}  // namespace rtl
