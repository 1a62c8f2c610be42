#include "lkfree/json_io.hpp"

#include <sstream>

namespace lkfree {

Json to_json(const CountReport& report, bool canonical) {
  Json j;
  j["n"] = report.n;
  j["r"] = report.r;
  j["k"] = report.k;
  j["list"] = report.list;
  j["labeled_count"] = report.labeled_count.str();
  if (report.iso_count) {
    j["iso_count"] = report.iso_count->str();
  } else {
    j["iso_count"] = nullptr;
  }
  j["method"] = report.method;
  if (!canonical) j["elapsed_s"] = report.elapsed_s;
  j["nodes"] = report.nodes;
  return j;
}

std::string count_report_csv_header() {
  return "n,r,k,list,labeled_count,iso_count,method,elapsed_s,nodes";
}

std::string to_csv_row(const CountReport& report, bool canonical) {
  std::ostringstream out;
  out << report.n << ',' << report.r << ',' << report.k << ",\"";
  for (std::size_t i = 0; i < report.list.size(); ++i) {
    if (i) out << ',';
    out << report.list[i];
  }
  out << "\"," << report.labeled_count.str() << ','
      << (report.iso_count ? report.iso_count->str() : "") << ','
      << report.method << ',';
  if (!canonical) out << report.elapsed_s;
  out << ',' << report.nodes;
  return out.str();
}

Json to_json(const DStat& stat, bool canonical) {
  Json j;
  j["a"] = stat.a;
  j["n"] = stat.n;
  j["r"] = stat.r;
  j["k"] = stat.k;
  j["list"] = stat.list;
  j["value"] = stat.value;
  j["exact"] = stat.exact;
  j["anchors"] = stat.anchors;
  if (!stat.exact) {
    j["seed"] = stat.seed;
    j["samples"] = stat.samples;
  }
  if (!canonical) j["elapsed_s"] = stat.elapsed_s;
  return j;
}

Json to_json(const LogBound& bound) {
  Json params;
  params["n"] = bound.n;
  switch (bound.formula) {
    case BoundFormula::theorem_main_upper:
      params["r"] = bound.r;
      params["k"] = bound.k;
      break;
    case BoundFormula::corollary_d_bound:
      params["r"] = bound.r;
      params["k"] = bound.k;
      params["i"] = bound.i;
      break;
    case BoundFormula::linkgraph_bound:
      params["k"] = bound.k;
      break;
    case BoundFormula::steiner_lower_log:
      params["r"] = bound.r;
      break;
    case BoundFormula::qn_lower_log:
    case BoundFormula::barnes_g_log:
      break;
  }
  Json j;
  j["formula_id"] = bound_formula_name(bound.formula);
  j["params"] = params;
  j["log2_value"] = static_cast<double>(bound.log2_value);
  j["vacuous"] = bound.vacuous;
  return j;
}

Json to_json(const GreedyTrace& trace) {
  Json edges = Json::array();
  for (const auto& e : trace.edges) {
    Json edge = Json::array();
    for (int v : e) edge.push_back(v + 1);  // 1-based externally
    edges.push_back(edge);
  }
  Json j;
  j["strategy"] = strategy_name(trace.strategy);
  j["seed"] = trace.seed;
  j["steps"] = trace.steps;
  j["edges"] = edges;
  j["rejections"] = trace.rejections;
  return j;
}

Json to_json(const FreenessReport& report) {
  Json j;
  j["free"] = report.free;
  if (report.witness) {
    Json w;
    Json verts = Json::array();
    for (int v : report.witness->first) verts.push_back(v + 1);
    w["vertices"] = verts;
    w["induced_count"] = report.witness->second;
    j["witness"] = w;
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

}  // namespace lkfree
