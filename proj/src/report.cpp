#include "edgering/report.hpp"

namespace edgering {

using nlohmann::ordered_json;

namespace {

template <typename T>
ordered_json optional_json(const std::optional<T>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

ordered_json edges_json(std::span<const Edge> edges) {
  ordered_json out = ordered_json::array();
  for (const Edge& e : edges) out.push_back({e.u, e.v});
  return out;
}

std::string reg_cell(const std::optional<int>& reg) {
  return reg ? std::to_string(*reg) : "unknown";
}

// Fields are plain tokens except the edge list, which has spaces only.
std::string edge_list(const Graph& g) {
  std::string out;
  for (const Edge& e : g.edges()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(e.u) + "-" + std::to_string(e.v);
  }
  return out;
}

}  // namespace

ordered_json to_json(const Graph& g) {
  return {{"d", g.num_vertices()}, {"edges", edges_json(g.edges())}};
}

ordered_json to_json(const FacetInequality& f) {
  return {{"normal", f.normal}, {"offset", f.offset}, {"provenance", f.provenance.to_string()}};
}

ordered_json to_json(const AnalysisReport& r) {
  ordered_json j;
  j["graph"] = to_json(r.graph);
  j["d"] = r.d;
  j["edge_count"] = r.edges;
  j["bipartite"] = r.bipartite;
  j["connected"] = r.connected;
  j["mat"] = r.mat;
  j["matching"] = edges_json(r.matching.edges);
  j["mu"] = r.mu;
  j["cover"] = edges_json(r.cover.edges);
  j["gallai"] = {{"mu", r.mu}, {"d_minus_mat", r.d - r.mat}};
  j["normal"] = r.normal;
  j["dim"] = r.dim;
  j["facet_count"] = r.facet_count;
  j["min_interior_q"] = optional_json(r.min_interior_q);
  j["h_star"] = optional_json(r.h_star);
  j["reg"] = r.reg ? ordered_json(*r.reg) : ordered_json("unknown");
  j["reg_source"] = r.reg_source;
  j["verdict"] = to_string(r.verdict);
  j["bound"] = optional_json(r.bound);
  if (r.bound) j["bound_kind"] = r.bipartite ? "mat-1" : "mat";
  if (r.generators) {
    j["generators"] = {{"degrees", r.generators->degrees},
                       {"complete_up_to", r.generators->complete_up_to}};
  }
  if (r.toric_error) j["toric_error"] = *r.toric_error;
  if (r.elapsed_ms) j["elapsed_ms"] = *r.elapsed_ms;
  return j;
}

ordered_json to_json(const TheoremSummary& s) {
  ordered_json j;
  j["n_max"] = s.n_max;
  j["graphs"] = s.graphs;
  j["normal"] = s.normal;
  j["non_normal"] = s.non_normal;
  j["bipartite"] = s.bipartite;
  ordered_json viol = ordered_json::array();
  for (const TheoremRecord& r : s.violations) {
    viol.push_back({{"graph", to_json(r.graph)},
                    {"mat", r.mat},
                    {"bipartite", r.bipartite},
                    {"reg", optional_json(r.reg)},
                    {"bound", optional_json(r.bound)}});
  }
  j["violations"] = viol;
  j["errors"] = s.errors;
  return j;
}

ordered_json to_json(const Question5Summary& s) {
  ordered_json j;
  j["scope"] = s.scope;
  j["m"] = s.m;
  j["n_max"] = s.n_max;
  j["graphs"] = s.graphs;
  j["normal"] = s.normal;
  j["non_normal"] = s.non_normal;
  j["non_normal_certified"] = s.non_normal_certified;
  j["max_reg_normal"] = optional_json(s.max_reg_normal);
  j["max_reg_non_normal_certified"] = optional_json(s.max_reg_non_normal_certified);
  return j;
}

std::string sweep_verdict(const SweepRow& row) {
  if (row.edge_case) return "unverified";
  return row.match ? "match" : "mismatch";
}

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << kCsvHeader << '\n';
  for (const SweepRow& r : rows) {
    out << r.family << ',' << r.params << ',' << r.d << ',' << r.edges << ',' << r.mat << ','
        << r.mu << ',' << (r.normal ? "true" : "false") << ',' << r.dim << ',' << reg_cell(r.reg)
        << ',' << r.expected_reg << ',' << sweep_verdict(r) << '\n';
  }
}

void write_csv(std::ostream& out, const Question5Summary& s) {
  out << kCsvHeader << '\n';
  for (const Question5Row& r : s.rows) {
    out << "enumerated," << edge_list(r.graph) << ',' << r.graph.num_vertices() << ','
        << r.graph.num_edges() << ',' << r.mat << ',' << r.mu << ','
        << (r.normal ? "true" : "false") << ',' << r.dim << ',' << reg_cell(r.reg) << ",,"
        << to_string(r.verdict) << '\n';
  }
}

}  // namespace edgering
