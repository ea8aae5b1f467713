#include "edgering/analysis.hpp"

#include <chrono>
#include <stdexcept>

#include "edgering/ehrhart.hpp"
#include "edgering/enumerate.hpp"
#include "edgering/normality.hpp"
#include "edgering/parallel.hpp"
#include "edgering/polytope.hpp"

namespace edgering {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kHolds:
      return "holds";
    case Verdict::kNotApplicable:
      return "not-applicable";
    case Verdict::kViolated:
      return "violated";
  }
  return "unknown";
}

AnalysisReport analyze(const Graph& g, const AnalysisOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  if (g.num_vertices() < 2) throw std::invalid_argument("analysis needs at least two vertices");
  if (!is_connected(g)) throw std::invalid_argument("analysis needs a connected graph");

  AnalysisReport r;
  r.graph = g;
  r.d = g.num_vertices();
  r.edges = g.num_edges();
  r.connected = true;
  r.bipartite = is_bipartite(g).has_value();
  r.matching = maximum_matching(g);
  r.cover = min_edge_cover(g);
  r.mat = static_cast<int>(r.matching.size());
  r.mu = static_cast<int>(r.cover.size());
  if (r.mu != r.d - r.mat) {
    throw InternalError("edge cover of size " + std::to_string(r.mu) + " but d - mat = " +
                        std::to_string(r.d - r.mat));
  }
  r.normal = is_normal(g);

  const EdgePolytope poly(g);
  r.dim = poly.dim();
  r.facet_count = poly.facets().size();

  if (r.normal) {
    const EhrhartProfile prof = ehrhart_profile(poly);
    for (std::size_t i = 0; i < prof.h_star.size(); ++i) {
      if (prof.h_star[i] < 0) {
        throw InternalError("negative h*_" + std::to_string(i) + " for a normal edge ring");
      }
    }
    const int q0 = min_interior_q(poly, r.mu);
    if (prof.min_interior_q != q0 || prof.s() != prof.krull_dim - q0) {
      throw InternalError("deg h* = " + std::to_string(prof.s()) +
                          " disagrees with (dim P + 1) - min interior dilation = " +
                          std::to_string(prof.krull_dim - q0));
    }
    r.min_interior_q = q0;
    r.h_star = prof.h_star;
    r.reg = prof.s();
    r.reg_source = "h_star";
    r.bound = r.bipartite ? r.mat - 1 : r.mat;
    r.verdict = *r.reg <= *r.bound ? Verdict::kHolds : Verdict::kViolated;
  }

  if (options.toric) {
    const int q_max = std::max(2, options.toric_qmax.value_or(2 * r.dim));
    try {
      r.generators = minimal_generator_degrees(g, q_max, options.budget);
      if (!r.normal && r.generators->degrees.size() == 1) {
        r.reg = r.generators->degrees.front() - 1;
        r.reg_source = "principal";
      }
    } catch (const BudgetExceeded& e) {
      r.toric_error = e.what();
    }
  }

  if (options.record_timing) {
    r.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  return r;
}

TheoremSummary verify_theorem(int n_max, unsigned threads) {
  if (n_max < 2 || n_max > 8) throw std::invalid_argument("verify_theorem needs 2 <= n_max <= 8");
  std::vector<Graph> graphs;
  for (int n = 2; n <= n_max; ++n) {
    for (Graph& g : connected_graphs_up_to_isomorphism(n)) graphs.push_back(std::move(g));
  }
  TheoremSummary s;
  s.n_max = n_max;
  s.graphs = graphs.size();
  s.records.resize(graphs.size());
  std::vector<std::string> errors(graphs.size());
  parallel_for(graphs.size(), threads, [&](std::size_t i) {
    TheoremRecord& rec = s.records[i];
    rec.graph = graphs[i];
    try {
      const AnalysisReport r = analyze(graphs[i]);
      rec.mat = r.mat;
      rec.bipartite = r.bipartite;
      rec.normal = r.normal;
      rec.reg = r.reg;
      rec.bound = r.bound;
      rec.verdict = r.verdict;
    } catch (const std::exception& e) {
      errors[i] = render_graph(graphs[i]) + ": " + e.what();
    }
  });
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    if (!errors[i].empty()) s.errors.push_back(errors[i]);
    const TheoremRecord& rec = s.records[i];
    (rec.normal ? s.normal : s.non_normal)++;
    if (rec.bipartite) ++s.bipartite;
    if (rec.verdict == Verdict::kViolated) s.violations.push_back(rec);
  }
  return s;
}

namespace {

SweepRow sweep_row(std::string family, std::string params, const FamilySpec& spec,
                   int expected_reg, int expected_mat, const AnalysisOptions& options) {
  SweepRow row;
  row.family = std::move(family);
  row.params = std::move(params);
  row.spec = describe(spec);
  row.expected_reg = expected_reg;
  row.expected_mat = expected_mat;
  const Graph g = make_family(spec);
  const AnalysisReport r = analyze(g, options);
  row.d = r.d;
  row.edges = r.edges;
  row.mat = r.mat;
  row.mu = r.mu;
  row.normal = r.normal;
  row.dim = r.dim;
  row.reg = r.reg;
  row.reg_source = r.reg_source;
  if (r.reg_source == "principal") {
    row.note = "principal ideal certified up to degree " +
               std::to_string(r.generators->complete_up_to);
  }
  if (r.toric_error) row.note = *r.toric_error;
  row.match = r.reg == expected_reg && r.mat == expected_mat;
  return row;
}

FamilySpec with_path(FamilySpec base, int length) {
  if (length == 0) return base;
  return attach_path(std::move(base), 1, length);
}

std::string rm_params(int r, int m) {
  return "r=" + std::to_string(r) + ";m=" + std::to_string(m);
}

}  // namespace

std::vector<SweepRow> run_families(int r_max, int l_max, const ToricBudget& budget) {
  if (r_max < 2) throw std::invalid_argument("run_families needs r_max >= 2");
  if (l_max < 1) throw std::invalid_argument("run_families needs l_max >= 1");
  std::vector<SweepRow> rows;
  AnalysisOptions plain;
  plain.budget = budget;
  for (int r = 0; r <= r_max; ++r) {
    const bool edge_case = r < 2;
    for (int m = r; m <= r + 2; ++m) {
      if (r == 0) {
        SweepRow row;
        row.family = "complete+path";
        row.params = rm_params(r, m);
        row.expected_reg = r;
        row.expected_mat = m;
        row.edge_case = true;
        row.note = "complete graph on 2r = 0 vertices is not constructible";
        rows.push_back(row);
      } else {
        SweepRow row = sweep_row("complete+path", rm_params(r, m),
                                 with_path(FamilySpec{family::Complete{2 * r}}, 2 * (m - r)), r,
                                 m, plain);
        row.edge_case = edge_case;
        if (edge_case) row.note = "unverified edge case r=" + std::to_string(r);
        rows.push_back(std::move(row));
      }
      SweepRow row = sweep_row(
          "complete_bipartite+path", rm_params(r, m),
          with_path(FamilySpec{family::CompleteBipartite{r + 1, r + 1}}, 2 * (m - r)), r, m + 1,
          plain);
      row.edge_case = edge_case;
      if (edge_case) row.note = "unverified edge case r=" + std::to_string(r);
      rows.push_back(std::move(row));
    }
  }
  for (int l = 1; l <= l_max; ++l) {
    AnalysisOptions toric = plain;
    toric.toric = true;
    toric.toric_qmax = l + 4;
    SweepRow row = sweep_row("two_triangles_path", "l=" + std::to_string(l),
                             FamilySpec{family::TwoTrianglesPath{l}}, l + 2, 2 + (l + 1) / 2,
                             toric);
    if (row.normal) {
      // The bridge joins the triangles; h* and the principal generator must agree.
      const std::optional<int> principal =
          principal_regularity(make_family(FamilySpec{family::TwoTrianglesPath{l}}), l + 4, budget);
      row.note = principal ? "normal; principal ideal certified up to degree " +
                                 std::to_string(l + 4) + " gives reg " + std::to_string(*principal)
                           : "normal; toric ideal not principal up to degree " +
                                 std::to_string(l + 4);
      if (principal != row.reg) row.match = false;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Question5Summary question5_sweep(int m, int n_max, const ToricBudget& budget) {
  if (m < 1) throw std::invalid_argument("question5_sweep needs m >= 1");
  if (n_max < 2 || n_max > 8) throw std::invalid_argument("question5_sweep needs 2 <= n_max <= 8");
  Question5Summary s;
  s.m = m;
  s.n_max = n_max;
  for (int n = 2; n <= n_max; ++n) {
    for (const Graph& g : connected_graphs_up_to_isomorphism(n)) {
      if (matching_number(g) != m) continue;
      const AnalysisReport r = analyze(g);
      Question5Row row;
      row.graph = g;
      row.mat = r.mat;
      row.mu = r.mu;
      row.normal = r.normal;
      row.dim = r.dim;
      row.reg = r.reg;
      row.reg_source = r.reg_source;
      row.verdict = r.verdict;
      ++s.graphs;
      if (r.normal) {
        ++s.normal;
        s.max_reg_normal = std::max(s.max_reg_normal.value_or(0), *r.reg);
      } else {
        ++s.non_normal;
        // The toric ideal has height |E| - (dim + 1); only height one can be principal.
        if (static_cast<int>(g.num_edges()) == r.dim + 2) {
          try {
            const std::optional<int> reg = principal_regularity(g, 2 * r.dim, budget);
            if (reg) {
              row.reg = reg;
              row.reg_source = "principal";
              ++s.non_normal_certified;
              s.max_reg_non_normal_certified =
                  std::max(s.max_reg_non_normal_certified.value_or(0), *reg);
            }
          } catch (const BudgetExceeded&) {
            row.reg_source = "unknown (budget exceeded)";
          }
        }
      }
      s.rows.push_back(std::move(row));
    }
  }
  return s;
}

}  // namespace edgering
