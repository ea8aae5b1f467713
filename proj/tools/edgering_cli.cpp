#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "edgering/analysis.hpp"
#include "edgering/report.hpp"

using namespace edgering;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

int run_analyze(const std::string& input, const std::string& family, bool toric,
                std::optional<int> qmax, const std::string& json_path) {
  const Graph g =
      !input.empty() ? parse_graph(read_file(input)) : make_family(parse_family(family));
  AnalysisOptions opts;
  opts.toric = toric;
  opts.toric_qmax = qmax;
  opts.record_timing = true;
  const AnalysisReport r = analyze(g, opts);
  const auto j = to_json(r);
  if (!json_path.empty()) write_file(json_path, j.dump(2) + "\n");
  std::cout << "d=" << r.d << " edges=" << r.edges << " bipartite=" << r.bipartite
            << " mat=" << r.mat << " mu=" << r.mu << " normal=" << r.normal << " dim=" << r.dim
            << " facets=" << r.facet_count
            << " reg=" << (r.reg ? std::to_string(*r.reg) : "unknown")
            << " (" << r.reg_source << ") verdict=" << to_string(r.verdict) << "\n";
  if (r.generators) {
    std::cout << "generator degrees up to " << r.generators->complete_up_to << ":";
    for (int deg : r.generators->degrees) std::cout << ' ' << deg;
    std::cout << "\n";
  }
  if (r.toric_error) std::cerr << "toric analysis: " << *r.toric_error << "\n";
  if (r.verdict == Verdict::kViolated) {
    std::cerr << "violation: reg " << *r.reg << " > bound " << *r.bound << "\n";
    return 1;
  }
  return r.toric_error ? 1 : 0;
}

int run_verify(int n_max, const std::string& json_path) {
  const TheoremSummary s = verify_theorem(n_max);
  if (!json_path.empty()) write_file(json_path, to_json(s).dump(2) + "\n");
  std::cout << "graphs=" << s.graphs << " normal=" << s.normal << " non_normal=" << s.non_normal
            << " bipartite=" << s.bipartite << " violations=" << s.violations.size()
            << " errors=" << s.errors.size() << "\n";
  for (const TheoremRecord& v : s.violations) {
    std::cerr << "violation: reg " << *v.reg << " > bound " << *v.bound << " for\n"
              << render_graph(v.graph);
  }
  for (const std::string& e : s.errors) std::cerr << "error: " << e << "\n";
  return s.violations.empty() && s.errors.empty() ? 0 : 1;
}

int run_families_cmd(int r_max, int l_max, const std::string& csv_path) {
  const std::vector<SweepRow> rows = run_families(r_max, l_max);
  std::ostringstream csv;
  write_csv(csv, rows);
  if (!csv_path.empty()) write_file(csv_path, csv.str());
  std::cout << csv.str();
  int bad = 0;
  for (const SweepRow& r : rows) {
    if (!r.note.empty()) std::cerr << r.family << " " << r.params << ": " << r.note << "\n";
    if (!r.edge_case && !r.match) {
      std::cerr << "mismatch: " << r.family << " " << r.params << "\n";
      ++bad;
    }
  }
  return bad == 0 ? 0 : 1;
}

int run_q5(int m, int n_max, const std::string& csv_path) {
  const Question5Summary s = question5_sweep(m, n_max);
  std::ostringstream csv;
  write_csv(csv, s);
  if (!csv_path.empty()) write_file(csv_path, csv.str());
  std::cout << to_json(s).dump(2) << "\n";
  for (const Question5Row& r : s.rows) {
    if (r.verdict == Verdict::kViolated) return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Edge ring regularity toolkit"};
  app.require_subcommand(1);

  std::string input, family, json_path, csv_path;
  bool toric = false;
  int qmax = 0, n_max = 0, r_max = 0, l_max = 0, m = 0;

  auto* an = app.add_subcommand("analyze", "invariants of one graph");
  auto* in_opt = an->add_option("--input", input, "edge-list file");
  auto* fam_opt = an->add_option("--family", family, "family spec, e.g. complete:4+path:1:2");
  in_opt->excludes(fam_opt);
  an->add_flag("--toric", toric, "fiber analysis of the toric ideal");
  auto* qmax_opt =
      an->add_option("--qmax", qmax, "degree bound for --toric")->check(CLI::Range(2, 64));
  an->add_option("--json", json_path);

  auto* vt = app.add_subcommand("verify-theorem", "exhaustive regularity bound check");
  vt->add_option("--nmax", n_max)->required()->check(CLI::Range(2, 8));
  vt->add_option("--json", json_path);

  auto* fa = app.add_subcommand("families", "sweep of the constructed families");
  fa->add_option("--rmax", r_max)->required()->check(CLI::Range(2, 16));
  fa->add_option("--lmax", l_max)->required()->check(CLI::Range(1, 16));
  fa->add_option("--csv", csv_path);

  auto* q5 = app.add_subcommand("q5", "regularity by matching number, small graphs");
  q5->add_option("--m", m)->required()->check(CLI::Range(1, 4));
  q5->add_option("--nmax", n_max)->required()->check(CLI::Range(2, 8));
  q5->add_option("--csv", csv_path);

  CLI11_PARSE(app, argc, argv);

  try {
    if (an->parsed()) {
      if (input.empty() && family.empty()) {
        std::cerr << "analyze: one of --input or --family is required\n";
        return 2;
      }
      return run_analyze(input, family, toric,
                         qmax_opt->count() ? std::optional<int>(qmax) : std::nullopt, json_path);
    }
    if (vt->parsed()) return run_verify(n_max, json_path);
    if (fa->parsed()) return run_families_cmd(r_max, l_max, csv_path);
    if (q5->parsed()) return run_q5(m, n_max, csv_path);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
