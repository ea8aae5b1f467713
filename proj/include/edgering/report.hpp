#ifndef EDGERING_REPORT_HPP
#define EDGERING_REPORT_HPP

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "edgering/analysis.hpp"
#include "edgering/polytope.hpp"

namespace edgering {

inline constexpr const char* kCsvHeader =
    "family,params,d,edges,mat,mu,normal,dim,reg,expected_reg,verdict";

nlohmann::ordered_json to_json(const Graph& g);
nlohmann::ordered_json to_json(const FacetInequality& f);
nlohmann::ordered_json to_json(const AnalysisReport& r);
nlohmann::ordered_json to_json(const TheoremSummary& s);
nlohmann::ordered_json to_json(const Question5Summary& s);

/// "match", "mismatch" or, for r in {0,1}, "unverified".
std::string sweep_verdict(const SweepRow& row);

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows);
void write_csv(std::ostream& out, const Question5Summary& s);

}  // namespace edgering

#endif  // EDGERING_REPORT_HPP
