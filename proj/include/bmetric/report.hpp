#ifndef BMETRIC_REPORT_HPP
#define BMETRIC_REPORT_HPP

#include "bmetric/classification.hpp"
#include "bmetric/completion.hpp"
#include "bmetric/fixed_point.hpp"
#include "bmetric/search.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace bmetric {

using nlohmann::json;

// Machine-readable projections: every field of the underlying report is
// present; the human renderers below are projections of the same data.

json classification_json(const ClassificationReport& report,
                         const std::vector<std::string>& labels);
json hypothesis_json(const HypothesisReport& report, const std::vector<std::string>& labels);
json interval_json(const RationalInterval& interval);
json wellposedness_json(const WellposednessReport& report);
json counterexample_json(const Counterexample& ce);
json space_errors_json(const std::vector<SpaceError>& errors);

void print_classification(std::ostream& out, const ClassificationReport& report,
                          const std::vector<std::string>& labels);
void print_hypothesis(std::ostream& out, const HypothesisReport& report,
                      const std::vector<std::string>& labels);
void print_wellposedness(std::ostream& out, const WellposednessReport& report);
void print_counterexample(std::ostream& out, const Counterexample& ce);

std::string format_interval(const RationalInterval& interval);

}  // namespace bmetric

#endif
