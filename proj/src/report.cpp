#include "bmetric/report.hpp"

#include "bmetric/space_io.hpp"

#include <ostream>

namespace bmetric {

namespace {

json rational_json(const Rational& q) { return format_rational(q); }

json point_list_json(const std::vector<int>& points, const std::vector<std::string>& labels) {
    json arr = json::array();
    for (int p : points) arr.push_back(labels[p]);
    return arr;
}

std::string point_list(const std::vector<int>& points, const std::vector<std::string>& labels) {
    std::string out = "{";
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (i) out += ", ";
        out += labels[points[i]];
    }
    return out + "}";
}

}  // namespace

std::string format_interval(const RationalInterval& interval) {
    return "[" + format_rational(interval.lo) + ", " + format_rational(interval.hi) + "]";
}

json interval_json(const RationalInterval& interval) {
    return {{"lo", rational_json(interval.lo)}, {"hi", rational_json(interval.hi)}};
}

json space_errors_json(const std::vector<SpaceError>& errors) {
    json arr = json::array();
    for (const auto& e : errors) arr.push_back(e.to_string());
    return arr;
}

json classification_json(const ClassificationReport& report,
                         const std::vector<std::string>& labels) {
    json violations = json::array();
    for (const auto& v : report.violations) {
        violations.push_back({{"x", labels[v.x]},
                              {"y", labels[v.y]},
                              {"z", labels[v.z]},
                              {"lhs", rational_json(v.lhs)},
                              {"rhs", rational_json(v.rhs)}});
    }
    return {{"is_semimetric", report.is_semimetric},
            {"axiom_errors", space_errors_json(report.axiom_errors)},
            {"min_b_constant", rational_json(report.min_b_constant)},
            {"min_strong_b_constant", rational_json(report.min_strong_b_constant)},
            {"min_metric_type_constant", rational_json(report.min_metric_type_constant)},
            {"is_metric", report.is_metric},
            {"triangle_violations", violations}};
}

json hypothesis_json(const HypothesisReport& report, const std::vector<std::string>& labels) {
    json cond2 = json::array();
    for (const auto& e : report.cond2_checks) {
        cond2.push_back({{"x", labels[e.x]},
                         {"y", labels[e.y]},
                         {"tx_in_ball", point_list_json(e.tx_in_ball, labels)},
                         {"delta", rational_json(e.delta)},
                         {"bound", rational_json(e.bound)},
                         {"holds", e.holds}});
    }
    json vacuous = json::array();
    for (const auto& [x, y] : report.vacuous_pairs) {
        vacuous.push_back({{"x", labels[x]}, {"y", labels[y]}});
    }
    return {{"x0", labels[report.x0]},
            {"r", rational_json(report.r)},
            {"k", rational_json(report.k)},
            {"ball", point_list_json(report.ball_points, labels)},
            {"cond1_lhs", rational_json(report.cond1_lhs)},
            {"cond1_rhs", rational_json(report.cond1_rhs)},
            {"cond1_holds", report.cond1_holds},
            {"cond2_checks", cond2},
            {"vacuous_pairs", vacuous},
            {"all_hold", report.all_hold},
            {"fixed_points", point_list_json(report.fixed_points, labels)}};
}

json wellposedness_json(const WellposednessReport& report) {
    auto equiv = [](Equivalence e) {
        switch (e) {
            case Equivalence::Equivalent: return "equivalent";
            case Equivalence::Distinct: return "distinct";
            case Equivalence::Undecided: return "undecided";
        }
        return "undecided";
    };
    return {{"first_limit", interval_json(report.first_limit)},
            {"second_limit", interval_json(report.second_limit)},
            {"first_pair", equiv(report.first_pair)},
            {"second_pair", equiv(report.second_pair)},
            {"clash", report.clash}};
}

json counterexample_json(const Counterexample& ce) {
    const auto& labels = ce.space.labels();
    return {{"space", write_space(ce.space)},
            {"K", rational_json(ce.K)},
            {"map", write_map(ce.map, labels)},
            {"x0", labels[ce.x0]},
            {"r", rational_json(ce.r)},
            {"k", rational_json(ce.k)},
            {"report", hypothesis_json(ce.report, labels)}};
}

void print_classification(std::ostream& out, const ClassificationReport& report,
                          const std::vector<std::string>& labels) {
    out << "semimetric:               " << (report.is_semimetric ? "yes" : "no") << "\n";
    for (const auto& e : report.axiom_errors) out << "  axiom violation: " << e.to_string() << "\n";
    if (!report.is_semimetric) return;
    out << "metric:                   " << (report.is_metric ? "yes" : "no") << "\n";
    out << "min b constant:           " << format_rational(report.min_b_constant) << "\n";
    out << "min strong b constant:    " << format_rational(report.min_strong_b_constant) << "\n";
    out << "min metric-type constant: " << format_rational(report.min_metric_type_constant)
        << "\n";
    for (const auto& v : report.violations) {
        out << "  triangle violation: D(" << labels[v.x] << "," << labels[v.z] << ") = "
            << format_rational(v.lhs) << " > " << format_rational(v.rhs) << " = D(" << labels[v.x]
            << "," << labels[v.y] << ") + D(" << labels[v.y] << "," << labels[v.z] << ")\n";
    }
}

void print_hypothesis(std::ostream& out, const HypothesisReport& report,
                      const std::vector<std::string>& labels) {
    out << "x0 = " << labels[report.x0] << ", r = " << format_rational(report.r)
        << ", k = " << format_rational(report.k) << "\n";
    out << "B(x0, r) = " << point_list(report.ball_points, labels) << "\n";
    out << "cond1: dist(x0, Tx0) = " << format_rational(report.cond1_lhs) << " "
        << (report.cond1_holds ? "<" : ">=") << " " << format_rational(report.cond1_rhs)
        << " = r(1-k)  [" << (report.cond1_holds ? "holds" : "fails") << "]\n";
    for (const auto& e : report.cond2_checks) {
        out << "cond2 (" << labels[e.x] << "," << labels[e.y] << "): delta("
            << point_list(e.tx_in_ball, labels) << ", Ty) = " << format_rational(e.delta) << " "
            << (e.holds ? "<=" : ">") << " " << format_rational(e.bound) << " = k D(x,y)  ["
            << (e.holds ? "holds" : "fails") << "]\n";
    }
    for (const auto& [x, y] : report.vacuous_pairs) {
        out << "cond2 (" << labels[x] << "," << labels[y] << "): Tx cap B empty  [vacuous]\n";
    }
    out << "all hypotheses hold: " << (report.all_hold ? "yes" : "no") << "\n";
    out << "fixed points: " << point_list(report.fixed_points, labels) << "\n";
}

void print_wellposedness(std::ostream& out, const WellposednessReport& report) {
    out << "lim D(x_n, y_n) in " << format_interval(report.first_limit) << "\n";
    out << "lim D(z_n, w_n) in " << format_interval(report.second_limit) << "\n";
    out << "clash: " << (report.clash ? "yes (D* ill-defined)" : "no") << "\n";
}

void print_counterexample(std::ostream& out, const Counterexample& ce) {
    out << write_space(ce.space);
    out << write_map(ce.map, ce.space.labels());
    out << "K: " << format_rational(ce.K) << "\n";
    out << "x0: " << ce.space.label(ce.x0) << "\n";
    out << "r: " << format_rational(ce.r) << "\n";
    out << "k: " << format_rational(ce.k) << "\n";
}

}  // namespace bmetric
