// bmetric: classify generalized metric spaces, check fixed-point
// hypotheses, search for counterexamples, and evaluate completions.

#include "bmetric/classification.hpp"
#include "bmetric/completion.hpp"
#include "bmetric/demos.hpp"
#include "bmetric/errors.hpp"
#include "bmetric/report.hpp"
#include "bmetric/search.hpp"
#include "bmetric/space_io.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace bmetric;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;  // mathematical negative, still a successful run
constexpr int kExitInputError = 2;

struct Options {
    std::string format = "human";
    bool json() const { return format == "json"; }
};

Rational parse_rational_arg(const std::string& text) {
    auto q = parse_rational(text);
    if (!q) throw ParseError(0, "malformed rational: " + text);
    return *q;
}

std::vector<Rational> parse_rational_list(const std::string& text) {
    std::vector<Rational> values;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto comma = text.find(',', start);
        auto piece = text.substr(start, comma == std::string::npos ? comma : comma - start);
        values.push_back(parse_rational_arg(piece));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return values;
}

// Parses and validates, or reports axiom violations.
std::optional<FiniteSpace> load_space(const std::string& path, const Options& opt, int& exit_code) {
    ParsedSpace parsed = parse_space_file(path);
    auto errors = FiniteSpace::validate(parsed.matrix);
    if (!errors.empty()) {
        if (opt.json()) {
            std::cout << json{{"valid", false}, {"errors", space_errors_json(errors)}}.dump(2)
                      << "\n";
        } else {
            for (const auto& e : errors) std::cout << "axiom violation: " << e.to_string() << "\n";
        }
        exit_code = kExitNegative;
        return std::nullopt;
    }
    return FiniteSpace(parsed.labels, parsed.matrix);
}

int run_check(const std::string& path, const Options& opt) {
    int code = kExitOk;
    auto space = load_space(path, opt, code);
    if (!space) return code;
    ClassificationReport report = classify(*space);
    if (opt.json()) {
        std::cout << classification_json(report, space->labels()).dump(2) << "\n";
    } else {
        print_classification(std::cout, report, space->labels());
    }
    return kExitOk;
}

int run_ball(const std::string& path, const std::string& center, const std::string& radius,
             const Options& opt) {
    int code = kExitOk;
    auto space = load_space(path, opt, code);
    if (!space) return code;
    int c = resolve_label(space->labels(), center);
    Rational r = parse_rational_arg(radius);
    if (r <= 0) throw ParseError(0, "radius must be positive");
    auto points = ball(*space, c, r);
    if (opt.json()) {
        json arr = json::array();
        for (int p : points) arr.push_back(space->label(p));
        std::cout << json{{"center", center}, {"radius", radius}, {"ball", arr}}.dump(2) << "\n";
    } else {
        std::cout << "B(" << center << ", " << radius << ") = {";
        for (std::size_t i = 0; i < points.size(); ++i) {
            if (i) std::cout << ", ";
            std::cout << space->label(points[i]);
        }
        std::cout << "}\n";
    }
    return kExitOk;
}

int run_fixed_point(const std::string& path, const std::string& map_path, const std::string& x0,
                    const std::string& r, const std::string& k, const Options& opt) {
    int code = kExitOk;
    auto space = load_space(path, opt, code);
    if (!space) return code;
    SetValuedMap T = parse_map_file(map_path, space->labels());
    HypothesisReport report = check_hypotheses(*space, T, resolve_label(space->labels(), x0),
                                               parse_rational_arg(r), parse_rational_arg(k));
    if (opt.json()) {
        std::cout << hypothesis_json(report, space->labels()).dump(2) << "\n";
    } else {
        print_hypothesis(std::cout, report, space->labels());
    }
    return report.all_hold ? kExitOk : kExitNegative;
}

int run_search(const SearchConfig& config, bool serial, const Options& opt) {
    auto results = serial ? find_counterexamples_serial(config) : find_counterexamples(config);
    if (opt.json()) {
        json arr = json::array();
        for (const auto& ce : results) arr.push_back(counterexample_json(ce));
        std::cout << json{{"count", results.size()}, {"counterexamples", arr}}.dump(2) << "\n";
    } else {
        std::cout << "found " << results.size() << " counterexample(s)\n";
        for (const auto& ce : results) {
            std::cout << "---\n";
            print_counterexample(std::cout, ce);
        }
    }
    return kExitOk;
}

PresentationPtr resolve_presentation(const std::string& name) {
    if (name == "rationals-abs") return rationals_abs();
    if (name == "example-3") return example3_presentation();
    if (name.rfind("finite:", 0) == 0) {
        ParsedSpace parsed = parse_space_file(name.substr(7));
        auto errors = FiniteSpace::validate(parsed.matrix);
        if (!errors.empty()) throw ParseError(0, "space file violates axioms: " + errors.front().to_string());
        return lift_finite(FiniteSpace(parsed.labels, parsed.matrix));
    }
    throw ParseError(0, "unknown presentation: " + name);
}

CompletionPoint resolve_sequence(PresentationPtr space, const std::string& name) {
    if (name.rfind("constant:", 0) == 0 || name.rfind("embed:", 0) == 0) {
        return constant_sequence(space, parse_rational_arg(name.substr(name.find(':') + 1)));
    }
    if (name == "reciprocal") return reciprocal_sequence(space);
    if (name == "sqrt2") return sqrt2_sequence(space);
    throw ParseError(0, "unknown sequence: " + name);
}

int run_complete(const std::string& presentation, bool probe, long i,
                 const std::vector<std::string>& seqs, const Options& opt) {
    PresentationPtr space = resolve_presentation(presentation);
    if (probe) {
        if (space->name != "example-3") {
            throw ParseError(0, "--probe uses the built-in example-3 quadruple");
        }
        auto quad = example3_quadruple(space);
        // D(1, 1/(2n)) and D(1, 0) are constant from the first index on.
        auto report = wellposedness_probe(quad.x, quad.z, quad.y, quad.w, i,
                                          TailCertificate{1}, TailCertificate{1});
        if (opt.json()) {
            std::cout << wellposedness_json(report).dump(2) << "\n";
        } else {
            print_wellposedness(std::cout, report);
        }
        return report.clash ? kExitNegative : kExitOk;
    }
    if (seqs.size() != 2) throw ParseError(0, "expected exactly two --seq arguments");
    CompletionPoint a = resolve_sequence(space, seqs[0]);
    CompletionPoint b = resolve_sequence(space, seqs[1]);
    RationalInterval interval = dstar_interval(a, b, i);
    if (opt.json()) {
        std::cout << json{{"presentation", space->name},
                          {"precision", i},
                          {"interval", interval_json(interval)}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "D*(" << seqs[0] << ", " << seqs[1] << ") in " << format_interval(interval)
                  << " at precision 1/" << i << "\n";
    }
    return kExitOk;
}

int run_demo(const std::string& name, const Options& opt) {
    if (name == "example-2.1") {
        FiniteSpace space = example21_space();
        SetValuedMap T = example21_map();
        auto params = example21_params();
        ClassificationReport cls = classify(space);
        HypothesisReport report = check_hypotheses(space, T, params.x0, params.r, params.k);
        if (opt.json()) {
            std::cout << json{{"classification", classification_json(cls, space.labels())},
                              {"hypotheses", hypothesis_json(report, space.labels())}}
                             .dump(2)
                      << "\n";
        } else {
            print_classification(std::cout, cls, space.labels());
            std::cout << "\n";
            print_hypothesis(std::cout, report, space.labels());
            if (report.all_hold && report.fixed_points.empty()) {
                std::cout << "\nall hypotheses hold, yet no fixed point exists\n";
            }
        }
        return kExitOk;
    }
    if (name == "example-3") {
        return run_complete("example-3", true, 100, {}, opt);
    }
    throw ParseError(0, "unknown demo: " + name + " (available: example-2.1, example-3)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"toolkit for finite and computably-presented generalized metric spaces"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"human", "json"}))
        ->capture_default_str();

    std::string space_file, map_file, center, radius, x0, r = "1", k = "0";

    auto* check = app.add_subcommand("check", "validate a space file and classify it");
    check->add_option("file", space_file)->required();

    auto* constants = app.add_subcommand("constants", "minimal relaxation constants of a space");
    constants->add_option("file", space_file)->required();

    auto* ball_cmd = app.add_subcommand("ball", "open ball in a space");
    ball_cmd->add_option("file", space_file)->required();
    ball_cmd->add_option("--center", center)->required();
    ball_cmd->add_option("--radius", radius)->required();

    auto* fp = app.add_subcommand("fixed-point", "check the fixed-point question hypotheses");
    fp->add_option("file", space_file)->required();
    fp->add_option("mapfile", map_file)->required();
    fp->add_option("--x0", x0)->required();
    fp->add_option("--r", r)->required();
    fp->add_option("--k", k)->required();

    SearchConfig config;
    std::string palette_arg, k_arg, r_arg;
    bool serial = false;
    auto* search = app.add_subcommand("search", "enumerate spaces and maps for counterexamples");
    search->add_option("--n", config.n)->check(CLI::Range(2, 6));
    search->add_option("--palette", palette_arg)->required();
    search->add_option("--k", k_arg)->required();
    search->add_option("--r", r_arg)->required();
    search->add_flag("--canonical", config.canonical, "drop relabeling duplicates");
    search->add_option("--max-results", config.max_results);
    search->add_flag("--serial", serial, "use the serial reference kernel");

    std::string presentation;
    bool probe = false;
    long precision = 10;
    std::vector<std::string> seqs;
    auto* complete = app.add_subcommand("complete", "evaluate completion distances");
    complete->add_option("presentation", presentation)->required();
    complete->add_flag("--probe", probe, "run the well-posedness probe");
    complete->add_option("--i", precision, "precision index")->check(CLI::PositiveNumber);
    complete->add_option("--seq", seqs, "sequence name (twice)");

    std::string demo_name;
    auto* demo = app.add_subcommand("demo", "replay a built-in example");
    demo->add_option("name", demo_name)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (*check) return run_check(space_file, opt);
        if (*constants) return run_check(space_file, opt);
        if (*ball_cmd) return run_ball(space_file, center, radius, opt);
        if (*fp) return run_fixed_point(space_file, map_file, x0, r, k, opt);
        if (*search) {
            config.palette = parse_rational_list(palette_arg);
            config.k_candidates = parse_rational_list(k_arg);
            config.r_candidates = parse_rational_list(r_arg);
            return run_search(config, serial, opt);
        }
        if (*complete) return run_complete(presentation, probe, precision, seqs, opt);
        if (*demo) return run_demo(demo_name, opt);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitOk;
}
