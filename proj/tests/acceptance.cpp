// Acceptance suite: one pass/fail line per criterion.

#include "bmetric/classification.hpp"
#include "bmetric/completion.hpp"
#include "bmetric/demos.hpp"
#include "bmetric/fixed_point.hpp"
#include "bmetric/search.hpp"

#include "random_spaces.hpp"
#include "sequences.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace bmetric;
using bmetric::testing::converging;
using bmetric::testing::random_rational;
using bmetric::testing::random_space;
using bmetric::testing::small_palette;

namespace {

int failures = 0;

struct Checker {
    bool ok = true;
    std::ostringstream detail;

    void require(bool condition, const std::string& what) {
        if (!condition) {
            ok = false;
            detail << "    failed: " << what << "\n";
        }
    }
};

void criterion(int number, const std::string& description, double time_limit_s,
               const std::function<void(Checker&)>& body) {
    Checker c;
    auto start = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.ok = false;
        c.detail << "    exception: " << e.what() << "\n";
    }
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (time_limit_s > 0 && elapsed > time_limit_s) {
        c.ok = false;
        c.detail << "    time limit exceeded: " << elapsed << "s > " << time_limit_s << "s\n";
    }
    std::cout << (c.ok ? "[PASS]" : "[FAIL]") << " criterion " << number << ": " << description
              << " (" << elapsed << "s)\n"
              << c.detail.str();
    if (!c.ok) ++failures;
}

Rational abs_val(const Rational& q) { return q < 0 ? Rational(-q) : q; }

void criterion1(Checker& c) {
    FiniteSpace space = example21_space();
    ClassificationReport report = classify(space);
    c.require(!report.is_metric, "is_metric = false");
    c.require(report.min_strong_b_constant == 4, "min_strong_b_constant = 4");
    c.require(report.min_b_constant == 2, "min_b_constant = 2");
    c.require(report.min_metric_type_constant == 2, "min_metric_type_constant = 2");
    bool witness = false;
    for (const auto& v : report.violations) {
        if (v.x == 0 && v.y == 1 && v.z == 2 && v.lhs == 6 && v.rhs == 3) witness = true;
    }
    c.require(witness, "violation witness D(1,3) = 6 > 3 = D(1,2) + D(2,3)");
}

void criterion2(Checker& c) {
    auto params = example21_params();
    HypothesisReport report =
        check_hypotheses(example21_space(), example21_map(), params.x0, params.r, params.k);
    c.require(report.cond1_lhs == 2 && report.cond1_rhs == 3 && report.cond1_holds,
              "cond1: 2 < 3");
    c.require(report.ball_points == std::vector<int>{0, 1}, "B(1,6) = {1,2}");
    c.require(report.cond2_checks.size() == 2, "exactly two nonvacuous cond2 entries");
    if (report.cond2_checks.size() == 2) {
        c.require(report.cond2_checks[0].delta == 0 && report.cond2_checks[0].bound == 0 &&
                      report.cond2_checks[0].holds,
                  "cond2 (1,1): 0 <= 0");
        c.require(report.cond2_checks[1].delta == 1 && report.cond2_checks[1].bound == 1 &&
                      report.cond2_checks[1].holds,
                  "cond2 (1,2): 1 <= 1");
    }
    c.require(report.all_hold, "all_hold = true");
    c.require(report.fixed_points.empty(), "fixed_points = {}");
}

void criterion3(Checker& c) {
    auto trace = strong_b_trace(example21_space(), 4);
    c.require(trace.size() == 6, "six distinct-triple instances");
    // (x, y, z) -> lhs D(x,z), rhs D(x,y) + 4 D(y,z), frozen from direct
    // evaluation of the distance table
    struct Expected {
        int x, y, z;
        Rational lhs, rhs;
        bool tight;
    };
    const std::vector<Expected> expected = {
        {0, 1, 2, 6, 6, true},   // D(1,2) + 4 D(2,3) = 2 + 4 = 6 = D(1,3)
        {0, 2, 1, 2, 10, false}, // D(1,3) + 4 D(3,2) = 6 + 4 = 10
        {1, 0, 2, 1, 26, false}, // D(2,1) + 4 D(1,3) = 2 + 24 = 26
        {1, 2, 0, 2, 25, false}, // D(2,3) + 4 D(3,1) = 1 + 24 = 25
        {2, 0, 1, 1, 14, false}, // D(3,1) + 4 D(1,2) = 6 + 8 = 14
        {2, 1, 0, 6, 9, false},  // D(3,2) + 4 D(2,1) = 1 + 8 = 9
    };
    for (const auto& e : expected) {
        bool found = false;
        for (const auto& t : trace) {
            if (t.x == e.x && t.y == e.y && t.z == e.z) {
                found = t.lhs == e.lhs && t.rhs == e.rhs && t.holds() && t.tight() == e.tight;
            }
        }
        c.require(found, "instance (" + std::to_string(e.x + 1) + "," + std::to_string(e.y + 1) +
                             "," + std::to_string(e.z + 1) + ")");
    }
}

void criterion4(Checker& c) {
    SearchConfig config;
    config.n = 3;
    config.palette = {1, 2, 6};
    config.k_candidates = {Rational(1, 2)};
    config.r_candidates = {6};
    auto results = find_counterexamples(config);
    c.require(!results.empty(), "at least one counterexample");
    Matrix target = canonical_form(example21_space());
    bool rediscovered = false;
    for (const auto& ce : results) {
        c.require(reverify(ce), "result re-verifies independently");
        if (canonical_form(ce.space) == target) rediscovered = true;
    }
    c.require(rediscovered, "canonical form matches example 2.1");
}

void criterion5(Checker& c) {
    auto space = rationals_abs();
    const Rational K = space->K;
    std::mt19937 rng(11001);
    for (int trial = 0; trial < 100; ++trial) {
        Rational x = random_rational(rng), y = random_rational(rng);
        Rational d = abs_val(x - y);
        for (long i : {1L, 10L, 1000L}) {
            RationalInterval I = dstar_interval(embed(space, x), embed(space, y), i);
            Rational radius = 2 * K / i;
            // hi is unclamped, so hi - 2K/i is the evaluated center
            if (I.hi - radius != d) {
                c.require(false, "center |x - y| at i=" + std::to_string(i));
                return;
            }
            Rational expected_width = d >= radius ? Rational(2 * radius) : Rational(d + radius);
            if (I.width() != expected_width) {
                c.require(false, "width min-clamped 4K/i at i=" + std::to_string(i));
                return;
            }
        }
    }
}

void criterion6(Checker& c) {
    auto space = rationals_abs();
    RationalInterval I = dstar_interval(sqrt2_sequence(space), embed(space, 0), 1000);
    c.require(I.width() <= Rational(4, 1000), "width <= 4/1000");
    c.require(I.contains(Rational(141421356, 100000000)), "contains 1.41421356");
}

void criterion7(Checker& c) {
    auto space = example3_presentation();
    auto quad = example3_quadruple(space);
    auto report = wellposedness_probe(quad.x, quad.z, quad.y, quad.w, 100, TailCertificate{1},
                                      TailCertificate{1});
    c.require(report.first_limit == RationalInterval{4, 4}, "first limit exactly 4");
    c.require(report.second_limit == RationalInterval{1, 1}, "second limit exactly 1");
    c.require(report.first_limit.disjoint(report.second_limit), "limits disjoint");
    c.require(report.clash, "clash = true");
}

void criterion8(Checker& c) {
    const Rational eps(1, 1000);

    // (a) + (b): constant ordering and minimality witnesses
    {
        std::mt19937 rng(11002);
        for (int trial = 0; trial < 500; ++trial) {
            int n = 2 + static_cast<int>(rng() % 4);
            FiniteSpace space = random_space(rng, n, small_palette());
            Rational b = min_b_constant(space);
            Rational strong = min_strong_b_constant(space);
            Rational mt = min_metric_type_constant(space);
            if (!(b <= strong && b <= mt)) {
                c.require(false, "(a) ordering at trial " + std::to_string(trial));
                break;
            }
            bool recheck = !check_b_inequality(space, b) &&
                           !check_strong_b_inequality(space, strong) &&
                           !check_metric_type_inequality(space, mt);
            bool minimal = check_b_inequality(space, b - eps).has_value() &&
                           check_strong_b_inequality(space, strong - eps).has_value() &&
                           check_metric_type_inequality(space, mt - eps).has_value();
            if (!(recheck && minimal)) {
                c.require(false, "(b) witness at trial " + std::to_string(trial));
                break;
            }
        }
    }

    // (c) ball openness certificates verify by enumeration
    {
        std::mt19937 rng(11003);
        for (int trial = 0; trial < 500; ++trial) {
            int n = 3 + static_cast<int>(rng() % 3);
            FiniteSpace space = random_space(rng, n, small_palette());
            Rational K = min_strong_b_constant(space);
            int center = static_cast<int>(rng() % n);
            Rational radius = small_palette()[rng() % 6] + Rational(1, 2);
            auto witnesses = ball_openness_certificate(space, K, center, radius);
            auto outer = ball(space, center, radius);
            bool ok = witnesses.size() == outer.size();
            for (const auto& w : witnesses) {
                ok = ok && w.inner_radius > 0;
                for (int p : w.inner_ball) {
                    ok = ok && std::binary_search(outer.begin(), outer.end(), p);
                }
            }
            if (!ok) {
                c.require(false, "(c) certificate at trial " + std::to_string(trial));
                break;
            }
        }
    }

    // (d) strong triangle residual on StrongB presentations
    {
        auto space = rationals_abs();
        std::mt19937 rng(11004);
        for (int trial = 0; trial < 500; ++trial) {
            CompletionPoint a = converging(space, random_rational(rng), random_rational(rng, 2, 3));
            CompletionPoint b = converging(space, random_rational(rng), random_rational(rng, 2, 3));
            CompletionPoint cc = converging(space, random_rational(rng), random_rational(rng, 2, 3));
            if (strong_triangle_check(a, b, cc, 25).lo > 0) {
                c.require(false, "(d) residual at trial " + std::to_string(trial));
                break;
            }
        }
    }

    // (e) limit_point tail bounds: 1/n + 2K/i plus evaluation slack drops
    // below 1/50 at n = i = 300
    {
        auto space = rationals_abs();
        std::mt19937 rng(11005);
        for (int trial = 0; trial < 500; ++trial) {
            Rational target = random_rational(rng);
            Rational coeff = random_rational(rng, 2, 3);
            CompletionSequence xs;
            xs.at = [space, target, coeff](long n) {
                return embed(space, Rational(target + coeff / n));
            };
            xs.modulus = [](long j) { return 8 * j; };
            CompletionPoint limit = limit_point(xs);
            RationalInterval I = dstar_interval(xs.at(300), limit, 300);
            if (I.hi >= Rational(1, 50)) {
                c.require(false, "(e) tail bound at trial " + std::to_string(trial));
                break;
            }
        }
    }
}

}  // namespace

int main() {
    criterion(1, "example 2.1 classification", 1.0, criterion1);
    criterion(2, "example 2.1 hypothesis replay", 1.0, criterion2);
    criterion(3, "strong-b verification trace at K = 4", 0, criterion3);
    criterion(4, "search rediscovery of example 2.1", 60.0, criterion4);
    criterion(5, "completion isometry on random pairs", 0, criterion5);
    criterion(6, "sqrt(2) evaluation at precision 1/1000", 1.0, criterion6);
    criterion(7, "example 3 well-posedness clash", 0, criterion7);
    criterion(8, "randomized property suites (a)-(e)", 300.0, criterion8);
    if (failures) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
