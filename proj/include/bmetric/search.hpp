#ifndef BMETRIC_SEARCH_HPP
#define BMETRIC_SEARCH_HPP

#include "bmetric/finite_space.hpp"
#include "bmetric/fixed_point.hpp"

#include <vector>

namespace bmetric {

struct SearchConfig {
    int n = 3;
    std::vector<Rational> palette;       // candidate distances, all > 0
    std::vector<Rational> k_candidates;  // in [0, 1)
    std::vector<Rational> r_candidates;  // > 0
    bool require_strong_b = true;
    bool canonical = false;  // drop relabeling duplicates
    long max_results = 1000;
};

// A configuration where every hypothesis of the fixed-point question holds
// and the map still has no fixed point.
struct Counterexample {
    FiniteSpace space;
    Rational K;  // minimal strong-b constant of the space
    SetValuedMap map;
    int x0;
    Rational r;
    Rational k;
    HypothesisReport report;
};

// Every symmetric zero-diagonal matrix with off-diagonal entries from the
// palette, in a fixed enumeration order. With canonical = true, only the
// lexicographically least representative of each relabeling orbit.
std::vector<FiniteSpace> enumerate_spaces(int n, const std::vector<Rational>& palette,
                                          bool canonical = false);

// Lexicographically least matrix over all point permutations.
Matrix canonical_form(const FiniteSpace& space);

// Exhaustive search over spaces, single-valued maps, base points, and the
// r/k candidate grids. OpenMP-parallel over the space stream; results are
// merged in enumeration order, so output is deterministic.
std::vector<Counterexample> find_counterexamples(const SearchConfig& config);

// Serial reference implementation, kept for testing the parallel kernel.
std::vector<Counterexample> find_counterexamples_serial(const SearchConfig& config);

// Independently re-runs the hypothesis check on a result.
bool reverify(const Counterexample& ce);

}  // namespace bmetric

#endif
