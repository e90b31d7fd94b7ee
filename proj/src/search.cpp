#include "bmetric/search.hpp"

#include "bmetric/classification.hpp"

#include <algorithm>
#include <numeric>

namespace bmetric {

namespace {

// Odometer over palette^slots.
bool advance(std::vector<int>& digits, int base) {
    for (auto& d : digits) {
        if (++d < base) return true;
        d = 0;
    }
    return false;
}

FiniteSpace space_from_digits(int n, const std::vector<Rational>& palette,
                              const std::vector<int>& digits) {
    Matrix m(n, std::vector<Rational>(n, Rational(0)));
    int slot = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            m[i][j] = palette[digits[slot]];
            m[j][i] = m[i][j];
            ++slot;
        }
    return FiniteSpace({}, std::move(m));
}

// All counterexamples hiding in one space, in canonical (map, x0, r, k) order.
std::vector<Counterexample> search_space(const FiniteSpace& space, const SearchConfig& config) {
    std::vector<Counterexample> found;
    const int n = space.size();
    const Rational K = min_strong_b_constant(space);

    std::vector<int> image(n, 0);
    do {
        // Only fixed-point-free maps can yield counterexamples.
        bool has_fixed = false;
        for (int x = 0; x < n; ++x) {
            if (image[x] == x) {
                has_fixed = true;
                break;
            }
        }
        if (has_fixed) continue;
        SetValuedMap T = SetValuedMap::single_valued(image);
        for (int x0 = 0; x0 < n; ++x0) {
            for (const Rational& r : config.r_candidates) {
                for (const Rational& k : config.k_candidates) {
                    // cond1 is the cheap filter; cond2 is quadratic.
                    if (space.dist(x0, image[x0]) >= r * (1 - k)) continue;
                    HypothesisReport report = check_hypotheses(space, T, x0, r, k);
                    if (report.all_hold && report.fixed_points.empty()) {
                        found.push_back({space, K, T, x0, r, k, std::move(report)});
                    }
                }
            }
        }
    } while (advance(image, n));
    return found;
}

}  // namespace

Matrix canonical_form(const FiniteSpace& space) {
    const int n = space.size();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Matrix best = space.matrix();
    do {
        Matrix candidate(n, std::vector<Rational>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) candidate[i][j] = space.dist(perm[i], perm[j]);
        if (candidate < best) best = std::move(candidate);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

std::vector<FiniteSpace> enumerate_spaces(int n, const std::vector<Rational>& palette,
                                          bool canonical) {
    if (n < 2) throw std::invalid_argument("space enumeration needs n >= 2");
    if (palette.empty()) throw std::invalid_argument("palette must be nonempty");
    const int slots = n * (n - 1) / 2;
    std::vector<int> digits(slots, 0);
    std::vector<FiniteSpace> spaces;
    do {
        FiniteSpace space = space_from_digits(n, palette, digits);
        if (canonical && space.matrix() != canonical_form(space)) continue;
        spaces.push_back(std::move(space));
    } while (advance(digits, static_cast<int>(palette.size())));
    return spaces;
}

std::vector<Counterexample> find_counterexamples_serial(const SearchConfig& config) {
    if (config.max_results <= 0) return {};
    std::vector<Counterexample> results;
    for (const FiniteSpace& space : enumerate_spaces(config.n, config.palette, config.canonical)) {
        // Every finite semimetric has a finite minimal strong-b constant,
        // so the require_strong_b filter never rejects a space here.
        for (auto& ce : search_space(space, config)) {
            results.push_back(std::move(ce));
            if (static_cast<long>(results.size()) >= config.max_results) return results;
        }
    }
    return results;
}

std::vector<Counterexample> find_counterexamples(const SearchConfig& config) {
    if (config.max_results <= 0) return {};
    std::vector<FiniteSpace> spaces =
        enumerate_spaces(config.n, config.palette, config.canonical);
    const int count = static_cast<int>(spaces.size());
    std::vector<std::vector<Counterexample>> per_space(count);

#pragma omp parallel for schedule(dynamic)
    for (int s = 0; s < count; ++s) {
        per_space[s] = search_space(spaces[s], config);
    }

    // Merge partitions in enumeration order: identical output to the
    // serial reference.
    std::vector<Counterexample> results;
    for (auto& part : per_space) {
        for (auto& ce : part) {
            if (static_cast<long>(results.size()) >= config.max_results) return results;
            results.push_back(std::move(ce));
        }
    }
    return results;
}

bool reverify(const Counterexample& ce) {
    HypothesisReport replay = check_hypotheses(ce.space, ce.map, ce.x0, ce.r, ce.k);
    return replay.all_hold && replay.fixed_points.empty() &&
           fixed_points(ce.space, ce.map).empty();
}

}  // namespace bmetric
