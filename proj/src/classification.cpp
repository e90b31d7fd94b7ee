#include "bmetric/classification.hpp"

#include "bmetric/errors.hpp"

#include <algorithm>

namespace bmetric {

Rational min_b_constant(const FiniteSpace& space) {
    const int n = space.size();
    Rational best = 1;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                Rational denom = space.dist(x, y) + space.dist(y, z);
                if (denom == 0) continue;
                Rational ratio = space.dist(x, z) / denom;
                if (ratio > best) best = ratio;
            }
    return best;
}

Rational min_strong_b_constant(const FiniteSpace& space) {
    const int n = space.size();
    Rational best = 1;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                const Rational& dyz = space.dist(y, z);
                if (dyz == 0) continue;  // tautological instance
                Rational ratio = (space.dist(x, z) - space.dist(x, y)) / dyz;
                if (ratio > best) best = ratio;
            }
    return best;
}

Matrix shortest_paths(const FiniteSpace& space) {
    const int n = space.size();
    Matrix sp = space.matrix();
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Rational via = sp[i][k] + sp[k][j];
                if (via < sp[i][j]) sp[i][j] = via;
            }
    return sp;
}

Rational min_metric_type_constant(const FiniteSpace& space) {
    const int n = space.size();
    Matrix sp = shortest_paths(space);
    Rational best = 1;
    for (int x = 0; x < n; ++x)
        for (int z = 0; z < n; ++z) {
            if (x == z) continue;
            Rational ratio = space.dist(x, z) / sp[x][z];
            if (ratio > best) best = ratio;
        }
    return best;
}

ClassificationReport classify(const FiniteSpace& space) {
    ClassificationReport report;
    report.is_semimetric = true;
    report.min_b_constant = min_b_constant(space);
    report.min_strong_b_constant = min_strong_b_constant(space);
    report.min_metric_type_constant = min_metric_type_constant(space);
    report.is_metric = report.min_strong_b_constant == 1;
    const int n = space.size();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                Rational lhs = space.dist(x, z);
                Rational rhs = space.dist(x, y) + space.dist(y, z);
                if (lhs > rhs) report.violations.push_back({x, y, z, lhs, rhs});
            }
    return report;
}

std::optional<TripleInstance> check_b_inequality(const FiniteSpace& space, const Rational& K) {
    const int n = space.size();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                Rational lhs = space.dist(x, z);
                Rational rhs = K * (space.dist(x, y) + space.dist(y, z));
                if (lhs > rhs) return TripleInstance{x, y, z, lhs, rhs};
            }
    return std::nullopt;
}

std::optional<TripleInstance> check_strong_b_inequality(const FiniteSpace& space,
                                                        const Rational& K) {
    const int n = space.size();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                Rational lhs = space.dist(x, z);
                Rational rhs = space.dist(x, y) + K * space.dist(y, z);
                if (lhs > rhs) return TripleInstance{x, y, z, lhs, rhs};
            }
    return std::nullopt;
}

std::optional<TripleInstance> check_metric_type_inequality(const FiniteSpace& space,
                                                           const Rational& K) {
    const int n = space.size();
    Matrix sp = shortest_paths(space);
    for (int x = 0; x < n; ++x)
        for (int z = 0; z < n; ++z) {
            if (x == z) continue;
            Rational lhs = space.dist(x, z);
            Rational rhs = K * sp[x][z];
            if (lhs > rhs) return TripleInstance{x, -1, z, lhs, rhs};
        }
    return std::nullopt;
}

std::vector<TripleInstance> strong_b_trace(const FiniteSpace& space, const Rational& K) {
    const int n = space.size();
    std::vector<TripleInstance> trace;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                if (x == y || y == z || x == z) continue;
                Rational lhs = space.dist(x, z);
                Rational rhs = space.dist(x, y) + K * space.dist(y, z);
                trace.push_back({x, y, z, lhs, rhs});
            }
    return trace;
}

std::vector<int> ball(const FiniteSpace& space, int center, const Rational& radius) {
    std::vector<int> points;
    for (int i = 0; i < space.size(); ++i) {
        if (space.dist(center, i) < radius) points.push_back(i);
    }
    return points;
}

Rational dist_point_set(const FiniteSpace& space, int x, const std::vector<int>& A) {
    if (A.empty()) throw EmptySetError();
    Rational best = space.dist(x, A.front());
    for (int a : A) best = std::min(best, space.dist(x, a));
    return best;
}

Rational delta_set_set(const FiniteSpace& space, const std::vector<int>& A,
                       const std::vector<int>& B) {
    if (A.empty() || B.empty()) throw EmptySetError();
    Rational best = 0;
    for (int x : B) best = std::max(best, dist_point_set(space, x, A));
    return best;
}

std::vector<OpennessWitness> ball_openness_certificate(const FiniteSpace& space,
                                                       const Rational& K, int center,
                                                       const Rational& radius) {
    if (min_strong_b_constant(space) > K) throw NotStrongBError(format_rational(K));
    std::vector<int> outer = ball(space, center, radius);
    std::vector<OpennessWitness> witnesses;
    for (int y : outer) {
        Rational ry = (radius - space.dist(center, y)) / K;
        std::vector<int> inner = ball(space, y, ry);
        for (int p : inner) {
            if (!std::binary_search(outer.begin(), outer.end(), p)) {
                // The strong b-inequality guarantees inclusion; reaching
                // here would falsify the K certificate.
                throw NotStrongBError(format_rational(K));
            }
        }
        witnesses.push_back({y, ry, std::move(inner)});
    }
    return witnesses;
}

}  // namespace bmetric
