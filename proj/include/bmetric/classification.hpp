#ifndef BMETRIC_CLASSIFICATION_HPP
#define BMETRIC_CLASSIFICATION_HPP

#include "bmetric/finite_space.hpp"

#include <optional>
#include <vector>

namespace bmetric {

// One inequality instance over an ordered triple, with both sides evaluated.
struct TripleInstance {
    int x, y, z;
    Rational lhs;
    Rational rhs;
    bool holds() const { return lhs <= rhs; }
    bool tight() const { return lhs == rhs; }
};

struct ClassificationReport {
    bool is_semimetric = false;
    std::vector<SpaceError> axiom_errors;  // nonempty iff !is_semimetric
    Rational min_b_constant;
    Rational min_strong_b_constant;
    Rational min_metric_type_constant;
    bool is_metric = false;
    // Triangle-inequality violations: D(x,z) > D(x,y) + D(y,z).
    std::vector<TripleInstance> violations;
};

// Least K >= 1 with D(x,z) <= K [D(x,y) + D(y,z)] over all ordered triples.
Rational min_b_constant(const FiniteSpace& space);

// Least K >= 1 with D(x,z) <= D(x,y) + K D(y,z). The inequality is not
// symmetric in the triple, so every ordered triple is scanned.
Rational min_strong_b_constant(const FiniteSpace& space);

// Least K >= 1 with D(x,z) <= K [D(x,y1) + ... + D(yn,z)] over every chain.
// The binding chain is the minimal-sum one, so this reduces to exact
// all-pairs shortest paths over the complete weighted graph.
Rational min_metric_type_constant(const FiniteSpace& space);

// Exact all-pairs shortest path distances with edge weights D.
Matrix shortest_paths(const FiniteSpace& space);

ClassificationReport classify(const FiniteSpace& space);

// Re-check a candidate constant against every instance; returns the first
// failing instance if any. Used for minimality witnesses.
std::optional<TripleInstance> check_b_inequality(const FiniteSpace& space, const Rational& K);
std::optional<TripleInstance> check_strong_b_inequality(const FiniteSpace& space, const Rational& K);
std::optional<TripleInstance> check_metric_type_inequality(const FiniteSpace& space, const Rational& K);

// Every ordered-triple instance of D(x,z) <= D(x,y) + K D(y,z) with
// distinct points, both sides evaluated. The verification trace behind a
// strong b-metric claim.
std::vector<TripleInstance> strong_b_trace(const FiniteSpace& space, const Rational& K);

// Points strictly within `radius` of `center`; always contains the center.
std::vector<int> ball(const FiniteSpace& space, int center, const Rational& radius);

// min over a in A of D(x,a). Throws EmptySetError on empty A.
Rational dist_point_set(const FiniteSpace& space, int x, const std::vector<int>& A);

// max over x in B of dist(x, A). Note the asymmetry: dist is taken to the
// first argument, the sup runs over the second.
Rational delta_set_set(const FiniteSpace& space, const std::vector<int>& A,
                       const std::vector<int>& B);

struct OpennessWitness {
    int point;
    Rational inner_radius;
    std::vector<int> inner_ball;  // verified subset of the outer ball
};

// For each y in B(center, radius) of a strong b-metric space with constant
// K, the inner radius (radius - D(center,y)) / K whose ball stays inside;
// each inclusion is verified by enumeration. Throws NotStrongBError when
// min_strong_b_constant(space) > K.
std::vector<OpennessWitness> ball_openness_certificate(const FiniteSpace& space,
                                                       const Rational& K, int center,
                                                       const Rational& radius);

}  // namespace bmetric

#endif
