#ifndef BMETRIC_PRESENTATION_HPP
#define BMETRIC_PRESENTATION_HPP

#include "bmetric/finite_space.hpp"
#include "bmetric/rational.hpp"

#include <functional>
#include <memory>
#include <string>

namespace bmetric {

enum class SpaceClass { StrongB, PlainB };

// A computably-presented distance space: a countable point universe
// (points are rationals; finite spaces use their indices), an exact
// distance oracle, and the relaxation constant. The oracle must be pure
// and re-entrant.
struct SpacePresentation {
    std::string name;
    Rational K;
    SpaceClass cls;
    std::function<Rational(const Rational&, const Rational&)> dist;
};

using PresentationPtr = std::shared_ptr<const SpacePresentation>;

// The rationals with |x - y|, K = 1.
PresentationPtr rationals_abs();

// X = {0, 1, 1/2, 1/3, ...} with the four-case b-metric distance and
// K = 8/3. A plain b-metric: its completion formula is ill-defined.
PresentationPtr example3_presentation();

// Lifts a finite space: points are the indices 0..n-1.
PresentationPtr lift_finite(const FiniteSpace& space);

}  // namespace bmetric

#endif
