#include "bmetric/presentation.hpp"

#include "bmetric/classification.hpp"

#include <cstdlib>
#include <stdexcept>

namespace bmetric {

namespace {

bool in_zero_one(const Rational& x) { return x == 0 || x == 1; }

// Member of {0} U {1/(2n) : n >= 1}.
bool even_reciprocal(const Rational& x) {
    if (x == 0) return true;
    return numerator(x) == 1 && denominator(x) % 2 == 0;
}

}  // namespace

PresentationPtr rationals_abs() {
    auto p = std::make_shared<SpacePresentation>();
    p->name = "rationals-abs";
    p->K = 1;
    p->cls = SpaceClass::StrongB;
    p->dist = [](const Rational& x, const Rational& y) {
        return x >= y ? Rational(x - y) : Rational(y - x);
    };
    return p;
}

PresentationPtr example3_presentation() {
    auto p = std::make_shared<SpacePresentation>();
    p->name = "example-3";
    p->K = Rational(8, 3);
    p->cls = SpaceClass::PlainB;
    p->dist = [](const Rational& x, const Rational& y) -> Rational {
        if (x == y) return 0;
        if (in_zero_one(x) && in_zero_one(y)) return 1;
        if (even_reciprocal(x) && even_reciprocal(y)) {
            return x >= y ? Rational(x - y) : Rational(y - x);
        }
        return 4;
    };
    return p;
}

PresentationPtr lift_finite(const FiniteSpace& space) {
    auto p = std::make_shared<SpacePresentation>();
    p->name = "finite:" + std::to_string(space.size());
    p->K = min_strong_b_constant(space);
    p->cls = SpaceClass::StrongB;
    auto matrix = space.matrix();
    const int n = space.size();
    p->dist = [matrix, n](const Rational& x, const Rational& y) -> Rational {
        if (denominator(x) != 1 || denominator(y) != 1) {
            throw std::invalid_argument("finite presentation points are integer indices");
        }
        long i = static_cast<long>(numerator(x));
        long j = static_cast<long>(numerator(y));
        if (i < 0 || i >= n || j < 0 || j >= n) {
            throw std::out_of_range("point index outside the finite space");
        }
        return matrix[i][j];
    };
    return p;
}

}  // namespace bmetric
