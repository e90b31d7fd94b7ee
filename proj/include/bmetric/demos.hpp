#ifndef BMETRIC_DEMOS_HPP
#define BMETRIC_DEMOS_HPP

#include "bmetric/finite_space.hpp"
#include "bmetric/fixed_point.hpp"

namespace bmetric {

// The 3-point strong b-metric space with D(1,2) = 2, D(2,3) = 1,
// D(1,3) = 6. Compiled-in so the golden data cannot drift.
FiniteSpace example21_space();

// The fixed-point-free cycle 1 -> 2 -> 3 -> 1 on that space.
SetValuedMap example21_map();

struct Example21Params {
    int x0;      // index of point "1"
    Rational r;  // 6
    Rational k;  // 1/2
};
Example21Params example21_params();

}  // namespace bmetric

#endif
