#include "bmetric/demos.hpp"

namespace bmetric {

FiniteSpace example21_space() {
    Matrix m = {
        {0, 2, 6},
        {2, 0, 1},
        {6, 1, 0},
    };
    return FiniteSpace({"1", "2", "3"}, std::move(m));
}

SetValuedMap example21_map() {
    // T1 = 2, T2 = 3, T3 = 1
    return SetValuedMap::single_valued({1, 2, 0});
}

Example21Params example21_params() { return {0, Rational(6), Rational(1, 2)}; }

}  // namespace bmetric
