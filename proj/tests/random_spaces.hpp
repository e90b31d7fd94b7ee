#ifndef BMETRIC_TESTS_RANDOM_SPACES_HPP
#define BMETRIC_TESTS_RANDOM_SPACES_HPP

#include "bmetric/finite_space.hpp"

#include <random>
#include <vector>

namespace bmetric::testing {

// Random semimetric with off-diagonal distances from the palette.
inline FiniteSpace random_space(std::mt19937& rng, int n, const std::vector<Rational>& palette) {
    std::uniform_int_distribution<std::size_t> pick(0, palette.size() - 1);
    Matrix m(n, std::vector<Rational>(n, Rational(0)));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            m[i][j] = palette[pick(rng)];
            m[j][i] = m[i][j];
        }
    return FiniteSpace({}, std::move(m));
}

inline std::vector<Rational> small_palette() {
    return {Rational(1), Rational(2), Rational(3), Rational(6), Rational(1, 2), Rational(5, 3)};
}

inline Rational random_rational(std::mt19937& rng, int num_range = 20, int den_range = 9) {
    std::uniform_int_distribution<int> num(-num_range, num_range);
    std::uniform_int_distribution<int> den(1, den_range);
    return Rational(num(rng), den(rng));
}

}  // namespace bmetric::testing

#endif
