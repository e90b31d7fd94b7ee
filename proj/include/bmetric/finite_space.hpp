#ifndef BMETRIC_FINITE_SPACE_HPP
#define BMETRIC_FINITE_SPACE_HPP

#include "bmetric/rational.hpp"

#include <string>
#include <vector>

namespace bmetric {

using Matrix = std::vector<std::vector<Rational>>;

enum class SpaceErrorKind {
    NonSquare,
    AsymmetricEntry,
    NonzeroDiagonal,
    ZeroOffDiagonal,
    NegativeEntry,
};

struct SpaceError {
    SpaceErrorKind kind;
    int i = -1;
    int j = -1;

    std::string to_string() const;
    bool operator==(const SpaceError&) const = default;
};

// A finite semimetric space: point labels plus an exact symmetric distance
// matrix with zero diagonal and positive off-diagonal entries. Instances
// only come out of validate(), so the axioms always hold. Immutable.
class FiniteSpace {
public:
    // Checks the semimetric axioms; on failure reports every violation
    // with witness indices. Labels default to "1".."n" when empty.
    static std::vector<SpaceError> validate(const Matrix& matrix);

    FiniteSpace(std::vector<std::string> labels, Matrix matrix);

    int size() const { return static_cast<int>(matrix_.size()); }
    const Rational& dist(int i, int j) const { return matrix_[i][j]; }
    const Matrix& matrix() const { return matrix_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int i) const { return labels_[i]; }

    // Relabels points by a permutation: point i of the result is point
    // perm[i] of this space.
    FiniteSpace permuted(const std::vector<int>& perm) const;

    bool operator==(const FiniteSpace& other) const {
        return matrix_ == other.matrix_;
    }

private:
    std::vector<std::string> labels_;
    Matrix matrix_;
};

std::vector<std::string> default_labels(int n);

}  // namespace bmetric

#endif
