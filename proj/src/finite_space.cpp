#include "bmetric/finite_space.hpp"

#include <stdexcept>

namespace bmetric {

std::string SpaceError::to_string() const {
    switch (kind) {
        case SpaceErrorKind::NonSquare:
            return "NonSquare: matrix is not n x n";
        case SpaceErrorKind::AsymmetricEntry:
            return "AsymmetricEntry(" + std::to_string(i) + "," + std::to_string(j) + ")";
        case SpaceErrorKind::NonzeroDiagonal:
            return "NonzeroDiagonal(" + std::to_string(i) + ")";
        case SpaceErrorKind::ZeroOffDiagonal:
            return "ZeroOffDiagonal(" + std::to_string(i) + "," + std::to_string(j) + ")";
        case SpaceErrorKind::NegativeEntry:
            return "NegativeEntry(" + std::to_string(i) + "," + std::to_string(j) + ")";
    }
    return "UnknownError";
}

std::vector<SpaceError> FiniteSpace::validate(const Matrix& matrix) {
    std::vector<SpaceError> errors;
    const int n = static_cast<int>(matrix.size());
    for (const auto& row : matrix) {
        if (static_cast<int>(row.size()) != n) {
            errors.push_back({SpaceErrorKind::NonSquare});
            return errors;
        }
    }
    for (int i = 0; i < n; ++i) {
        if (matrix[i][i] != 0) {
            errors.push_back({SpaceErrorKind::NonzeroDiagonal, i, i});
        }
        for (int j = 0; j < n; ++j) {
            if (matrix[i][j] < 0) {
                errors.push_back({SpaceErrorKind::NegativeEntry, i, j});
            }
            if (i < j) {
                if (matrix[i][j] != matrix[j][i]) {
                    errors.push_back({SpaceErrorKind::AsymmetricEntry, i, j});
                }
                if (matrix[i][j] == 0) {
                    errors.push_back({SpaceErrorKind::ZeroOffDiagonal, i, j});
                }
            }
        }
    }
    return errors;
}

FiniteSpace::FiniteSpace(std::vector<std::string> labels, Matrix matrix)
    : labels_(std::move(labels)), matrix_(std::move(matrix)) {
    if (labels_.empty()) labels_ = default_labels(static_cast<int>(matrix_.size()));
    if (labels_.size() != matrix_.size()) {
        throw std::invalid_argument("label count does not match matrix size");
    }
    auto errors = validate(matrix_);
    if (!errors.empty()) {
        throw std::invalid_argument("invalid distance matrix: " + errors.front().to_string());
    }
}

FiniteSpace FiniteSpace::permuted(const std::vector<int>& perm) const {
    const int n = size();
    std::vector<std::string> labels(n);
    Matrix m(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i) {
        labels[i] = labels_[perm[i]];
        for (int j = 0; j < n; ++j) {
            m[i][j] = matrix_[perm[i]][perm[j]];
        }
    }
    return FiniteSpace(std::move(labels), std::move(m));
}

std::vector<std::string> default_labels(int n) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
    return labels;
}

}  // namespace bmetric
