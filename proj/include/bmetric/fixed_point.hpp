#ifndef BMETRIC_FIXED_POINT_HPP
#define BMETRIC_FIXED_POINT_HPP

#include "bmetric/classification.hpp"
#include "bmetric/finite_space.hpp"

#include <variant>
#include <vector>

namespace bmetric {

// Set-valued self-map: one nonempty target set per point. Single-valued
// maps are singleton sets.
class SetValuedMap {
public:
    explicit SetValuedMap(std::vector<std::vector<int>> targets);

    // Single-valued map from an image list: point i maps to {image[i]}.
    static SetValuedMap single_valued(const std::vector<int>& image);

    int size() const { return static_cast<int>(targets_.size()); }
    const std::vector<int>& target(int x) const { return targets_[x]; }
    const std::vector<std::vector<int>>& targets() const { return targets_; }
    bool is_single_valued() const;

    SetValuedMap permuted(const std::vector<int>& perm) const;

    bool operator==(const SetValuedMap&) const = default;

private:
    std::vector<std::vector<int>> targets_;  // each sorted, nonempty
};

struct Cond2Entry {
    int x, y;
    std::vector<int> tx_in_ball;  // Tx intersected with B(x0, r), nonempty
    Rational delta;               // delta(Tx cap B, Ty)
    Rational bound;               // k * D(x, y)
    bool holds;
};

struct HypothesisReport {
    int x0;
    Rational r;
    Rational k;
    std::vector<int> ball_points;
    Rational cond1_lhs;  // dist(x0, Tx0)
    Rational cond1_rhs;  // r (1 - k)
    bool cond1_holds;
    std::vector<Cond2Entry> cond2_checks;
    // Pairs (x, y) in the ball with Tx cap B empty: satisfied vacuously.
    std::vector<std::pair<int, int>> vacuous_pairs;
    bool all_hold;
    std::vector<int> fixed_points;
};

// Evaluates both hypotheses of the Dontchev-Hager-type fixed point
// question on a concrete space and map: (1) dist(x0, Tx0) < r(1-k) and
// (2) delta(Tx cap B(x0,r), Ty) <= k D(x,y) for every ordered pair in the
// ball with nonempty intersection. Throws InvalidKError / InvalidRadiusError.
HypothesisReport check_hypotheses(const FiniteSpace& space, const SetValuedMap& T, int x0,
                                  const Rational& r, const Rational& k);

// { x : x in T(x) }
std::vector<int> fixed_points(const FiniteSpace& space, const SetValuedMap& T);

struct PicardFixedPoint {
    int point;
};
struct PicardCycle {
    int period;
};
struct PicardExhausted {};
using PicardOutcome = std::variant<PicardFixedPoint, PicardCycle, PicardExhausted>;

struct PicardTrajectory {
    std::vector<int> points;
    std::vector<Rational> step_distances;  // D(x_n, x_{n+1})
    PicardOutcome outcome;
};

// Iterates x_{n+1} = T(x_n) for a single-valued map. On a finite space
// this ends in a fixed point or a cycle within n steps. Throws
// NotSingleValuedError.
PicardTrajectory picard_trajectory(const FiniteSpace& space, const SetValuedMap& T, int x0,
                                   int max_steps);

}  // namespace bmetric

#endif
