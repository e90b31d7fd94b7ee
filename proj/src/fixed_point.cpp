#include "bmetric/fixed_point.hpp"

#include "bmetric/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace bmetric {

SetValuedMap::SetValuedMap(std::vector<std::vector<int>> targets) : targets_(std::move(targets)) {
    for (std::size_t x = 0; x < targets_.size(); ++x) {
        auto& t = targets_[x];
        if (t.empty()) {
            throw std::invalid_argument("target set of point " + std::to_string(x) +
                                        " is empty");
        }
        std::sort(t.begin(), t.end());
        t.erase(std::unique(t.begin(), t.end()), t.end());
        for (int p : t) {
            if (p < 0 || p >= static_cast<int>(targets_.size())) {
                throw std::invalid_argument("target point index out of range");
            }
        }
    }
}

SetValuedMap SetValuedMap::single_valued(const std::vector<int>& image) {
    std::vector<std::vector<int>> targets;
    targets.reserve(image.size());
    for (int p : image) targets.push_back({p});
    return SetValuedMap(std::move(targets));
}

bool SetValuedMap::is_single_valued() const {
    return std::all_of(targets_.begin(), targets_.end(),
                       [](const auto& t) { return t.size() == 1; });
}

SetValuedMap SetValuedMap::permuted(const std::vector<int>& perm) const {
    const int n = size();
    std::vector<int> inverse(n);
    for (int i = 0; i < n; ++i) inverse[perm[i]] = i;
    std::vector<std::vector<int>> targets(n);
    for (int i = 0; i < n; ++i) {
        for (int p : targets_[perm[i]]) targets[i].push_back(inverse[p]);
    }
    return SetValuedMap(std::move(targets));
}

HypothesisReport check_hypotheses(const FiniteSpace& space, const SetValuedMap& T, int x0,
                                  const Rational& r, const Rational& k) {
    if (k < 0 || k >= 1) throw InvalidKError(format_rational(k));
    if (r <= 0) throw InvalidRadiusError(format_rational(r));
    if (T.size() != space.size()) throw std::invalid_argument("map size does not match space");

    HypothesisReport report;
    report.x0 = x0;
    report.r = r;
    report.k = k;
    report.ball_points = ball(space, x0, r);
    report.cond1_lhs = dist_point_set(space, x0, T.target(x0));
    report.cond1_rhs = r * (1 - k);
    report.cond1_holds = report.cond1_lhs < report.cond1_rhs;

    const auto& B = report.ball_points;
    bool cond2_all = true;
    for (int x : B) {
        std::vector<int> tx_in_ball;
        std::set_intersection(T.target(x).begin(), T.target(x).end(), B.begin(), B.end(),
                              std::back_inserter(tx_in_ball));
        for (int y : B) {
            if (tx_in_ball.empty()) {
                report.vacuous_pairs.emplace_back(x, y);
                continue;
            }
            Cond2Entry entry;
            entry.x = x;
            entry.y = y;
            entry.tx_in_ball = tx_in_ball;
            entry.delta = delta_set_set(space, tx_in_ball, T.target(y));
            entry.bound = k * space.dist(x, y);
            entry.holds = entry.delta <= entry.bound;
            cond2_all = cond2_all && entry.holds;
            report.cond2_checks.push_back(std::move(entry));
        }
    }
    report.all_hold = report.cond1_holds && cond2_all;
    report.fixed_points = fixed_points(space, T);
    return report;
}

std::vector<int> fixed_points(const FiniteSpace& space, const SetValuedMap& T) {
    if (T.size() != space.size()) throw std::invalid_argument("map size does not match space");
    std::vector<int> result;
    for (int x = 0; x < T.size(); ++x) {
        const auto& t = T.target(x);
        if (std::binary_search(t.begin(), t.end(), x)) result.push_back(x);
    }
    return result;
}

PicardTrajectory picard_trajectory(const FiniteSpace& space, const SetValuedMap& T, int x0,
                                   int max_steps) {
    if (max_steps < 1) throw std::invalid_argument("max_steps must be >= 1");
    for (int x = 0; x < T.size(); ++x) {
        if (T.target(x).size() != 1) throw NotSingleValuedError(x);
    }
    PicardTrajectory traj;
    traj.points.push_back(x0);
    std::vector<int> first_seen(space.size(), -1);
    first_seen[x0] = 0;
    int current = x0;
    for (int step = 0; step < max_steps; ++step) {
        int next = T.target(current).front();
        if (next == current) {
            traj.outcome = PicardFixedPoint{current};
            return traj;
        }
        traj.step_distances.push_back(space.dist(current, next));
        traj.points.push_back(next);
        if (first_seen[next] >= 0) {
            traj.outcome = PicardCycle{static_cast<int>(traj.points.size()) - 1 - first_seen[next]};
            return traj;
        }
        first_seen[next] = static_cast<int>(traj.points.size()) - 1;
        current = next;
    }
    traj.outcome = PicardExhausted{};
    return traj;
}

}  // namespace bmetric
