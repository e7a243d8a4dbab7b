#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace spexlin {

/// One evaluated inequality: the bound's value, the measured quantity it
/// constrains (when an instance was supplied), whether the hypothesis held,
/// and the comparison verdict.
///
/// direction upper: satisfied <=> measured <= bound_value + tol,
///                  slack = bound_value - measured;
/// direction lower: satisfied <=> measured >= bound_value - tol,
///                  slack = measured - bound_value.
/// Reports without a measured value are evaluations only; satisfied stays
/// true and slack unset.
struct BoundReport {
    enum class Direction { upper, lower };

    std::string name;
    std::vector<std::pair<std::string, double>> params;  // echoed inputs, insertion order
    double bound_value = 0.0;
    std::optional<double> measured;
    std::optional<bool> hypothesis_ok;  // unset when the hypothesis is undefined
    bool satisfied = true;
    std::optional<double> slack;
    Direction direction = Direction::upper;
    double tolerance = 0.0;

    /// Fills measured/satisfied/slack against the recorded direction.
    BoundReport& with_measured(double value, double tol) {
        measured = value;
        tolerance = tol;
        if (direction == Direction::upper) {
            satisfied = value <= bound_value + tol;
            slack = bound_value - value;
        } else {
            satisfied = value >= bound_value - tol;
            slack = value - bound_value;
        }
        return *this;
    }
};

}  // namespace spexlin
