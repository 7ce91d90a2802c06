#pragma once

#include <Eigen/Core>
#include <cstddef>
#include <string>
#include <vector>

#include "coxplain/errors.hpp"

namespace coxplain {

// Right-censored survival data: one row per instance, an observed
// event/censoring time, and an event indicator (1 = event, 0 = censored).
struct SurvivalDataset {
    Eigen::MatrixXd features;  // n x d
    Eigen::VectorXd times;     // n, nonnegative
    Eigen::VectorXi events;    // n, values in {0, 1}
    std::vector<std::string> feature_names;  // d labels

    std::size_t n_rows() const { return static_cast<std::size_t>(features.rows()); }
    std::size_t n_features() const { return static_cast<std::size_t>(features.cols()); }
    std::size_t n_events() const;

    // Checks shape consistency, finiteness, indicator values and time signs.
    // Throws Error subclasses on violation.
    void validate() const;

    // Row subset (copying), preserving order of `rows`.
    SurvivalDataset subset(const std::vector<int>& rows) const;
};

// Sorted distinct observed event times t_0 < ... < t_m plus a horizon T >= t_m.
// The grid induces m+1 intervals: [t_j, t_{j+1}) for j < m and [t_m, T].
struct TimeGrid {
    std::vector<double> knots;
    double horizon = 0.0;

    std::size_t n_intervals() const { return knots.size(); }

    // Length of interval j (the last one runs to the horizon).
    double interval_length(std::size_t j) const {
        return (j + 1 < knots.size()) ? knots[j + 1] - knots[j] : horizon - knots.back();
    }

    // Index of the interval containing t; t below the first knot maps to 0,
    // t at or past the last knot maps to the final interval.
    std::size_t interval_index(double t) const;

    bool operator==(const TimeGrid& other) const = default;
};

// Piecewise-constant function on a TimeGrid: values[j] is the constant on
// interval j. Used both for cumulative hazards and for survival curves.
struct StepFunction {
    TimeGrid grid;
    std::vector<double> values;

    double value_at(double t) const { return values.at(grid.interval_index(t)); }

    // CHF invariants: nonnegative and non-decreasing.
    bool is_valid_chf() const;
    // SF invariants: values in (0, 1] and non-increasing.
    bool is_valid_sf() const;

    bool operator==(const StepFunction& other) const = default;
};

// Distinct observed event times of `dataset`, horizon = factor * last knot.
// Throws NoEventsError when every instance is censored.
TimeGrid build_time_grid(const SurvivalDataset& dataset, double horizon_factor = 1.0);

// Nelson-Aalen estimate of the cumulative hazard on `grid`:
// H(t) = sum over knots t_j <= t of d_j / n_j with d_j the event count at t_j
// and n_j the number still at risk. Knots absent from `dataset` contribute 0.
StepFunction nelson_aalen(const SurvivalDataset& dataset, const TimeGrid& grid);

// S = exp(-H). Throws InvalidChfError when `chf` is not a valid CHF.
StepFunction chf_to_sf(const StepFunction& chf);

// Harrell's concordance index. A pair (i, j) is comparable when the earlier
// member i has an observed event and T_i < T_j; concordant when
// score_i > score_j, tied scores count 0.5.
double concordance_index(const Eigen::VectorXd& risk_scores, const SurvivalDataset& dataset);

// Kaplan-Meier product-limit estimate of the survival function. A zero value
// at the last event is clamped to kSfFloor so diagnostics can take logs.
inline constexpr double kSfFloor = 1e-12;
StepFunction kaplan_meier(const SurvivalDataset& dataset, const TimeGrid& grid);

}  // namespace coxplain
