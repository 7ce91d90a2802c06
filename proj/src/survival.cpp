#include "coxplain/survival.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace coxplain {

std::size_t SurvivalDataset::n_events() const {
    std::size_t c = 0;
    for (Eigen::Index i = 0; i < events.size(); ++i) c += events[i] == 1;
    return c;
}

void SurvivalDataset::validate() const {
    const Eigen::Index n = features.rows();
    if (n < 1) throw EmptyInputError("dataset has no rows");
    if (times.size() != n || events.size() != n)
        throw DimensionMismatchError("times/events length does not match feature rows");
    if (!features.allFinite()) throw Error("non-finite feature value");
    for (Eigen::Index i = 0; i < n; ++i) {
        if (!std::isfinite(times[i]) || times[i] < 0.0)
            throw Error("time must be finite and nonnegative");
        if (events[i] != 0 && events[i] != 1) throw Error("event indicator must be 0 or 1");
    }
    if (static_cast<Eigen::Index>(feature_names.size()) != features.cols())
        throw DimensionMismatchError("feature_names length does not match columns");
}

SurvivalDataset SurvivalDataset::subset(const std::vector<int>& rows) const {
    SurvivalDataset out;
    out.features.resize(static_cast<Eigen::Index>(rows.size()), features.cols());
    out.times.resize(static_cast<Eigen::Index>(rows.size()));
    out.events.resize(static_cast<Eigen::Index>(rows.size()));
    for (std::size_t k = 0; k < rows.size(); ++k) {
        out.features.row(static_cast<Eigen::Index>(k)) = features.row(rows[k]);
        out.times[static_cast<Eigen::Index>(k)] = times[rows[k]];
        out.events[static_cast<Eigen::Index>(k)] = events[rows[k]];
    }
    out.feature_names = feature_names;
    return out;
}

std::size_t TimeGrid::interval_index(double t) const {
    // first knot strictly greater than t, minus one
    auto it = std::upper_bound(knots.begin(), knots.end(), t);
    if (it == knots.begin()) return 0;
    return static_cast<std::size_t>(it - knots.begin()) - 1;
}

bool StepFunction::is_valid_chf() const {
    if (values.size() != grid.n_intervals()) return false;
    double prev = 0.0;
    for (double v : values) {
        if (!std::isfinite(v) || v < 0.0 || v < prev) return false;
        prev = v;
    }
    return true;
}

bool StepFunction::is_valid_sf() const {
    if (values.size() != grid.n_intervals()) return false;
    double prev = 1.0;
    for (double v : values) {
        if (!std::isfinite(v) || v <= 0.0 || v > prev) return false;
        prev = v;
    }
    return true;
}

TimeGrid build_time_grid(const SurvivalDataset& dataset, double horizon_factor) {
    if (horizon_factor < 1.0) throw Error("horizon_factor must be >= 1");
    std::vector<double> knots;
    for (Eigen::Index i = 0; i < dataset.times.size(); ++i)
        if (dataset.events[i] == 1) knots.push_back(dataset.times[i]);
    if (knots.empty()) throw NoEventsError("all instances are censored");
    std::sort(knots.begin(), knots.end());
    knots.erase(std::unique(knots.begin(), knots.end()), knots.end());
    TimeGrid grid;
    grid.horizon = horizon_factor * knots.back();
    grid.knots = std::move(knots);
    return grid;
}

namespace {

// Per-knot event and at-risk counts for `dataset` evaluated on grid knots.
// Knots carrying no in-dataset events get d_j = 0.
void risk_counts(const SurvivalDataset& dataset, const TimeGrid& grid, std::vector<double>& d,
                 std::vector<double>& n_at_risk) {
    const std::size_t m1 = grid.knots.size();
    d.assign(m1, 0.0);
    n_at_risk.assign(m1, 0.0);
    std::vector<double> sorted_times(dataset.times.data(), dataset.times.data() + dataset.times.size());
    std::sort(sorted_times.begin(), sorted_times.end());
    for (std::size_t j = 0; j < m1; ++j) {
        auto it = std::lower_bound(sorted_times.begin(), sorted_times.end(), grid.knots[j]);
        n_at_risk[j] = static_cast<double>(sorted_times.end() - it);
    }
    for (Eigen::Index i = 0; i < dataset.times.size(); ++i) {
        if (dataset.events[i] != 1) continue;
        auto it = std::lower_bound(grid.knots.begin(), grid.knots.end(), dataset.times[i]);
        if (it != grid.knots.end() && *it == dataset.times[i])
            d[static_cast<std::size_t>(it - grid.knots.begin())] += 1.0;
    }
}

}  // namespace

StepFunction nelson_aalen(const SurvivalDataset& dataset, const TimeGrid& grid) {
    if (dataset.n_events() == 0) throw NoEventsError("all instances are censored");
    std::vector<double> d, n_at_risk;
    risk_counts(dataset, grid, d, n_at_risk);
    StepFunction out;
    out.grid = grid;
    out.values.resize(grid.n_intervals());
    double acc = 0.0;
    for (std::size_t j = 0; j < grid.n_intervals(); ++j) {
        if (d[j] > 0.0) acc += d[j] / n_at_risk[j];
        out.values[j] = acc;
    }
    return out;
}

StepFunction chf_to_sf(const StepFunction& chf) {
    if (!chf.is_valid_chf()) throw InvalidChfError("input is not a valid CHF");
    StepFunction out;
    out.grid = chf.grid;
    out.values.resize(chf.values.size());
    for (std::size_t j = 0; j < chf.values.size(); ++j) out.values[j] = std::exp(-chf.values[j]);
    return out;
}

double concordance_index(const Eigen::VectorXd& risk_scores, const SurvivalDataset& dataset) {
    const Eigen::Index n = dataset.times.size();
    if (risk_scores.size() != n)
        throw DimensionMismatchError("risk_scores length does not match dataset");
    double comparable = 0.0, concordant = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        if (dataset.events[i] != 1) continue;
        for (Eigen::Index j = 0; j < n; ++j) {
            if (i == j || dataset.times[i] >= dataset.times[j]) continue;
            comparable += 1.0;
            if (risk_scores[i] > risk_scores[j])
                concordant += 1.0;
            else if (risk_scores[i] == risk_scores[j])
                concordant += 0.5;
        }
    }
    if (comparable == 0.0) throw NoComparablePairsError("no comparable pairs");
    return concordant / comparable;
}

StepFunction kaplan_meier(const SurvivalDataset& dataset, const TimeGrid& grid) {
    if (dataset.n_events() == 0) throw NoEventsError("all instances are censored");
    std::vector<double> d, n_at_risk;
    risk_counts(dataset, grid, d, n_at_risk);
    StepFunction out;
    out.grid = grid;
    out.values.resize(grid.n_intervals());
    double acc = 1.0;
    for (std::size_t j = 0; j < grid.n_intervals(); ++j) {
        if (d[j] > 0.0) acc *= 1.0 - d[j] / n_at_risk[j];
        out.values[j] = std::max(acc, kSfFloor);
    }
    return out;
}

}  // namespace coxplain
