#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <memory>
#include <span>
#include <vector>

#include "degenlab/geometry.hpp"

namespace degenlab {

/// Marks nodes a monitor did not evaluate (face, boundary, missing stencil).
inline constexpr double kNotEvaluated = std::numeric_limits<double>::quiet_NaN();
inline bool is_evaluated(double v) { return !std::isnan(v); }

/// Scalar values on all grid nodes across all stored time levels.
/// Solver outputs are finite everywhere; monitor fields may carry the
/// not-evaluated sentinel at excluded nodes.
class SpaceTimeField {
public:
    explicit SpaceTimeField(std::shared_ptr<const Grid> grid, double fill = 0.0);

    const Grid& grid() const { return *grid_; }
    std::shared_ptr<const Grid> grid_ptr() const { return grid_; }

    double& at(std::int64_t node, int level) { return values_[idx(node, level)]; }
    double at(std::int64_t node, int level) const { return values_[idx(node, level)]; }

    std::span<double> level_values(int level);
    std::span<const double> level_values(int level) const;

    std::int64_t size() const { return static_cast<std::int64_t>(values_.size()); }
    std::span<const double> raw() const { return values_; }
    std::span<double> raw() { return values_; }

    bool all_finite() const;

    /// Fills every node at every level from fn(point, time).
    void fill_from(const std::function<double(const Point&, double)>& fn);

private:
    std::int64_t idx(std::int64_t node, int level) const {
        return static_cast<std::int64_t>(level) * grid_->n_spatial_nodes() + node;
    }

    std::shared_ptr<const Grid> grid_;
    std::vector<double> values_;
};

/// Field sampled from a closed form, the manufactured-solution entry point.
SpaceTimeField sample_field(std::shared_ptr<const Grid> grid,
                            const std::function<double(const Point&, double)>& fn);

/// Max-norm of the difference against a closed form over one time level
/// (sentinel nodes skipped).
double linf_error_at_level(const SpaceTimeField& field, int level,
                           const std::function<double(const Point&, double)>& exact);

} // namespace degenlab
