#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace degenlab {

/// Spatial point on the half-domain. The normal coordinate (distance to the
/// degenerate face) is stored separately from the tangential ones so that a
/// point is meaningful for any spatial dimension 1..3; unused tangential
/// slots stay zero.
struct Point {
    std::array<double, 2> tangential{0.0, 0.0};
    double normal = 0.0;
};

/// Space-time point.
struct Event {
    Point x;
    double t = 0.0;
};

double euclidean_distance(const Point& a, const Point& b);

/// d[(x,t),(y,s)] = |x-y| + |t-s|^{1/(2-gamma)}.
/// This is the metric under which face-pointwise Hoelder regularity is
/// measured; its time exponent exceeds the parabolic 1/2 for gamma in (0,1).
double anisotropic_distance(const Event& p, const Event& q, double gamma);

/// Standard parabolic metric |x-y| + |t-s|^{1/2}.
double parabolic_distance(const Event& p, const Event& q);

/// Tensor-product space-time grid on the half-box
/// (-1,1)^{n-1} x (0,1) x [t_start, 0].
///
/// Tangential axes are uniform on [-1,1]. The normal axis is power-graded,
/// node j at (j/n_normal)^grading_q, so nodes concentrate at the degenerate
/// face x_n = 0. The time axis is uniform on [t_start, 0].
///
/// Spatial node layout: tangential indices outermost, normal index innermost
/// (stride 1), so normal lines are contiguous.
///
/// Immutable after construction; safe for concurrent reads.
class Grid {
public:
    int n_dims() const { return n_dims_; }
    int n_tan() const { return n_tan_; }
    int n_normal() const { return n_normal_; }
    int n_time() const { return n_time_; }
    double grading_q() const { return grading_q_; }
    double gamma() const { return gamma_; }
    double t_start() const { return t_start_; }

    std::span<const double> normal_axis() const { return normal_axis_; }
    std::span<const double> tangential_axis(int axis) const { return tangential_axes_[axis]; }
    std::span<const double> time_axis() const { return time_axis_; }

    int n_tangential_axes() const { return n_dims_ - 1; }
    int n_normal_nodes() const { return static_cast<int>(normal_axis_.size()); }
    int n_tangential_nodes() const { return n_tan_ + 1; }
    std::int64_t n_spatial_nodes() const { return n_spatial_nodes_; }
    int n_levels() const { return n_time_ + 1; }

    double dt() const;
    double time(int level) const { return time_axis_[level]; }
    double tangential_spacing() const;

    /// Strides of the flattened spatial index, normal innermost.
    std::int64_t normal_stride() const { return 1; }
    std::int64_t tangential_stride(int axis) const;

    int normal_index(std::int64_t node) const;
    int tangential_index(std::int64_t node, int axis) const;
    std::int64_t node_at(std::span<const int> tan_indices, int normal_j) const;

    Point node_coord(std::int64_t node) const;

    bool is_face(std::int64_t node) const { return normal_index(node) == 0; }
    /// Spatial boundary other than the face: tangential walls and the top
    /// x_n = 1.
    bool is_lateral(std::int64_t node) const;
    bool is_spatial_boundary(std::int64_t node) const { return is_face(node) || is_lateral(node); }

    /// Serialized description {n_dims, n_tan, n_normal, n_time, grading_q,
    /// gamma, t_start}; node coordinates are derived, never stored.
    std::string to_json() const;
    static std::shared_ptr<const Grid> from_json(const std::string& text);

    friend std::shared_ptr<const Grid> build_grid(int, int, int, int, double, double, double);

private:
    Grid() = default;

    int n_dims_ = 0, n_tan_ = 0, n_normal_ = 0, n_time_ = 0;
    double grading_q_ = 1.0, gamma_ = 0.5, t_start_ = -1.0;
    std::vector<std::vector<double>> tangential_axes_;
    std::vector<double> normal_axis_;
    std::vector<double> time_axis_;
    std::int64_t n_spatial_nodes_ = 0;
};

/// Builds the graded grid; normal node j equals (j/n_normal)^grading_q
/// exactly. Throws std::invalid_argument on gamma outside (0,1), on
/// non-positive sizes, on grading_q < 1 or t_start >= 0.
std::shared_ptr<const Grid> build_grid(int n_dims, int n_tan, int n_normal, int n_time,
                                       double grading_q, double gamma, double t_start);

/// Node set of the scaled parabolic cylinder
/// Q_r^+(x0,t0) = B_r^+(x0) x (t0 - r^{2-gamma}, t0].
/// An empty node set is a valid outcome (degenerate radius), flagged via
/// empty(), not an error.
struct CylinderRegion {
    Event center;
    double radius = 0.0;
    double time_depth = 0.0;
    /// (spatial node, time level) pairs, sorted by level then node.
    std::vector<std::pair<std::int64_t, int>> nodes;

    bool empty() const { return nodes.empty(); }
    std::size_t size() const { return nodes.size(); }
};

CylinderRegion cylinder_nodes(const Grid& grid, const Event& center, double r);

/// Number of distinct positive normal coordinates covered by the region;
/// the resolution measure used to truncate flatness traces.
int distinct_positive_normals(const Grid& grid, const CylinderRegion& region);

} // namespace degenlab
