#include "degenlab/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "json.hpp"

namespace degenlab {

double euclidean_distance(const Point& a, const Point& b) {
    const double d0 = a.tangential[0] - b.tangential[0];
    const double d1 = a.tangential[1] - b.tangential[1];
    const double dn = a.normal - b.normal;
    return std::sqrt(d0 * d0 + d1 * d1 + dn * dn);
}

double anisotropic_distance(const Event& p, const Event& q, double gamma) {
    if (!(gamma > 0.0 && gamma < 1.0))
        throw std::invalid_argument("anisotropic_distance: gamma must lie in (0,1)");
    return euclidean_distance(p.x, q.x) + std::pow(std::abs(p.t - q.t), 1.0 / (2.0 - gamma));
}

double parabolic_distance(const Event& p, const Event& q) {
    return euclidean_distance(p.x, q.x) + std::sqrt(std::abs(p.t - q.t));
}

double Grid::dt() const { return time_axis_[1] - time_axis_[0]; }

double Grid::tangential_spacing() const {
    if (n_dims_ < 2) throw std::logic_error("tangential_spacing: grid has no tangential axis");
    return 2.0 / n_tan_;
}

std::int64_t Grid::tangential_stride(int axis) const {
    std::int64_t s = n_normal_nodes();
    for (int a = n_tangential_axes() - 1; a > axis; --a) s *= n_tangential_nodes();
    return s;
}

int Grid::normal_index(std::int64_t node) const {
    return static_cast<int>(node % n_normal_nodes());
}

int Grid::tangential_index(std::int64_t node, int axis) const {
    std::int64_t rest = node / n_normal_nodes();
    for (int a = n_tangential_axes() - 1; a > axis; --a) rest /= n_tangential_nodes();
    return static_cast<int>(rest % n_tangential_nodes());
}

std::int64_t Grid::node_at(std::span<const int> tan_indices, int normal_j) const {
    std::int64_t node = 0;
    for (int a = 0; a < n_tangential_axes(); ++a) node = node * n_tangential_nodes() + tan_indices[a];
    return node * n_normal_nodes() + normal_j;
}

Point Grid::node_coord(std::int64_t node) const {
    Point p;
    p.normal = normal_axis_[normal_index(node)];
    for (int a = 0; a < n_tangential_axes(); ++a)
        p.tangential[a] = tangential_axes_[a][tangential_index(node, a)];
    return p;
}

bool Grid::is_lateral(std::int64_t node) const {
    if (normal_index(node) == n_normal_) return true;
    for (int a = 0; a < n_tangential_axes(); ++a) {
        const int i = tangential_index(node, a);
        if (i == 0 || i == n_tan_) return true;
    }
    return false;
}

std::string Grid::to_json() const {
    nlohmann::json j;
    j["n_dims"] = n_dims_;
    j["n_tan"] = n_tan_;
    j["n_normal"] = n_normal_;
    j["n_time"] = n_time_;
    j["grading_q"] = grading_q_;
    j["gamma"] = gamma_;
    j["t_start"] = t_start_;
    return j.dump();
}

std::shared_ptr<const Grid> Grid::from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    return build_grid(j.at("n_dims").get<int>(), j.at("n_tan").get<int>(),
                      j.at("n_normal").get<int>(), j.at("n_time").get<int>(),
                      j.at("grading_q").get<double>(), j.at("gamma").get<double>(),
                      j.at("t_start").get<double>());
}

std::shared_ptr<const Grid> build_grid(int n_dims, int n_tan, int n_normal, int n_time,
                                       double grading_q, double gamma, double t_start) {
    if (n_dims < 1 || n_dims > 3)
        throw std::invalid_argument("build_grid: n_dims must be 1, 2 or 3");
    if (!(gamma > 0.0 && gamma < 1.0))
        throw std::invalid_argument("build_grid: gamma out of (0,1)");
    if (n_normal < 2) throw std::invalid_argument("build_grid: n_normal must be >= 2");
    if (n_time < 1) throw std::invalid_argument("build_grid: n_time must be >= 1");
    if (n_dims > 1 && n_tan < 2)
        throw std::invalid_argument("build_grid: n_tan must be >= 2 for n_dims > 1");
    if (grading_q < 1.0) throw std::invalid_argument("build_grid: grading_q must be >= 1");
    if (!(t_start < 0.0)) throw std::invalid_argument("build_grid: t_start must be negative");

    auto grid = std::shared_ptr<Grid>(new Grid());
    grid->n_dims_ = n_dims;
    grid->n_tan_ = n_tan;
    grid->n_normal_ = n_normal;
    grid->n_time_ = n_time;
    grid->grading_q_ = grading_q;
    grid->gamma_ = gamma;
    grid->t_start_ = t_start;

    grid->normal_axis_.resize(n_normal + 1);
    for (int j = 0; j <= n_normal; ++j) {
        const double s = static_cast<double>(j) / n_normal;
        // q = 1 must reproduce the uniform axis bit-for-bit
        grid->normal_axis_[j] = (grading_q == 1.0) ? s : std::pow(s, grading_q);
    }
    grid->normal_axis_.front() = 0.0;
    grid->normal_axis_.back() = 1.0;

    grid->tangential_axes_.resize(n_dims - 1);
    for (auto& axis : grid->tangential_axes_) {
        axis.resize(n_tan + 1);
        for (int i = 0; i <= n_tan; ++i) axis[i] = -1.0 + 2.0 * static_cast<double>(i) / n_tan;
        axis.back() = 1.0;
    }

    grid->time_axis_.resize(n_time + 1);
    for (int m = 0; m <= n_time; ++m)
        grid->time_axis_[m] = t_start * (1.0 - static_cast<double>(m) / n_time);
    grid->time_axis_.back() = 0.0;

    std::int64_t nodes = grid->n_normal_nodes();
    for (int a = 0; a < n_dims - 1; ++a) nodes *= grid->n_tangential_nodes();
    grid->n_spatial_nodes_ = nodes;
    return grid;
}

CylinderRegion cylinder_nodes(const Grid& grid, const Event& center, double r) {
    if (!(r > 0.0)) throw std::invalid_argument("cylinder_nodes: radius must be positive");

    CylinderRegion region;
    region.center = center;
    region.radius = r;
    region.time_depth = std::pow(r, 2.0 - grid.gamma());

    // Candidate index windows per axis, then the exact membership predicate.
    const auto time = grid.time_axis();
    std::vector<int> levels;
    for (int m = 0; m < grid.n_levels(); ++m) {
        const double t = time[m];
        if (t > center.t - region.time_depth && t <= center.t) levels.push_back(m);
    }
    if (levels.empty()) return region;

    std::vector<std::int64_t> spatial;
    const auto xn = grid.normal_axis();
    if (grid.n_dims() == 1) {
        for (int j = 0; j < grid.n_normal_nodes(); ++j)
            if (std::abs(xn[j] - center.x.normal) < r) spatial.push_back(j);
    } else {
        const int n_axes = grid.n_tangential_axes();
        std::vector<std::vector<int>> windows(n_axes);
        for (int a = 0; a < n_axes; ++a) {
            const auto ax = grid.tangential_axis(a);
            for (int i = 0; i < grid.n_tangential_nodes(); ++i)
                if (std::abs(ax[i] - center.x.tangential[a]) < r) windows[a].push_back(i);
        }
        std::vector<int> ti(n_axes, 0);
        const auto push_if_member = [&](std::span<const int> tidx) {
            Point p;
            for (int j = 0; j < grid.n_normal_nodes(); ++j) {
                if (!(std::abs(xn[j] - center.x.normal) < r)) continue;
                for (int a = 0; a < n_axes; ++a)
                    p.tangential[a] = grid.tangential_axis(a)[tidx[a]];
                p.normal = xn[j];
                if (euclidean_distance(p, center.x) < r)
                    spatial.push_back(grid.node_at(tidx, j));
            }
        };
        if (n_axes == 1) {
            for (int i : windows[0]) {
                ti[0] = i;
                push_if_member(ti);
            }
        } else {
            for (int i0 : windows[0])
                for (int i1 : windows[1]) {
                    ti[0] = i0;
                    ti[1] = i1;
                    push_if_member(ti);
                }
        }
    }
    std::sort(spatial.begin(), spatial.end());

    region.nodes.reserve(spatial.size() * levels.size());
    for (int m : levels)
        for (std::int64_t s : spatial) region.nodes.emplace_back(s, m);
    return region;
}

int distinct_positive_normals(const Grid& grid, const CylinderRegion& region) {
    std::set<int> seen;
    for (const auto& [node, level] : region.nodes) {
        (void)level;
        const int j = grid.normal_index(node);
        if (j > 0) seen.insert(j);
    }
    return static_cast<int>(seen.size());
}

} // namespace degenlab
