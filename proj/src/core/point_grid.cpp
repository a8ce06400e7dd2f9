#include <cmath>
#include <limits>

#include "horec/point_grid.hpp"

namespace horec {

PointGrid::PointGrid(const std::vector<Vec3>& points, double cell_size)
    : points_(points), cell_(cell_size), inv_cell_(1.0 / cell_size) {
    if (cell_size <= 0.0) throw DegenerateParam("PointGrid cell size must be positive");
    for (int i = 0; i < int(points_.size()); ++i) {
        int ix, iy, iz;
        cell_of(points_[i], ix, iy, iz);
        cells_[key(ix, iy, iz)].push_back(i);
    }
}

void PointGrid::scan_cell(const Key& k, const Vec3& q, int& best, double& best_d2) const {
    auto it = cells_.find(k);
    if (it == cells_.end()) return;
    for (int i : it->second) {
        double d2 = (points_[i] - q).squaredNorm();
        if (d2 < best_d2 || (d2 == best_d2 && i < best)) {
            best_d2 = d2;
            best = i;
        }
    }
}

int PointGrid::nearest_within(const Vec3& q, double radius, double* dist_sq) const {
    int cx, cy, cz;
    cell_of(q, cx, cy, cz);
    int r = int(std::ceil(radius * inv_cell_));
    int best = -1;
    double best_d2 = radius * radius;
    for (int ix = cx - r; ix <= cx + r; ++ix)
        for (int iy = cy - r; iy <= cy + r; ++iy)
            for (int iz = cz - r; iz <= cz + r; ++iz) scan_cell(key(ix, iy, iz), q, best, best_d2);
    if (best >= 0 && dist_sq) *dist_sq = best_d2;
    return best;
}

int PointGrid::nearest(const Vec3& q, double* dist_sq) const {
    if (points_.empty()) return -1;
    int cx, cy, cz;
    cell_of(q, cx, cy, cz);
    int best = -1;
    double best_d2 = std::numeric_limits<double>::infinity();
    for (int shell = 0;; ++shell) {
        // visit cells at Chebyshev distance exactly `shell`
        for (int ix = cx - shell; ix <= cx + shell; ++ix) {
            for (int iy = cy - shell; iy <= cy + shell; ++iy) {
                for (int iz = cz - shell; iz <= cz + shell; ++iz) {
                    int cheb = std::max({std::abs(ix - cx), std::abs(iy - cy), std::abs(iz - cz)});
                    if (cheb != shell) continue;
                    scan_cell(key(ix, iy, iz), q, best, best_d2);
                }
            }
        }
        // any cell on shell k+1 is at least k*cell away from q
        if (best >= 0 && std::sqrt(best_d2) <= double(shell) * cell_) break;
        if (shell > 1 && best >= 0 && shell * cell_ > std::sqrt(best_d2) + 2 * cell_) break;
        if (shell > (1 << 20)) break;  // degenerate spread guard
    }
    if (dist_sq) *dist_sq = best_d2;
    return best;
}

}  // namespace horec
