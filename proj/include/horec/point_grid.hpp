#pragma once

#include <unordered_map>
#include <vector>

#include "horec/types.hpp"

namespace horec {

/// Uniform hash grid over a fixed point set for nearest-neighbor queries.
/// Deterministic: ties broken by lowest point index.
class PointGrid {
public:
    PointGrid(const std::vector<Vec3>& points, double cell_size);

    /// Nearest point within `radius` (Euclidean). Returns -1 if none.
    int nearest_within(const Vec3& q, double radius, double* dist_sq = nullptr) const;

    /// Unbounded nearest point (expanding shell search). Returns -1 only for
    /// an empty point set.
    int nearest(const Vec3& q, double* dist_sq = nullptr) const;

    size_t size() const { return points_.size(); }

private:
    struct Key {
        int64_t v;
        bool operator==(const Key& o) const { return v == o.v; }
    };
    struct KeyHash {
        size_t operator()(const Key& k) const {
            uint64_t x = uint64_t(k.v);
            x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
            x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
            return size_t(x ^ (x >> 31));
        }
    };

    Key key(int ix, int iy, int iz) const {
        // 21-bit signed packing per axis
        auto enc = [](int i) { return uint64_t(uint32_t(i + (1 << 20))) & 0x1fffff; };
        return Key{int64_t(enc(ix) | (enc(iy) << 21) | (enc(iz) << 42))};
    }
    void cell_of(const Vec3& p, int& ix, int& iy, int& iz) const {
        ix = int(std::floor(p.x() * inv_cell_));
        iy = int(std::floor(p.y() * inv_cell_));
        iz = int(std::floor(p.z() * inv_cell_));
    }
    void scan_cell(const Key& k, const Vec3& q, int& best, double& best_d2) const;

    std::vector<Vec3> points_;
    double cell_, inv_cell_;
    std::unordered_map<Key, std::vector<int>, KeyHash> cells_;
};

}  // namespace horec
