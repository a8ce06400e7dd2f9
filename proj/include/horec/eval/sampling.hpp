#pragma once

#include <cstdint>
#include <vector>

#include "horec/types.hpp"

namespace horec::eval {

struct SurfacePoint {
    Vec3 position;
    Vec3 normal;  // barycentric-interpolated vertex normal (renormalized)
    Vec3 color;   // zero if the mesh has no colors
    int face;
};

/// Uniform-by-area surface samples, deterministic per seed.
std::vector<SurfacePoint> sample_surface_detailed(const TriangleMesh& mesh, size_t n,
                                                  uint64_t seed);

/// Positions only.
std::vector<Vec3> sample_surface(const TriangleMesh& mesh, size_t n, uint64_t seed);

}  // namespace horec::eval
