#include <algorithm>
#include <cmath>

#include "horec/types.hpp"

namespace horec {

void ColoredPointCloud::validate() const {
    if (!normals.empty() && normals.size() != positions.size())
        throw DataError("point cloud normals/positions length mismatch");
    if (!colors.empty() && colors.size() != positions.size())
        throw DataError("point cloud colors/positions length mismatch");
    for (const Vec3& n : normals) {
        if (std::abs(n.norm() - 1.0) > 1e-6)
            throw DataError("point cloud normal is not unit length");
    }
}

void TriangleMesh::validate(bool allow_degenerate) const {
    const int n = int(vertices.size());
    for (const auto& f : faces) {
        for (int k = 0; k < 3; ++k) {
            if (f[k] < 0 || f[k] >= n) throw DataError("face index out of range");
        }
    }
    if (!vertex_colors.empty() && vertex_colors.size() != vertices.size())
        throw DataError("vertex color count mismatch");
    if (!vertex_normals.empty() && vertex_normals.size() != vertices.size())
        throw DataError("vertex normal count mismatch");
    if (!allow_degenerate) {
        for (size_t f = 0; f < faces.size(); ++f) {
            if (face_area(int(f)) <= 1e-12) throw DataError("degenerate face in mesh");
        }
    }
}

double TriangleMesh::total_area() const {
    double a = 0.0;
    for (size_t f = 0; f < faces.size(); ++f) a += face_area(int(f));
    return a;
}

void TriangleMesh::compute_vertex_normals() {
    vertex_normals.assign(vertices.size(), Vec3::Zero());
    for (const auto& f : faces) {
        const Vec3& a = vertices[f[0]];
        const Vec3& b = vertices[f[1]];
        const Vec3& c = vertices[f[2]];
        Vec3 n = (b - a).cross(c - a);  // area-weighted
        vertex_normals[f[0]] += n;
        vertex_normals[f[1]] += n;
        vertex_normals[f[2]] += n;
    }
    for (Vec3& n : vertex_normals) {
        double len = n.norm();
        n = len > 1e-20 ? Vec3(n / len) : Vec3(0, 0, 1);
    }
}

TriangleMesh TriangleMesh::transformed(const RigidTransform& T) const {
    TriangleMesh out = *this;
    for (Vec3& v : out.vertices) v = T * v;
    for (Vec3& n : out.vertex_normals) n = T.rotation * n;
    return out;
}

TriangleMesh TriangleMesh::transformed(const SimilarityTransform& T) const {
    TriangleMesh out = *this;
    for (Vec3& v : out.vertices) v = T * v;
    for (Vec3& n : out.vertex_normals) n = T.rotation * n;
    return out;
}

Vec3 ImageRGB::sample_bilinear(double u, double v, Eigen::Matrix<double, 3, 2>* grad) const {
    // clamp so the 2x2 support stays in bounds
    double uc = std::clamp(u, 0.0, double(width - 1));
    double vc = std::clamp(v, 0.0, double(height - 1));
    int x0 = std::min(int(std::floor(uc)), width - 2);
    int y0 = std::min(int(std::floor(vc)), height - 2);
    x0 = std::max(x0, 0);
    y0 = std::max(y0, 0);
    double fx = uc - x0;
    double fy = vc - y0;

    Vec3 c00 = at(x0, y0), c10 = at(x0 + 1, y0);
    Vec3 c01 = at(x0, y0 + 1), c11 = at(x0 + 1, y0 + 1);

    Vec3 top = (1 - fx) * c00 + fx * c10;
    Vec3 bot = (1 - fx) * c01 + fx * c11;
    if (grad) {
        Vec3 du = (1 - fy) * (c10 - c00) + fy * (c11 - c01);
        Vec3 dv = bot - top;
        // zero gradient where the clamp is active
        if (u != uc) du.setZero();
        if (v != vc) dv.setZero();
        grad->col(0) = du;
        grad->col(1) = dv;
    }
    return (1 - fy) * top + fy * bot;
}

}  // namespace horec
