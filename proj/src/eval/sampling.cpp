#include <algorithm>
#include <cmath>

#include "horec/eval/sampling.hpp"
#include "horec/rng.hpp"

namespace horec::eval {

std::vector<SurfacePoint> sample_surface_detailed(const TriangleMesh& mesh, size_t n,
                                                  uint64_t seed) {
    if (mesh.empty()) throw EmptyMesh("sample_surface: empty mesh");
    std::vector<double> cum(mesh.faces.size());
    double acc = 0.0;
    for (size_t f = 0; f < mesh.faces.size(); ++f) {
        acc += mesh.face_area(int(f));
        cum[f] = acc;
    }
    if (acc <= 0.0) throw EmptyMesh("sample_surface: zero total area");

    const bool has_n = mesh.has_normals();
    const bool has_c = mesh.has_colors();

    Rng rng(seed);
    std::vector<SurfacePoint> out;
    out.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        double u = rng.uniform() * acc;
        size_t f = std::lower_bound(cum.begin(), cum.end(), u) - cum.begin();
        if (f >= mesh.faces.size()) f = mesh.faces.size() - 1;
        const auto& face = mesh.faces[f];

        // sqrt trick for uniform barycentric coordinates
        double r1 = std::sqrt(rng.uniform());
        double r2 = rng.uniform();
        double b0 = 1.0 - r1;
        double b1 = r1 * (1.0 - r2);
        double b2 = r1 * r2;

        SurfacePoint sp;
        sp.face = int(f);
        sp.position = b0 * mesh.vertices[face[0]] + b1 * mesh.vertices[face[1]] +
                      b2 * mesh.vertices[face[2]];
        if (has_n) {
            Vec3 nrm = b0 * mesh.vertex_normals[face[0]] + b1 * mesh.vertex_normals[face[1]] +
                       b2 * mesh.vertex_normals[face[2]];
            double len = nrm.norm();
            sp.normal = len > 1e-20 ? Vec3(nrm / len) : mesh.face_normal(int(f));
        } else {
            sp.normal = mesh.face_normal(int(f));
        }
        sp.color = has_c ? Vec3(b0 * mesh.vertex_colors[face[0]] + b1 * mesh.vertex_colors[face[1]] +
                                b2 * mesh.vertex_colors[face[2]])
                         : Vec3::Zero();
        out.push_back(sp);
    }
    return out;
}

std::vector<Vec3> sample_surface(const TriangleMesh& mesh, size_t n, uint64_t seed) {
    std::vector<Vec3> pts;
    pts.reserve(n);
    for (const auto& sp : sample_surface_detailed(mesh, n, seed)) pts.push_back(sp.position);
    return pts;
}

}  // namespace horec::eval
