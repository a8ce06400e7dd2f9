#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>
#include <cstdint>
#include <optional>
#include <vector>

#include "horec/errors.hpp"

namespace horec {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

/// Rotation stored as a unit quaternion (w, x, y, z), canonicalized so that
/// w >= 0. Matrices are materialized on demand.
class Rotation {
public:
    Rotation() : q_(1.0, 0.0, 0.0, 0.0) {}

    // Normalizes and canonicalizes the sign.
    explicit Rotation(const Eigen::Quaterniond& q) : q_(q) { canonicalize(); }
    Rotation(double w, double x, double y, double z) : q_(w, x, y, z) { canonicalize(); }
    explicit Rotation(const Mat3& m) : q_(m) { canonicalize(); }

    static Rotation identity() { return Rotation(); }
    static Rotation from_axis_angle(const Vec3& axis, double angle_rad) {
        return Rotation(Eigen::Quaterniond(Eigen::AngleAxisd(angle_rad, axis.normalized())));
    }

    const Eigen::Quaterniond& quat() const { return q_; }
    Mat3 matrix() const { return q_.toRotationMatrix(); }

    Rotation operator*(const Rotation& rhs) const { return Rotation(q_ * rhs.q_); }
    Vec3 operator*(const Vec3& v) const { return q_ * v; }
    Rotation inverse() const { return Rotation(q_.conjugate()); }

    bool approx_equal(const Rotation& rhs, double tol = 1e-9) const;

private:
    void canonicalize() {
        q_.normalize();
        if (q_.w() < 0.0) q_.coeffs() = -q_.coeffs();
    }
    Eigen::Quaterniond q_;
};

/// Geodesic angle between two rotations, in [0, pi].
double geodesic_angle(const Rotation& a, const Rotation& b);

/// Axis-angle (rotation vector) logarithm. At angle pi the axis is taken from
/// the largest quaternion component so results stay deterministic.
Vec3 so3_log(const Rotation& r);
Rotation so3_exp(const Vec3& w);

/// Element of SE(3): x -> R x + t.
struct RigidTransform {
    Rotation rotation;
    Vec3 translation = Vec3::Zero();

    RigidTransform() = default;
    RigidTransform(const Rotation& r, const Vec3& t) : rotation(r), translation(t) {}

    static RigidTransform identity() { return {}; }

    Vec3 operator*(const Vec3& p) const { return rotation * p + translation; }
    RigidTransform operator*(const RigidTransform& rhs) const {
        return {rotation * rhs.rotation, rotation * rhs.translation + translation};
    }
    RigidTransform inverse() const {
        Rotation rinv = rotation.inverse();
        return {rinv, -(rinv * translation)};
    }
};

/// Element of Sim(3): x -> s R x + t, with s > 0.
struct SimilarityTransform {
    double scale = 1.0;
    Rotation rotation;
    Vec3 translation = Vec3::Zero();

    SimilarityTransform() = default;
    SimilarityTransform(double s, const Rotation& r, const Vec3& t)
        : scale(s), rotation(r), translation(t) {}
    explicit SimilarityTransform(const RigidTransform& rt)
        : scale(1.0), rotation(rt.rotation), translation(rt.translation) {}

    static SimilarityTransform identity() { return {}; }

    Vec3 operator*(const Vec3& p) const { return scale * (rotation * p) + translation; }
    SimilarityTransform operator*(const SimilarityTransform& rhs) const {
        return {scale * rhs.scale, rotation * rhs.rotation,
                scale * (rotation * rhs.translation) + translation};
    }
    SimilarityTransform inverse() const {
        Rotation rinv = rotation.inverse();
        double sinv = 1.0 / scale;
        return {sinv, rinv, -sinv * (rinv * translation)};
    }
};

/// 6D rotation parametrization plus translation: `rot6` holds the two rows of
/// a 2x3 matrix that Gram-Schmidt orthonormalization (orth) turns into a
/// proper rotation. Zero correction is rot6 = rows of the identity.
struct SixDofParam {
    Eigen::Matrix<double, 6, 1> rot6;
    Vec3 trans = Vec3::Zero();

    SixDofParam() { rot6 << 1, 0, 0, 0, 1, 0; }
    SixDofParam(const Eigen::Matrix<double, 6, 1>& r6, const Vec3& t) : rot6(r6), trans(t) {}

    static SixDofParam from_rotation(const Rotation& r, const Vec3& t = Vec3::Zero()) {
        Mat3 m = r.matrix();
        SixDofParam p;
        p.rot6 << m(0, 0), m(0, 1), m(0, 2), m(1, 0), m(1, 1), m(1, 2);
        p.trans = t;
        return p;
    }

    Vec3 v1() const { return rot6.head<3>(); }
    Vec3 v2() const { return rot6.tail<3>(); }
};

/// Gram-Schmidt orthonormalization of the 6D parametrization. Rows of the
/// result are (e1, e2, e1 x e2). Throws DegenerateParam for parallel or
/// near-zero inputs.
Rotation orth(const SixDofParam& p);

/// Jacobian of orth: d(O(p) * x) / d rot6, a 3x6 matrix.
Eigen::Matrix<double, 3, 6> orth_apply_jacobian(const SixDofParam& p, const Vec3& x);

/// Partial derivatives of the orthonormalized matrix itself, one 3x3 matrix
/// per rot6 component.
void orth_matrix_jacobian(const SixDofParam& p, Mat3 out[6]);

/// Pinhole camera model. Pixel centers sit at integer coordinates; pixel
/// (u, v) covers [u - 0.5, u + 0.5) x [v - 0.5, v + 0.5).
struct CameraIntrinsics {
    double fx = 0, fy = 0, cx = 0, cy = 0;
    int width = 0, height = 0;

    CameraIntrinsics() = default;
    CameraIntrinsics(double fx_, double fy_, double cx_, double cy_, int w, int h)
        : fx(fx_), fy(fy_), cx(cx_), cy(cy_), width(w), height(h) {
        if (fx <= 0 || fy <= 0) throw DegenerateParam("focal lengths must be positive");
        if (cx < 0 || cx >= w || cy < 0 || cy >= h)
            throw DegenerateParam("principal point outside image");
    }

    Vec2 project(const Vec3& p_cam) const {
        return {fx * p_cam.x() / p_cam.z() + cx, fy * p_cam.y() / p_cam.z() + cy};
    }
    Vec3 backproject(double u, double v, double depth) const {
        return {(u - cx) / fx * depth, (v - cy) / fy * depth, depth};
    }
    bool in_image(const Vec2& px) const {
        return px.x() >= -0.5 && px.x() < width - 0.5 && px.y() >= -0.5 && px.y() < height - 0.5;
    }
};

/// Point cloud with optional unit normals and [0,1] colors, all index-aligned.
struct ColoredPointCloud {
    std::vector<Vec3> positions;
    std::vector<Vec3> normals;  // empty or same length as positions
    std::vector<Vec3> colors;   // empty or same length as positions

    size_t size() const { return positions.size(); }
    bool has_normals() const { return !normals.empty(); }
    bool has_colors() const { return !colors.empty(); }
    void validate() const;
};

/// Indexed triangle mesh with optional per-vertex colors/normals.
struct TriangleMesh {
    std::vector<Vec3> vertices;
    std::vector<Eigen::Vector3i> faces;
    std::vector<Vec3> vertex_colors;
    std::vector<Vec3> vertex_normals;

    bool has_colors() const { return !vertex_colors.empty(); }
    bool has_normals() const { return !vertex_normals.empty(); }
    bool empty() const { return vertices.empty() || faces.empty(); }

    // Checks index bounds and (unless allow_degenerate) rejects zero-area faces.
    void validate(bool allow_degenerate = false) const;

    double face_area(int f) const {
        const Vec3& a = vertices[faces[f][0]];
        const Vec3& b = vertices[faces[f][1]];
        const Vec3& c = vertices[faces[f][2]];
        return 0.5 * (b - a).cross(c - a).norm();
    }
    double total_area() const;
    Vec3 face_normal(int f) const {
        const Vec3& a = vertices[faces[f][0]];
        const Vec3& b = vertices[faces[f][1]];
        const Vec3& c = vertices[faces[f][2]];
        return (b - a).cross(c - a).normalized();
    }

    // Area-weighted vertex normals from incident faces.
    void compute_vertex_normals();
    TriangleMesh transformed(const RigidTransform& T) const;
    TriangleMesh transformed(const SimilarityTransform& T) const;
};

/// Per-frame rigid transforms with validity flags (failed frames stay in the
/// sequence, flagged invalid).
struct PoseSequence {
    std::vector<RigidTransform> poses;
    std::vector<uint8_t> valid;

    PoseSequence() = default;
    explicit PoseSequence(size_t n)
        : poses(n), valid(n, 1) {}

    size_t size() const { return poses.size(); }
    size_t num_valid() const {
        size_t k = 0;
        for (auto v : valid) k += v != 0;
        return k;
    }
};

/// Row-major RGB image, values in [0,1].
struct ImageRGB {
    int width = 0, height = 0;
    std::vector<double> data;  // height*width*3

    ImageRGB() = default;
    ImageRGB(int w, int h, double fill = 0.0) : width(w), height(h), data(size_t(w) * h * 3, fill) {}

    double* px(int x, int y) { return &data[(size_t(y) * width + x) * 3]; }
    const double* px(int x, int y) const { return &data[(size_t(y) * width + x) * 3]; }
    Vec3 at(int x, int y) const {
        const double* p = px(x, y);
        return {p[0], p[1], p[2]};
    }
    void set(int x, int y, const Vec3& c) {
        double* p = px(x, y);
        p[0] = c[0];
        p[1] = c[1];
        p[2] = c[2];
    }

    // Bilinear sample at continuous pixel coordinates, clamped to the border.
    // `grad` (optional) receives d(color)/d(u,v) as a 3x2 matrix.
    Vec3 sample_bilinear(double u, double v, Eigen::Matrix<double, 3, 2>* grad = nullptr) const;
};

/// Binary mask, nonzero = foreground.
struct MaskImage {
    int width = 0, height = 0;
    std::vector<uint8_t> data;

    MaskImage() = default;
    MaskImage(int w, int h, uint8_t fill = 0) : width(w), height(h), data(size_t(w) * h, fill) {}

    uint8_t at(int x, int y) const { return data[size_t(y) * width + x]; }
    void set(int x, int y, uint8_t v) { data[size_t(y) * width + x] = v; }
    size_t count_nonzero() const {
        size_t k = 0;
        for (auto v : data) k += v != 0;
        return k;
    }
};

}  // namespace horec
