#include <cmath>

#include "horec/types.hpp"

namespace horec {

bool Rotation::approx_equal(const Rotation& rhs, double tol) const {
    return geodesic_angle(*this, rhs) <= tol;
}

double geodesic_angle(const Rotation& a, const Rotation& b) {
    // angle of a^-1 b, sign-invariant. atan2 form is stable near 0 and pi.
    Eigen::Quaterniond q = a.quat().conjugate() * b.quat();
    double s = q.vec().norm();
    double c = std::abs(q.w());
    return 2.0 * std::atan2(s, c);
}

Vec3 so3_log(const Rotation& r) {
    const Eigen::Quaterniond& q = r.quat();  // w >= 0 by canonicalization
    double s = q.vec().norm();
    double angle = 2.0 * std::atan2(s, q.w());
    if (s < 1e-12) {
        if (angle < 1e-9) return Vec3::Zero();
        // angle == pi: axis from the largest quaternion component
        int i;
        q.vec().cwiseAbs().maxCoeff(&i);
        Vec3 axis = Vec3::Zero();
        axis[i] = q.vec()[i] >= 0.0 ? 1.0 : -1.0;
        return angle * axis;
    }
    return (angle / s) * q.vec();
}

Rotation so3_exp(const Vec3& w) {
    double angle = w.norm();
    if (angle < 1e-12) {
        return Rotation(Eigen::Quaterniond(1.0, 0.5 * w.x(), 0.5 * w.y(), 0.5 * w.z()));
    }
    double half = 0.5 * angle;
    Vec3 axis = w / angle;
    double s = std::sin(half);
    return Rotation(Eigen::Quaterniond(std::cos(half), s * axis.x(), s * axis.y(), s * axis.z()));
}

namespace {

struct GramSchmidt {
    Vec3 e1, e2, e3;
    double n1, n2;
    Vec3 w;  // un-normalized second basis vector
};

GramSchmidt gram_schmidt(const SixDofParam& p) {
    GramSchmidt g;
    Vec3 v1 = p.v1(), v2 = p.v2();
    g.n1 = v1.norm();
    if (g.n1 < 1e-9) throw DegenerateParam("orth: first vector near zero");
    g.e1 = v1 / g.n1;
    g.w = v2 - v2.dot(g.e1) * g.e1;
    g.n2 = g.w.norm();
    // parallel test: residual angle of v2 against e1
    if (g.n2 < 1e-9 || g.n2 < 1e-6 * v2.norm())
        throw DegenerateParam("orth: vectors parallel or second vector near zero");
    g.e2 = g.w / g.n2;
    g.e3 = g.e1.cross(g.e2);
    return g;
}

}  // namespace

Rotation orth(const SixDofParam& p) {
    GramSchmidt g = gram_schmidt(p);
    Mat3 m;
    m.row(0) = g.e1;
    m.row(1) = g.e2;
    m.row(2) = g.e3;
    return Rotation(m);
}

void orth_matrix_jacobian(const SixDofParam& p, Mat3 out[6]) {
    GramSchmidt g = gram_schmidt(p);
    Vec3 v2 = p.v2();

    // de1/dv1 and de2/dw projections
    Mat3 P1 = (Mat3::Identity() - g.e1 * g.e1.transpose()) / g.n1;
    Mat3 P2 = (Mat3::Identity() - g.e2 * g.e2.transpose()) / g.n2;
    // dw = dv2 - d[(v2.e1) e1] ; with respect to v1 only the e1 path matters
    Mat3 dw_dv1 = -(g.e1 * v2.transpose() + v2.dot(g.e1) * Mat3::Identity()) * P1;
    Mat3 dw_dv2 = Mat3::Identity() - g.e1 * g.e1.transpose();

    for (int j = 0; j < 6; ++j) {
        Vec3 dv = Vec3::Zero();
        dv[j % 3] = 1.0;
        Vec3 de1, de2;
        if (j < 3) {
            de1 = P1 * dv;
            de2 = P2 * (dw_dv1 * dv);
        } else {
            de1 = Vec3::Zero();
            de2 = P2 * (dw_dv2 * dv);
        }
        Vec3 de3 = de1.cross(g.e2) + g.e1.cross(de2);
        out[j].row(0) = de1;
        out[j].row(1) = de2;
        out[j].row(2) = de3;
    }
}

Eigen::Matrix<double, 3, 6> orth_apply_jacobian(const SixDofParam& p, const Vec3& x) {
    Mat3 dO[6];
    orth_matrix_jacobian(p, dO);
    Eigen::Matrix<double, 3, 6> J;
    for (int j = 0; j < 6; ++j) J.col(j) = dO[j] * x;
    return J;
}

}  // namespace horec
