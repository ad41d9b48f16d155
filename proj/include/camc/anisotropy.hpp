#pragma once

#include <camc/jet.hpp>

#include <Eigen/Core>
#include <Eigen/Geometry>

#include <cmath>
#include <stdexcept>
#include <string>

namespace camc {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Mat2 = Eigen::Matrix2d;
using Mat3 = Eigen::Matrix3d;

template <typename T>
using Vec3T = Eigen::Matrix<T, 3, 1>;
template <typename T>
using Mat3T = Eigen::Matrix<T, 3, 3>;

/// Raised when an argument lies outside the domain of an operation
/// (non-unit direction, zero scale factor, degenerate metric, ...).
class DomainError : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

/// Tolerance on | |n| - 1 | for inputs that must be unit vectors.
inline constexpr double kUnitTolerance = 1e-12;

/// Renormalizes `n` if it is unit within kUnitTolerance, throws otherwise.
Vec3 require_unit(const Vec3& n, const char* what = "direction");

enum class AnisotropyKind { constant, ellipsoid, perturbed };

/// Anisotropy function F on the unit sphere, represented through its
/// one-homogeneous extension Phi(x) = |x| F(x/|x|).
///
///  - constant:  F = 1
///  - ellipsoid: F(n) = sqrt(n^T Q n), Q symmetric positive definite
///  - perturbed: F(n) = 1 + eps <n, a>^3, |a| = 1
///
/// The perturbed family is not centrally symmetric; it is elliptic for
/// |eps| < 1/2.
class AnisotropyFunction
{
public:
    static AnisotropyFunction constant();
    static AnisotropyFunction ellipsoid(const Mat3& q);
    static AnisotropyFunction perturbed(double epsilon, const Vec3& axis);

    AnisotropyKind kind() const { return m_kind; }
    const std::string& name() const { return m_name; }
    const Mat3& q() const { return m_q; }
    double epsilon() const { return m_epsilon; }
    const Vec3& axis() const { return m_axis; }

    /// F(n) for a unit vector n.
    double eval(const Vec3& n) const;
    /// eta(n) = grad_S2 F(n) + F(n) n, read off as the ambient gradient of Phi.
    Vec3 eta(const Vec3& n) const;
    /// Ambient Hessian D^2 Phi(n); symmetric, annihilates n.
    Mat3 hessian(const Vec3& n) const;

    template <typename T>
    T phi(const Vec3T<T>& x) const;
    template <typename T>
    Vec3T<T> phi_gradient(const Vec3T<T>& x) const;
    template <typename T>
    Mat3T<T> phi_hessian(const Vec3T<T>& x) const;

private:
    AnisotropyFunction() = default;

    AnisotropyKind m_kind = AnisotropyKind::constant;
    std::string m_name = "constant";
    Mat3 m_q = Mat3::Identity();
    double m_epsilon = 0.0;
    Vec3 m_axis = Vec3::UnitZ();
};

struct EllipticityReport
{
    double min_eigenvalue = 0.0;
    Vec3 argmin_direction = Vec3::UnitZ();
    int sample_count = 0;
    bool passed = false;
};

inline constexpr double kEllipticityThreshold = 1e-9;

/// Eigenvalues (ascending) of D^2 Phi(n) restricted to the plane n-perp.
Vec2 tangential_eigenvalues(const AnisotropyFunction& f, const Vec3& n);

/// Samples icosphere directions at the given subdivision level and reports
/// the minimum eigenvalue of the tangential Hessian.
EllipticityReport check_ellipticity(const AnisotropyFunction& f, int subdivision_level);

/// Worst relative discrepancy between the analytic gradient/Hessian of Phi
/// and central differences (step 1e-5) at random unit directions.
double verify_derivatives(const AnisotropyFunction& f, int trials, unsigned long long seed = 7);

/// Orthonormal pair (e1, e2) with e1 x e2 = n.
std::pair<Vec3, Vec3> tangent_frame(const Vec3& n);

// ---------------------------------------------------------------------------

template <typename T>
T AnisotropyFunction::phi(const Vec3T<T>& x) const
{
    using std::sqrt;
    const T r2 = x.dot(x);
    switch (m_kind) {
    case AnisotropyKind::constant: return sqrt(r2);
    case AnisotropyKind::ellipsoid: return sqrt(x.dot(m_q.cast<T>() * x));
    case AnisotropyKind::perturbed: {
        const T s = x.dot(m_axis.cast<T>());
        return sqrt(r2) + m_epsilon * s * s * s / r2;
    }
    }
    return T(0.0);
}

template <typename T>
Vec3T<T> AnisotropyFunction::phi_gradient(const Vec3T<T>& x) const
{
    using std::sqrt;
    const T r2 = x.dot(x);
    switch (m_kind) {
    case AnisotropyKind::constant: return x / sqrt(r2);
    case AnisotropyKind::ellipsoid: {
        const Vec3T<T> qx = m_q.cast<T>() * x;
        return qx / sqrt(x.dot(qx));
    }
    case AnisotropyKind::perturbed: {
        const Vec3T<T> a = m_axis.cast<T>();
        const T s = x.dot(a);
        const T r = sqrt(r2);
        const T r4 = r2 * r2;
        return x / r + a * (3.0 * m_epsilon * s * s / r2) - x * (2.0 * m_epsilon * s * s * s / r4);
    }
    }
    return Vec3T<T>::Zero();
}

template <typename T>
Mat3T<T> AnisotropyFunction::phi_hessian(const Vec3T<T>& x) const
{
    using std::sqrt;
    const T r2 = x.dot(x);
    const Mat3T<T> id = Mat3T<T>::Identity();
    switch (m_kind) {
    case AnisotropyKind::constant: {
        const T r = sqrt(r2);
        return (id - x * x.transpose() / r2) / r;
    }
    case AnisotropyKind::ellipsoid: {
        const Mat3T<T> q = m_q.cast<T>();
        const Vec3T<T> qx = q * x;
        const T s = sqrt(x.dot(qx));
        return q / s - qx * qx.transpose() / (s * s * s);
    }
    case AnisotropyKind::perturbed: {
        const Vec3T<T> a = m_axis.cast<T>();
        const T s = x.dot(a);
        const T r = sqrt(r2);
        const T r4 = r2 * r2;
        const T r6 = r4 * r2;
        const T eps = T(m_epsilon);
        const Mat3T<T> base = (id - x * x.transpose() / r2) / r;
        const Mat3T<T> ax = a * x.transpose();
        return base + (a * a.transpose()) * (6.0 * eps * s / r2)
               - (ax + ax.transpose()) * (6.0 * eps * s * s / r4)
               - id * (2.0 * eps * s * s * s / r4)
               + (x * x.transpose()) * (8.0 * eps * s * s * s / r6);
    }
    }
    return Mat3T<T>::Zero();
}

} // namespace camc
