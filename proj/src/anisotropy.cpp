#include <camc/anisotropy.hpp>
#include <camc/mesh.hpp>

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

namespace camc {

Vec3 require_unit(const Vec3& n, const char* what)
{
    const double len = n.norm();
    if (!(std::abs(len - 1.0) <= kUnitTolerance)) {
        std::ostringstream msg;
        msg << what << " must be a unit vector (|n| = " << len << ")";
        throw DomainError(msg.str());
    }
    return n / len;
}

AnisotropyFunction AnisotropyFunction::constant()
{
    return AnisotropyFunction();
}

AnisotropyFunction AnisotropyFunction::ellipsoid(const Mat3& q)
{
    if (!q.isApprox(q.transpose(), 1e-14)) throw DomainError("ellipsoid: Q must be symmetric");
    const Mat3 sym = 0.5 * (q + q.transpose());
    Eigen::SelfAdjointEigenSolver<Mat3> eig(sym);
    if (eig.eigenvalues().minCoeff() <= 0.0) throw DomainError("ellipsoid: Q must be positive definite");

    AnisotropyFunction f;
    f.m_kind = AnisotropyKind::ellipsoid;
    f.m_q = sym;
    std::ostringstream name;
    name << "ellipsoid(" << sym(0, 0) << "," << sym(1, 1) << "," << sym(2, 2) << "," << sym(0, 1) << ","
         << sym(0, 2) << "," << sym(1, 2) << ")";
    f.m_name = name.str();
    return f;
}

AnisotropyFunction AnisotropyFunction::perturbed(double epsilon, const Vec3& axis)
{
    // F = 1 + eps s^3 stays positive only for |eps| < 1.
    if (!(std::abs(epsilon) < 1.0)) throw DomainError("perturbed: |epsilon| must be < 1 for F > 0");
    if (axis.norm() == 0.0) throw DomainError("perturbed: axis must be nonzero");

    AnisotropyFunction f;
    f.m_kind = AnisotropyKind::perturbed;
    f.m_epsilon = epsilon;
    f.m_axis = axis.normalized();
    std::ostringstream name;
    name << "perturbed(" << epsilon << ")";
    f.m_name = name.str();
    return f;
}

double AnisotropyFunction::eval(const Vec3& n) const { return phi<double>(require_unit(n)); }

Vec3 AnisotropyFunction::eta(const Vec3& n) const { return phi_gradient<double>(require_unit(n)); }

Mat3 AnisotropyFunction::hessian(const Vec3& n) const { return phi_hessian<double>(require_unit(n)); }

std::pair<Vec3, Vec3> tangent_frame(const Vec3& n)
{
    const Vec3 helper = std::abs(n.x()) < 0.9 ? Vec3::UnitX() : Vec3::UnitY();
    Vec3 e1 = (helper - helper.dot(n) * n).normalized();
    Vec3 e2 = n.cross(e1);
    return {e1, e2};
}

Vec2 tangential_eigenvalues(const AnisotropyFunction& f, const Vec3& n)
{
    const Vec3 u = require_unit(n);
    const Mat3 hess = f.hessian(u);
    const auto [e1, e2] = tangent_frame(u);
    Mat2 m;
    m << e1.dot(hess * e1), e1.dot(hess * e2), e2.dot(hess * e1), e2.dot(hess * e2);
    m = 0.5 * (m + m.transpose()).eval();
    Eigen::SelfAdjointEigenSolver<Mat2> eig(m);
    return eig.eigenvalues();
}

EllipticityReport check_ellipticity(const AnisotropyFunction& f, int subdivision_level)
{
    if (subdivision_level < 0) throw DomainError("check_ellipticity: subdivision level must be >= 0");
    EllipticityReport report;
    report.min_eigenvalue = std::numeric_limits<double>::infinity();
    for (const Vec3& n : sphere_directions(subdivision_level)) {
        const double lo = tangential_eigenvalues(f, n)[0];
        if (lo < report.min_eigenvalue) {
            report.min_eigenvalue = lo;
            report.argmin_direction = n;
        }
        ++report.sample_count;
    }
    report.passed = report.min_eigenvalue > kEllipticityThreshold;
    return report;
}

double verify_derivatives(const AnisotropyFunction& f, int trials, unsigned long long seed)
{
    if (trials < 1) throw DomainError("verify_derivatives: trials must be >= 1");
    constexpr double step = 1e-5;
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal;
    double worst = 0.0;
    for (int t = 0; t < trials; ++t) {
        const Vec3 n = Vec3(normal(rng), normal(rng), normal(rng)).normalized();
        const Vec3 grad = f.phi_gradient<double>(n);
        const Mat3 hess = f.phi_hessian<double>(n);
        Vec3 fd_grad;
        Mat3 fd_hess;
        for (int k = 0; k < 3; ++k) {
            const Vec3 dx = step * Vec3::Unit(k);
            fd_grad[k] = (f.phi<double>(n + dx) - f.phi<double>(n - dx)) / (2.0 * step);
            fd_hess.col(k) = (f.phi_gradient<double>(n + dx) - f.phi_gradient<double>(n - dx)) / (2.0 * step);
        }
        worst = std::max(worst, (grad - fd_grad).norm() / std::max(1.0, grad.norm()));
        worst = std::max(worst, (hess - fd_hess).norm() / std::max(1.0, hess.norm()));
    }
    return worst;
}

} // namespace camc
