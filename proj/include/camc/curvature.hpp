#pragma once

#include <camc/anisotropy.hpp>
#include <camc/jet.hpp>
#include <camc/mesh.hpp>

#include <functional>
#include <vector>

namespace camc {

/// Chart (u, v) -> R^3 evaluated on jets, so that exact first and second
/// derivatives come out of a single evaluation.
using ChartFn = std::function<Vec3J(const Jet2& u, const Jet2& v)>;

struct ChartPoint
{
    Vec3 x, xu, xv, xuu, xuv, xvv;
};

/// Analytic immersion with orientation N = orientation * (X_u x X_v) / |X_u x X_v|.
struct ParametrizedSurface
{
    ChartFn chart;
    int orientation = 1;

    ChartPoint evaluate(double u, double v) const;
    Vec3 point(double u, double v) const { return evaluate(u, v).x; }
    Vec3 normal(double u, double v) const;
};

/// Per-point curvature data. S and A are expressed in the tangent basis
/// (X_u, X_v), column j holding the image of the j-th basis vector.
struct CurvatureSample
{
    Vec3 point;
    Vec3 normal;
    Mat2 S;
    Mat2 A;
    double lambda1 = 0.0; ///< anisotropic principal curvatures, lambda1 <= lambda2
    double lambda2 = 0.0;
    double H = 0.0;       ///< anisotropic mean curvature, trace(A)
    double H_ambient = 0.0; ///< trace(D^2 Phi(N) S~) with S~ the ambient extension of S
    double K = 0.0;       ///< Gaussian curvature, det(S)
    double kappa1 = 0.0;  ///< Euclidean principal curvatures
    double kappa2 = 0.0;
    double sigma_norm = 0.0; ///< sqrt(kappa1^2 + kappa2^2)
    double aniso_norm = 0.0; ///< sqrt(lambda1^2 + lambda2^2)
    double S_operator_norm = 0.0; ///< spectral norms in an orthonormal tangent frame
    double A_operator_norm = 0.0;
};

// Named charts.
ParametrizedSurface plane_chart();
ParametrizedSurface sphere_chart(double radius = 1.0); ///< exterior normal, (theta, phi)
ParametrizedSurface round_cylinder_chart(double radius); ///< about e3, exterior normal, (theta, z)
ParametrizedSurface torus_chart(double major, double minor);
/// n(theta, phi) -> eta(n) with exterior normal n.
ParametrizedSurface wulff_chart(const AnisotropyFunction& f);
/// Graph z = height(x, y) with upward normal.
ParametrizedSurface graph_chart(std::function<Jet2(const Jet2&, const Jet2&)> height);

/// Image under x -> c x carrying the same normal assignment as the source.
ParametrizedSurface scale_surface(const ParametrizedSurface& surface, double c);
TriMesh scale_surface(const TriMesh& mesh, double c);

/// Euclidean Weingarten map S = -dN in the basis (X_u, X_v).
Mat2 euclid_shape_operator(const ParametrizedSurface& surface, double u, double v);

/// Anisotropic shape operator A = D^2 Phi(N) o S with derived quantities.
CurvatureSample aniso_shape_operator(const AnisotropyFunction& f, const ParametrizedSurface& surface,
                                     double u, double v);

/// Real eigenvalues (ascending) of a 2x2 matrix similar to a symmetric one.
/// Throws DomainError when the discriminant is negative beyond round-off.
Vec2 real_eigenvalues(const Mat2& m);

/// Matrix P(p, q) with H = trace(P U) for the graph z = u over the plane
/// spanned by the first two columns of `frame`, where U is the Hessian of u
/// and (p, q) its gradient; the upward normal is the third column.
template <typename T>
Eigen::Matrix<T, 2, 2> graph_curvature_matrix(const AnisotropyFunction& f, const T& p, const T& q,
                                              const Mat3& frame = Mat3::Identity())
{
    using std::sqrt;
    const T w2 = 1.0 + p * p + q * q;
    const T w = sqrt(w2);
    const Mat3T<T> r = frame.cast<T>();
    Vec3T<T> t1_local(T(1.0), T(0.0), p);
    Vec3T<T> t2_local(T(0.0), T(1.0), q);
    Vec3T<T> n_local(-p / w, -q / w, T(1.0) / w);
    const Vec3T<T> t1 = r * t1_local;
    const Vec3T<T> t2 = r * t2_local;
    const Mat3T<T> d = f.phi_hessian<T>(r * n_local);

    Eigen::Matrix<T, 2, 2> k;
    k(0, 0) = t1.dot(d * t1);
    k(0, 1) = t1.dot(d * t2);
    k(1, 0) = t2.dot(d * t1);
    k(1, 1) = t2.dot(d * t2);

    // adj(G) = C, det(G) = W^2, so G^{-1} = C / W^2.
    Eigen::Matrix<T, 2, 2> c;
    c(0, 0) = 1.0 + q * q;
    c(0, 1) = -p * q;
    c(1, 0) = -p * q;
    c(1, 1) = 1.0 + p * p;
    const T scale = T(1.0) / (w2 * w2 * w);
    return (c * k * c) * scale;
}

struct MeshCurvature
{
    std::vector<double> H;
    std::vector<bool> valid; ///< false where fewer than 5 usable neighbors
    std::size_t flagged = 0;
};

/// Per-vertex anisotropic mean curvature from local quadratic fits over the
/// 2-ring in the frame of the supplied vertex normal.
MeshCurvature aniso_H_mesh(const AnisotropyFunction& f, const TriMesh& mesh);

struct FunctionalValue
{
    double area_term = 0.0;   ///< sum over triangles of area * F(N_T)
    double volume_term = 0.0; ///< sum over triangles of area * <centroid, N_T> / 3
    double H0 = 0.0;
    double total = 0.0;       ///< area_term + H0 * volume_term
};

double functional_F(const AnisotropyFunction& f, const TriMesh& mesh);
FunctionalValue functional_F0(const AnisotropyFunction& f, const TriMesh& mesh, double h0);

struct VariationCheck
{
    double numeric_derivative = 0.0; ///< central difference of F0 under x -> x + t phi N
    double curvature_pairing = 0.0;  ///< integral of (H - H0) phi
    double sign = 0.0;               ///< calibrated constant s
    double area_term = 0.0;
};

inline constexpr double kVariationStep = 1e-5;

/// Sign s in dF0 = s * integral (H - H0) phi, calibrated once on the level-4
/// unit sphere with phi = 1 and H0 = 0.
double calibrated_variation_sign();

VariationCheck first_variation_check(const AnisotropyFunction& f, const TriMesh& mesh,
                                     const std::vector<double>& phi, double h0);

} // namespace camc
