#pragma once

#include <camc/anisotropy.hpp>
#include <camc/curvature.hpp>
#include <camc/mesh.hpp>

#include <iosfwd>
#include <vector>

namespace camc {

/// Triangulated Wulff shape eta(S^2). `mesh.normals` holds the source unit
/// normals p with vertex = eta(p); they are the exterior normals of the shape.
struct WulffMesh
{
    TriMesh mesh;
    const std::vector<Vec3>& source_normals() const { return mesh.normals; }
};

/// Thrown when an operation needs a certified elliptic anisotropy.
class EllipticityError : public DomainError
{
public:
    using DomainError::DomainError;
};

/// Icosphere directions mapped through eta. Refuses anisotropies that do not
/// pass check_ellipticity (at level max(subdivision_level, 4)).
WulffMesh build_wulff_mesh(const AnisotropyFunction& f, int subdivision_level);

/// Maximum width max_u F(u) + F(-u) over icosphere directions, polished by a
/// local search on the sphere. Equals the extrinsic diameter of the shape.
double wulff_diameter(const AnisotropyFunction& f, int subdivision_level = 4);

/// Extremes of the principal curvatures of the Wulff shape (exterior normal),
/// the reciprocals of the nonzero eigenvalues of D^2 Phi. 0 < m <= M.
struct CurvatureRange
{
    double m = 0.0;
    double M = 0.0;
};

CurvatureRange wulff_curvature_range(const AnisotropyFunction& f, int subdivision_level = 4);

struct ProfileSample
{
    double theta = 0.0;
    Vec3 point;  ///< eta(normal)
    Vec3 normal; ///< cos(theta) e1 + sin(theta) e2
};

/// Points of the Wulff shape whose normal is orthogonal to `axis`, sampled
/// uniformly in theta, counterclockwise about the axis (e1 x e2 = axis).
struct ProfileCurve
{
    Vec3 axis;
    Vec3 e1;
    Vec3 e2;
    std::vector<ProfileSample> samples;
};

ProfileCurve profile_curve(const AnisotropyFunction& f, const Vec3& axis, int n_samples);

/// Finite patch {gamma(theta) + lambda axis : |lambda| <= height / 2} of the
/// cylinder over the profile curve, meshed and as an exact chart (theta, lambda)
/// with exterior normal.
struct CylinderPatch
{
    ProfileCurve profile;
    double height = 0.0;
    TriMesh mesh;
    ParametrizedSurface chart;
};

CylinderPatch build_cylinder(const AnisotropyFunction& f, const Vec3& axis, double height, int n_samples);

/// Height above (x, y) of the part of scale * W whose exterior normal points
/// upward, found by Newton inversion of the horizontal components of eta.
/// Throws DomainError when (x, y) lies outside the projection of that part.
double wulff_cap_height(const AnisotropyFunction& f, double x, double y, double scale = 1.0);

/// CSV with header `theta,x,y,z,px,py,pz`.
void write_profile_csv(std::ostream& out, const ProfileCurve& curve);

/// Maximizes `g` over the unit sphere by compass search from `start` until
/// the step drops below `min_step`; returns the maximizer.
template <typename Fn>
Vec3 maximize_on_sphere(Fn&& g, Vec3 start, double step = 0.05, double min_step = 1e-11)
{
    Vec3 best = start.normalized();
    double value = g(best);
    int guard = 0;
    while (step > min_step && guard++ < 20000) {
        const auto [e1, e2] = tangent_frame(best);
        bool improved = false;
        for (int k = 0; k < 8; ++k) {
            const double a = k * 0.7853981633974483;
            const Vec3 cand = (best + step * (std::cos(a) * e1 + std::sin(a) * e2)).normalized();
            const double cv = g(cand);
            if (cv > value) {
                best = cand;
                value = cv;
                improved = true;
                break;
            }
        }
        if (!improved) step *= 0.5;
    }
    return best;
}

} // namespace camc
