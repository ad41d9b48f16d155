#pragma once

#include <camc/anisotropy.hpp>
#include <camc/mesh.hpp>

#include <optional>
#include <span>
#include <vector>

namespace camc {

/// Result of max over unit v of min_i <n_i, v>.
struct HemisphereVerdict
{
    bool feasible = false;       ///< margin >= -kHemisphereTolerance
    std::optional<Vec3> witness; ///< maximizing v when feasible
    Vec3 argmax = Vec3::UnitZ(); ///< maximizing v in every case
    double margin = 0.0;
};

inline constexpr double kHemisphereTolerance = 1e-12;

/// Decides whether the normals fit in a closed hemisphere. The maximin is
/// attained at a single normal, a normalized pairwise bisector or the
/// (signed) circumcenter direction of a triple, so candidates are enumerated
/// with pruning against the best value found so far.
HemisphereVerdict hemisphere_classifier(std::span<const Vec3> normals);

/// Meeks-type constants for a given anisotropy and H0.
struct BoundsReport
{
    double d_w = 0.0;
    double h0 = 0.0;
    double d0 = 0.0;       ///< 2 sqrt(3) d_W / |H0|
    double d0_unscaled = 0.0; ///< 2 sqrt(3) d_W, the H0-free form also in use
    std::vector<double> heights;

    struct Slice
    {
        double offset = 0.0;
        std::vector<double> components; ///< extrinsic diameter per connected component
        bool perturbed = false;
    };
    std::vector<Slice> slices;
};

inline double meeks_d0(double d_w, double h0) { return 2.0 * std::sqrt(3.0) * d_w / std::abs(h0); }

/// d_W from wulff_diameter and d0 = 2 sqrt(3) d_W / |H0|. Throws on H0 = 0.
BoundsReport meeks_constant(const AnisotropyFunction& f, double h0, int subdivision_level = 4);

/// Intersects the mesh with planes <x, normal> = offset and returns, per
/// offset, the diameter of each connected component of the section. Offsets
/// hitting a vertex within 1e-12 are moved by 1e-9 (flagged in the result).
std::vector<BoundsReport::Slice> slice_components_diameter(const TriMesh& mesh, const Vec3& plane_normal,
                                                           std::span<const double> offsets);

/// Max unsigned distance of the points to the plane <x, normal> = offset.
double graph_height_report(std::span<const Vec3> points, const Vec3& plane_normal, double offset);

} // namespace camc
