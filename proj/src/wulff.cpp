#include <camc/wulff.hpp>

#include <Eigen/LU>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <sstream>
#include <tuple>

namespace camc {

namespace {

void require_elliptic(const AnisotropyFunction& f, int level)
{
    const EllipticityReport report = check_ellipticity(f, std::max(level, 4));
    if (!report.passed) {
        std::ostringstream msg;
        msg << "anisotropy " << f.name() << " is not elliptic (min eigenvalue " << report.min_eigenvalue << ")";
        throw EllipticityError(msg.str());
    }
}

// Indices of the `count` largest values.
std::vector<std::size_t> top_indices(const std::vector<double>& values, std::size_t count)
{
    std::vector<std::size_t> idx(values.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    count = std::min(count, idx.size());
    std::partial_sort(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(count), idx.end(),
                      [&](std::size_t a, std::size_t b) { return values[a] > values[b]; });
    idx.resize(count);
    return idx;
}

template <typename Fn>
double sampled_max(Fn&& g, int level)
{
    const auto dirs = sphere_directions(level);
    std::vector<double> values(dirs.size());
    for (std::size_t i = 0; i < dirs.size(); ++i) values[i] = g(dirs[i]);
    double best = *std::max_element(values.begin(), values.end());
    for (std::size_t i : top_indices(values, 6)) best = std::max(best, g(maximize_on_sphere(g, dirs[i])));
    return best;
}

} // namespace

WulffMesh build_wulff_mesh(const AnisotropyFunction& f, int subdivision_level)
{
    require_elliptic(f, subdivision_level);
    WulffMesh out;
    out.mesh = icosphere(subdivision_level);
    for (std::size_t i = 0; i < out.mesh.num_vertices(); ++i) out.mesh.vertices[i] = f.eta(out.mesh.normals[i]);
    return out;
}

double wulff_diameter(const AnisotropyFunction& f, int subdivision_level)
{
    require_elliptic(f, subdivision_level);
    return sampled_max([&](const Vec3& u) { return f.eval(u) + f.eval(-u); }, subdivision_level);
}

CurvatureRange wulff_curvature_range(const AnisotropyFunction& f, int subdivision_level)
{
    require_elliptic(f, subdivision_level);
    const double hess_max = sampled_max([&](const Vec3& n) { return tangential_eigenvalues(f, n)[1]; },
                                        subdivision_level);
    const double hess_min = -sampled_max([&](const Vec3& n) { return -tangential_eigenvalues(f, n)[0]; },
                                         subdivision_level);
    return {1.0 / hess_max, 1.0 / hess_min};
}

ProfileCurve profile_curve(const AnisotropyFunction& f, const Vec3& axis, int n_samples)
{
    if (n_samples < 16) throw DomainError("profile_curve: need at least 16 samples");
    require_elliptic(f, 4);
    ProfileCurve curve;
    curve.axis = require_unit(axis, "cylinder axis");
    std::tie(curve.e1, curve.e2) = tangent_frame(curve.axis);
    curve.samples.reserve(n_samples);
    for (int k = 0; k < n_samples; ++k) {
        const double theta = 2.0 * std::numbers::pi * k / n_samples;
        ProfileSample s;
        s.theta = theta;
        s.normal = std::cos(theta) * curve.e1 + std::sin(theta) * curve.e2;
        s.point = f.eta(s.normal.normalized());
        curve.samples.push_back(s);
    }
    return curve;
}

CylinderPatch build_cylinder(const AnisotropyFunction& f, const Vec3& axis, double height, int n_samples)
{
    if (!(height > 0.0)) throw DomainError("build_cylinder: height must be positive");
    CylinderPatch patch;
    patch.profile = profile_curve(f, axis, n_samples);
    patch.height = height;

    const Vec3 v0 = patch.profile.axis;
    const Vec3 e1 = patch.profile.e1;
    const Vec3 e2 = patch.profile.e2;
    patch.chart.chart = [f, v0, e1, e2](const Jet2& theta, const Jet2& lambda) {
        const Vec3J n = e1.cast<Jet2>() * cos(theta) + e2.cast<Jet2>() * sin(theta);
        return Vec3J(f.phi_gradient<Jet2>(n) + v0.cast<Jet2>() * lambda);
    };
    patch.chart.orientation = 1;

    const int rows = std::max(2, n_samples / 4 + 1);
    const int cols = n_samples;
    auto& mesh = patch.mesh;
    for (int j = 0; j < rows; ++j) {
        const double lambda = -0.5 * height + height * j / (rows - 1);
        for (const auto& s : patch.profile.samples) {
            mesh.vertices.push_back(s.point + lambda * v0);
            mesh.normals.push_back(s.normal);
        }
    }
    for (int j = 0; j + 1 < rows; ++j) {
        for (int i = 0; i < cols; ++i) {
            const int a = j * cols + i;
            const int b = j * cols + (i + 1) % cols;
            const int c = a + cols;
            const int d = b + cols;
            mesh.triangles.push_back({a, b, d});
            mesh.triangles.push_back({a, d, c});
        }
    }
    return patch;
}

double wulff_cap_height(const AnisotropyFunction& f, double x, double y, double scale)
{
    if (!(scale > 0.0)) throw DomainError("wulff_cap_height: scale must be positive");
    const Vec2 target(x / scale, y / scale);
    // n = (s, t, 1) up to normalization; eta is 0-homogeneous.
    Vec2 st = Vec2::Zero();
    for (int it = 0; it < 100; ++it) {
        const Vec3 n(st[0], st[1], 1.0);
        const Vec3 g = f.phi_gradient<double>(n);
        const Vec2 res = g.head<2>() - target;
        if (res.norm() < 1e-15) return scale * g.z();
        const Mat2 jac = f.phi_hessian<double>(n).topLeftCorner<2, 2>();
        Vec2 step = jac.fullPivLu().solve(res);
        double alpha = 1.0;
        while (alpha > 1e-6) {
            const Vec2 cand = st - alpha * step;
            const Vec2 cres = f.phi_gradient<double>(Vec3(cand[0], cand[1], 1.0)).head<2>() - target;
            if (cres.norm() < res.norm()) break;
            alpha *= 0.5;
        }
        if (alpha <= 1e-6) break;
        st -= alpha * step;
    }
    const Vec3 g = f.phi_gradient<double>(Vec3(st[0], st[1], 1.0));
    if ((g.head<2>() - target).norm() > 1e-12) throw DomainError("wulff_cap_height: point outside the cap projection");
    return scale * g.z();
}

void write_profile_csv(std::ostream& out, const ProfileCurve& curve)
{
    const auto precision = out.precision(17);
    out << "theta,x,y,z,px,py,pz\n";
    for (const auto& s : curve.samples) {
        out << s.theta << ',' << s.point.x() << ',' << s.point.y() << ',' << s.point.z() << ',' << s.normal.x()
            << ',' << s.normal.y() << ',' << s.normal.z() << '\n';
    }
    out.precision(precision);
}

} // namespace camc
