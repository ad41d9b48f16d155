#include <camc/curvature.hpp>

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

namespace camc {

namespace {

Vec3 values(const Vec3J& x) { return {x[0].v, x[1].v, x[2].v}; }
Vec3 first(const Vec3J& x, int i) { return {x[0].g[i], x[1].g[i], x[2].g[i]}; }
Vec3 second(const Vec3J& x, int k) { return {x[0].h[k], x[1].h[k], x[2].h[k]}; }

double spectral_norm(const Mat2& m)
{
    Eigen::JacobiSVD<Mat2> svd(m);
    return svd.singularValues()[0];
}

} // namespace

ChartPoint ParametrizedSurface::evaluate(double u, double v) const
{
    const Vec3J x = chart(Jet2::variable(u, 0), Jet2::variable(v, 1));
    return {values(x), first(x, 0), first(x, 1), second(x, 0), second(x, 1), second(x, 2)};
}

Vec3 ParametrizedSurface::normal(double u, double v) const
{
    const ChartPoint cp = evaluate(u, v);
    const Vec3 cross = cp.xu.cross(cp.xv);
    const double len = cross.norm();
    if (!(len > 1e-10)) throw DomainError("chart is not immersed at this parameter");
    return orientation * cross / len;
}

ParametrizedSurface plane_chart()
{
    return {[](const Jet2& u, const Jet2& v) { return Vec3J(u, v, Jet2(0.0)); }, 1};
}

ParametrizedSurface sphere_chart(double radius)
{
    return {[radius](const Jet2& theta, const Jet2& phi) {
                return Vec3J(radius * sin(theta) * cos(phi), radius * sin(theta) * sin(phi),
                             radius * cos(theta));
            },
            1};
}

ParametrizedSurface round_cylinder_chart(double radius)
{
    // X_theta x X_z points outward.
    return {[radius](const Jet2& theta, const Jet2& z) {
                return Vec3J(radius * cos(theta), radius * sin(theta), z);
            },
            1};
}

ParametrizedSurface torus_chart(double major, double minor)
{
    return {[major, minor](const Jet2& a, const Jet2& b) {
                const Jet2 rho = major + minor * cos(b);
                return Vec3J(rho * cos(a), rho * sin(a), minor * sin(b));
            },
            1};
}

ParametrizedSurface wulff_chart(const AnisotropyFunction& f)
{
    return {[f](const Jet2& theta, const Jet2& phi) {
                const Vec3J n(sin(theta) * cos(phi), sin(theta) * sin(phi), cos(theta));
                return Vec3J(f.phi_gradient<Jet2>(n));
            },
            1};
}

ParametrizedSurface graph_chart(std::function<Jet2(const Jet2&, const Jet2&)> height)
{
    return {[height = std::move(height)](const Jet2& x, const Jet2& y) { return Vec3J(x, y, height(x, y)); },
            1};
}

ParametrizedSurface scale_surface(const ParametrizedSurface& surface, double c)
{
    if (c == 0.0) throw DomainError("scale_surface: factor must be nonzero");
    // X_u x X_v scales by c^2 > 0, so the same orientation sign keeps N.
    return {[chart = surface.chart, c](const Jet2& u, const Jet2& v) { return Vec3J(chart(u, v) * Jet2(c)); },
            surface.orientation};
}

TriMesh scale_surface(const TriMesh& mesh, double c)
{
    if (c == 0.0) throw DomainError("scale_surface: factor must be nonzero");
    TriMesh scaled = mesh;
    for (auto& v : scaled.vertices) v *= c;
    return scaled;
}

Vec2 real_eigenvalues(const Mat2& m)
{
    const double half_trace = 0.5 * m.trace();
    double disc = half_trace * half_trace - m.determinant();
    const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    if (disc < 0.0) {
        if (disc < -1e-10 * scale * scale) throw DomainError("real_eigenvalues: complex spectrum");
        disc = 0.0;
    }
    const double root = std::sqrt(disc);
    return {half_trace - root, half_trace + root};
}

namespace {

struct TangentData
{
    ChartPoint cp;
    Eigen::Matrix<double, 3, 2> jac;
    Mat2 metric;
    Mat2 metric_inv;
    Vec3 normal;
    Mat2 S;
};

TangentData tangent_data(const ParametrizedSurface& surface, double u, double v)
{
    TangentData td;
    td.cp = surface.evaluate(u, v);
    const Vec3 cross = td.cp.xu.cross(td.cp.xv);
    const double len = cross.norm();
    if (!(len > 1e-10)) throw DomainError("degenerate metric: chart is not immersed at this parameter");
    td.normal = surface.orientation * cross / len;
    td.jac.col(0) = td.cp.xu;
    td.jac.col(1) = td.cp.xv;
    td.metric = td.jac.transpose() * td.jac;
    td.metric_inv = td.metric.inverse();
    Mat2 second;
    second << td.cp.xuu.dot(td.normal), td.cp.xuv.dot(td.normal), td.cp.xuv.dot(td.normal),
        td.cp.xvv.dot(td.normal);
    td.S = td.metric_inv * second;
    return td;
}

} // namespace

Mat2 euclid_shape_operator(const ParametrizedSurface& surface, double u, double v)
{
    return tangent_data(surface, u, v).S;
}

CurvatureSample aniso_shape_operator(const AnisotropyFunction& f, const ParametrizedSurface& surface,
                                     double u, double v)
{
    const TangentData td = tangent_data(surface, u, v);
    const Mat3 d = f.hessian(td.normal);

    CurvatureSample s;
    s.point = td.cp.x;
    s.normal = td.normal;
    s.S = td.S;
    // D^2 Phi(N) maps N-perp to itself; B is its matrix in (X_u, X_v).
    const Mat2 b = td.metric_inv * (td.jac.transpose() * d * td.jac);
    s.A = b * td.S;
    s.H = s.A.trace();
    s.K = td.S.determinant();

    const Mat3 s_ambient = td.jac * td.S * td.metric_inv * td.jac.transpose();
    s.H_ambient = (d * s_ambient).trace();

    const Vec2 lambda = real_eigenvalues(s.A);
    s.lambda1 = lambda[0];
    s.lambda2 = lambda[1];
    const Vec2 kappa = real_eigenvalues(td.S);
    s.kappa1 = kappa[0];
    s.kappa2 = kappa[1];
    s.sigma_norm = std::hypot(s.kappa1, s.kappa2);
    s.aniso_norm = std::hypot(s.lambda1, s.lambda2);

    const auto [e1, e2] = tangent_frame(td.normal);
    Eigen::Matrix<double, 3, 2> frame;
    frame.col(0) = e1;
    frame.col(1) = e2;
    const Mat3 a_ambient = td.jac * s.A * td.metric_inv * td.jac.transpose();
    s.S_operator_norm = spectral_norm(frame.transpose() * s_ambient * frame);
    s.A_operator_norm = spectral_norm(frame.transpose() * a_ambient * frame);
    return s;
}

MeshCurvature aniso_H_mesh(const AnisotropyFunction& f, const TriMesh& mesh)
{
    if (!mesh.has_normals()) throw DomainError("aniso_H_mesh: mesh needs per-vertex normals");
    const auto adjacency = vertex_neighbors(mesh);
    MeshCurvature out;
    out.H.assign(mesh.num_vertices(), 0.0);
    out.valid.assign(mesh.num_vertices(), false);

    for (std::size_t i = 0; i < mesh.num_vertices(); ++i) {
        const Vec3 n = require_unit(mesh.normals[i], "vertex normal");
        const auto [e1, e2] = tangent_frame(n);
        const auto ring = two_ring(adjacency, static_cast<int>(i));
        if (ring.size() < 5) {
            ++out.flagged;
            out.H[i] = std::numeric_limits<double>::quiet_NaN();
            continue;
        }
        Eigen::MatrixXd design(ring.size(), 5);
        Eigen::VectorXd rhs(ring.size());
        for (std::size_t k = 0; k < ring.size(); ++k) {
            const Vec3 d = mesh.vertices[ring[k]] - mesh.vertices[i];
            const double x = d.dot(e1);
            const double y = d.dot(e2);
            design.row(k) << x * x, x * y, y * y, x, y;
            rhs[k] = d.dot(n);
        }
        const Eigen::VectorXd c = design.colPivHouseholderQr().solve(rhs);
        Mat2 hess;
        hess << 2.0 * c[0], c[1], c[1], 2.0 * c[2];
        Mat3 frame;
        frame.col(0) = e1;
        frame.col(1) = e2;
        frame.col(2) = n;
        out.H[i] = (graph_curvature_matrix<double>(f, c[3], c[4], frame) * hess).trace();
        out.valid[i] = true;
    }
    return out;
}

double functional_F(const AnisotropyFunction& f, const TriMesh& mesh)
{
    double area = 0.0;
    for (std::size_t t = 0; t < mesh.num_triangles(); ++t) {
        area += triangle_area(mesh, t) * f.eval(triangle_normal(mesh, t));
    }
    return area;
}

FunctionalValue functional_F0(const AnisotropyFunction& f, const TriMesh& mesh, double h0)
{
    FunctionalValue out;
    out.H0 = h0;
    const bool closed = is_closed(mesh);
    if (h0 != 0.0 && !closed) throw DomainError("functional_F0: volume term needs a closed mesh");
    for (std::size_t t = 0; t < mesh.num_triangles(); ++t) {
        const auto& tri = mesh.triangles[t];
        const double area = triangle_area(mesh, t);
        const Vec3 n = triangle_normal(mesh, t);
        const Vec3 centroid = (mesh.vertices[tri[0]] + mesh.vertices[tri[1]] + mesh.vertices[tri[2]]) / 3.0;
        out.area_term += area * f.eval(n);
        out.volume_term += area * centroid.dot(n) / 3.0;
    }
    out.total = out.area_term + h0 * out.volume_term;
    return out;
}

namespace {

double displaced_total(const AnisotropyFunction& f, const TriMesh& mesh, const std::vector<double>& phi,
                       double h0, double t)
{
    TriMesh moved = mesh;
    for (std::size_t i = 0; i < moved.num_vertices(); ++i) moved.vertices[i] += t * phi[i] * mesh.normals[i];
    return functional_F0(f, moved, h0).total;
}

VariationCheck variation_raw(const AnisotropyFunction& f, const TriMesh& mesh, const std::vector<double>& phi,
                             double h0)
{
    if (!is_closed(mesh)) throw DomainError("first_variation_check: mesh must be closed");
    if (!mesh.has_normals()) throw DomainError("first_variation_check: mesh needs per-vertex normals");
    if (phi.size() != mesh.num_vertices()) throw DomainError("first_variation_check: phi size mismatch");

    VariationCheck out;
    const double t = kVariationStep;
    out.numeric_derivative =
        (displaced_total(f, mesh, phi, h0, t) - displaced_total(f, mesh, phi, h0, -t)) / (2.0 * t);

    const MeshCurvature curv = aniso_H_mesh(f, mesh);
    const auto areas = vertex_areas(mesh);
    for (std::size_t i = 0; i < mesh.num_vertices(); ++i) {
        if (!curv.valid[i]) continue;
        out.curvature_pairing += (curv.H[i] - h0) * phi[i] * areas[i];
    }
    out.area_term = functional_F0(f, mesh, h0).area_term;
    return out;
}

} // namespace

double calibrated_variation_sign()
{
    static const double sign = [] {
        const TriMesh sphere = icosphere(4);
        const std::vector<double> ones(sphere.num_vertices(), 1.0);
        const VariationCheck raw = variation_raw(AnisotropyFunction::constant(), sphere, ones, 0.0);
        return raw.numeric_derivative / raw.curvature_pairing < 0.0 ? -1.0 : 1.0;
    }();
    return sign;
}

VariationCheck first_variation_check(const AnisotropyFunction& f, const TriMesh& mesh,
                                     const std::vector<double>& phi, double h0)
{
    VariationCheck out = variation_raw(f, mesh, phi, h0);
    out.sign = calibrated_variation_sign();
    return out;
}

} // namespace camc
