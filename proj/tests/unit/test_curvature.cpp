#include "support.hpp"

#include <doctest.h>

#include <camc/curvature.hpp>
#include <camc/oracles.hpp>
#include <camc/wulff.hpp>

#include <numeric>

using namespace camc;
using namespace camc::test;

namespace {

ParametrizedSurface wavy_graph()
{
    return graph_chart([](const Jet2& x, const Jet2& y) { return 0.3 * sin(x) * cos(1.3 * y) + 0.2 * x * x; });
}

// dN by central differences of the chart normal.
Mat2 fd_shape_operator(const ParametrizedSurface& s, double u, double v)
{
    constexpr double h = 1e-6;
    const ChartPoint p = s.evaluate(u, v);
    const Vec3 nu = (s.normal(u + h, v) - s.normal(u - h, v)) / (2 * h);
    const Vec3 nv = (s.normal(u, v + h) - s.normal(u, v - h)) / (2 * h);
    Eigen::Matrix<double, 3, 2> j;
    j << p.xu, p.xv;
    Eigen::Matrix<double, 3, 2> dn;
    dn << -nu, -nv;
    return (j.transpose() * j).inverse() * j.transpose() * dn;
}

} // namespace

TEST_CASE("Euclidean shape operator on basic charts")
{
    const Mat2 plane = euclid_shape_operator(plane_chart(), 0.3, -0.2);
    CHECK(plane.norm() < 1e-15);

    const Mat2 sphere = euclid_shape_operator(sphere_chart(1.0), 1.1, 0.4);
    CHECK((sphere + Mat2::Identity()).norm() < 1e-13);

    const double r = 0.7;
    const Vec2 ev = real_eigenvalues(euclid_shape_operator(round_cylinder_chart(r), 0.9, 0.1));
    CHECK(ev[0] == doctest::Approx(-1.0 / r));
    CHECK(std::abs(ev[1]) < 1e-14);
    CHECK((euclid_shape_operator(round_cylinder_chart(r), 0.9, 0.1) - fd_shape_operator(round_cylinder_chart(r), 0.9, 0.1)).norm() < 1e-6);
}

TEST_CASE("shape operator agrees with finite differences of N")
{
    std::mt19937_64 rng(7);
    const std::vector<ParametrizedSurface> charts = {torus_chart(2.0, 0.7), wavy_graph(), wulff_chart(perturbed_f())};
    for (const auto& s : charts) {
        for (int k = 0; k < 20; ++k) {
            const double u = uniform(rng, 0.3, 2.5);
            const double v = uniform(rng, 0.3, 2.5);
            CHECK((euclid_shape_operator(s, u, v) - fd_shape_operator(s, u, v)).norm() < 1e-6);
        }
    }
}

TEST_CASE("anisotropic shape operator: plane, Wulff chart, round reduction")
{
    std::mt19937_64 rng(8);
    for (const auto& f : {round_f(), ellipsoid_f(), perturbed_f(), tilted_ellipsoid_f()}) {
        CAPTURE(f.name());
        const CurvatureSample p = aniso_shape_operator(f, plane_chart(), 0.1, 0.2);
        CHECK(p.A.norm() < 1e-15);
        CHECK(p.H == 0.0);
        const ParametrizedSurface w = wulff_chart(f);
        for (int k = 0; k < 50; ++k) {
            const CurvatureSample s = aniso_shape_operator(f, w, uniform(rng, 0.05, kPi - 0.05), uniform(rng, 0, 2 * kPi));
            CHECK((s.A + Mat2::Identity()).norm() < 1e-8);
            CHECK(s.H == doctest::Approx(-2.0).epsilon(1e-10));
            CHECK(s.lambda1 == doctest::Approx(-1.0));
            CHECK(s.lambda2 == doctest::Approx(-1.0));
        }
    }
    const std::vector<ParametrizedSurface> charts = {torus_chart(2.0, 0.7), wavy_graph(), round_cylinder_chart(0.4)};
    for (const auto& s : charts) {
        for (int k = 0; k < 20; ++k) {
            const double u = uniform(rng, 0.0, 1.0);
            const double v = uniform(rng, 0.0, 1.0);
            const CurvatureSample c = aniso_shape_operator(round_f(), s, u, v);
            CHECK((c.A - c.S).norm() < 1e-13);
            // Twice the classical mean curvature (exterior sign convention).
            CHECK(c.H == doctest::Approx(c.kappa1 + c.kappa2).epsilon(1e-10));
            CHECK(c.K == doctest::Approx(c.S.determinant()));
        }
    }
}

TEST_CASE("2x2 and ambient-trace routes agree; eigenvalues are real")
{
    std::mt19937_64 rng(9);
    const std::vector<ParametrizedSurface> charts = {torus_chart(2.0, 0.7), wavy_graph(), sphere_chart(1.3),
                                                     wulff_chart(ellipsoid_f())};
    const auto fs = all_f();
    for (int k = 0; k < 10000; ++k) {
        const auto& f = fs[k % 3];
        const auto& s = charts[(k / 3) % charts.size()];
        const CurvatureSample c = aniso_shape_operator(f, s, uniform(rng, 0.1, 3.0), uniform(rng, 0.0, 6.2));
        REQUIRE(std::abs(c.H - c.H_ambient) <= 1e-10 * std::max(1.0, std::abs(c.H)));
        REQUIRE(c.lambda1 <= c.lambda2);
        REQUIRE(c.lambda1 + c.lambda2 == doctest::Approx(c.H));
        REQUIRE(c.lambda1 * c.lambda2 == doctest::Approx(c.A.determinant()).epsilon(1e-9));
    }
}

TEST_CASE("homothety law on charts and the antipodal map")
{
    std::mt19937_64 rng(10);
    for (const auto& f : all_f()) {
        const ParametrizedSurface w = wulff_chart(f);
        CHECK(aniso_shape_operator(f, scale_surface(w, 2.0), 0.7, 1.9).H == doctest::Approx(-1.0));
        CHECK(aniso_shape_operator(f, scale_surface(w, -1.0), 0.7, 1.9).H == doctest::Approx(2.0));
        const CylinderPatch cyl = build_cylinder(f, Vec3::UnitX(), 2.0, 32);
        CHECK(std::abs(aniso_shape_operator(f, scale_surface(cyl.chart, 3.0), 1.0, 0.2).H + 1.0 / 3.0) <= 1e-10);
        for (const double c : {0.5, 2.0, 5.0}) {
            const ParametrizedSurface t = torus_chart(2.0, 0.7);
            const double u = uniform(rng, 0, 6), v = uniform(rng, 0, 6);
            CHECK(std::abs(aniso_shape_operator(f, scale_surface(t, c), u, v).H -
                           aniso_shape_operator(f, t, u, v).H / c) <= 1e-10);
        }
    }
    CHECK_THROWS_AS(scale_surface(sphere_chart(1.0), 0.0), DomainError);
    CHECK_THROWS_AS(scale_surface(icosphere(1), 0.0), DomainError);

    const TriMesh m = scale_surface(icosphere(1), -2.0);
    CHECK(m.vertices[0] == -2.0 * icosphere(1).vertices[0]);
    CHECK(m.normals[0] == icosphere(1).normals[0]);
}

TEST_CASE("interior-normal H on Wulff shapes")
{
    ParametrizedSurface e = wulff_chart(ellipsoid_f());
    e.orientation = -1;
    // Centrally symmetric F: the interior normal gives +2 everywhere.
    CHECK(aniso_shape_operator(ellipsoid_f(), e, 0.4, 2.0).H == doctest::Approx(2.0));
    ParametrizedSurface p = wulff_chart(perturbed_f());
    p.orientation = -1;
    double lo = 1e9, hi = -1e9;
    for (int i = 1; i < 30; ++i) {
        for (int j = 0; j < 30; ++j) {
            const double h = aniso_shape_operator(perturbed_f(), p, kPi * i / 30, 2 * kPi * j / 30).H;
            lo = std::min(lo, h);
            hi = std::max(hi, h);
        }
    }
    CHECK(hi - lo > 0.1);
}

TEST_CASE("non-immersed chart point is rejected")
{
    CHECK_THROWS_AS(euclid_shape_operator(sphere_chart(1.0), 0.0, 0.3), DomainError);
    Mat2 rot;
    rot << 0.0, -1.0, 1.0, 0.0;
    CHECK_THROWS_AS(real_eigenvalues(rot), DomainError);
}

TEST_CASE("mesh curvature")
{
    const TriMesh s4 = icosphere(4);
    const MeshCurvature mc = aniso_H_mesh(round_f(), s4);
    CHECK(mc.flagged == 0u);
    const double mean = std::accumulate(mc.H.begin(), mc.H.end(), 0.0) / mc.H.size();
    double dev = 0.0;
    for (double h : mc.H) dev = std::max(dev, std::abs(h + 2.0));
    CHECK(std::abs(mean + 2.0) <= 2e-2);
    CHECK(dev <= 5e-2);

    const WulffMesh w = build_wulff_mesh(ellipsoid_f(), 4);
    const MeshCurvature we = aniso_H_mesh(ellipsoid_f(), w.mesh);
    double wdev = 0.0;
    for (double h : we.H) wdev = std::max(wdev, std::abs(h + 2.0));
    CHECK(wdev <= 5e-2);

    TriMesh plane = grid_mesh(-1.0, 1.0, -1.0, 1.0, 9, 9, [](double, double) { return 0.5; });
    plane.normals.assign(plane.num_vertices(), Vec3::UnitZ());
    for (const auto& f : all_f()) {
        for (double h : aniso_H_mesh(f, plane).H) CHECK(std::abs(h) <= 1e-8);
    }

    TriMesh tri;
    tri.vertices = {Vec3(0, 0, 0), Vec3(1, 0, 0), Vec3(0, 1, 0)};
    tri.normals.assign(3, Vec3::UnitZ());
    tri.triangles = {{0, 1, 2}};
    const MeshCurvature few = aniso_H_mesh(round_f(), tri);
    CHECK(few.flagged == 3u);
    CHECK(std::isnan(few.H[0]));
    CHECK_FALSE(few.valid[0]);

    tri.normals.clear();
    CHECK_THROWS_AS(aniso_H_mesh(round_f(), tri), DomainError);
}

TEST_CASE("functionals")
{
    const TriMesh s = icosphere(4);
    const FunctionalValue v = functional_F0(round_f(), s, -2.0);
    CHECK(v.area_term == doctest::Approx(4 * kPi).epsilon(3e-3));
    CHECK(v.volume_term == doctest::Approx(4 * kPi / 3).epsilon(3e-3));
    CHECK(v.total == doctest::Approx(v.area_term - 2.0 * v.volume_term));
    CHECK(functional_F(round_f(), s) == doctest::Approx(v.area_term));

    // Richardson: area error shrinks by about 4 per level.
    double prev_err = 0.0;
    double exact = functional_F(ellipsoid_f(), build_wulff_mesh(ellipsoid_f(), 7).mesh);
    for (int level = 3; level <= 5; ++level) {
        const double err = std::abs(functional_F(ellipsoid_f(), build_wulff_mesh(ellipsoid_f(), level).mesh) - exact);
        if (level > 3) CHECK(prev_err / err == doctest::Approx(4.0).epsilon(0.15));
        prev_err = err;
    }

    TriMesh open = grid_mesh(0.0, 1.0, 0.0, 1.0, 3, 3, [](double, double) { return 0.0; });
    CHECK_NOTHROW(functional_F0(round_f(), open, 0.0));
    CHECK_THROWS_AS(functional_F0(round_f(), open, -1.0), DomainError);
}

TEST_CASE("first variation: calibration, criticality and pairing")
{
    CHECK(calibrated_variation_sign() == -1.0);

    const TriMesh s5 = icosphere(5);
    const std::vector<double> ones(s5.num_vertices(), 1.0);
    const VariationCheck area = first_variation_check(round_f(), s5, ones, 0.0);
    CHECK(area.numeric_derivative == doctest::Approx(area.sign * -2.0 * 4.0 * kPi).epsilon(1e-2));

    std::mt19937_64 rng(11);
    for (const auto& f : all_f()) {
        const WulffMesh w = build_wulff_mesh(f, 5);
        const auto phi = oracle::random_low_order_field(w.source_normals(), rng);
        const VariationCheck crit = first_variation_check(f, w.mesh, phi, -2.0);
        CHECK(std::abs(crit.numeric_derivative) <= 1e-3 * crit.area_term);
        const VariationCheck off = first_variation_check(f, w.mesh, phi, 0.0);
        CHECK(std::abs(off.numeric_derivative - off.sign * off.curvature_pairing) <=
              3e-2 * std::abs(off.numeric_derivative));
    }

    // Twice the Wulff shape is critical for H0 = -1.
    const WulffMesh w = build_wulff_mesh(ellipsoid_f(), 5);
    const TriMesh big = scale_surface(w.mesh, 2.0);
    const auto phi = oracle::random_low_order_field(w.source_normals(), rng);
    const VariationCheck c2 = first_variation_check(ellipsoid_f(), big, phi, -1.0);
    CHECK(std::abs(c2.numeric_derivative) <= 1e-3 * c2.area_term);

    TriMesh open = grid_mesh(0.0, 1.0, 0.0, 1.0, 3, 3, [](double, double) { return 0.0; });
    open.normals.assign(open.num_vertices(), Vec3::UnitZ());
    CHECK_THROWS_AS(first_variation_check(round_f(), open, std::vector<double>(9, 1.0), 0.0), DomainError);
    CHECK_THROWS_AS(first_variation_check(round_f(), s5, std::vector<double>(3, 1.0), 0.0), DomainError);
}
