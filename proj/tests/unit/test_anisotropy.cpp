#include "support.hpp"

#include <doctest.h>

#include <camc/anisotropy.hpp>
#include <camc/jet.hpp>

using namespace camc;
using namespace camc::test;

TEST_CASE("constant F: eta is the identity and the Hessian the tangential projector")
{
    const auto f = round_f();
    const Vec3 n = Vec3(1.0, -2.0, 2.0) / 3.0;
    CHECK(f.eval(n) == doctest::Approx(1.0));
    CHECK((f.eta(n) - n).norm() < 1e-15);
    const Mat3 proj = Mat3::Identity() - n * n.transpose();
    CHECK((f.hessian(n) - proj).norm() < 1e-14);
}

TEST_CASE("ellipsoid F at the axes")
{
    const auto f = ellipsoid_f();
    CHECK(f.eval(Vec3::UnitX()) == doctest::Approx(2.0));
    CHECK(f.eval(Vec3::UnitY()) == doctest::Approx(1.0));
    CHECK((f.eta(Vec3::UnitX()) - Vec3(2.0, 0.0, 0.0)).norm() < 1e-15);
    // D^2 Phi(e1) restricted to e1-perp is Q/2 there.
    const Mat3 h = f.hessian(Vec3::UnitX());
    CHECK(h(1, 1) == doctest::Approx(0.5));
    CHECK(h(2, 2) == doctest::Approx(0.5));
    CHECK(std::abs(h(0, 0)) < 1e-15);
}

TEST_CASE("perturbed F values and odd part")
{
    const auto f = perturbed_f(0.2);
    const Vec3 a = f.axis();
    CHECK(f.eval(a) == doctest::Approx(1.2));
    CHECK(f.eval(-a) == doctest::Approx(0.8));
    std::mt19937_64 rng(1);
    for (int k = 0; k < 50; ++k) {
        const Vec3 u = random_unit(rng);
        CHECK(f.eval(u) + f.eval(-u) == doctest::Approx(2.0).epsilon(1e-14));
    }
}

TEST_CASE("eta satisfies the support identity and the Hessian annihilates n")
{
    std::mt19937_64 rng(2);
    for (const auto& f : {round_f(), ellipsoid_f(), perturbed_f(), tilted_ellipsoid_f()}) {
        for (int k = 0; k < 100; ++k) {
            const Vec3 n = random_unit(rng);
            CHECK(f.eta(n).dot(n) == doctest::Approx(f.eval(n)).epsilon(1e-13));
            const Mat3 h = f.hessian(n);
            CHECK((h * n).norm() < 1e-13);
            CHECK((h - h.transpose()).norm() < 1e-13);
        }
    }
}

TEST_CASE("one-homogeneity of Phi off the sphere")
{
    const auto f = tilted_ellipsoid_f();
    const Vec3 x(0.4, -1.1, 2.3);
    const Vec3 n = x.normalized();
    CHECK(f.phi<double>(x) == doctest::Approx(x.norm() * f.eval(n)));
    CHECK((f.phi_gradient<double>(3.0 * x) - f.phi_gradient<double>(x)).norm() < 1e-14);
    CHECK((2.0 * f.phi_hessian<double>(2.0 * x) - f.phi_hessian<double>(x)).norm() < 1e-13);
}

TEST_CASE("analytic derivatives agree with central differences")
{
    for (const auto& f : {round_f(), ellipsoid_f(), perturbed_f(), tilted_ellipsoid_f()}) {
        CHECK(verify_derivatives(f, 200) < 1e-7);
    }
}

TEST_CASE("jet evaluation of Phi carries the same gradient as phi_gradient")
{
    const auto f = perturbed_f();
    const Vec3 x(0.3, 0.5, -0.8);
    const Jet2 a = Jet2::variable(x.x(), 0);
    const Jet2 b = Jet2::variable(x.y(), 1);
    const Vec3J xj(a, b, Jet2(x.z()));
    const Jet2 v = f.phi<Jet2>(xj);
    const Vec3 g = f.phi_gradient<double>(x);
    const Mat3 h = f.phi_hessian<double>(x);
    CHECK(v.g[0] == doctest::Approx(g.x()).epsilon(1e-13));
    CHECK(v.g[1] == doctest::Approx(g.y()).epsilon(1e-13));
    CHECK(v.h[0] == doctest::Approx(h(0, 0)).epsilon(1e-12));
    CHECK(v.h[1] == doctest::Approx(h(0, 1)).epsilon(1e-12));
    CHECK(v.h[2] == doctest::Approx(h(1, 1)).epsilon(1e-12));
}

TEST_CASE("ellipticity: builtins pass, the perturbed family fails past eps = 1/2")
{
    for (const auto& f : all_f()) {
        const auto r = check_ellipticity(f, 4);
        CHECK(r.passed);
        CHECK(r.sample_count == 2562);
    }
    CHECK(check_ellipticity(round_f(), 3).min_eigenvalue == doctest::Approx(1.0));
    CHECK(check_ellipticity(ellipsoid_f(), 4).min_eigenvalue == doctest::Approx(0.5));
    CHECK(check_ellipticity(perturbed_f(0.45), 4).passed);
    const auto bad = check_ellipticity(perturbed_f(0.55), 4);
    CHECK_FALSE(bad.passed);
    CHECK(bad.min_eigenvalue < 0.0);
}

TEST_CASE("tangential eigenvalues are positive and ascending")
{
    std::mt19937_64 rng(3);
    for (int k = 0; k < 100; ++k) {
        const Vec2 ev = tangential_eigenvalues(ellipsoid_f(), random_unit(rng));
        CHECK(ev[0] <= ev[1]);
        CHECK(ev[0] >= 0.5 - 1e-12);
        CHECK(ev[1] <= 4.0 + 1e-12);
    }
}

TEST_CASE("unit-vector tolerance")
{
    const auto f = round_f();
    CHECK_NOTHROW(f.eval(Vec3(0.0, 0.0, 1.0 + 5e-13)));
    CHECK_THROWS_AS(f.eval(Vec3(0.0, 0.0, 1.0 + 1e-9)), DomainError);
    CHECK_THROWS_AS(f.eta(Vec3(0.0, 0.0, 0.0)), DomainError);
    const Vec3 renorm = require_unit(Vec3(0.0, 0.0, 1.0 + 5e-13));
    CHECK(renorm.norm() == doctest::Approx(1.0).epsilon(1e-16));
}

TEST_CASE("constructor preconditions")
{
    Mat3 q = Mat3::Identity();
    q(0, 1) = 0.5;
    CHECK_THROWS_AS(AnisotropyFunction::ellipsoid(q), DomainError); // not symmetric
    CHECK_THROWS_AS(AnisotropyFunction::ellipsoid(Vec3(1.0, -1.0, 1.0).asDiagonal()), DomainError);
    CHECK_THROWS_AS(AnisotropyFunction::perturbed(1.0, Vec3::UnitZ()), DomainError);
    CHECK_THROWS_AS(AnisotropyFunction::perturbed(0.1, Vec3::Zero()), DomainError);
    CHECK_THROWS_AS(check_ellipticity(round_f(), -1), DomainError);
}

TEST_CASE("tangent frame is right-handed and orthonormal")
{
    std::mt19937_64 rng(4);
    for (int k = 0; k < 100; ++k) {
        const Vec3 n = random_unit(rng);
        const auto [e1, e2] = tangent_frame(n);
        CHECK(std::abs(e1.dot(n)) < 1e-15);
        CHECK(std::abs(e1.dot(e2)) < 1e-15);
        CHECK((e1.cross(e2) - n).norm() < 1e-14);
    }
}
