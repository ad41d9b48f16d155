#include "support.hpp"

#include <doctest.h>

#include <camc/analysis.hpp>
#include <camc/mesh.hpp>
#include <camc/oracles.hpp>
#include <camc/wulff.hpp>

using namespace camc;
using namespace camc::test;

TEST_CASE("hemisphere classifier: basic configurations")
{
    const std::vector<Vec3> up = {Vec3::UnitZ()};
    const HemisphereVerdict a = hemisphere_classifier(up);
    CHECK(a.feasible);
    CHECK(a.margin == doctest::Approx(1.0));
    REQUIRE(a.witness);
    CHECK((*a.witness - Vec3::UnitZ()).norm() < 1e-12);

    // Round cylinder about e3: normals span the equator, so only +-e3 work.
    std::vector<Vec3> cyl;
    for (int k = 0; k < 64; ++k) cyl.emplace_back(std::cos(2 * kPi * k / 64), std::sin(2 * kPi * k / 64), 0.0);
    const HemisphereVerdict b = hemisphere_classifier(cyl);
    CHECK(b.feasible);
    CHECK(std::abs(b.margin) <= 1e-12);
    REQUIRE(b.witness);
    CHECK(std::abs(std::abs(b.witness->z()) - 1.0) <= 1e-9);

    const std::vector<Vec3> sphere = sphere_directions(2);
    const HemisphereVerdict c = hemisphere_classifier(sphere);
    CHECK_FALSE(c.feasible);
    CHECK_FALSE(c.witness);
    CHECK(c.margin < -0.5);

    const std::vector<Vec3> opposite = {Vec3::UnitX(), -Vec3::UnitX()};
    const HemisphereVerdict d = hemisphere_classifier(opposite);
    CHECK(d.feasible);
    CHECK(std::abs(d.margin) <= 1e-12);

    CHECK_THROWS_AS(hemisphere_classifier(std::vector<Vec3>{}), DomainError);
}

TEST_CASE("hemisphere classifier agrees with exhaustive enumeration")
{
    std::mt19937_64 rng(21);
    int feasible = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 3 + trial % 12;
        const Vec3 centre = random_unit(rng);
        const double spread = uniform(rng, 0.2, 1.4);
        std::vector<Vec3> normals;
        for (int k = 0; k < n; ++k) normals.push_back((centre + spread * random_unit(rng)).normalized());
        const HemisphereVerdict v = hemisphere_classifier(normals);
        const double exact = oracle::enumerated_maximin(normals);
        CHECK(std::abs(v.margin - exact) <= 1e-9);
        double recheck = 1e300;
        for (const auto& m : normals) recheck = std::min(recheck, m.dot(v.argmax));
        CHECK(std::abs(recheck - v.margin) <= 1e-12);
        CHECK(oracle::sampled_maximin(normals) <= v.margin + 1e-12);
        if (v.feasible) {
            ++feasible;
            for (const auto& m : normals) CHECK(m.dot(*v.witness) >= -kHemisphereTolerance);
        }
    }
    CHECK(feasible > 10);
}

TEST_CASE("Meeks constant")
{
    const BoundsReport round = meeks_constant(round_f(), -2.0);
    CHECK(round.d_w == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(round.d0 == doctest::Approx(2.0 * std::sqrt(3.0)).epsilon(1e-10));
    CHECK(round.d0_unscaled == doctest::Approx(4.0 * std::sqrt(3.0)).epsilon(1e-10));
    CHECK(meeks_constant(ellipsoid_f(), -2.0).d0 == doctest::Approx(4.0 * std::sqrt(3.0)).epsilon(1e-10));
    CHECK(meeks_constant(round_f(), -4.0).d0 == doctest::Approx(std::sqrt(3.0)).epsilon(1e-10));
    CHECK(meeks_constant(perturbed_f(), 1.0).d0 == doctest::Approx(4.0 * std::sqrt(3.0)).epsilon(1e-8));
    CHECK(meeks_d0(3.0, -0.5) == doctest::Approx(12.0 * std::sqrt(3.0)));
    CHECK_THROWS_AS(meeks_constant(round_f(), 0.0), DomainError);
}

TEST_CASE("slices of a sphere")
{
    const TriMesh s = icosphere(5);
    const Vec3 e3 = Vec3::UnitZ();

    const std::vector<double> equator = {0.0};
    auto r = slice_components_diameter(s, e3, equator);
    REQUIRE(r.size() == 1u);
    REQUIRE(r[0].components.size() == 1u);
    CHECK(r[0].components[0] == doctest::Approx(2.0).epsilon(2e-3));
    CHECK(r[0].components[0] <= 2.0 + 1e-12);

    const std::vector<double> off = {0.5, -0.5, 1.5};
    r = slice_components_diameter(s, e3, off);
    REQUIRE(r.size() == 3u);
    CHECK(r[0].components[0] == doctest::Approx(std::sqrt(3.0)).epsilon(3e-3));
    CHECK(r[1].components[0] == doctest::Approx(std::sqrt(3.0)).epsilon(3e-3));
    CHECK(r[2].components.empty());

    // The pole is a vertex; the offset is nudged and flagged.
    const Vec3 pole = s.vertices[0];
    const std::vector<double> at_vertex = {pole.norm()};
    r = slice_components_diameter(s, pole.normalized(), at_vertex);
    CHECK(r[0].perturbed);
}

TEST_CASE("slices of a cylinder patch across the axis")
{
    for (const auto& f : {round_f(), ellipsoid_f()}) {
        const CylinderPatch patch = build_cylinder(f, Vec3::UnitZ(), 2.0, 256);
        const std::vector<double> off = {0.0, 0.3};
        const auto r = slice_components_diameter(patch.mesh, Vec3::UnitZ(), off);
        double profile = 0.0;
        for (const auto& p : patch.profile.samples) {
            for (const auto& q : patch.profile.samples) profile = std::max(profile, (p.point - q.point).norm());
        }
        for (const auto& s : r) {
            REQUIRE(s.components.size() == 1u);
            CHECK(s.components[0] == doctest::Approx(profile).epsilon(1e-9));
        }
    }
}

TEST_CASE("graph height report")
{
    std::vector<Vec3> cap;
    for (int k = 0; k <= 20; ++k) {
        for (int j = 0; j < 16; ++j) {
            const double r = 0.5 * k / 20.0, t = 2 * kPi * j / 16;
            const double x = r * std::cos(t), y = r * std::sin(t);
            cap.emplace_back(x, y, std::sqrt(1 - x * x - y * y));
        }
    }
    CHECK(graph_height_report(cap, Vec3::UnitZ(), std::sqrt(0.75)) == doctest::Approx(1.0 - std::sqrt(0.75)));
    std::vector<Vec3> flat(10, Vec3(0.1, 0.2, 0.3));
    CHECK(graph_height_report(flat, Vec3::UnitZ(), 0.3) == doctest::Approx(0.0));
}
