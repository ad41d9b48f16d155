#include "support.hpp"

#include <doctest.h>

#include <camc/mesh.hpp>

#include <numeric>
#include <sstream>

using namespace camc;
using namespace camc::test;

TEST_CASE("icosphere vertex counts, closedness and orientation")
{
    for (int level = 0; level <= 4; ++level) {
        const TriMesh m = icosphere(level);
        CAPTURE(level);
        CHECK(m.num_vertices() == 10u * (1u << (2 * level)) + 2u);
        CHECK(m.num_triangles() == 20u * (1u << (2 * level)));
        CHECK(is_closed(m));
        CHECK(enclosed_volume(m) > 0.0);
        CHECK(m.has_normals());
        for (std::size_t v = 0; v < m.num_vertices(); ++v) {
            CHECK(std::abs(m.vertices[v].norm() - 1.0) < 1e-15);
        }
    }
    CHECK_THROWS_AS(icosphere(-1), DomainError);
}

TEST_CASE("icosphere area and volume approach the unit sphere")
{
    const TriMesh m = icosphere(5);
    const auto areas = vertex_areas(m);
    const double area = std::accumulate(areas.begin(), areas.end(), 0.0);
    CHECK(area == doctest::Approx(4.0 * kPi).epsilon(1e-3));
    CHECK(enclosed_volume(m) == doctest::Approx(4.0 * kPi / 3.0).epsilon(2e-3));
}

TEST_CASE("triangle normals point outward on the icosphere")
{
    const TriMesh m = icosphere(2);
    for (std::size_t t = 0; t < m.num_triangles(); ++t) {
        const Vec3 c = (m.vertices[m.triangles[t][0]] + m.vertices[m.triangles[t][1]] + m.vertices[m.triangles[t][2]]) / 3.0;
        CHECK(triangle_normal(m, t).dot(c) > 0.0);
    }
}

TEST_CASE("grid mesh is open and two-ring sizes are as expected")
{
    const TriMesh g = grid_mesh(0.0, 1.0, 0.0, 1.0, 5, 5, [](double, double) { return 0.0; });
    CHECK(g.num_vertices() == 25u);
    CHECK(g.num_triangles() == 32u);
    CHECK_FALSE(is_closed(g));
    CHECK(triangle_normal(g, 0).z() == doctest::Approx(1.0));
    const auto adj = vertex_neighbors(g);
    CHECK(adj[12].size() == 6u);
    CHECK(two_ring(adj, 12).size() == 18u);
    CHECK(two_ring(adj, 0).size() == 8u);
}

TEST_CASE("OBJ export writes v, vn and 1-based f records")
{
    TriMesh m;
    m.vertices = {Vec3(0, 0, 0), Vec3(1, 0, 0), Vec3(0, 1, 0)};
    m.normals = {Vec3::UnitZ(), Vec3::UnitZ(), Vec3::UnitZ()};
    m.triangles = {{0, 1, 2}};
    std::ostringstream out;
    write_obj(out, m);
    const std::string s = out.str();
    CHECK(s.find("v 1 0 0") != std::string::npos);
    CHECK(s.find("vn 0 0 1") != std::string::npos);
    CHECK(s.find("f 1//1 2//2 3//3") != std::string::npos);

    m.normals.clear();
    std::ostringstream plain;
    write_obj(plain, m);
    CHECK(plain.str().find("vn") == std::string::npos);
    CHECK(plain.str().find("f 1 2 3") != std::string::npos);
}
