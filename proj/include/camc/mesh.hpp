#pragma once

#include <camc/anisotropy.hpp>

#include <array>
#include <iosfwd>
#include <vector>

namespace camc {

/// Triangle mesh with optional per-vertex unit normals. Triangles are
/// counterclockwise when seen from the side the normals point to.
struct TriMesh
{
    std::vector<Vec3> vertices;
    std::vector<std::array<int, 3>> triangles;
    std::vector<Vec3> normals;

    std::size_t num_vertices() const { return vertices.size(); }
    std::size_t num_triangles() const { return triangles.size(); }
    bool has_normals() const { return normals.size() == vertices.size(); }
};

/// Unit icosphere: the icosahedron subdivided `level` times (each triangle
/// split in four) with vertices projected to the sphere.
/// Level L has 10 * 4^L + 2 vertices.
TriMesh icosphere(int level);

/// Unit directions of the level-L icosphere.
std::vector<Vec3> sphere_directions(int level);

/// True when every undirected edge is shared by exactly two triangles.
bool is_closed(const TriMesh& mesh);

/// Signed volume by the divergence formula (positive for outward orientation).
double enclosed_volume(const TriMesh& mesh);

double triangle_area(const TriMesh& mesh, std::size_t t);
Vec3 triangle_normal(const TriMesh& mesh, std::size_t t);

/// One third of the area of each incident triangle.
std::vector<double> vertex_areas(const TriMesh& mesh);

/// Sorted, deduplicated vertex adjacency lists.
std::vector<std::vector<int>> vertex_neighbors(const TriMesh& mesh);

/// Vertices at graph distance 1 or 2 from `v` (excluding `v`).
std::vector<int> two_ring(const std::vector<std::vector<int>>& adjacency, int v);

/// Regular triangulated grid over [x0,x1]x[y0,y1] lifted by z = height(x,y);
/// upward (+z side) orientation.
template <typename HeightFn>
TriMesh grid_mesh(double x0, double x1, double y0, double y1, int nx, int ny, HeightFn&& height)
{
    TriMesh mesh;
    mesh.vertices.reserve(static_cast<std::size_t>(nx) * ny);
    for (int j = 0; j < ny; ++j) {
        for (int i = 0; i < nx; ++i) {
            const double x = x0 + (x1 - x0) * i / (nx - 1);
            const double y = y0 + (y1 - y0) * j / (ny - 1);
            mesh.vertices.emplace_back(x, y, height(x, y));
        }
    }
    for (int j = 0; j + 1 < ny; ++j) {
        for (int i = 0; i + 1 < nx; ++i) {
            const int a = j * nx + i;
            const int b = a + 1;
            const int c = a + nx;
            const int d = c + 1;
            mesh.triangles.push_back({a, b, d});
            mesh.triangles.push_back({a, d, c});
        }
    }
    return mesh;
}

/// ASCII OBJ with `v`, optional `vn`, and 1-based `f` records.
void write_obj(std::ostream& out, const TriMesh& mesh);

} // namespace camc
