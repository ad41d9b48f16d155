#include <camc/mesh.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace camc {

TriMesh icosphere(int level)
{
    if (level < 0) throw DomainError("icosphere: subdivision level must be >= 0");

    const double t = (1.0 + std::sqrt(5.0)) / 2.0;
    TriMesh mesh;
    mesh.vertices = {
        {-1, t, 0}, {1, t, 0}, {-1, -t, 0}, {1, -t, 0}, {0, -1, t}, {0, 1, t},
        {0, -1, -t}, {0, 1, -t}, {t, 0, -1}, {t, 0, 1}, {-t, 0, -1}, {-t, 0, 1},
    };
    for (auto& v : mesh.vertices) v.normalize();
    mesh.triangles = {
        {0, 11, 5}, {0, 5, 1}, {0, 1, 7}, {0, 7, 10}, {0, 10, 11},
        {1, 5, 9}, {5, 11, 4}, {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
        {3, 9, 4}, {3, 4, 2}, {3, 2, 6}, {3, 6, 8}, {3, 8, 9},
        {4, 9, 5}, {2, 4, 11}, {6, 2, 10}, {8, 6, 7}, {9, 8, 1},
    };

    for (int l = 0; l < level; ++l) {
        std::map<std::pair<int, int>, int> midpoints;
        auto midpoint = [&](int a, int b) {
            const auto key = std::minmax(a, b);
            auto it = midpoints.find(key);
            if (it != midpoints.end()) return it->second;
            const int id = static_cast<int>(mesh.vertices.size());
            mesh.vertices.push_back((mesh.vertices[a] + mesh.vertices[b]).normalized());
            midpoints.emplace(key, id);
            return id;
        };
        std::vector<std::array<int, 3>> next;
        next.reserve(mesh.triangles.size() * 4);
        for (const auto& tri : mesh.triangles) {
            const int ab = midpoint(tri[0], tri[1]);
            const int bc = midpoint(tri[1], tri[2]);
            const int ca = midpoint(tri[2], tri[0]);
            next.push_back({tri[0], ab, ca});
            next.push_back({tri[1], bc, ab});
            next.push_back({tri[2], ca, bc});
            next.push_back({ab, bc, ca});
        }
        mesh.triangles = std::move(next);
    }
    mesh.normals = mesh.vertices;
    return mesh;
}

std::vector<Vec3> sphere_directions(int level) { return icosphere(level).vertices; }

bool is_closed(const TriMesh& mesh)
{
    std::map<std::pair<int, int>, int> count;
    for (const auto& tri : mesh.triangles) {
        for (int k = 0; k < 3; ++k) ++count[std::minmax(tri[k], tri[(k + 1) % 3])];
    }
    return !count.empty()
           && std::all_of(count.begin(), count.end(), [](const auto& e) { return e.second == 2; });
}

double enclosed_volume(const TriMesh& mesh)
{
    double volume = 0.0;
    for (const auto& tri : mesh.triangles) {
        const Vec3& a = mesh.vertices[tri[0]];
        const Vec3& b = mesh.vertices[tri[1]];
        const Vec3& c = mesh.vertices[tri[2]];
        volume += a.dot(b.cross(c));
    }
    return volume / 6.0;
}

double triangle_area(const TriMesh& mesh, std::size_t t)
{
    const auto& tri = mesh.triangles[t];
    const Vec3& a = mesh.vertices[tri[0]];
    return 0.5 * (mesh.vertices[tri[1]] - a).cross(mesh.vertices[tri[2]] - a).norm();
}

Vec3 triangle_normal(const TriMesh& mesh, std::size_t t)
{
    const auto& tri = mesh.triangles[t];
    const Vec3& a = mesh.vertices[tri[0]];
    return (mesh.vertices[tri[1]] - a).cross(mesh.vertices[tri[2]] - a).normalized();
}

std::vector<double> vertex_areas(const TriMesh& mesh)
{
    std::vector<double> areas(mesh.num_vertices(), 0.0);
    for (std::size_t t = 0; t < mesh.num_triangles(); ++t) {
        const double third = triangle_area(mesh, t) / 3.0;
        for (int v : mesh.triangles[t]) areas[v] += third;
    }
    return areas;
}

std::vector<std::vector<int>> vertex_neighbors(const TriMesh& mesh)
{
    std::vector<std::vector<int>> adjacency(mesh.num_vertices());
    for (const auto& tri : mesh.triangles) {
        for (int k = 0; k < 3; ++k) {
            adjacency[tri[k]].push_back(tri[(k + 1) % 3]);
            adjacency[tri[k]].push_back(tri[(k + 2) % 3]);
        }
    }
    for (auto& list : adjacency) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
    }
    return adjacency;
}

std::vector<int> two_ring(const std::vector<std::vector<int>>& adjacency, int v)
{
    std::vector<int> ring;
    for (int n : adjacency[v]) {
        ring.push_back(n);
        for (int m : adjacency[n]) ring.push_back(m);
    }
    std::sort(ring.begin(), ring.end());
    ring.erase(std::unique(ring.begin(), ring.end()), ring.end());
    ring.erase(std::remove(ring.begin(), ring.end(), v), ring.end());
    return ring;
}

void write_obj(std::ostream& out, const TriMesh& mesh)
{
    const auto precision = out.precision(17);
    for (const auto& v : mesh.vertices) out << "v " << v.x() << ' ' << v.y() << ' ' << v.z() << '\n';
    const bool normals = mesh.has_normals();
    if (normals) {
        for (const auto& n : mesh.normals) out << "vn " << n.x() << ' ' << n.y() << ' ' << n.z() << '\n';
    }
    for (const auto& tri : mesh.triangles) {
        out << 'f';
        for (int v : tri) {
            out << ' ' << v + 1;
            if (normals) out << "//" << v + 1;
        }
        out << '\n';
    }
    out.precision(precision);
}

} // namespace camc
