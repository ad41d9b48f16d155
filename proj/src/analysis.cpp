#include <camc/analysis.hpp>
#include <camc/wulff.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <utility>

namespace camc {

namespace {

// min_i <n_i, v>, abandoning as soon as the value drops to `floor`. The
// normal that cut the evaluation short moves to the front.
class MaximinEvaluator
{
public:
    explicit MaximinEvaluator(std::vector<Vec3> normals)
        : m_normals(std::move(normals))
    {}

    double operator()(const Vec3& v, double floor)
    {
        double value = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < m_normals.size(); ++i) {
            value = std::min(value, m_normals[i].dot(v));
            if (value <= floor) {
                if (i > 0) std::swap(m_normals[i], m_normals[i / 2]);
                return value;
            }
        }
        return value;
    }

private:
    std::vector<Vec3> m_normals;
};

std::vector<Vec3> distinct_unit(std::span<const Vec3> normals)
{
    std::vector<Vec3> out;
    out.reserve(normals.size());
    for (const Vec3& n : normals) out.push_back(require_unit(n, "normal"));
    std::sort(out.begin(), out.end(), [](const Vec3& a, const Vec3& b) {
        return std::lexicographical_compare(a.data(), a.data() + 3, b.data(), b.data() + 3);
    });
    out.erase(std::unique(out.begin(), out.end(), [](const Vec3& a, const Vec3& b) { return (a - b).norm() < 1e-15; }),
              out.end());
    return out;
}

} // namespace

HemisphereVerdict hemisphere_classifier(std::span<const Vec3> normals)
{
    if (normals.empty()) throw DomainError("hemisphere_classifier: need at least one normal");
    const std::vector<Vec3> pts = distinct_unit(normals);
    const std::size_t n = pts.size();
    MaximinEvaluator eval(pts);

    double best = -std::numeric_limits<double>::infinity();
    Vec3 best_v = pts[0];
    auto consider = [&](const Vec3& v, double upper) {
        if (upper <= best) return;
        const double value = eval(v, best);
        if (value > best) {
            best = value;
            best_v = v;
        }
    };

    for (const Vec3& p : pts) consider(p, 1.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const Vec3 m = pts[i] + pts[j];
            const double len = m.norm();
            if (len < 1e-12) {
                // Antipodal pair: every direction orthogonal to it is equidistant.
                consider(tangent_frame(pts[i]).first, 0.0);
                continue;
            }
            const Vec3 v = m / len;
            const double t = pts[i].dot(v);
            consider(v, t);
            consider(-v, -t);
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const Vec3 eij = pts[j] - pts[i];
            for (std::size_t k = j + 1; k < n; ++k) {
                const Vec3 c = eij.cross(pts[k] - pts[i]);
                const double len = c.norm();
                if (len < 1e-14) continue;
                const Vec3 v = c / len;
                const double t = pts[i].dot(v);
                consider(v, t);
                consider(-v, -t);
            }
        }
    }

    HemisphereVerdict verdict;
    verdict.margin = best;
    verdict.argmax = best_v;
    verdict.feasible = best >= -kHemisphereTolerance;
    if (verdict.feasible) verdict.witness = best_v;
    return verdict;
}

BoundsReport meeks_constant(const AnisotropyFunction& f, double h0, int subdivision_level)
{
    if (h0 == 0.0) throw DomainError("meeks_constant: H0 must be nonzero");
    BoundsReport report;
    report.h0 = h0;
    report.d_w = wulff_diameter(f, subdivision_level);
    report.d0 = meeks_d0(report.d_w, h0);
    report.d0_unscaled = 2.0 * std::sqrt(3.0) * report.d_w;
    return report;
}

namespace {

struct DisjointSets
{
    std::vector<int> parent;

    int add()
    {
        parent.push_back(static_cast<int>(parent.size()));
        return parent.back();
    }
    int find(int x)
    {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

} // namespace

std::vector<BoundsReport::Slice> slice_components_diameter(const TriMesh& mesh, const Vec3& plane_normal,
                                                           std::span<const double> offsets)
{
    const Vec3 nrm = plane_normal.normalized();
    std::vector<double> height(mesh.num_vertices());
    for (std::size_t v = 0; v < mesh.num_vertices(); ++v) height[v] = mesh.vertices[v].dot(nrm);

    std::vector<BoundsReport::Slice> out;
    for (double requested : offsets) {
        BoundsReport::Slice slice;
        double offset = requested;
        for (int attempt = 0; attempt < 16; ++attempt) {
            const bool touches = std::any_of(height.begin(), height.end(),
                                             [&](double z) { return std::abs(z - offset) <= 1e-12; });
            if (!touches) break;
            offset += 1e-9;
            slice.perturbed = true;
        }
        slice.offset = offset;

        std::map<std::pair<int, int>, int> edge_point;
        std::vector<Vec3> points;
        DisjointSets sets;
        auto crossing = [&](int a, int b) {
            const auto key = std::minmax(a, b);
            auto it = edge_point.find(key);
            if (it != edge_point.end()) return it->second;
            const double sa = height[a] - offset;
            const double sb = height[b] - offset;
            const double t = sa / (sa - sb);
            points.push_back(mesh.vertices[a] + t * (mesh.vertices[b] - mesh.vertices[a]));
            const int id = sets.add();
            edge_point.emplace(key, id);
            return id;
        };
        for (const auto& tri : mesh.triangles) {
            int ends[2];
            int found = 0;
            for (int k = 0; k < 3; ++k) {
                const int a = tri[k];
                const int b = tri[(k + 1) % 3];
                if ((height[a] - offset) * (height[b] - offset) < 0.0 && found < 2) ends[found++] = crossing(a, b);
            }
            if (found == 2) sets.unite(ends[0], ends[1]);
        }

        std::map<int, std::vector<int>> components;
        for (int p = 0; p < static_cast<int>(points.size()); ++p) components[sets.find(p)].push_back(p);
        for (const auto& [root, members] : components) {
            double diameter = 0.0;
            for (std::size_t i = 0; i < members.size(); ++i) {
                for (std::size_t j = i + 1; j < members.size(); ++j) {
                    diameter = std::max(diameter, (points[members[i]] - points[members[j]]).norm());
                }
            }
            slice.components.push_back(diameter);
        }
        out.push_back(std::move(slice));
    }
    return out;
}

double graph_height_report(std::span<const Vec3> points, const Vec3& plane_normal, double offset)
{
    const Vec3 nrm = plane_normal.normalized();
    double height = 0.0;
    for (const Vec3& p : points) {
        if (p.allFinite()) height = std::max(height, std::abs(p.dot(nrm) - offset));
    }
    return height;
}

} // namespace camc
