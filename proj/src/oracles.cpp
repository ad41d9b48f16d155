#include <camc/oracles.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

namespace camc::oracle {

Vec3 random_unit(std::mt19937_64& rng)
{
    std::normal_distribution<double> normal;
    Vec3 v;
    do {
        v = Vec3(normal(rng), normal(rng), normal(rng));
    } while (v.norm() < 1e-8);
    return v.normalized();
}

double pairwise_diameter(std::span<const Vec3> points)
{
    double best = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            best = std::max(best, (points[i] - points[j]).squaredNorm());
        }
    }
    return std::sqrt(best);
}

namespace {

double min_dot(std::span<const Vec3> normals, const Vec3& v)
{
    double m = std::numeric_limits<double>::infinity();
    for (const Vec3& n : normals) m = std::min(m, n.dot(v));
    return m;
}

} // namespace

double sampled_maximin(std::span<const Vec3> normals, Vec3* argmax)
{
    constexpr int lattice = 4000;
    constexpr int seeds = 5;
    constexpr int half = 10; // grid is (2 half + 1)^2
    constexpr int levels = 25;

    std::vector<std::pair<double, Vec3>> scan;
    scan.reserve(lattice);
    const double golden = M_PI * (3.0 - std::sqrt(5.0));
    for (int k = 0; k < lattice; ++k) {
        const double z = 1.0 - (2.0 * k + 1.0) / lattice;
        const double r = std::sqrt(1.0 - z * z);
        const Vec3 v(r * std::cos(golden * k), r * std::sin(golden * k), z);
        scan.emplace_back(min_dot(normals, v), v);
    }
    std::partial_sort(scan.begin(), scan.begin() + seeds, scan.end(),
                      [](const auto& a, const auto& b) { return a.first > b.first; });

    double best = -std::numeric_limits<double>::infinity();
    Vec3 best_v = Vec3::UnitZ();
    for (int s = 0; s < seeds; ++s) {
        Vec3 center = scan[s].second;
        double value = scan[s].first;
        double width = 0.1; // lattice spacing is about 0.056
        for (int level = 0; level < levels; ++level) {
            const auto [e1, e2] = tangent_frame(center);
            Vec3 next = center;
            for (int i = -half; i <= half; ++i) {
                for (int j = -half; j <= half; ++j) {
                    const Vec3 v = (center + (width * i / half) * e1 + (width * j / half) * e2).normalized();
                    const double g = min_dot(normals, v);
                    if (g > value) {
                        value = g;
                        next = v;
                    }
                }
            }
            center = next;
            width *= 0.3;
        }
        if (value > best) {
            best = value;
            best_v = center;
        }
    }
    if (argmax) *argmax = best_v;
    return best;
}

double enumerated_maximin(std::span<const Vec3> normals)
{
    const std::size_t n = normals.size();
    double best = -std::numeric_limits<double>::infinity();
    auto take = [&](const Vec3& v) {
        const double len = v.norm();
        if (len < 1e-12) return;
        best = std::max(best, min_dot(normals, v / len));
        best = std::max(best, min_dot(normals, -v / len));
    };
    for (std::size_t i = 0; i < n; ++i) {
        take(normals[i]);
        for (std::size_t j = i + 1; j < n; ++j) {
            take(normals[i] + normals[j]);
            for (std::size_t k = j + 1; k < n; ++k) {
                // Equidistant from all three: orthogonal to both differences.
                take((normals[j] - normals[i]).cross(normals[k] - normals[i]));
            }
        }
    }
    return best;
}

Coefficients trace_formula_coefficients(const AnisotropyFunction& f, double p, double q)
{
    const double w = std::sqrt(1.0 + p * p + q * q);
    const Vec3 n = Vec3(-p, -q, 1.0) / w;
    Eigen::Matrix<double, 3, 2> jac;
    jac << 1.0, 0.0, 0.0, 1.0, p, q;
    const Mat2 g = jac.transpose() * jac;
    const Mat2 g_inv = g.inverse();
    const Mat3 d2 = f.hessian(n);

    auto h_of = [&](const Mat2& hess) {
        // <X_ij, N> with X_ij = (0, 0, u_ij).
        const Mat2 second = hess * n.z();
        const Mat3 ambient = jac * g_inv * second * g_inv * jac.transpose();
        return (d2 * ambient).trace();
    };
    Mat2 e11 = Mat2::Zero();
    e11(0, 0) = 1.0;
    Mat2 e12 = Mat2::Zero();
    e12(0, 1) = e12(1, 0) = 1.0;
    Mat2 e22 = Mat2::Zero();
    e22(1, 1) = 1.0;
    return {h_of(e11), h_of(e12), h_of(e22)};
}

double ellipsoid_cap(const Vec3& diag, double x, double y)
{
    return std::sqrt(diag.z() * (1.0 - x * x / diag.x() - y * y / diag.y()));
}

std::vector<double> random_low_order_field(std::span<const Vec3> directions, std::mt19937_64& rng)
{
    std::normal_distribution<double> normal;
    const double c0 = normal(rng);
    const Vec3 c1(normal(rng), normal(rng), normal(rng));
    Mat3 c2;
    for (int i = 0; i < 9; ++i) c2(i) = normal(rng);
    c2 = 0.5 * (c2 + c2.transpose());
    c2 -= (c2.trace() / 3.0) * Mat3::Identity(); // traceless: pure degree 2

    std::vector<double> phi;
    phi.reserve(directions.size());
    double peak = 0.0;
    for (const Vec3& n : directions) {
        phi.push_back(c0 + c1.dot(n) + n.dot(c2 * n));
        peak = std::max(peak, std::abs(phi.back()));
    }
    for (double& v : phi) v /= peak;
    return phi;
}

} // namespace camc::oracle
