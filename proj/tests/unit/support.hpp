#pragma once

#include <camc/anisotropy.hpp>

#include <random>
#include <vector>

namespace camc::test {

inline AnisotropyFunction round_f() { return AnisotropyFunction::constant(); }
inline AnisotropyFunction ellipsoid_f() { return AnisotropyFunction::ellipsoid(Vec3(4.0, 1.0, 1.0).asDiagonal()); }
inline AnisotropyFunction perturbed_f(double eps = 0.2)
{
    return AnisotropyFunction::perturbed(eps, Vec3(1.0, 2.0, 3.0).normalized());
}
inline std::vector<AnisotropyFunction> all_f() { return {round_f(), ellipsoid_f(), perturbed_f()}; }

/// A general (non-diagonal) positive definite Q.
inline AnisotropyFunction tilted_ellipsoid_f()
{
    Mat3 q;
    q << 2.0, 0.3, -0.2, 0.3, 1.5, 0.1, -0.2, 0.1, 0.8;
    return AnisotropyFunction::ellipsoid(q);
}

inline Vec3 random_unit(std::mt19937_64& rng)
{
    std::normal_distribution<double> n;
    return Vec3(n(rng), n(rng), n(rng)).normalized();
}

inline double uniform(std::mt19937_64& rng, double lo, double hi)
{
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

constexpr double kPi = 3.14159265358979323846;

} // namespace camc::test
