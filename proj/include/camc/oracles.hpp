#pragma once

// Reference computations used to cross-check the toolkit. They are slow and
// deliberately share no code path with the routines they check.

#include <camc/anisotropy.hpp>
#include <camc/graphpde.hpp>

#include <random>
#include <span>
#include <vector>

namespace camc::oracle {

Vec3 random_unit(std::mt19937_64& rng);

/// Largest pairwise distance, by exhaustive comparison.
double pairwise_diameter(std::span<const Vec3> points);

/// Lower estimate of max over unit v of min_i <n_i, v>: a Fibonacci-lattice
/// scan followed by tangent-plane grid zooms around the best seeds.
double sampled_maximin(std::span<const Vec3> normals, Vec3* argmax = nullptr);

/// max over unit v of min_i <n_i, v> by evaluating every single normal, every
/// pairwise bisector and every triple's equidistant direction, with both
/// signs. O(n^4); meant for small inputs.
double enumerated_maximin(std::span<const Vec3> normals);

/// Coefficients (a, b, c) read off by evaluating
/// H = trace(D^2 Phi(N) J G^-1 II G^-1 J^T) for the graphs with Hessian
/// e11, e12 + e21 and e22 at gradient (p, q).
Coefficients trace_formula_coefficients(const AnisotropyFunction& f, double p, double q);

/// Upper half of the ellipsoid x^2/d0 + y^2/d1 + z^2/d2 = 1.
double ellipsoid_cap(const Vec3& diag, double x, double y);

/// Random combination of spherical harmonics of degree <= 2 evaluated at the
/// given unit vectors, scaled so that max |phi| = 1.
std::vector<double> random_low_order_field(std::span<const Vec3> directions, std::mt19937_64& rng);

} // namespace camc::oracle
