#pragma once

// Second-order forward-mode jet in two variables. Carries a value, its
// gradient and its Hessian so that analytic charts and coefficient
// linearizations get exact first and second derivatives without finite
// differences.

#include <Eigen/Core>

#include <cmath>

namespace camc {

struct Jet2
{
    double v = 0.0;
    double g[2] = {0.0, 0.0};
    double h[3] = {0.0, 0.0, 0.0}; // uu, uv, vv

    Jet2() = default;
    Jet2(double value) // NOLINT: implicit promotion from constants
        : v(value)
    {}

    static Jet2 variable(double value, int index)
    {
        Jet2 j(value);
        j.g[index] = 1.0;
        return j;
    }

    double du() const { return g[0]; }
    double dv() const { return g[1]; }
    double duu() const { return h[0]; }
    double duv() const { return h[1]; }
    double dvv() const { return h[2]; }

    Jet2& operator+=(const Jet2& o)
    {
        v += o.v;
        for (int i = 0; i < 2; ++i) g[i] += o.g[i];
        for (int i = 0; i < 3; ++i) h[i] += o.h[i];
        return *this;
    }
    Jet2& operator-=(const Jet2& o)
    {
        v -= o.v;
        for (int i = 0; i < 2; ++i) g[i] -= o.g[i];
        for (int i = 0; i < 3; ++i) h[i] -= o.h[i];
        return *this;
    }
    Jet2& operator*=(const Jet2& o);
    Jet2& operator/=(const Jet2& o);
};

// Applies a scalar function with known f(v), f'(v), f''(v) to a jet.
inline Jet2 chain(const Jet2& a, double f, double df, double ddf)
{
    Jet2 r(f);
    r.g[0] = df * a.g[0];
    r.g[1] = df * a.g[1];
    r.h[0] = df * a.h[0] + ddf * a.g[0] * a.g[0];
    r.h[1] = df * a.h[1] + ddf * a.g[0] * a.g[1];
    r.h[2] = df * a.h[2] + ddf * a.g[1] * a.g[1];
    return r;
}

inline Jet2 operator+(Jet2 a, const Jet2& b) { return a += b; }
inline Jet2 operator-(Jet2 a, const Jet2& b) { return a -= b; }
inline Jet2 operator-(const Jet2& a)
{
    Jet2 r;
    r -= a;
    return r;
}
inline Jet2 operator+(const Jet2& a) { return a; }

inline Jet2 operator*(const Jet2& a, const Jet2& b)
{
    Jet2 r(a.v * b.v);
    r.g[0] = a.g[0] * b.v + a.v * b.g[0];
    r.g[1] = a.g[1] * b.v + a.v * b.g[1];
    r.h[0] = a.h[0] * b.v + 2.0 * a.g[0] * b.g[0] + a.v * b.h[0];
    r.h[1] = a.h[1] * b.v + a.g[0] * b.g[1] + a.g[1] * b.g[0] + a.v * b.h[1];
    r.h[2] = a.h[2] * b.v + 2.0 * a.g[1] * b.g[1] + a.v * b.h[2];
    return r;
}

inline Jet2 reciprocal(const Jet2& a)
{
    const double inv = 1.0 / a.v;
    return chain(a, inv, -inv * inv, 2.0 * inv * inv * inv);
}

inline Jet2 operator/(const Jet2& a, const Jet2& b) { return a * reciprocal(b); }

inline Jet2& Jet2::operator*=(const Jet2& o) { return *this = *this * o; }
inline Jet2& Jet2::operator/=(const Jet2& o) { return *this = *this / o; }

inline Jet2 sqrt(const Jet2& a)
{
    const double s = std::sqrt(a.v);
    return chain(a, s, 0.5 / s, -0.25 / (s * a.v));
}

inline Jet2 sin(const Jet2& a) { return chain(a, std::sin(a.v), std::cos(a.v), -std::sin(a.v)); }
inline Jet2 cos(const Jet2& a) { return chain(a, std::cos(a.v), -std::sin(a.v), -std::cos(a.v)); }
inline Jet2 exp(const Jet2& a)
{
    const double e = std::exp(a.v);
    return chain(a, e, e, e);
}

inline bool operator<(const Jet2& a, const Jet2& b) { return a.v < b.v; }
inline bool operator>(const Jet2& a, const Jet2& b) { return a.v > b.v; }

inline double value_of(double x) { return x; }
inline double value_of(const Jet2& x) { return x.v; }

using Vec3J = Eigen::Matrix<Jet2, 3, 1>;

} // namespace camc

namespace Eigen {

template <>
struct NumTraits<camc::Jet2> : NumTraits<double>
{
    using Real = camc::Jet2;
    using NonInteger = camc::Jet2;
    using Nested = camc::Jet2;
    using Literal = camc::Jet2;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 6,
        MulCost = 12
    };
};

template <typename BinaryOp>
struct ScalarBinaryOpTraits<camc::Jet2, double, BinaryOp>
{
    using ReturnType = camc::Jet2;
};

template <typename BinaryOp>
struct ScalarBinaryOpTraits<double, camc::Jet2, BinaryOp>
{
    using ReturnType = camc::Jet2;
};

} // namespace Eigen
