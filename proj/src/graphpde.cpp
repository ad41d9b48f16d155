#include <camc/curvature.hpp>
#include <camc/graphpde.hpp>
#include <camc/wulff.hpp>

#include <Eigen/Sparse>
#include <Eigen/SparseLU>

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>

namespace camc {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

Coefficients from_matrix(const Mat2& p) { return {p(0, 0), p(0, 1) + p(1, 0), p(1, 1)}; }

} // namespace

Vec3 graph_normal(double p, double q) { return Vec3(-p, -q, 1.0) / std::sqrt(1.0 + p * p + q * q); }

Mat2 graph_euclid_weingarten(double p, double q, double uxx, double uxy, double uyy)
{
    const double w = std::sqrt(1.0 + p * p + q * q);
    Mat2 c;
    c << 1.0 + q * q, -p * q, -p * q, 1.0 + p * p;
    Mat2 hess;
    hess << uxx, uxy, uxy, uyy;
    return c * hess / (w * w * w);
}

Coefficients assemble_coefficients(const AnisotropyFunction& f, double p, double q)
{
    const Coefficients out = from_matrix(graph_curvature_matrix<double>(f, p, q));
    if (!(out.discriminant() > 0.0)) {
        std::ostringstream msg;
        msg << "graph equation is not elliptic at (p, q) = (" << p << ", " << q << "): 4ac - b^2 = "
            << out.discriminant();
        throw EllipticityError(msg.str());
    }
    return out;
}

CoefficientJet assemble_coefficient_jet(const AnisotropyFunction& f, double p, double q)
{
    const auto m = graph_curvature_matrix<Jet2>(f, Jet2::variable(p, 0), Jet2::variable(q, 1));
    const Jet2 a = m(0, 0);
    const Jet2 b = m(0, 1) + m(1, 0);
    const Jet2 c = m(1, 1);
    CoefficientJet out;
    out.value = {a.v, b.v, c.v};
    for (int k = 0; k < 2; ++k) out.d[k] = {a.g[k], b.g[k], c.g[k]};
    return out;
}

// ---------------------------------------------------------------------------

namespace {

GraphProblem make_grid(const AnisotropyFunction& f, double h0, double x0, double y0, double h, int nx, int ny)
{
    if (nx < 3 || ny < 3) throw DomainError("graph problem: need at least 3 nodes per axis");
    GraphProblem pb;
    pb.f = f;
    pb.h0 = h0;
    pb.x0 = x0;
    pb.y0 = y0;
    pb.h = h;
    pb.nx = nx;
    pb.ny = ny;
    pb.labels.assign(static_cast<std::size_t>(nx) * ny, NodeLabel::outside);
    pb.boundary_values.assign(pb.labels.size(), kNaN);
    return pb;
}

void assign_boundary(GraphProblem& pb, const TraceFn& trace)
{
    for (int j = 0; j < pb.ny; ++j) {
        for (int i = 0; i < pb.nx; ++i) {
            const int k = pb.index(i, j);
            if (pb.labels[k] == NodeLabel::boundary) pb.boundary_values[k] = trace(pb.x(i), pb.y(j));
        }
    }
}

} // namespace

GraphProblem make_rect_problem(const AnisotropyFunction& f, double h0, double x0, double x1, double y0,
                               double y1, int n, const TraceFn& trace)
{
    if (!(x1 > x0) || !(y1 > y0)) throw DomainError("make_rect_problem: empty rectangle");
    if (n < 3) throw DomainError("graph problem: need at least 3 nodes per axis");
    const double h = (x1 - x0) / (n - 1);
    const double cells = (y1 - y0) / h;
    if (std::abs(cells - std::round(cells)) > 1e-9 * std::max(1.0, cells)) {
        throw DomainError("make_rect_problem: the y extent is not a multiple of the spacing");
    }
    const int ny = static_cast<int>(std::lround(cells)) + 1;
    GraphProblem pb = make_grid(f, h0, x0, y0, h, n, ny);
    for (int j = 0; j < ny; ++j) {
        for (int i = 0; i < n; ++i) {
            const bool edge = i == 0 || j == 0 || i == n - 1 || j == ny - 1;
            pb.labels[pb.index(i, j)] = edge ? NodeLabel::boundary : NodeLabel::interior;
        }
    }
    assign_boundary(pb, trace);
    return pb;
}

GraphProblem make_disk_problem(const AnisotropyFunction& f, double h0, double cx, double cy, double radius,
                               int n, const TraceFn& trace)
{
    if (!(radius > 0.0)) throw DomainError("make_disk_problem: radius must be positive");
    GraphProblem pb = make_grid(f, h0, cx - radius, cy - radius, 2.0 * radius / (n - 1), n, n);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            const double dx = pb.x(i) - cx;
            const double dy = pb.y(j) - cy;
            if (std::hypot(dx, dy) < radius * (1.0 - 1e-12)) pb.labels[pb.index(i, j)] = NodeLabel::interior;
        }
    }
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            if (pb.labels[pb.index(i, j)] != NodeLabel::interior) continue;
            for (int dj = -1; dj <= 1; ++dj) {
                for (int di = -1; di <= 1; ++di) {
                    const int k = pb.index(i + di, j + dj);
                    if (pb.labels[k] == NodeLabel::outside) pb.labels[k] = NodeLabel::boundary;
                }
            }
        }
    }
    assign_boundary(pb, trace);
    return pb;
}

void validate(const GraphProblem& pb)
{
    if (pb.labels.size() != static_cast<std::size_t>(pb.nx) * pb.ny || pb.boundary_values.size() != pb.labels.size()) {
        throw DomainError("graph problem: label/boundary arrays do not match the grid");
    }
    for (int j = 0; j < pb.ny; ++j) {
        for (int i = 0; i < pb.nx; ++i) {
            const int k = pb.index(i, j);
            if (pb.labels[k] == NodeLabel::boundary && !std::isfinite(pb.boundary_values[k])) {
                throw DomainError("graph problem: non-finite boundary value");
            }
            if (pb.labels[k] != NodeLabel::interior) continue;
            if (i == 0 || j == 0 || i == pb.nx - 1 || j == pb.ny - 1) {
                throw DomainError("graph problem: interior node on the grid edge");
            }
            for (int dj = -1; dj <= 1; ++dj) {
                for (int di = -1; di <= 1; ++di) {
                    if (pb.labels[pb.index(i + di, j + dj)] == NodeLabel::outside) {
                        throw DomainError("graph problem: interior node adjacent to an outside node");
                    }
                }
            }
        }
    }
}

// ---------------------------------------------------------------------------

namespace {

struct Stencil
{
    double p, q, uxx, uxy, uyy;
};

Stencil differences(const GraphProblem& pb, const Field& u, int i, int j)
{
    const double h = pb.h;
    auto at = [&](int di, int dj) { return u[pb.index(i + di, j + dj)]; };
    const double c = at(0, 0);
    return {(at(1, 0) - at(-1, 0)) / (2.0 * h),
            (at(0, 1) - at(0, -1)) / (2.0 * h),
            (at(1, 0) - 2.0 * c + at(-1, 0)) / (h * h),
            (at(1, 1) - at(-1, 1) - at(1, -1) + at(-1, -1)) / (4.0 * h * h),
            (at(0, 1) - 2.0 * c + at(0, -1)) / (h * h)};
}

struct Evaluation
{
    Field residual;
    double norm = 0.0;
    double min_discriminant = std::numeric_limits<double>::infinity();
    int worst_node = -1;
};

Evaluation evaluate(const GraphProblem& pb, const Field& u)
{
    Evaluation ev;
    ev.residual.assign(pb.size(), kNaN);
    for (int j = 1; j + 1 < pb.ny; ++j) {
        for (int i = 1; i + 1 < pb.nx; ++i) {
            const int k = pb.index(i, j);
            if (pb.labels[k] != NodeLabel::interior) continue;
            const Stencil s = differences(pb, u, i, j);
            const Coefficients co = from_matrix(graph_curvature_matrix<double>(pb.f, s.p, s.q));
            const double disc = co.discriminant();
            if (disc < ev.min_discriminant) {
                ev.min_discriminant = disc;
                ev.worst_node = k;
            }
            const double r = co.a * s.uxx + co.b * s.uxy + co.c * s.uyy - pb.h0;
            ev.residual[k] = r;
            ev.norm = std::max(ev.norm, std::abs(r));
        }
    }
    return ev;
}

Field with_boundary(const GraphProblem& pb, Field u)
{
    for (std::size_t k = 0; k < pb.size(); ++k) {
        if (pb.labels[k] == NodeLabel::boundary) u[k] = pb.boundary_values[k];
        if (pb.labels[k] == NodeLabel::outside) u[k] = kNaN;
    }
    return u;
}

std::vector<int> unknown_ids(const GraphProblem& pb, int& count)
{
    std::vector<int> ids(pb.size(), -1);
    count = 0;
    for (std::size_t k = 0; k < pb.size(); ++k) {
        if (pb.labels[k] == NodeLabel::interior) ids[k] = count++;
    }
    return ids;
}

using SparseMatrix = Eigen::SparseMatrix<double>;
using Triplet = Eigen::Triplet<double>;

// Linear operator sum_k w_k u_k over the 9-point stencil, split into unknown
// columns and a constant from boundary nodes.
struct RowBuilder
{
    const GraphProblem& pb;
    const std::vector<int>& ids;
    const Field& u;
    std::vector<Triplet>& triplets;
    int row;
    double fixed = 0.0;

    void add(int i, int j, double w)
    {
        const int k = pb.index(i, j);
        if (ids[k] >= 0) {
            triplets.emplace_back(row, ids[k], w);
        } else {
            fixed += w * u[k];
        }
    }
};

bool solve_sparse(SparseMatrix& m, const Eigen::VectorXd& rhs, Eigen::VectorXd& x)
{
    m.makeCompressed();
    Eigen::SparseLU<SparseMatrix, Eigen::COLAMDOrdering<int>> lu;
    lu.compute(m);
    if (lu.info() != Eigen::Success) return false;
    x = lu.solve(rhs);
    return lu.info() == Eigen::Success && x.allFinite();
}

// Newton (exact Jacobian) or frozen-coefficient correction for the current
// iterate; returns the increment on the unknowns.
bool correction(const GraphProblem& pb, const std::vector<int>& ids, int count, const Field& u, bool newton,
                Eigen::VectorXd& delta)
{
    const double h = pb.h;
    const double h2 = h * h;
    std::vector<Triplet> triplets;
    triplets.reserve(static_cast<std::size_t>(count) * 9);
    Eigen::VectorXd rhs(count);

    for (int j = 1; j + 1 < pb.ny; ++j) {
        for (int i = 1; i + 1 < pb.nx; ++i) {
            const int k = pb.index(i, j);
            if (ids[k] < 0) continue;
            const Stencil s = differences(pb, u, i, j);
            const CoefficientJet cj = assemble_coefficient_jet(pb.f, s.p, s.q);
            const Coefficients& co = cj.value;
            const double r = co.a * s.uxx + co.b * s.uxy + co.c * s.uyy - pb.h0;

            double wp = 0.0;
            double wq = 0.0;
            if (newton) {
                wp = cj.d[0].a * s.uxx + cj.d[0].b * s.uxy + cj.d[0].c * s.uyy;
                wq = cj.d[1].a * s.uxx + cj.d[1].b * s.uxy + cj.d[1].c * s.uyy;
            }
            RowBuilder rb{pb, ids, u, triplets, ids[k]};
            rb.add(i, j, -2.0 * (co.a + co.c) / h2);
            rb.add(i + 1, j, co.a / h2 + wp / (2.0 * h));
            rb.add(i - 1, j, co.a / h2 - wp / (2.0 * h));
            rb.add(i, j + 1, co.c / h2 + wq / (2.0 * h));
            rb.add(i, j - 1, co.c / h2 - wq / (2.0 * h));
            const double wxy = co.b / (4.0 * h2);
            rb.add(i + 1, j + 1, wxy);
            rb.add(i - 1, j - 1, wxy);
            rb.add(i - 1, j + 1, -wxy);
            rb.add(i + 1, j - 1, -wxy);
            // Newton: J delta = -r. Frozen: L(u + delta) = H0, i.e. L_unknowns delta = -r too,
            // since L(u) - H0 = r; only the matrix differs.
            rhs[ids[k]] = -r;
        }
    }
    SparseMatrix m(count, count);
    m.setFromTriplets(triplets.begin(), triplets.end());
    return solve_sparse(m, rhs, delta);
}

Field apply(const GraphProblem& pb, const std::vector<int>& ids, const Field& u, const Eigen::VectorXd& delta,
            double alpha)
{
    Field out = u;
    for (std::size_t k = 0; k < pb.size(); ++k) {
        if (ids[k] >= 0) out[k] += alpha * delta[ids[k]];
    }
    return out;
}

} // namespace

Field camc_residual(const GraphProblem& problem, const Field& u)
{
    if (u.size() != problem.size()) throw DomainError("camc_residual: field size does not match the grid");
    return evaluate(problem, u).residual;
}

Field harmonic_extension(const GraphProblem& problem)
{
    validate(problem);
    int count = 0;
    const auto ids = unknown_ids(problem, count);
    Field u = with_boundary(problem, Field(problem.size(), 0.0));
    if (count == 0) return u;

    std::vector<Triplet> triplets;
    Eigen::VectorXd rhs(count);
    for (int j = 1; j + 1 < problem.ny; ++j) {
        for (int i = 1; i + 1 < problem.nx; ++i) {
            const int k = problem.index(i, j);
            if (ids[k] < 0) continue;
            RowBuilder rb{problem, ids, u, triplets, ids[k]};
            rb.add(i, j, -4.0);
            rb.add(i + 1, j, 1.0);
            rb.add(i - 1, j, 1.0);
            rb.add(i, j + 1, 1.0);
            rb.add(i, j - 1, 1.0);
            rhs[ids[k]] = -rb.fixed;
        }
    }
    SparseMatrix m(count, count);
    m.setFromTriplets(triplets.begin(), triplets.end());
    Eigen::VectorXd x;
    if (!solve_sparse(m, rhs, x)) throw DomainError("harmonic_extension: linear solve failed");
    for (std::size_t k = 0; k < problem.size(); ++k) {
        if (ids[k] >= 0) u[k] = x[ids[k]];
    }
    return u;
}

std::string to_string(SolveStatus status)
{
    switch (status) {
    case SolveStatus::converged: return "converged";
    case SolveStatus::max_iterations: return "max_iterations";
    case SolveStatus::stalled: return "stalled";
    case SolveStatus::ellipticity_lost: return "ellipticity_lost";
    }
    return "unknown";
}

GraphSolution solve_dirichlet(const GraphProblem& problem, const std::optional<Field>& initial_guess,
                              const SolverOptions& options)
{
    validate(problem);
    int count = 0;
    const auto ids = unknown_ids(problem, count);

    GraphSolution sol;
    if (initial_guess) {
        if (initial_guess->size() != problem.size()) throw DomainError("solve_dirichlet: initial guess size mismatch");
        sol.u = with_boundary(problem, *initial_guess);
    } else {
        sol.u = harmonic_extension(problem);
    }

    auto fail_ellipticity = [&](const Evaluation& ev) {
        sol.status = SolveStatus::ellipticity_lost;
        sol.failed_node = ev.worst_node;
        std::ostringstream msg;
        msg << "ellipticity lost at node (" << ev.worst_node % problem.nx << ", " << ev.worst_node / problem.nx
            << "): 4ac - b^2 = " << ev.min_discriminant;
        sol.message = msg.str();
    };

    Evaluation ev = evaluate(problem, sol.u);
    sol.min_discriminant = ev.min_discriminant;
    sol.residual_history.push_back(ev.norm);

    while (true) {
        if (count > 0 && !(ev.min_discriminant > 0.0)) {
            fail_ellipticity(ev);
            break;
        }
        if (ev.norm <= options.tolerance) {
            sol.status = SolveStatus::converged;
            break;
        }
        if (sol.newton_iterations >= options.max_iterations) {
            sol.status = SolveStatus::max_iterations;
            std::ostringstream msg;
            msg << "no convergence after " << options.max_iterations << " iterations, residual " << ev.norm;
            sol.message = msg.str();
            break;
        }
        ++sol.newton_iterations;

        bool accepted = false;
        for (bool newton : {true, false}) {
            Eigen::VectorXd delta;
            if (!correction(problem, ids, count, sol.u, newton, delta)) continue;
            double alpha = 1.0;
            for (int halving = 0; halving <= options.max_halvings; ++halving, alpha *= 0.5) {
                Field trial = apply(problem, ids, sol.u, delta, alpha);
                Evaluation tev = evaluate(problem, trial);
                if (tev.min_discriminant > 0.0 && tev.norm < ev.norm) {
                    sol.u = std::move(trial);
                    ev = std::move(tev);
                    accepted = true;
                    break;
                }
            }
            if (accepted) break;
        }
        sol.min_discriminant = std::min(sol.min_discriminant, ev.min_discriminant);
        sol.residual_history.push_back(ev.norm);
        if (!accepted) {
            sol.status = SolveStatus::stalled;
            std::ostringstream msg;
            msg << "line search failed at iteration " << sol.newton_iterations << ", residual " << ev.norm;
            sol.message = msg.str();
            break;
        }
    }
    sol.residual = ev.residual;
    sol.residual_norm = ev.norm;
    return sol;
}

void write_solution_csv(std::ostream& out, const GraphProblem& problem, const GraphSolution& solution)
{
    const auto precision = out.precision(17);
    out << "x,y,u,residual\n";
    for (int j = 0; j < problem.ny; ++j) {
        for (int i = 0; i < problem.nx; ++i) {
            const int k = problem.index(i, j);
            if (problem.labels[k] == NodeLabel::outside) continue;
            const double r = problem.labels[k] == NodeLabel::interior ? solution.residual[k] : 0.0;
            out << problem.x(i) << ',' << problem.y(j) << ',' << solution.u[k] << ',' << r << '\n';
        }
    }
    out.precision(precision);
}

TriMesh solution_mesh(const GraphProblem& problem, const Field& u)
{
    TriMesh mesh;
    std::vector<int> vid(problem.size(), -1);
    for (int j = 0; j < problem.ny; ++j) {
        for (int i = 0; i < problem.nx; ++i) {
            const int k = problem.index(i, j);
            if (problem.labels[k] == NodeLabel::outside) continue;
            vid[k] = static_cast<int>(mesh.vertices.size());
            mesh.vertices.emplace_back(problem.x(i), problem.y(j), u[k]);
        }
    }
    for (int j = 0; j + 1 < problem.ny; ++j) {
        for (int i = 0; i + 1 < problem.nx; ++i) {
            const int a = vid[problem.index(i, j)];
            const int b = vid[problem.index(i + 1, j)];
            const int c = vid[problem.index(i, j + 1)];
            const int d = vid[problem.index(i + 1, j + 1)];
            if (a < 0 || b < 0 || c < 0 || d < 0) continue;
            mesh.triangles.push_back({a, b, d});
            mesh.triangles.push_back({a, d, c});
        }
    }
    return mesh;
}

} // namespace camc
