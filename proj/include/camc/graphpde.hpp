#pragma once

#include <camc/anisotropy.hpp>
#include <camc/mesh.hpp>

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace camc {

/// Upward unit normal (-p, -q, 1) / sqrt(1 + p^2 + q^2) of the graph z = u(x, y).
Vec3 graph_normal(double p, double q);

/// Matrix of S = -dN in the basis (d_x, d_y) for a graph with gradient (p, q)
/// and Hessian entries (u_xx, u_xy, u_yy).
Mat2 graph_euclid_weingarten(double p, double q, double uxx, double uxy, double uyy);

/// Coefficients of H = a u_xx + b u_xy + c u_yy at fixed gradient (p, q).
struct Coefficients
{
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    double discriminant() const { return 4.0 * a * c - b * b; }
};

/// Throws EllipticityError when 4ac - b^2 <= 0.
Coefficients assemble_coefficients(const AnisotropyFunction& f, double p, double q);

/// Coefficients with their first derivatives in p (index 0) and q (index 1).
struct CoefficientJet
{
    Coefficients value;
    Coefficients d[2];
};

CoefficientJet assemble_coefficient_jet(const AnisotropyFunction& f, double p, double q);

enum class NodeLabel : std::uint8_t { outside, boundary, interior };

/// Dirichlet problem for the constant anisotropic mean curvature graph
/// equation on a masked uniform grid. Node (i, j) sits at (x0 + i h, y0 + j h)
/// with flat index j * nx + i.
struct GraphProblem
{
    AnisotropyFunction f = AnisotropyFunction::constant();
    double h0 = 0.0;
    double x0 = 0.0;
    double y0 = 0.0;
    double h = 1.0;
    int nx = 0;
    int ny = 0;
    std::vector<NodeLabel> labels;
    std::vector<double> boundary_values; ///< NaN away from boundary nodes

    int index(int i, int j) const { return j * nx + i; }
    double x(int i) const { return x0 + i * h; }
    double y(int j) const { return y0 + j * h; }
    std::size_t size() const { return labels.size(); }
};

using TraceFn = std::function<double(double x, double y)>;

/// Rectangle [x0,x1]x[y0,y1] with n nodes along x and the same spacing along
/// y (the y extent must be a whole number of cells); edge nodes are boundary.
GraphProblem make_rect_problem(const AnisotropyFunction& f, double h0, double x0, double x1, double y0,
                               double y1, int n, const TraceFn& trace);

/// Disk of the given radius, gridded on its bounding square with n nodes per
/// axis. Nodes strictly inside are interior; their 8-neighbors outside the
/// disk are boundary nodes carrying trace values.
GraphProblem make_disk_problem(const AnisotropyFunction& f, double h0, double cx, double cy, double radius,
                               int n, const TraceFn& trace);

/// Throws DomainError when an interior node touches an outside node through
/// its 9-point stencil or a boundary value is not finite.
void validate(const GraphProblem& problem);

using Field = std::vector<double>;

/// Central-difference residual a u_xx + b u_xy + c u_yy - H0 at interior
/// nodes (NaN elsewhere).
Field camc_residual(const GraphProblem& problem, const Field& u);

/// Solution of the discrete Laplace equation with the problem's boundary data.
Field harmonic_extension(const GraphProblem& problem);

enum class SolveStatus { converged, max_iterations, stalled, ellipticity_lost };

std::string to_string(SolveStatus status);

struct SolverOptions
{
    double tolerance = 1e-10;
    int max_iterations = 50;
    int max_halvings = 30;
};

struct GraphSolution
{
    Field u;
    Field residual;
    double residual_norm = 0.0;
    int newton_iterations = 0;
    SolveStatus status = SolveStatus::max_iterations;
    std::string message;
    int failed_node = -1;        ///< set on ellipticity loss
    double min_discriminant = 0; ///< min of 4ac - b^2 over iterates and nodes
    std::vector<double> residual_history;

    bool converged() const { return status == SolveStatus::converged; }
};

/// Damped Newton iteration on the discrete residual with exact Jacobian;
/// the step is halved until the max-norm residual decreases, and a
/// frozen-coefficient step is tried when halving fails.
GraphSolution solve_dirichlet(const GraphProblem& problem, const std::optional<Field>& initial_guess = {},
                              const SolverOptions& options = {});

/// CSV with header `x,y,u,residual` over interior and boundary nodes.
void write_solution_csv(std::ostream& out, const GraphProblem& problem, const GraphSolution& solution);

/// Height-field mesh over grid cells whose four corners are not outside.
TriMesh solution_mesh(const GraphProblem& problem, const Field& u);

} // namespace camc
