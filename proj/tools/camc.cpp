// camc: command-line front end for the toolkit.
//
//   camc wulff        --config F.cfg [--level L] --out DIR
//   camc cylinder     --config F.cfg [--axis x,y,z] [--height h] [--samples n] --out DIR
//   camc curvature    --config F.cfg --chart NAME [--samples n] [--seed s] --out DIR
//   camc solve-graph  --config P.cfg [--grid n] [--h0 v] --out DIR
//   camc check        [--seed s] [--out DIR]
//
// Failures print a JSON error record and exit with status 1.

#include <camc/config.hpp>
#include <camc/io.hpp>
#include <camc/verify.hpp>

#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>

namespace fs = std::filesystem;
using namespace camc;

namespace {

constexpr double kPi = 3.14159265358979323846;

class CliError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

std::ofstream open_out(const fs::path& dir, const std::string& name)
{
    fs::create_directories(dir);
    std::ofstream out(dir / name);
    if (!out) throw CliError("cannot write " + (dir / name).string());
    return out;
}

void write_json(const fs::path& dir, const std::string& name, const Json& j)
{
    auto out = open_out(dir, name);
    out << j.dump(2) << '\n';
}

AnisotropyFunction load_anisotropy(const std::string& path)
{
    if (path.empty()) return AnisotropyFunction::constant();
    return anisotropy_from_config(Config::load(path));
}

Json curvature_range_json(const AnisotropyFunction& f)
{
    const CurvatureRange r = wulff_curvature_range(f);
    return {{"m", r.m}, {"M", r.M}};
}

struct Options
{
    std::string config;
    std::string out = ".";
    std::uint64_t seed = kDefaultSeed;
    int level = 4;
    std::optional<int> grid;
    std::optional<double> h0;
    std::vector<double> axis = {0.0, 0.0, 1.0};
    double height = 2.0;
    int samples = 128;
    std::string chart = "wulff";
};

int run_wulff(const Options& o)
{
    const AnisotropyFunction f = load_anisotropy(o.config);
    const EllipticityReport ell = check_ellipticity(f, std::max(o.level, 4));
    const WulffMesh w = build_wulff_mesh(f, o.level);
    {
        auto out = open_out(o.out, "wulff.obj");
        write_obj(out, w.mesh);
    }
    const Json j = {{"anisotropy", f.name()},
                    {"level", o.level},
                    {"vertices", w.mesh.num_vertices()},
                    {"d_w", wulff_diameter(f)},
                    {"curvature_range", curvature_range_json(f)},
                    {"ellipticity", to_json(ell)}};
    write_json(o.out, "wulff.json", j);
    std::cout << j.dump(2) << '\n';
    return 0;
}

int run_cylinder(const Options& o)
{
    const AnisotropyFunction f = load_anisotropy(o.config);
    if (o.axis.size() != 3) throw CliError("--axis needs three components");
    const Vec3 axis = Vec3(o.axis[0], o.axis[1], o.axis[2]).normalized();
    const CylinderPatch patch = build_cylinder(f, axis, o.height, o.samples);
    {
        auto out = open_out(o.out, "cylinder.obj");
        write_obj(out, patch.mesh);
    }
    {
        auto out = open_out(o.out, "profile.csv");
        write_profile_csv(out, patch.profile);
    }
    std::vector<ChartSample> samples;
    double h_err = 0.0;
    const int rows = 5;
    for (const auto& p : patch.profile.samples) {
        for (int k = 0; k < rows; ++k) {
            const double lambda = patch.height * (static_cast<double>(k) / (rows - 1) - 0.5);
            const CurvatureSample s = aniso_shape_operator(f, patch.chart, p.theta, lambda);
            h_err = std::max(h_err, std::abs(s.H + 1.0));
            samples.push_back({p.theta, lambda, s});
        }
    }
    {
        auto out = open_out(o.out, "cylinder_H.csv");
        write_curvature_csv(out, samples);
    }
    const Json j = {{"anisotropy", f.name()},
                    {"axis", to_json(axis)},
                    {"height", o.height},
                    {"samples", o.samples},
                    {"max_abs_H_plus_1", h_err}};
    write_json(o.out, "cylinder.json", j);
    std::cout << j.dump(2) << '\n';
    return 0;
}

struct ChartSpec
{
    ParametrizedSurface surface;
    double u0, u1, v0, v1;
};

ChartSpec named_chart(const std::string& name, const AnisotropyFunction& f)
{
    if (name == "plane") return {plane_chart(), -1.0, 1.0, -1.0, 1.0};
    if (name == "sphere") return {sphere_chart(1.0), 0.05, kPi - 0.05, 0.0, 2.0 * kPi};
    if (name == "cylinder") return {round_cylinder_chart(1.0), 0.0, 2.0 * kPi, -1.0, 1.0};
    if (name == "torus") return {torus_chart(2.0, 0.5), 0.0, 2.0 * kPi, 0.0, 2.0 * kPi};
    if (name == "wulff") return {wulff_chart(f), 0.05, kPi - 0.05, 0.0, 2.0 * kPi};
    if (name == "wulff-interior") {
        ParametrizedSurface s = wulff_chart(f);
        s.orientation = -1;
        return {s, 0.05, kPi - 0.05, 0.0, 2.0 * kPi};
    }
    throw CliError("unknown chart '" + name + "' (plane, sphere, cylinder, torus, wulff, wulff-interior)");
}

int run_curvature(const Options& o)
{
    const AnisotropyFunction f = load_anisotropy(o.config);
    const ChartSpec chart = named_chart(o.chart, f);
    std::mt19937_64 rng(o.seed);
    std::uniform_real_distribution<double> unit;
    std::vector<ChartSample> samples;
    for (int k = 0; k < o.samples; ++k) {
        const double u = chart.u0 + (chart.u1 - chart.u0) * unit(rng);
        const double v = chart.v0 + (chart.v1 - chart.v0) * unit(rng);
        samples.push_back({u, v, aniso_shape_operator(f, chart.surface, u, v)});
    }
    auto out = open_out(o.out, "curvature.csv");
    write_curvature_csv(out, samples);
    std::cout << Json{{"anisotropy", f.name()}, {"chart", o.chart}, {"samples", o.samples}, {"seed", o.seed}}.dump(2)
              << '\n';
    return 0;
}

int run_solve_graph(const Options& o)
{
    if (o.config.empty()) throw CliError("solve-graph needs --config");
    const Config cfg = Config::load(o.config);
    const GraphProblem problem = problem_from_config(cfg, o.grid, o.h0);
    const GraphSolution sol = solve_dirichlet(problem);
    {
        auto out = open_out(o.out, "solution.csv");
        write_solution_csv(out, problem, sol);
    }
    {
        auto out = open_out(o.out, "solution.obj");
        write_obj(out, solution_mesh(problem, sol.u));
    }
    Json j = to_json(sol);
    j["anisotropy"] = problem.f.name();
    j["h0"] = problem.h0;
    j["grid"] = {problem.nx, problem.ny};
    j["h"] = problem.h;
    write_json(o.out, "report.json", j);
    if (!sol.converged()) {
        std::cout << Json{{"error", {{"type", "convergence"}, {"message", "solver stopped: " + to_string(sol.status)}}},
                          {"report", j}}
                         .dump(2)
                  << '\n';
        return 1;
    }
    std::cout << j.dump(2) << '\n';
    return 0;
}

int run_check(const Options& o, bool write)
{
    const auto results = run_acceptance(o.seed);
    for (const auto& r : results) std::cerr << format_line(r) << '\n';
    const Json j = summary_json(results, o.seed);
    if (write) write_json(o.out, "check.json", j);
    std::cout << j.dump(2) << '\n';
    return all_passed(results) ? 0 : 1;
}

int error_record(const std::string& kind, const std::string& message)
{
    std::cout << Json{{"error", {{"type", kind}, {"message", message}}}}.dump(2) << '\n';
    return 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Constant anisotropic mean curvature toolkit"};
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--config", o.config, "configuration file")->check(CLI::ExistingFile);
        sub->add_option("--out", o.out, "output directory");
        sub->add_option("--seed", o.seed, "random seed")->capture_default_str();
    };

    auto* wulff = app.add_subcommand("wulff", "Wulff shape mesh, diameter and curvature range");
    common(wulff);
    wulff->add_option("--level", o.level, "icosphere subdivision level")->check(CLI::Range(0, 7));

    auto* cylinder = app.add_subcommand("cylinder", "CAMC cylinder patch and its chart H");
    common(cylinder);
    cylinder->add_option("--axis", o.axis, "axis v0 as x,y,z")->delimiter(',')->expected(3);
    cylinder->add_option("--height", o.height, "patch height")->check(CLI::PositiveNumber);
    cylinder->add_option("--samples", o.samples, "profile samples")->check(CLI::Range(16, 100000));

    auto* curvature = app.add_subcommand("curvature", "curvature samples on a named chart");
    common(curvature);
    curvature->add_option("--chart", o.chart, "plane, sphere, cylinder, torus, wulff, wulff-interior");
    curvature->add_option("--samples", o.samples, "number of random samples")->check(CLI::PositiveNumber);

    auto* solve = app.add_subcommand("solve-graph", "Dirichlet problem for a CAMC graph");
    common(solve);
    solve->add_option("--grid", o.grid, "nodes per axis (overrides the file)");
    solve->add_option("--h0", o.h0, "target H0 (overrides the file)");

    auto* check = app.add_subcommand("check", "run the acceptance suite");
    common(check);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*wulff) return run_wulff(o);
        if (*cylinder) return run_cylinder(o);
        if (*curvature) return run_curvature(o);
        if (*solve) return run_solve_graph(o);
        if (*check) return run_check(o, check->count("--out") > 0);
    } catch (const ConfigError& e) {
        return error_record("parse", e.what());
    } catch (const EllipticityError& e) {
        return error_record("ellipticity", e.what());
    } catch (const DomainError& e) {
        return error_record("domain", e.what());
    } catch (const CliError& e) {
        return error_record("runtime", e.what());
    } catch (const std::exception& e) {
        return error_record("internal", e.what());
    }
    return 1;
}
