#include <camc/analysis.hpp>
#include <camc/config.hpp>
#include <camc/curvature.hpp>
#include <camc/graphpde.hpp>
#include <camc/io.hpp>
#include <camc/verify.hpp>
#include <camc/wulff.hpp>

#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace camc;

namespace {

using Points = Eigen::Matrix<double, Eigen::Dynamic, 3, Eigen::RowMajor>;
using Faces = Eigen::Matrix<int, Eigen::Dynamic, 3, Eigen::RowMajor>;

py::object to_python(const Json& j)
{
    return py::module_::import("json").attr("loads")(j.dump());
}

std::vector<Vec3> rows(const Points& p)
{
    std::vector<Vec3> out(p.rows());
    for (Eigen::Index i = 0; i < p.rows(); ++i) out[i] = p.row(i).transpose();
    return out;
}

Points points(const std::vector<Vec3>& v)
{
    Points p(v.size(), 3);
    for (std::size_t i = 0; i < v.size(); ++i) p.row(i) = v[i].transpose();
    return p;
}

py::dict mesh_dict(const TriMesh& m)
{
    Faces t(m.num_triangles(), 3);
    for (std::size_t i = 0; i < m.num_triangles(); ++i) t.row(i) << m.triangles[i][0], m.triangles[i][1], m.triangles[i][2];
    py::dict d;
    d["vertices"] = points(m.vertices);
    d["triangles"] = t;
    d["normals"] = points(m.normals);
    return d;
}

TriMesh mesh_from(const Points& v, const Faces& t, const Points& n)
{
    TriMesh m;
    m.vertices = rows(v);
    m.normals = rows(n);
    for (Eigen::Index i = 0; i < t.rows(); ++i) m.triangles.push_back({t(i, 0), t(i, 1), t(i, 2)});
    return m;
}

ParametrizedSurface chart_by_name(const std::string& name, const AnisotropyFunction& f)
{
    if (name == "plane") return plane_chart();
    if (name == "sphere") return sphere_chart(1.0);
    if (name == "cylinder") return round_cylinder_chart(1.0);
    if (name == "torus") return torus_chart(2.0, 0.5);
    if (name == "wulff") return wulff_chart(f);
    if (name == "wulff-interior") {
        ParametrizedSurface s = wulff_chart(f);
        s.orientation = -1;
        return s;
    }
    throw DomainError("unknown chart '" + name + "'");
}

py::dict sample_dict(const CurvatureSample& s)
{
    py::dict d;
    d["point"] = s.point;
    d["normal"] = s.normal;
    d["S"] = s.S;
    d["A"] = s.A;
    d["H"] = s.H;
    d["H_ambient"] = s.H_ambient;
    d["K"] = s.K;
    d["lambda"] = py::make_tuple(s.lambda1, s.lambda2);
    d["kappa"] = py::make_tuple(s.kappa1, s.kappa2);
    return d;
}

py::dict solution_dict(const GraphProblem& pb, const GraphSolution& s)
{
    std::vector<double> x, y, u;
    for (int j = 0; j < pb.ny; ++j) {
        for (int i = 0; i < pb.nx; ++i) {
            const int k = pb.index(i, j);
            if (pb.labels[k] == NodeLabel::outside) continue;
            x.push_back(pb.x(i));
            y.push_back(pb.y(j));
            u.push_back(s.u[k]);
        }
    }
    py::dict d = to_python(to_json(s));
    d["x"] = py::array_t<double>(x.size(), x.data());
    d["y"] = py::array_t<double>(y.size(), y.data());
    d["u"] = py::array_t<double>(u.size(), u.data());
    d["h"] = pb.h;
    return d;
}

} // namespace

PYBIND11_MODULE(_camc, m)
{
    m.doc() = "Anisotropic mean curvature toolkit";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<EllipticityError>(m, "EllipticityError", PyExc_ValueError);
    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

    py::class_<AnisotropyFunction>(m, "Anisotropy")
        .def_static("constant", &AnisotropyFunction::constant)
        .def_static("ellipsoid", &AnisotropyFunction::ellipsoid, py::arg("q"))
        .def_static("perturbed", &AnisotropyFunction::perturbed, py::arg("epsilon"), py::arg("axis"))
        .def_static("from_config", [](const std::string& path) { return anisotropy_from_config(Config::load(path)); })
        .def_property_readonly("name", &AnisotropyFunction::name)
        .def("__call__", &AnisotropyFunction::eval, py::arg("n"))
        .def("eta", &AnisotropyFunction::eta, py::arg("n"))
        .def("hessian", &AnisotropyFunction::hessian, py::arg("n"))
        .def("tangential_eigenvalues", [](const AnisotropyFunction& f, const Vec3& n) { return tangential_eigenvalues(f, n); })
        .def(
            "ellipticity",
            [](const AnisotropyFunction& f, int level) { return to_python(to_json(check_ellipticity(f, level))); },
            py::arg("level") = 4)
        .def("__repr__", [](const AnisotropyFunction& f) { return "<Anisotropy " + f.name() + ">"; });

    m.def("wulff_mesh", [](const AnisotropyFunction& f, int level) { return mesh_dict(build_wulff_mesh(f, level).mesh); },
          py::arg("f"), py::arg("level") = 4);
    m.def("wulff_diameter", [](const AnisotropyFunction& f) { return wulff_diameter(f); }, py::arg("f"));
    m.def(
        "curvature_range",
        [](const AnisotropyFunction& f) {
            const CurvatureRange r = wulff_curvature_range(f);
            return py::make_tuple(r.m, r.M);
        },
        py::arg("f"));
    m.def(
        "cylinder",
        [](const AnisotropyFunction& f, const Vec3& axis, double height, int samples) {
            const CylinderPatch p = build_cylinder(f, axis, height, samples);
            py::dict d = mesh_dict(p.mesh);
            std::vector<Vec3> profile;
            for (const auto& s : p.profile.samples) profile.push_back(s.point);
            d["profile"] = points(profile);
            std::vector<double> h;
            for (const auto& s : p.profile.samples) h.push_back(aniso_shape_operator(f, p.chart, s.theta, 0.0).H);
            d["H"] = h;
            return d;
        },
        py::arg("f"), py::arg("axis"), py::arg("height") = 2.0, py::arg("samples") = 128);

    m.def(
        "chart_curvature",
        [](const AnisotropyFunction& f, const std::string& chart, double u, double v) {
            return sample_dict(aniso_shape_operator(f, chart_by_name(chart, f), u, v));
        },
        py::arg("f"), py::arg("chart"), py::arg("u"), py::arg("v"));
    m.def(
        "mesh_curvature",
        [](const AnisotropyFunction& f, const Points& v, const Faces& t, const Points& n) {
            return aniso_H_mesh(f, mesh_from(v, t, n)).H;
        },
        py::arg("f"), py::arg("vertices"), py::arg("triangles"), py::arg("normals"));
    m.def(
        "functional",
        [](const AnisotropyFunction& f, const Points& v, const Faces& t, const Points& n, double h0) {
            return to_python(to_json(functional_F0(f, mesh_from(v, t, n), h0)));
        },
        py::arg("f"), py::arg("vertices"), py::arg("triangles"), py::arg("normals"), py::arg("h0") = 0.0);

    m.def(
        "graph_coefficients",
        [](const AnisotropyFunction& f, double p, double q) {
            const Coefficients c = assemble_coefficients(f, p, q);
            return py::make_tuple(c.a, c.b, c.c);
        },
        py::arg("f"), py::arg("p"), py::arg("q"));
    m.def(
        "solve_disk",
        [](const AnisotropyFunction& f, double h0, double radius, int n, const TraceFn& trace) {
            const GraphProblem pb = make_disk_problem(f, h0, 0.0, 0.0, radius, n, trace);
            GraphSolution s;
            {
                py::gil_scoped_release release;
                s = solve_dirichlet(pb);
            }
            return solution_dict(pb, s);
        },
        py::arg("f"), py::arg("h0"), py::arg("radius"), py::arg("n"), py::arg("trace"));
    m.def(
        "solve_config",
        [](const std::string& path, std::optional<int> grid, std::optional<double> h0) {
            const GraphProblem pb = problem_from_config(Config::load(path), grid, h0);
            return solution_dict(pb, solve_dirichlet(pb));
        },
        py::arg("path"), py::arg("grid") = py::none(), py::arg("h0") = py::none());

    m.def(
        "hemisphere",
        [](const Points& normals) { return to_python(to_json(hemisphere_classifier(rows(normals)))); },
        py::arg("normals"));
    m.def(
        "meeks_constant",
        [](const AnisotropyFunction& f, double h0) { return to_python(to_json(meeks_constant(f, h0))); }, py::arg("f"),
        py::arg("h0"));

    m.def(
        "acceptance",
        [](std::uint64_t seed) {
            std::vector<CriterionResult> r;
            {
                py::gil_scoped_release release;
                r = run_acceptance(seed);
            }
            return to_python(summary_json(r, seed));
        },
        py::arg("seed") = kDefaultSeed);
}
