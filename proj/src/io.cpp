#include <camc/io.hpp>

#include <ostream>

namespace camc {

Json to_json(const Vec3& v) { return Json::array({v.x(), v.y(), v.z()}); }

Json to_json(const EllipticityReport& report)
{
    return {{"min_eigenvalue", report.min_eigenvalue},
            {"argmin_direction", to_json(report.argmin_direction)},
            {"sample_count", report.sample_count},
            {"threshold", kEllipticityThreshold},
            {"passed", report.passed}};
}

Json to_json(const FunctionalValue& value)
{
    return {{"area_term", value.area_term},
            {"volume_term", value.volume_term},
            {"H0", value.H0},
            {"total", value.total}};
}

Json to_json(const HemisphereVerdict& verdict)
{
    return {{"feasible", verdict.feasible},
            {"witness", verdict.witness ? to_json(*verdict.witness) : Json(nullptr)},
            {"margin", verdict.margin}};
}

Json to_json(const BoundsReport& report)
{
    Json slices = Json::array();
    for (const auto& s : report.slices) {
        slices.push_back({{"offset", s.offset}, {"components", s.components}, {"perturbed", s.perturbed}});
    }
    return {{"d_w", report.d_w},       {"h0", report.h0},         {"d0", report.d0},
            {"d0_unscaled", report.d0_unscaled}, {"heights", report.heights}, {"slices", slices}};
}

Json to_json(const GraphSolution& solution)
{
    Json j = {{"status", to_string(solution.status)},
              {"converged", solution.converged()},
              {"newton_iterations", solution.newton_iterations},
              {"residual_norm", solution.residual_norm},
              {"min_discriminant", solution.min_discriminant},
              {"residual_history", solution.residual_history}};
    if (!solution.message.empty()) j["message"] = solution.message;
    if (solution.failed_node >= 0) j["failed_node"] = solution.failed_node;
    return j;
}

void write_curvature_csv(std::ostream& out, const std::vector<ChartSample>& samples)
{
    const auto precision = out.precision(17);
    out << "u,v,x,y,z,H,K,lambda1,lambda2,sigma_norm\n";
    for (const auto& s : samples) {
        const auto& c = s.sample;
        out << s.u << ',' << s.v << ',' << c.point.x() << ',' << c.point.y() << ',' << c.point.z() << ',' << c.H
            << ',' << c.K << ',' << c.lambda1 << ',' << c.lambda2 << ',' << c.sigma_norm << '\n';
    }
    out.precision(precision);
}

} // namespace camc
