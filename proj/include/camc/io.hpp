#pragma once

#include <camc/analysis.hpp>
#include <camc/anisotropy.hpp>
#include <camc/curvature.hpp>
#include <camc/graphpde.hpp>
#include <camc/wulff.hpp>

#include <json.hpp>

#include <iosfwd>
#include <vector>

namespace camc {

using Json = nlohmann::ordered_json;

Json to_json(const Vec3& v);
Json to_json(const EllipticityReport& report);
Json to_json(const FunctionalValue& value);
Json to_json(const HemisphereVerdict& verdict);
Json to_json(const BoundsReport& report);
Json to_json(const GraphSolution& solution);

struct ChartSample
{
    double u = 0.0;
    double v = 0.0;
    CurvatureSample sample;
};

/// CSV with header `u,v,x,y,z,H,K,lambda1,lambda2,sigma_norm`.
void write_curvature_csv(std::ostream& out, const std::vector<ChartSample>& samples);

} // namespace camc
