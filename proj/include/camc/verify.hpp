#pragma once

#include <camc/io.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace camc {

inline constexpr std::uint64_t kDefaultSeed = 20240611;

struct CriterionResult
{
    std::string id;   ///< "1" .. "11"; supplementary lines carry a letter suffix
    std::string name;
    bool passed = false;
    bool supplementary = false; ///< reported, but not part of the overall verdict
    std::string detail;
    Json measured = Json::object();
};

/// The builtin fixtures: F = 1, ellipsoid diag(4, 1, 1) and the perturbed
/// sphere with eps = 0.2 about (1, 2, 3) / sqrt(14).
std::vector<AnisotropyFunction> builtin_fixtures();

CriterionResult check_round_reduction(std::uint64_t seed);
CriterionResult check_ellipsoid_wulff(std::uint64_t seed);
CriterionResult check_cylinder(std::uint64_t seed);
CriterionResult check_homothety(std::uint64_t seed);
CriterionResult check_pde_recovery(std::uint64_t seed);
CriterionResult check_coefficients(std::uint64_t seed);
CriterionResult check_criticality(std::uint64_t seed);
CriterionResult check_norm_equivalence(std::uint64_t seed);
CriterionResult check_hemisphere(std::uint64_t seed);
CriterionResult check_constants(std::uint64_t seed);
/// Interior-normal H on the ellipsoid Wulff shape (first entry) and, as a
/// supplementary line, on the perturbed sphere.
std::vector<CriterionResult> check_interior_nonconstancy(std::uint64_t seed);

std::vector<CriterionResult> run_acceptance(std::uint64_t seed = kDefaultSeed);

/// True when every non-supplementary result passed.
bool all_passed(const std::vector<CriterionResult>& results);

Json to_json(const CriterionResult& result);
Json summary_json(const std::vector<CriterionResult>& results, std::uint64_t seed);

/// One line: `PASS  [id] name: detail`.
std::string format_line(const CriterionResult& result);

} // namespace camc
