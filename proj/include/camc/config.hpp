#pragma once

#include <camc/anisotropy.hpp>
#include <camc/graphpde.hpp>

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace camc {

class ConfigError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Plain-text `key = value` configuration. `#` starts a comment; lists are
/// written `[a, b, c]`. A key `anisotropy = <path>` pulls in the keys of
/// another file (resolved relative to the including file) without
/// overriding keys set locally.
class Config
{
public:
    static Config parse(std::istream& in, const std::filesystem::path& base_dir = {});
    static Config parse_string(const std::string& text);
    static Config load(const std::filesystem::path& path);

    bool has(const std::string& key) const { return m_values.count(key) != 0; }
    std::string get_string(const std::string& key) const;
    std::string get_string(const std::string& key, const std::string& fallback) const;
    double get_double(const std::string& key) const;
    double get_double(const std::string& key, double fallback) const;
    int get_int(const std::string& key, int fallback) const;
    std::vector<double> get_list(const std::string& key) const;
    Vec3 get_vec3(const std::string& key, const Vec3& fallback) const;

    void set(const std::string& key, const std::string& value) { m_values[key] = value; }
    const std::map<std::string, std::string>& values() const { return m_values; }

private:
    std::map<std::string, std::string> m_values;
};

/// `kind = constant | ellipsoid | perturbed`, `q = [q11,q22,q33,q12,q13,q23]`,
/// `epsilon`, `axis = [x,y,z]`.
AnisotropyFunction anisotropy_from_config(const Config& config);

/// Boundary trace named by `boundary = constant | affine | sphere_cap | wulff_cap`.
///  - constant:   `boundary_value`
///  - affine:     `slope = [a, b]`, `boundary_value` (u = a x + b y + value)
///  - sphere_cap: `cap_radius` (upper hemisphere of that radius)
///  - wulff_cap:  `cap_scale` (upper cap of the scaled Wulff shape)
TraceFn trace_from_config(const Config& config, const AnisotropyFunction& f);

/// `mask = rectangle | disk`, `domain = [x0,x1,y0,y1]` (rectangle),
/// `center = [cx,cy]` and `radius` (disk), `grid` nodes per axis or `h`,
/// `H0`. Explicit `grid`/`h0` arguments override the file.
GraphProblem problem_from_config(const Config& config, std::optional<int> grid = {},
                                 std::optional<double> h0 = {});

} // namespace camc
