#include <camc/config.hpp>
#include <camc/wulff.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

namespace camc {

namespace {

std::string trim(const std::string& s)
{
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::string lower(std::string s)
{
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    return s;
}

double to_double(const std::string& key, const std::string& text)
{
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(text, &used);
    } catch (const std::exception&) {
        throw ConfigError("config: '" + key + "' is not a number: " + text);
    }
    if (trim(text.substr(used)) != "") throw ConfigError("config: '" + key + "' is not a number: " + text);
    return value;
}

} // namespace

Config Config::parse(std::istream& in, const std::filesystem::path& base_dir)
{
    Config cfg;
    std::string line;
    int lineno = 0;
    std::optional<std::filesystem::path> include;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("config line " + std::to_string(lineno) + ": expected 'key = value'");
        }
        const std::string key = lower(trim(line.substr(0, eq)));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) throw ConfigError("config line " + std::to_string(lineno) + ": empty key");
        if (key == "anisotropy") {
            include = base_dir / value;
            continue;
        }
        cfg.m_values[key] = value;
    }
    if (include) {
        const Config other = load(*include);
        for (const auto& [k, v] : other.m_values) cfg.m_values.emplace(k, v);
    }
    return cfg;
}

Config Config::parse_string(const std::string& text)
{
    std::istringstream in(text);
    return parse(in);
}

Config Config::load(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open " + path.string());
    return parse(in, path.parent_path());
}

std::string Config::get_string(const std::string& key) const
{
    auto it = m_values.find(key);
    if (it == m_values.end()) throw ConfigError("config: missing key '" + key + "'");
    return it->second;
}

std::string Config::get_string(const std::string& key, const std::string& fallback) const
{
    return has(key) ? get_string(key) : fallback;
}

double Config::get_double(const std::string& key) const { return to_double(key, get_string(key)); }

double Config::get_double(const std::string& key, double fallback) const
{
    return has(key) ? get_double(key) : fallback;
}

int Config::get_int(const std::string& key, int fallback) const
{
    if (!has(key)) return fallback;
    const double v = get_double(key);
    if (v != std::floor(v)) throw ConfigError("config: '" + key + "' must be an integer");
    return static_cast<int>(v);
}

std::vector<double> Config::get_list(const std::string& key) const
{
    std::string text = get_string(key);
    if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
        throw ConfigError("config: '" + key + "' must be a list like [a, b, c]");
    }
    text = text.substr(1, text.size() - 2);
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) throw ConfigError("config: empty entry in '" + key + "'");
        out.push_back(to_double(key, item));
    }
    return out;
}

Vec3 Config::get_vec3(const std::string& key, const Vec3& fallback) const
{
    if (!has(key)) return fallback;
    const auto v = get_list(key);
    if (v.size() != 3) throw ConfigError("config: '" + key + "' must have 3 entries");
    return {v[0], v[1], v[2]};
}

AnisotropyFunction anisotropy_from_config(const Config& config)
{
    const std::string kind = lower(config.get_string("kind", "constant"));
    if (kind == "constant") return AnisotropyFunction::constant();
    if (kind == "ellipsoid") {
        const auto q = config.get_list("q");
        if (q.size() != 6) throw ConfigError("config: q needs 6 entries [q11,q22,q33,q12,q13,q23]");
        Mat3 m;
        m << q[0], q[3], q[4], q[3], q[1], q[5], q[4], q[5], q[2];
        return AnisotropyFunction::ellipsoid(m);
    }
    if (kind == "perturbed") {
        return AnisotropyFunction::perturbed(config.get_double("epsilon"), config.get_vec3("axis", Vec3::UnitZ()));
    }
    throw ConfigError("config: unknown anisotropy kind '" + kind + "'");
}

TraceFn trace_from_config(const Config& config, const AnisotropyFunction& f)
{
    const std::string name = lower(config.get_string("boundary", "constant"));
    if (name == "constant") {
        const double k = config.get_double("boundary_value", 0.0);
        return [k](double, double) { return k; };
    }
    if (name == "affine") {
        const auto slope = config.get_list("slope");
        if (slope.size() != 2) throw ConfigError("config: slope needs 2 entries");
        const double k = config.get_double("boundary_value", 0.0);
        return [a = slope[0], b = slope[1], k](double x, double y) { return a * x + b * y + k; };
    }
    if (name == "sphere_cap") {
        const double r = config.get_double("cap_radius", 1.0);
        return [r](double x, double y) { return std::sqrt(r * r - x * x - y * y); };
    }
    if (name == "wulff_cap") {
        const double scale = config.get_double("cap_scale", 1.0);
        return [f, scale](double x, double y) { return wulff_cap_height(f, x, y, scale); };
    }
    throw ConfigError("config: unknown boundary trace '" + name + "'");
}

GraphProblem problem_from_config(const Config& config, std::optional<int> grid, std::optional<double> h0)
{
    const AnisotropyFunction f = anisotropy_from_config(config);
    const TraceFn trace = trace_from_config(config, f);
    const double target = h0 ? *h0 : config.get_double("h0", 0.0);
    const std::string mask = lower(config.get_string("mask", "rectangle"));

    auto nodes_for = [&](double extent) {
        if (grid) return *grid;
        if (config.has("grid")) return config.get_int("grid", 33);
        if (config.has("h")) {
            const double n = extent / config.get_double("h");
            if (std::abs(n - std::round(n)) > 1e-9) throw ConfigError("config: h must divide the domain width");
            return static_cast<int>(std::lround(n)) + 1;
        }
        return 33;
    };

    if (mask == "disk") {
        const auto center = config.has("center") ? config.get_list("center") : std::vector<double>{0.0, 0.0};
        if (center.size() != 2) throw ConfigError("config: center needs 2 entries");
        const double radius = config.get_double("radius");
        return make_disk_problem(f, target, center[0], center[1], radius, nodes_for(2.0 * radius), trace);
    }
    if (mask == "rectangle") {
        const auto d = config.has("domain") ? config.get_list("domain") : std::vector<double>{-1.0, 1.0, -1.0, 1.0};
        if (d.size() != 4) throw ConfigError("config: domain needs [x0,x1,y0,y1]");
        return make_rect_problem(f, target, d[0], d[1], d[2], d[3], nodes_for(d[1] - d[0]), trace);
    }
    throw ConfigError("config: unknown mask '" + mask + "'");
}

} // namespace camc
