#include "plap/cli/config.hpp"

#include <fstream>
#include <locale>
#include <sstream>

#include "plap/io.hpp"
#include "plap/random.hpp"

namespace plap::cli {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_plain(const std::string& text) {
    std::istringstream is(trim(text));
    is.imbue(std::locale::classic());
    double x = 0.0;
    is >> x;
    if (is.fail() || !(is >> std::ws).eof()) throw ConfigError("not a number: '" + text + "'");
    return x;
}

std::uint64_t parse_unsigned(const std::string& text) {
    const std::string t = trim(text);
    if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos) {
        throw ConfigError("not a non-negative integer: '" + text + "'");
    }
    try {
        return std::stoull(t);
    } catch (const std::exception&) {
        throw ConfigError("integer out of range: '" + text + "'");
    }
}

bool parse_bool(const std::string& text) {
    const std::string t = trim(text);
    if (t == "true" || t == "1" || t == "yes") return true;
    if (t == "false" || t == "0" || t == "no") return false;
    throw ConfigError("not a boolean: '" + text + "'");
}

std::vector<double> parse_list(const std::string& text) {
    std::vector<double> out;
    std::istringstream is(text);
    std::string cell;
    while (std::getline(is, cell, ',')) {
        if (!trim(cell).empty()) out.push_back(parse_scalar(cell));
    }
    return out;
}

std::size_t parse_mode_index(const std::string& text, const SpectralBasis& basis) {
    const auto j = parse_unsigned(text);
    if (j < 1 || j > basis.size()) throw ConfigError("mode index " + text + " outside 1.." + std::to_string(basis.size()));
    return static_cast<std::size_t>(j);
}

}  // namespace

std::map<std::string, std::string> parse_key_values(const std::string& text) {
    std::map<std::string, std::string> kv;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#' || t[0] == ';') continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos) throw ConfigError("line " + std::to_string(lineno) + ": expected key=value");
        const std::string key = trim(t.substr(0, eq));
        if (key.empty()) throw ConfigError("line " + std::to_string(lineno) + ": empty key");
        if (kv.count(key)) throw ConfigError("line " + std::to_string(lineno) + ": duplicate key '" + key + "'");
        kv[key] = trim(t.substr(eq + 1));
    }
    return kv;
}

double parse_scalar(const std::string& text) {
    const std::string t = trim(text);
    constexpr double pi = 3.141592653589793;
    if (t == "pi") return pi;
    if (t.size() > 3 && t.compare(t.size() - 3, 3, "*pi") == 0) return parse_plain(t.substr(0, t.size() - 3)) * pi;
    if (t.rfind("pi*", 0) == 0) return pi * parse_plain(t.substr(3));
    return parse_plain(t);
}

ExperimentConfig parse_config(const std::string& text, const std::filesystem::path& base_dir) {
    ExperimentConfig c;
    c.base_dir = base_dir;
    for (const auto& [key, value] : parse_key_values(text)) {
        try {
            if (key == "L") c.length = parse_scalar(value);
            else if (key == "n") c.n = parse_unsigned(value);
            else if (key == "p") c.p = parse_scalar(value);
            else if (key == "p_list") c.p_list = parse_list(value);
            else if (key == "lambda") c.lambda_spec = value;
            else if (key == "g") c.g_spec = value;
            else if (key == "g_scale") c.g_scale = parse_scalar(value);
            else if (key == "u0") c.u0_spec = value;
            else if (key == "u0_scale") c.u0_scale = parse_scalar(value);
            else if (key == "u2_offset") c.u2_offset = parse_scalar(value);
            else if (key == "tau") c.solver.tau = parse_scalar(value);
            else if (key == "t_final") c.solver.t_final = parse_scalar(value);
            else if (key == "newton_tol") c.solver.newton_tol = parse_scalar(value);
            else if (key == "max_newton_iters") c.solver.max_newton_iters = static_cast<int>(parse_unsigned(value));
            else if (key == "record_every") c.solver.record_every = static_cast<int>(parse_unsigned(value));
            else if (key == "method") c.method = value;
            else if (key == "eq_tol") c.eq_tol = parse_scalar(value);
            else if (key == "restarts") c.restarts = static_cast<int>(parse_unsigned(value));
            else if (key == "transient_time") c.transient_time = parse_scalar(value);
            else if (key == "ic_random") c.ic_random = parse_unsigned(value);
            else if (key == "seed") c.seed = parse_unsigned(value);
            else if (key == "workers") c.workers = static_cast<unsigned>(parse_unsigned(value));
            else if (key == "count") c.count = parse_unsigned(value);
            else if (key == "ghidaglia_count") c.ghidaglia_count = parse_unsigned(value);
            else if (key == "svg") c.svg = parse_bool(value);
            else if (key == "out") c.out = value;
            else throw ConfigError("unknown key");
        } catch (const ConfigError& e) {
            throw ConfigError("config key '" + key + "': " + e.what());
        }
    }
    if (c.method != "auto" && c.method != "exact" && c.method != "backward-euler" && c.method != "both") {
        throw ConfigError("config key 'method': expected auto, exact, backward-euler or both");
    }
    for (std::size_t k = 0; k < c.p_list.size(); ++k) {
        if (!(c.p_list[k] > 2.0) || (k > 0 && !(c.p_list[k] < c.p_list[k - 1]))) {
            throw ConfigError("config key 'p_list': must be strictly decreasing toward 2 with every entry > 2");
        }
    }
    return c;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
    std::ifstream is(path);
    if (!is) throw ConfigError("cannot read config file " + path.string());
    std::stringstream ss;
    ss << is.rdbuf();
    auto dir = path.parent_path();
    return parse_config(ss.str(), dir.empty() ? std::filesystem::path(".") : dir);
}

std::vector<std::string> ExperimentConfig::resolved() const {
    std::map<std::string, std::string> kv;
    kv["L"] = format_number(length);
    kv["n"] = std::to_string(n);
    kv["p"] = format_number(p);
    std::string pl;
    for (std::size_t k = 0; k < p_list.size(); ++k) pl += (k ? "," : "") + format_number(p_list[k]);
    kv["p_list"] = pl;
    kv["lambda"] = lambda_spec;
    kv["g"] = g_spec;
    kv["g_scale"] = format_number(g_scale);
    kv["u0"] = u0_spec;
    kv["u0_scale"] = format_number(u0_scale);
    kv["u2_offset"] = format_number(u2_offset);
    kv["tau"] = format_number(solver.tau);
    kv["t_final"] = format_number(solver.t_final);
    kv["newton_tol"] = format_number(solver.newton_tol);
    kv["max_newton_iters"] = std::to_string(solver.max_newton_iters);
    kv["record_every"] = std::to_string(solver.record_every);
    kv["method"] = method;
    kv["eq_tol"] = format_number(eq_tol);
    kv["restarts"] = std::to_string(restarts);
    kv["transient_time"] = format_number(transient_time);
    kv["ic_random"] = std::to_string(ic_random);
    kv["seed"] = std::to_string(seed);
    kv["count"] = std::to_string(count);
    kv["ghidaglia_count"] = std::to_string(ghidaglia_count);
    std::vector<std::string> out;
    for (const auto& [k, v] : kv) out.push_back(k + "=" + v);
    return out;
}

double resolve_lambda(const std::string& spec, const SpectralBasis& basis) {
    const std::string t = trim(spec);
    try {
        if (t.rfind("mid:", 0) == 0) {
            const auto colon = t.find(':', 4);
            if (colon == std::string::npos) throw ConfigError("expected mid:<i>:<j>");
            const auto i = parse_mode_index(t.substr(4, colon - 4), basis);
            const auto j = parse_mode_index(t.substr(colon + 1), basis);
            return 0.5 * (basis.eigenvalue(i) + basis.eigenvalue(j));
        }
        const auto pos = t.find("lambda");
        if (pos != std::string::npos) {
            double factor = 1.0;
            if (pos > 0) {
                const std::string head = trim(t.substr(0, pos));
                if (head.empty() || head.back() != '*') throw ConfigError("expected <c>*lambda<j>");
                factor = parse_scalar(head.substr(0, head.size() - 1));
            }
            return factor * basis.eigenvalue(parse_mode_index(t.substr(pos + 6), basis));
        }
        return parse_scalar(t);
    } catch (const ConfigError& e) {
        throw ConfigError("lambda spec '" + spec + "': " + e.what());
    }
}

GridFunction resolve_field(const std::string& spec, double scale, const SpectralBasis& basis,
                           const std::filesystem::path& base_dir) {
    const std::string t = trim(spec);
    const Mesh1D& mesh = basis.mesh();
    if (t == "zero") return GridFunction(mesh);
    if (t.rfind("mode:", 0) == 0) return scale * basis.eigenvector(parse_mode_index(t.substr(5), basis));
    if (t.rfind("random:", 0) == 0) return scale * random_grid_function(mesh, parse_unsigned(t.substr(7)));
    if (t.rfind("file:", 0) == 0) {
        std::filesystem::path path = t.substr(5);
        if (path.is_relative()) path = base_dir / path;
        if (!std::filesystem::exists(path)) throw ConfigError("grid function file not found: " + path.string());
        try {
            GridFunction u = load_grid_function(path);
            if (!(u.mesh() == mesh)) {
                throw ConfigError("grid function file " + path.string() + " does not match the configured mesh");
            }
            return scale * u;
        } catch (const IoError& e) {
            throw ConfigError(e.what());
        } catch (const DomainError& e) {
            throw ConfigError("grid function file " + path.string() + ": " + e.what());
        }
    }
    throw ConfigError("field spec '" + spec + "': expected zero, mode:<j>, file:<path> or random:<seed>");
}

}  // namespace plap::cli
