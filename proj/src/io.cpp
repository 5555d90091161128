#include "plap/io.hpp"

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace plap {

namespace {

double parse_double(const std::string& s, const std::string& what) {
    std::istringstream is(s);
    is.imbue(std::locale::classic());
    double x = 0.0;
    is >> x;
    if (is.fail() || !(is >> std::ws).eof()) throw IoError("cannot parse " + what + " from '" + s + "'");
    return x;
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream is(line);
    while (std::getline(is, cell, sep)) out.push_back(cell);
    if (!line.empty() && line.back() == sep) out.emplace_back();
    return out;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

std::string format_number(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void write_grid_function(std::ostream& os, const GridFunction& u) {
    os << "# n=" << u.size() << " L=" << format_number(u.mesh().length()) << '\n';
    for (double v : u.values()) os << format_number(v) << '\n';
}

void save_grid_function(const std::filesystem::path& path, const GridFunction& u) {
    std::ofstream os(path);
    if (!os) throw IoError("cannot open " + path.string() + " for writing");
    write_grid_function(os, u);
}

GridFunction read_grid_function(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) throw IoError("grid function: missing header");
    std::size_t n = 0;
    double length = 0.0;
    {
        std::istringstream hs(line);
        std::string hash, n_tok, l_tok;
        hs >> hash >> n_tok >> l_tok;
        if (hash != "#" || n_tok.rfind("n=", 0) != 0 || l_tok.rfind("L=", 0) != 0) {
            throw IoError("grid function: header must read '# n=<n> L=<L>', got '" + line + "'");
        }
        const double n_val = parse_double(n_tok.substr(2), "n");
        if (!(n_val >= 1.0) || n_val != static_cast<double>(static_cast<std::size_t>(n_val))) {
            throw IoError("grid function: bad node count '" + n_tok + "'");
        }
        n = static_cast<std::size_t>(n_val);
        length = parse_double(l_tok.substr(2), "L");
    }
    std::vector<double> values;
    while (std::getline(is, line)) {
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        values.push_back(parse_double(line, "grid value"));
    }
    if (values.size() != n) {
        throw IoError("grid function: header announces " + std::to_string(n) + " values, found " +
                      std::to_string(values.size()));
    }
    return GridFunction(Mesh1D(length, n), std::move(values));
}

GridFunction load_grid_function(const std::filesystem::path& path) {
    std::ifstream is(path);
    if (!is) throw IoError("cannot open grid function file " + path.string());
    return read_grid_function(is);
}

void write_trajectory_csv(std::ostream& os, const Trajectory& traj, const TrajectoryCsvHeader& header) {
    for (const auto& c : header.comments) os << "# " << c << '\n';
    const auto& params = traj.params();
    os << "# p=" << format_number(params.p()) << " lambda=" << format_number(params.lambda())
       << " L=" << format_number(params.mesh().length()) << " n=" << params.mesh().size() << " tau=" << header.tau
       << '\n';
    os << 't';
    for (std::size_t i = 1; i <= params.mesh().size(); ++i) os << ",node_" << i;
    os << '\n';
    for (const auto& s : traj.samples()) {
        os << format_number(s.t);
        for (double v : s.state.values()) os << ',' << format_number(v);
        os << '\n';
    }
}

CsvTable read_csv(std::istream& is) {
    CsvTable table;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            table.comments.push_back(trim(line.substr(1)));
            continue;
        }
        const auto cells = split(line, ',');
        if (table.columns.empty()) {
            for (const auto& c : cells) table.columns.push_back(trim(c));
            continue;
        }
        if (cells.size() != table.columns.size()) throw IoError("csv: row width differs from header");
        std::vector<double> row;
        row.reserve(cells.size());
        for (const auto& c : cells) row.push_back(parse_double(trim(c), "csv cell"));
        table.rows.push_back(std::move(row));
    }
    if (table.columns.empty()) throw IoError("csv: missing header row");
    return table;
}

void save_attractor_sample(const std::filesystem::path& dir, const AttractorSample& sample) {
    std::filesystem::create_directories(dir);
    nlohmann::ordered_json manifest;
    manifest["p"] = sample.params.p();
    manifest["lambda"] = sample.params.lambda();
    manifest["L"] = sample.params.mesh().length();
    manifest["n"] = sample.params.mesh().size();
    manifest["transient_time"] = sample.transient_time;
    manifest["max_v_norm"] = sample.max_v_norm;
    auto files = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < sample.states.size(); ++i) {
        std::ostringstream name;
        name << "state_" << std::setw(3) << std::setfill('0') << i << ".txt";
        save_grid_function(dir / name.str(), sample.states[i]);
        files.push_back(name.str());
    }
    manifest["states"] = files;
    std::ofstream os(dir / "manifest.json");
    if (!os) throw IoError("cannot write manifest in " + dir.string());
    os << manifest.dump(2) << '\n';
}

}  // namespace plap
