#include "kwplane/field_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace kw {

std::string format_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.16e", v);
    return buf;
}

namespace {

void atomic_write(const std::filesystem::path& path, const std::string& content) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw InvalidInput("cannot open for writing: " + tmp.string());
        os << content;
        if (!os) throw InvalidInput("write failed: " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

} // namespace

void write_field_csv(const std::filesystem::path& path, const ScalarField& f) {
    const GridSpec& g = f.grid();
    std::ostringstream os;
    os << "x,y,value\n";
    for (int j = 0; j < g.n(); ++j)
        for (int i = 0; i < g.n(); ++i)
            os << format_real(g.x(i)) << ',' << format_real(g.y(j)) << ','
               << format_real(f(i, j)) << '\n';
    atomic_write(path, os.str());
}

void write_radial_csv(const std::filesystem::path& path, const RadialProfile& p) {
    std::ostringstream os;
    os << "r,value\n";
    for (std::size_t i = 0; i < p.r.size(); ++i)
        os << format_real(p.r[i]) << ',' << format_real(p.v[i]) << '\n';
    atomic_write(path, os.str());
}

ScalarField read_field_csv(const std::filesystem::path& path, const GridSpec& grid) {
    std::ifstream is(path);
    if (!is) throw InvalidInput("cannot open field CSV: " + path.string());
    std::string line;
    if (!std::getline(is, line) || line.rfind("x,y,value", 0) != 0)
        throw InvalidInput("field CSV must start with header x,y,value: " + path.string());

    ScalarField out(grid);
    const double tol = 1e-9 * grid.spacing();
    int count = 0;
    int lineno = 1;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty()) continue;
        double x, y, v;
        if (std::sscanf(line.c_str(), "%lf,%lf,%lf", &x, &y, &v) != 3)
            throw InvalidInput(path.string() + ":" + std::to_string(lineno) + ": malformed CSV row");
        if (count >= grid.num_nodes())
            throw InvalidInput(path.string() + ": more rows than grid nodes (declared n=" +
                               std::to_string(grid.n()) + ")");
        int i = count % grid.n(), j = count / grid.n();
        if (std::abs(x - grid.x(i)) > tol || std::abs(y - grid.y(j)) > tol)
            throw InvalidInput(path.string() + ":" + std::to_string(lineno) +
                               ": node coordinates do not match the declared grid (row-major order required)");
        out.values()[grid.index(i, j)] = v;
        ++count;
    }
    if (count != grid.num_nodes())
        throw InvalidInput(path.string() + ": row count " + std::to_string(count) +
                           " does not match declared grid (" + std::to_string(grid.num_nodes()) + " nodes)");
    out.check_finite("field CSV");
    return out;
}

void Report::set(const std::string& key, const std::string& value) {
    auto it = index_.find(key);
    if (it != index_.end()) {
        entries_[it->second].second = value;
        return;
    }
    index_[key] = entries_.size();
    entries_.emplace_back(key, value);
}

void Report::set(const std::string& key, double value) { set(key, format_real(value)); }
void Report::set(const std::string& key, int value) { set(key, std::to_string(value)); }
void Report::set(const std::string& key, bool value) { set(key, std::string(value ? "true" : "false")); }

bool Report::has(const std::string& key) const { return index_.count(key) > 0; }

const std::string& Report::get(const std::string& key) const {
    auto it = index_.find(key);
    if (it == index_.end()) throw InvalidInput("report key missing: " + key);
    return entries_[it->second].second;
}

double Report::get_double(const std::string& key) const { return std::stod(get(key)); }

void Report::write(const std::filesystem::path& path) const {
    std::ostringstream os;
    for (const auto& [k, v] : entries_) os << k << " = " << v << '\n';
    atomic_write(path, os.str());
}

Report Report::read(const std::filesystem::path& path) {
    std::ifstream is(path);
    if (!is) throw InvalidInput("cannot open report: " + path.string());
    Report rep;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) throw InvalidInput("malformed report line: " + line);
        auto trim = [](std::string s) {
            auto b = s.find_first_not_of(" \t");
            auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        rep.set(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    return rep;
}

} // namespace kw
