#pragma once

#include <filesystem>
#include <map>
#include <string>

#include "kwplane/radial_oracle.hpp"
#include "kwplane/scalar_field.hpp"

namespace kw {

// CSV conventions (the only external data formats):
//  - grid fields: header "x,y,value", row-major, 17-significant-digit reals
//  - radial profiles: header "r,value"
//  - reports: flat "key = value" lines, machine-parseable
// Writes are atomic (temp file + rename).

void write_field_csv(const std::filesystem::path& path, const ScalarField& f);
void write_radial_csv(const std::filesystem::path& path, const RadialProfile& p);

/// Reads a row-major x,y,value CSV; the declared grid must match exactly
/// (node count and coordinates), otherwise a hard error.
ScalarField read_field_csv(const std::filesystem::path& path, const GridSpec& grid);

/// Ordered key -> value report text.
class Report {
public:
    void set(const std::string& key, const std::string& value);
    void set(const std::string& key, double value);
    void set(const std::string& key, int value);
    void set(const std::string& key, bool value);

    bool has(const std::string& key) const;
    const std::string& get(const std::string& key) const;
    double get_double(const std::string& key) const;

    void write(const std::filesystem::path& path) const;
    static Report read(const std::filesystem::path& path);

    const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }

private:
    std::vector<std::pair<std::string, std::string>> entries_;
    std::map<std::string, std::size_t> index_;
};

/// 17-significant-digit formatting used for every real written out.
std::string format_real(double v);

} // namespace kw
