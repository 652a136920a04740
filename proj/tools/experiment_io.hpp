#ifndef CHIVAR_TOOLS_EXPERIMENT_IO_HPP
#define CHIVAR_TOOLS_EXPERIMENT_IO_HPP

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <string>
#include <vector>

namespace chivar::tools {

inline constexpr const char* kToolVersion = "chivar 1.0.0";

// Plain-text run manifest: written (status running) before any rows are
// produced, rewritten complete afterwards.
class RunManifest {
public:
    RunManifest(std::filesystem::path dir, std::string command_line, std::uint64_t seed);

    void set_param(const std::string& key, const std::string& value);
    void write_running() const;
    void finalize(const std::map<std::string, std::size_t>& row_counts,
                  const std::string& status);

private:
    void write(const std::string& status,
               const std::map<std::string, std::size_t>* rows) const;

    std::filesystem::path path_;
    std::string command_line_;
    std::uint64_t seed_;
    std::vector<std::pair<std::string, std::string>> params_;
    std::string started_;
};

// CSV with a fixed header; numbers are rendered upstream (g17/format_int),
// cells must not contain commas.
class CsvWriter {
public:
    CsvWriter(const std::filesystem::path& path, const std::vector<std::string>& header);
    void row(const std::vector<std::string>& cells);
    std::size_t rows() const { return rows_; }
    void close();

private:
    std::ofstream out_;
    std::size_t columns_;
    std::size_t rows_ = 0;
};

std::string iso8601_now();

// evaluation grid over [n_min, n_max]
std::vector<double> make_grid(double n_min, double n_max, int points, const std::string& kind);

} // namespace chivar::tools

#endif
