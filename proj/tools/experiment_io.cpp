#include "experiment_io.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

#include "chivar/numformat.hpp"

namespace chivar::tools {

std::string iso8601_now() {
    auto now = std::chrono::system_clock::now();
    std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

RunManifest::RunManifest(std::filesystem::path dir, std::string command_line, std::uint64_t seed)
    : path_(std::move(dir)), command_line_(std::move(command_line)), seed_(seed),
      started_(iso8601_now()) {
    std::filesystem::create_directories(path_);
    path_ /= "manifest.txt";
}

void RunManifest::set_param(const std::string& key, const std::string& value) {
    params_.emplace_back(key, value);
}

void RunManifest::write(const std::string& status,
                        const std::map<std::string, std::size_t>* rows) const {
    std::ofstream out(path_, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write manifest at " + path_.string());
    out << "command: " << command_line_ << '\n';
    out << "tool: " << kToolVersion << '\n';
    out << "seed: " << seed_ << '\n';
    out << "params:\n";
    for (const auto& [k, v] : params_) out << "  " << k << ": " << v << '\n';
    out << "started: " << started_ << '\n';
    if (rows) {
        out << "finished: " << iso8601_now() << '\n';
        out << "rows:\n";
        for (const auto& [file, count] : *rows)
            out << "  " << file << ": " << count << '\n';
    }
    out << "status: " << status << '\n';
}

void RunManifest::write_running() const { write("running", nullptr); }

void RunManifest::finalize(const std::map<std::string, std::size_t>& row_counts,
                           const std::string& status) {
    write(status, &row_counts);
}

CsvWriter::CsvWriter(const std::filesystem::path& path, const std::vector<std::string>& header)
    : out_(path, std::ios::binary | std::ios::trunc), columns_(header.size()) {
    if (!out_) throw std::runtime_error("cannot open CSV at " + path.string());
    for (std::size_t i = 0; i < header.size(); ++i)
        out_ << header[i] << (i + 1 < header.size() ? "," : "");
    out_ << '\n';
}

void CsvWriter::row(const std::vector<std::string>& cells) {
    if (cells.size() != columns_) throw std::logic_error("CSV row width mismatch");
    for (std::size_t i = 0; i < cells.size(); ++i)
        out_ << cells[i] << (i + 1 < cells.size() ? "," : "");
    out_ << '\n';
    ++rows_;
}

void CsvWriter::close() { out_.close(); }

std::vector<double> make_grid(double n_min, double n_max, int points, const std::string& kind) {
    if (!(n_min > 1.0) || !(n_max >= n_min)) throw std::invalid_argument("bad grid range");
    if (points < 1) throw std::invalid_argument("grid needs at least one point");
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(points));
    if (points == 1) {
        grid.push_back(n_min);
        return grid;
    }
    for (int i = 0; i < points; ++i) {
        double f = static_cast<double>(i) / (points - 1);
        if (kind == "log")
            grid.push_back(std::exp(std::log(n_min) + f * (std::log(n_max) - std::log(n_min))));
        else if (kind == "linear")
            grid.push_back(n_min + f * (n_max - n_min));
        else
            throw std::invalid_argument("grid kind must be log or linear");
    }
    return grid;
}

} // namespace chivar::tools
