#include "voigt/csv.hpp"

#include <fstream>
#include <limits>

namespace voigt {

namespace {

std::ofstream open_csv(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw FormatError("csv: cannot open for writing: " + path.string());
    out.precision(17);
    return out;
}

}  // namespace

void write_csv(std::span<const DiagnosticsRecord> records,
               const std::filesystem::path& path) {
    auto out = open_csv(path);
    int hm_max = 0;
    bool has_tau = false, has_mhd = false;
    for (const auto& r : records) {
        hm_max = std::max(hm_max, int(r.hm_norms.size()));
        has_tau |= r.tau_estimate.has_value();
        has_mhd |= r.mhd_energy.has_value();
    }
    out << "time_s,modified_energy,kinetic_energy,blowup_indicator";
    for (int m = 1; m <= hm_max; ++m) out << ",h" << m << "_norm";
    if (has_tau) out << ",tau_estimate";
    if (has_mhd) out << ",mhd_energy";
    out << "\n";
    for (const auto& r : records) {
        out << r.time << ',' << r.modified_energy << ',' << r.kinetic_energy << ','
            << r.blowup_indicator;
        for (int m = 0; m < hm_max; ++m) {
            out << ',';
            if (m < int(r.hm_norms.size())) out << r.hm_norms[m].second;
        }
        if (has_tau) {
            out << ',';
            if (r.tau_estimate) out << *r.tau_estimate;
        }
        if (has_mhd) {
            out << ',';
            if (r.mhd_energy) out << *r.mhd_energy;
        }
        out << "\n";
    }
}

void write_csv_table(const std::vector<std::string>& columns,
                     const std::vector<std::vector<double>>& rows,
                     const std::filesystem::path& path) {
    auto out = open_csv(path);
    for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << columns[i];
    out << "\n";
    for (const auto& row : rows) {
        if (row.size() != columns.size())
            throw FormatError("csv: row width does not match header");
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
        out << "\n";
    }
}

}  // namespace voigt
