#pragma once

#include <filesystem>
#include <span>

#include "voigt/diagnostics.hpp"

namespace voigt {

/// Writes the diagnostic series as CSV: one header row with column names,
/// one row per record, 17 significant digits (exact f64 text round trip).
void write_csv(std::span<const DiagnosticsRecord> records,
               const std::filesystem::path& path);

/// Generic numeric table writer with the same formatting contract.
void write_csv_table(const std::vector<std::string>& columns,
                     const std::vector<std::vector<double>>& rows,
                     const std::filesystem::path& path);

}  // namespace voigt
