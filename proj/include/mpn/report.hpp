#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "mpn/dynamics.hpp"
#include "mpn/table.hpp"

namespace mpn {

enum class TableId { T1, T2, T3A, T3B, T4, TA1, TA2, robustness, spectra };

/// Case-insensitive "T1", "T2", "T3A", "T3B", "T4", "TA1", "TA2", "robustness", "spectra".
TableId parse_table_id(std::string_view text);
std::string to_string(TableId id);
std::vector<TableId> all_table_ids();

struct TableDocument {
    TableId id;
    TextTable table;
    /// Raised when a merged column (e.g. V2=V3) failed its equality check and was split.
    std::vector<std::string> warnings;

    std::string render(TableFormat format) const { return table.render(format); }
};

TableDocument make_table(TableId id);
std::string emit_table(TableId id, TableFormat format);

/// Directed graph of the one-step map on the four states, in DOT.
std::string emit_state_graph(const Rule& rule, const Variant& variant);

/// Fisher/odds-ratio on the class-by-robustness quadrants, correlations between the
/// two V4 robustness measures, and the mutation tallies, each next to its reference value.
std::string statistics_report_json();

/// Robustness histograms for all three metrics, with their bin edges.
std::string robustness_distributions_json();

/// Human-readable summary for one rule and variant (class, attractors, matrix, spectrum).
std::string describe(const Rule& rule, const Variant& variant);

struct ManifestEntry {
    std::string file;
    std::string sha256;
    std::size_t bytes = 0;
};

struct Manifest {
    std::vector<ManifestEntry> entries;
    std::string to_json() const;
};

std::string sha256_hex(std::string_view data);

/// Writes every table, graph export, distribution and the statistics report into `dir`,
/// then manifest.json. Throws std::runtime_error naming the path on I/O failure.
Manifest run_all(const std::filesystem::path& dir);

}  // namespace mpn
