#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace mpn {

enum class TableFormat { csv, tsv, markdown, json };

/// Throws std::invalid_argument for anything but csv, tsv, markdown (or md), json.
TableFormat parse_table_format(std::string_view text);

/// RFC 4180 field: quoted when it contains a comma, quote, or line break.
std::string csv_field(std::string_view value);

struct TextTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    std::string render(TableFormat format) const;
};

}  // namespace mpn
