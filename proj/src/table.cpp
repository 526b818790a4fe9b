#include "mpn/table.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace mpn {

TableFormat parse_table_format(std::string_view text) {
    if (text == "csv") return TableFormat::csv;
    if (text == "tsv") return TableFormat::tsv;
    if (text == "markdown" || text == "md") return TableFormat::markdown;
    if (text == "json") return TableFormat::json;
    throw std::invalid_argument("unknown table format '" + std::string(text) + "'");
}

std::string csv_field(std::string_view value) {
    if (value.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(value);
    std::string out = "\"";
    for (char ch : value) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

std::string TextTable::render(TableFormat format) const {
    std::ostringstream out;
    const auto line = [&](const std::vector<std::string>& cells, std::string_view sep, bool quote) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) out << sep;
            out << (quote ? csv_field(cells[i]) : cells[i]);
        }
        out << '\n';
    };
    switch (format) {
        case TableFormat::csv:
            line(header, ",", true);
            for (const auto& row : rows) line(row, ",", true);
            break;
        case TableFormat::tsv:
            line(header, "\t", false);
            for (const auto& row : rows) line(row, "\t", false);
            break;
        case TableFormat::markdown: {
            const auto md = [&](const std::vector<std::string>& cells) {
                out << '|';
                for (const auto& c : cells) out << ' ' << c << " |";
                out << '\n';
            };
            md(header);
            out << '|';
            for (std::size_t i = 0; i < header.size(); ++i) out << "---|";
            out << '\n';
            for (const auto& row : rows) md(row);
            break;
        }
        case TableFormat::json: {
            auto doc = nlohmann::ordered_json::array();
            for (const auto& row : rows) {
                nlohmann::ordered_json obj;
                for (std::size_t i = 0; i < header.size() && i < row.size(); ++i) obj[header[i]] = row[i];
                doc.push_back(std::move(obj));
            }
            out << doc.dump(2) << '\n';
            break;
        }
    }
    return out.str();
}

}  // namespace mpn
