#include "mescorr/cli/csv.hpp"

#include <cstdio>
#include <stdexcept>

namespace mescorr::cli {

std::string format_real(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    std::string text(buf);
    // snprintf honours LC_NUMERIC; the CSV contract is a '.' separator.
    for (char& c : text) {
        if (c == ',') c = '.';
    }
    if (text == "-0") text = "0";
    return text;
}

void CsvWriter::header(const std::vector<std::string>& columns) {
    columns_ = columns.size();
    for (std::size_t i = 0; i < columns.size(); ++i) field(columns[i], i == 0);
    out_ << '\n';
}

void CsvWriter::row(const std::vector<Cell>& cells) {
    if (columns_ != 0 && cells.size() != columns_) {
        throw std::logic_error("csv row width does not match header");
    }
    for (std::size_t i = 0; i < cells.size(); ++i) {
        std::string text;
        if (const auto* d = std::get_if<double>(&cells[i])) {
            text = format_real(*d);
        } else if (const auto* n = std::get_if<std::int64_t>(&cells[i])) {
            text = std::to_string(*n);
        } else {
            text = std::get<std::string>(cells[i]);
        }
        field(text, i == 0);
    }
    out_ << '\n';
}

void CsvWriter::field(const std::string& text, bool first) {
    if (!first) out_ << ',';
    if (text.find_first_of(",\"\n") == std::string::npos) {
        out_ << text;
        return;
    }
    out_ << '"';
    for (char c : text) {
        if (c == '"') out_ << '"';
        out_ << c;
    }
    out_ << '"';
}

} // namespace mescorr::cli
