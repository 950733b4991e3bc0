#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace mescorr::cli {

/// 12 significant digits, '.' decimal separator, no locale dependence.
std::string format_real(double value);

using Cell = std::variant<double, std::int64_t, std::string>;

/// Minimal RFC 4180 writer: comma separated, '\n' line ends, fields quoted
/// only when they contain a comma, quote or newline.
class CsvWriter {
public:
    explicit CsvWriter(std::ostream& out) : out_(out) {}

    void header(const std::vector<std::string>& columns);
    void row(const std::vector<Cell>& cells);

private:
    void field(const std::string& text, bool first);

    std::ostream& out_;
    std::size_t columns_ = 0;
};

} // namespace mescorr::cli
