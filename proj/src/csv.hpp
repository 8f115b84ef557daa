#ifndef ADCGAP_SRC_CSV_HPP
#define ADCGAP_SRC_CSV_HPP

#include <string>
#include <string_view>
#include <vector>

namespace adcgap::csv {

struct Row {
  int line = 0;  // 1-based line where the row starts
  std::vector<std::string> cells;
};

/// RFC 4180 reader: quoted cells, doubled quotes, LF or CRLF line ends,
/// optional UTF-8 BOM. Blank lines are skipped. Throws std::runtime_error
/// on an unterminated quote.
std::vector<Row> read(std::string_view text);

std::string quote(std::string_view cell);

}  // namespace adcgap::csv

#endif  // ADCGAP_SRC_CSV_HPP
