#pragma once

#include <string>
#include <vector>

namespace resilq {

/// One data row of a CSV file: trimmed fields plus the 1-based line number
/// in the original text (header and comment lines keep their numbers).
struct CsvRow {
    std::vector<std::string> fields;
    int line = 0;
};

/// Parsed CSV: lowercased header names and data rows. Lines starting with
/// '#' and blank lines are skipped. No quoting support; fields are split on
/// commas and trimmed of surrounding whitespace.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<CsvRow> rows;

    /// Index of a header column, or -1.
    int column(const std::string& name) const;
};

CsvTable parse_csv(const std::string& text);

/// Read an entire file. Throws Error(RQ_ERR_IO_FAILURE).
std::string read_file(const std::string& path);

/// Write text to `path` via a temp file in the same directory + rename.
void write_file_atomic(const std::string& path, const std::string& content);

/// Parse a decimal number ('.'-separated, no thousands separators);
/// throws Error(RQ_ERR_MALFORMED_ROW) with `line` in the message.
double parse_number(const std::string& field, int line);

}  // namespace resilq
