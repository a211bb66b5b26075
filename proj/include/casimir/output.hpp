#pragma once

#include <string>
#include <vector>

namespace casimir::out {

/// One tabular command result: '#'-prefixed metadata lines, a column-name
/// header row, and numeric rows. Serialization is deterministic: 17
/// significant digits, LF line endings, no timestamps.
struct OutputTable {
    std::vector<std::string> meta;     // without the leading "# "
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

/// %.17g with negative zero normalized away, so emitted values parse back to
/// the identical double.
std::string format_g17(double v);

std::string to_csv(const OutputTable& table);

/// One JSON object per row in an array, field names matching the CSV columns.
std::string to_json(const OutputTable& table);

/// Inverse of to_csv for numeric content; round-tripping an emitted file
/// through parse_csv/to_csv is byte-identical.
OutputTable parse_csv(const std::string& text);

} // namespace casimir::out
