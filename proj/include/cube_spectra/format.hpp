#pragma once

#include <string>
#include <string_view>

namespace cube_spectra {

inline constexpr int kOutputSignificantDigits = 9;

enum class OutputFormat { json, csv, text };

/// Parses "json", "csv" or "text"; throws std::invalid_argument otherwise.
OutputFormat parse_output_format(std::string_view name);

/// Locale-independent shortest form of `value` at 9 significant digits.
std::string format_real(double value);

/// Nearest double to `value` printed at `digits` significant digits. Used to
/// make JSON output stable at the same precision as text output.
double round_significant(double value, int digits = kOutputSignificantDigits);

/// Quote a CSV field per RFC 4180 when it needs quoting.
std::string csv_field(const std::string& field);

}  // namespace cube_spectra
