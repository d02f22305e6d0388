#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace entropy_kit::cli {

enum class OutputFormat { Text, Json, Csv };

/// Runs the command line `args` (without the program name). Output goes to
/// `out` unless --out redirects it; diagnostics go to `err`.
///
/// Exit codes: 0 success, 1 a check suite missed its expected outcome,
/// 2 usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// 12 significant digits, locale independent.
std::string format_number(double x);

/// Comma-separated reals; accepts exponent forms such as 1e6.
std::vector<double> parse_real_list(const std::string& text);

}  // namespace entropy_kit::cli
