#ifndef AUTOFORM_UTIL_HPP
#define AUTOFORM_UTIL_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace autoform {

/// SHA-256 of a byte string, as a lowercase hex digest.
std::string sha256_hex(std::string_view data);

/// Shortest decimal rendering that round-trips the value. Integral values
/// print without a decimal point ("3", not "3.0").
std::string format_number(double v);

bool is_identifier(std::string_view s);

std::string trim(std::string_view s);

std::vector<std::string> split_lines(std::string_view text);

/// Replace every occurrence of `from` in `text` with `to`.
std::string replace_all(std::string text, std::string_view from, std::string_view to);

/// True when |v - round(v)| is within `tol`; writes the rounded integer.
bool near_integer(double v, double tol, long long& out);

} // namespace autoform

#endif // AUTOFORM_UTIL_HPP
