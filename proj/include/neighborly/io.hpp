#pragma once

#include <string>
#include <string_view>

#include "neighborly/chirotope.hpp"
#include "neighborly/realization.hpp"

namespace neighborly {

/// "n r" on the first line, then the colex sign string. Reading accepts
/// '+', '-' and U+2212 and ignores whitespace inside the sign string.
std::string format_chirotope(const Chirotope& chi);
Chirotope parse_chirotope(std::string_view text);

/// "n d", then one affine point per line as space separated rationals p/q.
/// Writing requires a nonzero homogenizing coordinate.
std::string format_points(const PointConfig& cfg);
PointConfig parse_points(std::string_view text);

Rational parse_rational(std::string_view token);
std::string format_rational(const Rational& q);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace neighborly
