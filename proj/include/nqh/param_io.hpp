#pragma once

#include <string>
#include <string_view>

#include "nqh/normal_form.hpp"

namespace nqh {

/// Text form of a parameter point:
///
///     M 3
///     N 3
///     a 1 1 3/2
///     b 4 1 -7/1
///
/// One entry per line, rationals as "num/den". Blank lines and lines starting
/// with '#' are ignored when reading.
std::string write_parameters(const ParameterPoint& p);

/// Parses the text form; every parameter of (M, N) must appear exactly once.
/// Throws InvalidInput on malformed text. Does not check the open conditions.
ParameterPoint read_parameters(std::string_view text);

ParameterPoint read_parameter_file(const std::string& path);
void write_parameter_file(const std::string& path, const ParameterPoint& p);

}  // namespace nqh
