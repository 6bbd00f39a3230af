#pragma once

#include "ell1/core.hpp"

#include <iosfwd>
#include <string>

namespace ell1 {

/// Stream dump format: header `t,y,x_1..x_d`, one row per round,
/// 17 significant digits.
void write_stream_csv(std::ostream& out, const Stream& rounds);
void write_stream_csv(const std::string& path, const Stream& rounds);

Stream read_stream_csv(std::istream& in);
Stream read_stream_csv(const std::string& path);

/// printf("%.17g") formatting used by every CSV writer.
std::string format_g17(double v);

}  // namespace ell1
