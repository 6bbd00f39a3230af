#include "ell1/stream_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace ell1 {

std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_stream_csv(std::ostream& out, const Stream& rounds) {
  const long d = rounds.empty() ? 0 : rounds.front().x.size();
  out << "t,y";
  for (long j = 1; j <= d; ++j) out << ",x_" << j;
  out << "\n";
  for (size_t t = 0; t < rounds.size(); ++t) {
    out << (t + 1) << ',' << format_g17(rounds[t].y);
    for (long j = 0; j < d; ++j) out << ',' << format_g17(rounds[t].x[j]);
    out << "\n";
  }
}

void write_stream_csv(const std::string& path, const Stream& rounds) {
  std::ofstream out(path);
  if (!out) throw io_error("cannot open for writing: " + path);
  write_stream_csv(out, rounds);
  if (!out) throw io_error("write failed: " + path);
}

Stream read_stream_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw io_error("stream csv: missing header");
  long d = -1;
  {
    long commas = 0;
    for (char ch : line)
      if (ch == ',') ++commas;
    d = commas - 1;
  }
  if (d < 1) throw io_error("stream csv: header must be t,y,x_1..x_d");

  Stream rounds;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream row(line);
    std::string cell;
    Round r;
    r.x.resize(d);
    if (!std::getline(row, cell, ',')) throw io_error("stream csv: short row");
    if (!std::getline(row, cell, ',')) throw io_error("stream csv: short row");
    r.y = std::stod(cell);
    for (long j = 0; j < d; ++j) {
      if (!std::getline(row, cell, ',')) throw io_error("stream csv: short row");
      r.x[j] = std::stod(cell);
    }
    rounds.push_back(std::move(r));
  }
  if (rounds.empty()) throw io_error("stream csv: no rounds");
  return rounds;
}

Stream read_stream_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open for reading: " + path);
  return read_stream_csv(in);
}

}  // namespace ell1
