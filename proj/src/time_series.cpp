#include "lfi/time_series.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace lfi {

void TimeSeries::validate() const {
  if (values.size() != times.size() * channels)
    throw std::invalid_argument("TimeSeries: values size does not match T*C");
  for (std::size_t i = 1; i < times.size(); ++i)
    if (!(times[i] > times[i - 1]))
      throw std::invalid_argument("TimeSeries: times must be strictly increasing");
  for (double v : values)
    if (!std::isfinite(v)) throw std::invalid_argument("TimeSeries: non-finite value");
}

namespace {

void append_g17(std::string& out, double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  out += buf;
}

}  // namespace

std::string to_csv_string(const TimeSeries& series) {
  std::string out = "t";
  for (std::size_t c = 0; c < series.channels; ++c) {
    out += ",ch";
    out += std::to_string(c);
  }
  out += '\n';
  for (std::size_t t = 0; t < series.length(); ++t) {
    append_g17(out, series.times[t]);
    for (std::size_t c = 0; c < series.channels; ++c) {
      out += ',';
      append_g17(out, series.at(t, c));
    }
    out += '\n';
  }
  return out;
}

TimeSeries from_csv_string(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("TimeSeries CSV: empty input");
  std::size_t channels = 0;
  for (char ch : line)
    if (ch == ',') ++channels;
  if (channels == 0) throw std::invalid_argument("TimeSeries CSV: no channel columns");

  TimeSeries series;
  series.channels = channels;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string cell;
    if (!std::getline(row, cell, ',')) break;
    series.times.push_back(std::stod(cell));
    for (std::size_t c = 0; c < channels; ++c) {
      if (!std::getline(row, cell, ','))
        throw std::invalid_argument("TimeSeries CSV: short row");
      series.values.push_back(std::stod(cell));
    }
  }
  return series;
}

void write_csv(const TimeSeries& series, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
  out << to_csv_string(series);
}

TimeSeries read_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open for reading: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_csv_string(buf.str());
}

}  // namespace lfi
