#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

namespace lfi {

/// A sample path on a fixed time grid: T steps by C channels, row-major.
struct TimeSeries {
  std::vector<double> times;   // length T, strictly increasing
  std::vector<double> values;  // T*C, row-major
  std::size_t channels = 1;

  TimeSeries() = default;
  TimeSeries(std::size_t length, std::size_t nchannels)
      : times(length, 0.0), values(length * nchannels, 0.0), channels(nchannels) {}

  std::size_t length() const { return times.size(); }

  double at(std::size_t t, std::size_t c) const { return values[t * channels + c]; }
  double& at(std::size_t t, std::size_t c) { return values[t * channels + c]; }

  /// Throws std::invalid_argument on a non-increasing grid or non-finite value.
  void validate() const;

  bool operator==(const TimeSeries&) const = default;
};

/// CSV with header `t,ch0[,ch1,...]`, one row per grid point, 17 significant
/// digits. Byte-identical for identical series.
void write_csv(const TimeSeries& series, const std::filesystem::path& path);
TimeSeries read_csv(const std::filesystem::path& path);

std::string to_csv_string(const TimeSeries& series);
TimeSeries from_csv_string(const std::string& text);

}  // namespace lfi
