#pragma once

#include <stdexcept>
#include <string>

namespace lfi {

/// A requested bin grid cannot be built because a dimension has no spread.
struct DegenerateSupportError : std::runtime_error {
  explicit DegenerateSupportError(const std::string& what) : std::runtime_error(what) {}
};

/// A parameter vector fell outside the grid it is being discretized on.
struct OutOfSupportError : std::runtime_error {
  explicit OutOfSupportError(const std::string& what) : std::runtime_error(what) {}
};

/// Training data contains fewer than two distinct class labels.
struct DegenerateLabelsError : std::runtime_error {
  explicit DegenerateLabelsError(const std::string& what) : std::runtime_error(what) {}
};

/// A loss or gradient became non-finite during training.
struct NumericError : std::runtime_error {
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

/// Median-heuristic bandwidth collapsed to zero.
struct BandwidthError : std::runtime_error {
  explicit BandwidthError(const std::string& what) : std::runtime_error(what) {}
};

/// Pairwise proposals disagree on shared per-dimension edges.
struct InvalidStateError : std::runtime_error {
  explicit InvalidStateError(const std::string& what) : std::runtime_error(what) {}
};

/// An ABC-SMC round exceeded its trial budget before filling the population.
struct StallError : std::runtime_error {
  explicit StallError(const std::string& what) : std::runtime_error(what) {}
};

/// Configuration file rejected; `path` is the offending field, e.g. "bcnn.delta.kind".
struct ConfigError : std::runtime_error {
  ConfigError(std::string path_, const std::string& what)
      : std::runtime_error(path_ + ": " + what), path(std::move(path_)) {}
  std::string path;
};

}  // namespace lfi
