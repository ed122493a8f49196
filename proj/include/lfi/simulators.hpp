#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "lfi/rng.hpp"
#include "lfi/time_series.hpp"

namespace lfi {

/// MA(q) coefficients theta_1..theta_q; unit-variance Gaussian noise.
struct MAParams {
  std::vector<double> coeffs;
};

/// Raw Lotka-Volterra reaction rates (c1, c2, c3): prey reproduction,
/// predation, predator death. Units 1/h, 1/(h*count), 1/h.
struct LVParams {
  std::array<double, 3> rates{0.0, 0.0, 0.0};
};

struct SSAConfig {
  std::array<std::int64_t, 2> initial_state{0, 0};
  double t_end = 0.0;
  std::vector<double> grid;                   // output timepoints inside [0, t_end]
  std::uint64_t max_events = 10'000'000;      // explosion cap

  void validate() const;
};

/// Gillespie output; `exploded` marks trajectories frozen at the event cap.
struct LVResult {
  TimeSeries series;
  bool exploded = false;
  std::uint64_t events = 0;
};

/// X_j = Z_j + sum_i theta_i Z_{j-i}, Z i.i.d. standard normal. Draws q
/// pre-window noise values so the series is stationary from the first output
/// point. Noise is consumed in index order Z_{1-q},...,Z_length.
TimeSeries simulate_ma(const MAParams& params, std::size_t length, Rng& rng);

/// Exact direct-method SSA trajectory of the predator-prey system, sampled on
/// config.grid by last-event-before-t interpolation. When all propensities
/// vanish the state is held constant; when max_events is hit the state is
/// frozen there and the result flagged.
LVResult simulate_lv(const LVParams& params, const SSAConfig& config, Rng& rng);

/// Closed-form MA(2) autocovariances (gamma0, gamma1, gamma2) at unit noise
/// variance. Test oracle for simulate_ma.
std::array<double, 3> ma2_autocovariance(const MAParams& params);

/// Batch fan-out; replicate i draws from base.child(i), so results are
/// independent of the worker count.
std::vector<TimeSeries> simulate_ma_batch(const std::vector<MAParams>& params,
                                          std::size_t length, const Rng& base);
std::vector<LVResult> simulate_lv_batch(const std::vector<LVParams>& params,
                                        const SSAConfig& config, const Rng& base);

/// One forward-model draw at an inference-space parameter vector.
struct SimOutput {
  TimeSeries series;
  bool flagged = false;
};
using SimulatorFn = std::function<SimOutput(std::span<const double> theta, Rng& rng)>;

/// theta = (theta1, theta2) directly.
SimulatorFn make_ma2_simulator(std::size_t length);

/// theta = log-rates; the exp transform to raw rates happens here so the
/// simulator itself stays free of inference conventions.
SimulatorFn make_lv_log_rate_simulator(SSAConfig config);

}  // namespace lfi
