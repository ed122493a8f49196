#include "lfi/simulators.hpp"

#include <cmath>
#include <stdexcept>

#include "lfi/parallel.hpp"

namespace lfi {

void SSAConfig::validate() const {
  if (initial_state[0] < 0 || initial_state[1] < 0)
    throw std::invalid_argument("SSAConfig: initial_state must be nonnegative");
  if (grid.empty()) throw std::invalid_argument("SSAConfig: empty output grid");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i] < 0.0 || grid[i] > t_end)
      throw std::invalid_argument("SSAConfig: grid point outside [0, t_end]");
    if (i > 0 && !(grid[i] > grid[i - 1]))
      throw std::invalid_argument("SSAConfig: grid must be strictly increasing");
  }
  if (max_events == 0) throw std::invalid_argument("SSAConfig: max_events must be positive");
}

TimeSeries simulate_ma(const MAParams& params, std::size_t length, Rng& rng) {
  const std::size_t q = params.coeffs.size();
  if (q < 1) throw std::invalid_argument("simulate_ma: order q must be >= 1");
  if (length <= q) throw std::invalid_argument("simulate_ma: length must exceed q");

  // Noise Z_{1-q},...,Z_length in one buffer; index j maps to z[j+q-1].
  std::vector<double> z(length + q);
  rng.normal_fill(z);

  TimeSeries out(length, 1);
  for (std::size_t j = 0; j < length; ++j) {
    out.times[j] = static_cast<double>(j + 1);
    double x = z[j + q];
    for (std::size_t i = 0; i < q; ++i) x += params.coeffs[i] * z[j + q - 1 - i];
    out.at(j, 0) = x;
  }
  return out;
}

std::array<double, 3> ma2_autocovariance(const MAParams& params) {
  if (params.coeffs.size() != 2)
    throw std::invalid_argument("ma2_autocovariance: requires q = 2");
  const double t1 = params.coeffs[0];
  const double t2 = params.coeffs[1];
  return {1.0 + t1 * t1 + t2 * t2, t1 * (1.0 + t2), t2};
}

LVResult simulate_lv(const LVParams& params, const SSAConfig& config, Rng& rng) {
  config.validate();
  for (double c : params.rates)
    if (!(c >= 0.0)) throw std::invalid_argument("simulate_lv: rates must be nonnegative");

  LVResult result;
  result.series = TimeSeries(config.grid.size(), 2);
  result.series.times = config.grid;

  std::int64_t prey = config.initial_state[0];
  std::int64_t pred = config.initial_state[1];
  double t = 0.0;
  std::size_t g = 0;
  const std::size_t n_grid = config.grid.size();

  auto flush_until = [&](double horizon) {
    while (g < n_grid && config.grid[g] < horizon) {
      result.series.at(g, 0) = static_cast<double>(prey);
      result.series.at(g, 1) = static_cast<double>(pred);
      ++g;
    }
  };
  auto flush_rest = [&] { flush_until(config.t_end + 1.0); };

  while (g < n_grid) {
    const double a1 = params.rates[0] * static_cast<double>(prey);
    const double a2 = params.rates[1] * static_cast<double>(prey) * static_cast<double>(pred);
    const double a3 = params.rates[2] * static_cast<double>(pred);
    const double a0 = a1 + a2 + a3;
    if (a0 <= 0.0) break;  // absorbing state: hold

    const double dt = rng.exponential(a0);
    const double t_next = t + dt;
    if (t_next > config.t_end) {
      t = config.t_end;
      break;
    }
    // Grid points strictly before the event keep the pre-event state.
    flush_until(t_next);
    t = t_next;

    const double u = rng.uniform01() * a0;
    if (u < a1) {
      prey += 1;
    } else if (u < a1 + a2) {
      prey -= 1;
      pred += 1;
    } else {
      pred -= 1;
    }
    ++result.events;
    if (result.events >= config.max_events) {
      result.exploded = true;  // freeze state here
      break;
    }
  }
  flush_rest();
  return result;
}

std::vector<TimeSeries> simulate_ma_batch(const std::vector<MAParams>& params,
                                          std::size_t length, const Rng& base) {
  std::vector<TimeSeries> out(params.size());
  par::for_each_index(params.size(), [&](std::size_t i) {
    Rng rng = base.child(i);
    out[i] = simulate_ma(params[i], length, rng);
  });
  return out;
}

std::vector<LVResult> simulate_lv_batch(const std::vector<LVParams>& params,
                                        const SSAConfig& config, const Rng& base) {
  std::vector<LVResult> out(params.size());
  par::for_each_index(params.size(), [&](std::size_t i) {
    Rng rng = base.child(i);
    out[i] = simulate_lv(params[i], config, rng);
  });
  return out;
}

SimulatorFn make_ma2_simulator(std::size_t length) {
  return [length](std::span<const double> theta, Rng& rng) -> SimOutput {
    MAParams p{{theta.begin(), theta.end()}};
    return {simulate_ma(p, length, rng), false};
  };
}

SimulatorFn make_lv_log_rate_simulator(SSAConfig config) {
  config.validate();
  return [config](std::span<const double> theta, Rng& rng) -> SimOutput {
    if (theta.size() != 3)
      throw std::invalid_argument("lv simulator: expected 3 log-rates");
    LVParams p;
    for (int d = 0; d < 3; ++d) p.rates[d] = std::exp(theta[d]);
    LVResult r = simulate_lv(p, config, rng);
    return {std::move(r.series), r.exploded};
  };
}

}  // namespace lfi
