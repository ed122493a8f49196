#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "lfi/matrix.hpp"

namespace lfi {

/// Parameter samples with normalized weights.
struct WeightedPopulation {
  Matrix points;                // n x k
  std::vector<double> weights;  // sum 1 within 1e-12

  static WeightedPopulation from_samples(Matrix samples);
  void validate() const;
  std::vector<double> mean() const;
};

/// Exact minimum transportation cost between two weighted atom sets under
/// the Euclidean ground metric (successive-shortest-path min-cost flow).
/// Both weight vectors must sum to 1. This is the computational core of emd.
double transport_cost(const Matrix& a_points, std::span<const double> a_weights,
                      const Matrix& b_points, std::span<const double> b_weights);

struct EmdOptions {
  std::size_t grid_per_dim = 32;  // histogram resolution per dimension
};

/// Earth mover distance: both populations are histogrammed onto a shared
/// equal-width grid whose bin centers span the joint [min, max] per
/// dimension, then solved exactly with transport_cost.
double emd(const WeightedPopulation& a, const WeightedPopulation& b,
           const EmdOptions& options = {});

/// Biased (V-statistic) squared maximum mean discrepancy with a Gaussian
/// kernel; bandwidth is the median pairwise distance of the pooled sample.
/// Throws BandwidthError when the median distance is zero.
double mmd2(const Matrix& a, const Matrix& b);

/// Weighted mean squared Euclidean error per dimension:
/// sum_i w_i * ||x_i - truth||^2 / k.
double mse(const WeightedPopulation& pop, std::span<const double> truth);

/// Natural log of the arithmetic mean; inputs must be positive.
double log_mean_emd(std::span<const double> per_seed_emds);

}  // namespace lfi
