#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "lfi/matrix.hpp"
#include "lfi/rng.hpp"

#include "json.hpp"

namespace lfi {

/// Axis-aligned uniform prior box; for LV the coordinates are log-rates.
struct BoxPrior {
  std::vector<double> lo;
  std::vector<double> hi;

  std::size_t dim() const { return lo.size(); }
  bool contains(std::span<const double> theta) const;
  double volume() const;
  void validate() const;
};

BoxPrior ma2_prior();  // [-2,2] x [-1,1]
BoxPrior lv_prior();   // U(log 0.002, log 2) per dimension

/// n i.i.d. draws from the box, row-major n x k.
Matrix sample_prior(const BoxPrior& prior, std::size_t n, Rng& rng);

/// Equal-width bin edges for one or two parameter dimensions. A 1-D grid has
/// dims = {d, -1}; a 2-D grid has dims = {i, j} with i < j and shares B
/// between the two dimensions (class count B^2, row-major i-major).
struct BinGrid {
  std::array<int, 2> dims{0, -1};
  std::vector<double> edges_i;  // length B+1, strictly increasing
  std::vector<double> edges_j;  // empty for 1-D

  bool is_2d() const { return dims[1] >= 0; }
  std::size_t bins() const { return edges_i.empty() ? 0 : edges_i.size() - 1; }
  std::size_t class_count() const { return is_2d() ? bins() * bins() : bins(); }
  void validate() const;

  bool operator==(const BinGrid&) const = default;
};

/// Equal-width edges spanning [lo, hi]. Throws DegenerateSupportError when
/// the interval has no width.
std::vector<double> equal_width_edges(double lo, double hi, std::size_t bins);

/// Edges spanning [min, max] of one sample column.
std::vector<double> fit_edges(const Matrix& samples, int dim, std::size_t bins);

/// Grid over the sample range of the selected dimensions.
BinGrid fit_grid(const Matrix& samples, std::array<int, 2> dims, std::size_t bins);

/// Flat class index of theta (full k-vector; the grid picks its dimensions).
/// Bins are half-open with the final bin right-closed; 2-D index is
/// row-major idx_i*B + idx_j. Throws OutOfSupportError outside the grid.
std::size_t discretize(std::span<const double> theta, const BinGrid& grid);

/// Weights below delta: zeroed; survivors renormalized. When everything is
/// below delta only the argmax class (first on ties) survives with weight 1.
std::vector<double> threshold_exploit(std::span<const double> weights, double delta);

/// Bin grid plus normalized class weights: the discrete proposal posterior.
struct CategoricalProposal {
  BinGrid grid;
  std::vector<double> weights;

  void validate() const;
  /// Mean of the piecewise-uniform density, one value per grid dimension.
  std::vector<double> mean() const;

  bool operator==(const CategoricalProposal&) const = default;
};

void to_json(nlohmann::json& j, const CategoricalProposal& p);
void from_json(const nlohmann::json& j, CategoricalProposal& p);

/// Class draw followed by a uniform draw inside the class's bin rectangle
/// (the bin-to-uniform back-transform). Rows are in grid-dimension order.
Matrix sample_from_proposal(const CategoricalProposal& proposal, std::size_t n, Rng& rng);

/// Per-round exploitation threshold delta_g, g counted from 1.
struct DeltaSchedule {
  enum class Kind { Constant, ExponentialDecay };
  Kind kind = Kind::Constant;
  double base = 0.0;
  double decay = 0.0;  // delta_g = base * exp(-decay*(g-1)) for ExponentialDecay

  double at(int round) const;
  void validate() const;
};

}  // namespace lfi
