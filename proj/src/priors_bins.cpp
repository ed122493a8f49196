#include "lfi/priors_bins.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "lfi/errors.hpp"

namespace lfi {

bool BoxPrior::contains(std::span<const double> theta) const {
  if (theta.size() != dim()) return false;
  for (std::size_t d = 0; d < dim(); ++d)
    if (theta[d] < lo[d] || theta[d] > hi[d]) return false;
  return true;
}

double BoxPrior::volume() const {
  double v = 1.0;
  for (std::size_t d = 0; d < dim(); ++d) v *= hi[d] - lo[d];
  return v;
}

void BoxPrior::validate() const {
  if (lo.size() != hi.size() || lo.empty())
    throw std::invalid_argument("BoxPrior: lo/hi size mismatch or empty");
  for (std::size_t d = 0; d < dim(); ++d)
    if (!(lo[d] < hi[d])) throw std::invalid_argument("BoxPrior: requires lo < hi per dimension");
}

BoxPrior ma2_prior() { return {{-2.0, -1.0}, {2.0, 1.0}}; }

BoxPrior lv_prior() {
  const double lo = std::log(0.002), hi = std::log(2.0);
  return {{lo, lo, lo}, {hi, hi, hi}};
}

Matrix sample_prior(const BoxPrior& prior, std::size_t n, Rng& rng) {
  prior.validate();
  if (n == 0) throw std::invalid_argument("sample_prior: n must be positive");
  Matrix out(n, prior.dim());
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t d = 0; d < prior.dim(); ++d)
      out(r, d) = rng.uniform(prior.lo[d], prior.hi[d]);
  return out;
}

void BinGrid::validate() const {
  if (bins() < 2) throw std::invalid_argument("BinGrid: needs at least 2 bins");
  auto check_edges = [](const std::vector<double>& e) {
    for (std::size_t i = 1; i < e.size(); ++i)
      if (!(e[i] > e[i - 1])) throw std::invalid_argument("BinGrid: edges must increase");
  };
  check_edges(edges_i);
  if (is_2d()) {
    if (dims[0] >= dims[1]) throw std::invalid_argument("BinGrid: requires dims i < j");
    if (edges_j.size() != edges_i.size())
      throw std::invalid_argument("BinGrid: 2-D grid needs equal bin counts per dimension");
    check_edges(edges_j);
  } else if (!edges_j.empty()) {
    throw std::invalid_argument("BinGrid: 1-D grid must not carry edges_j");
  }
}

std::vector<double> equal_width_edges(double lo, double hi, std::size_t bins) {
  if (bins < 2) throw std::invalid_argument("equal_width_edges: bins must be >= 2");
  if (!(hi > lo)) throw DegenerateSupportError("equal_width_edges: zero-width support");
  std::vector<double> edges(bins + 1);
  const double width = (hi - lo) / static_cast<double>(bins);
  for (std::size_t m = 0; m <= bins; ++m) edges[m] = lo + width * static_cast<double>(m);
  edges.front() = lo;
  edges.back() = hi;  // exact endpoints regardless of rounding
  return edges;
}

std::vector<double> fit_edges(const Matrix& samples, int dim, std::size_t bins) {
  if (dim < 0 || static_cast<std::size_t>(dim) >= samples.cols)
    throw std::invalid_argument("fit_edges: dimension out of range");
  if (samples.rows < 2) throw std::invalid_argument("fit_edges: need at least 2 samples");
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (std::size_t r = 0; r < samples.rows; ++r) {
    const double v = samples(r, static_cast<std::size_t>(dim));
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  return equal_width_edges(lo, hi, bins);
}

BinGrid fit_grid(const Matrix& samples, std::array<int, 2> dims, std::size_t bins) {
  BinGrid grid;
  grid.dims = dims;
  grid.edges_i = fit_edges(samples, dims[0], bins);
  if (dims[1] >= 0) grid.edges_j = fit_edges(samples, dims[1], bins);
  grid.validate();
  return grid;
}

namespace {

std::size_t bin_index(const std::vector<double>& edges, double x) {
  const std::size_t bins = edges.size() - 1;
  if (x < edges.front() || x > edges.back())
    throw OutOfSupportError("discretize: value outside grid support");
  if (x >= edges.back()) return bins - 1;  // last bin right-closed
  const auto it = std::upper_bound(edges.begin(), edges.end(), x);
  return static_cast<std::size_t>(std::distance(edges.begin(), it)) - 1;
}

}  // namespace

std::size_t discretize(std::span<const double> theta, const BinGrid& grid) {
  grid.validate();
  const auto need = static_cast<std::size_t>(std::max(grid.dims[0], grid.dims[1])) + 1;
  if (theta.size() < need) throw std::invalid_argument("discretize: theta too short for grid dims");
  const std::size_t idx_i = bin_index(grid.edges_i, theta[static_cast<std::size_t>(grid.dims[0])]);
  if (!grid.is_2d()) return idx_i;
  const std::size_t idx_j = bin_index(grid.edges_j, theta[static_cast<std::size_t>(grid.dims[1])]);
  return idx_i * grid.bins() + idx_j;
}

std::vector<double> threshold_exploit(std::span<const double> weights, double delta) {
  if (!(delta >= 0.0 && delta < 1.0))
    throw std::invalid_argument("threshold_exploit: delta must be in [0, 1)");
  std::vector<double> out(weights.begin(), weights.end());
  double surviving = 0.0;
  for (double& w : out) {
    if (w < delta) w = 0.0;
    surviving += w;
  }
  if (surviving <= 0.0) {
    // Everything fell below delta: keep the mode.
    const auto it = std::max_element(weights.begin(), weights.end());
    std::fill(out.begin(), out.end(), 0.0);
    out[static_cast<std::size_t>(std::distance(weights.begin(), it))] = 1.0;
    return out;
  }
  for (double& w : out) w /= surviving;
  return out;
}

void CategoricalProposal::validate() const {
  grid.validate();
  if (weights.size() != grid.class_count())
    throw std::invalid_argument("CategoricalProposal: weight count mismatch");
  double sum = 0.0;
  for (double w : weights) {
    if (w < 0.0) throw std::invalid_argument("CategoricalProposal: negative weight");
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-12)
    throw std::invalid_argument("CategoricalProposal: weights must sum to 1");
}

std::vector<double> CategoricalProposal::mean() const {
  validate();
  const std::size_t B = grid.bins();
  auto center = [](const std::vector<double>& e, std::size_t m) {
    return 0.5 * (e[m] + e[m + 1]);
  };
  if (!grid.is_2d()) {
    double m1 = 0.0;
    for (std::size_t m = 0; m < B; ++m) m1 += weights[m] * center(grid.edges_i, m);
    return {m1};
  }
  double mi = 0.0, mj = 0.0;
  for (std::size_t r = 0; r < B; ++r)
    for (std::size_t c = 0; c < B; ++c) {
      const double w = weights[r * B + c];
      mi += w * center(grid.edges_i, r);
      mj += w * center(grid.edges_j, c);
    }
  return {mi, mj};
}

void to_json(nlohmann::json& j, const CategoricalProposal& p) {
  j = nlohmann::json{{"dims", p.grid.dims},
                     {"edges_i", p.grid.edges_i},
                     {"edges_j", p.grid.edges_j},
                     {"weights", p.weights}};
}

void from_json(const nlohmann::json& j, CategoricalProposal& p) {
  j.at("dims").get_to(p.grid.dims);
  j.at("edges_i").get_to(p.grid.edges_i);
  j.at("edges_j").get_to(p.grid.edges_j);
  j.at("weights").get_to(p.weights);
  p.validate();
}

namespace {

// Uniform on [lo, hi); rounding in lo + (hi-lo)*u may land exactly on hi,
// which would discretize into the neighbouring bin.
double uniform_half_open(Rng& rng, double lo, double hi) {
  double v = rng.uniform(lo, hi);
  if (v >= hi) v = std::nextafter(hi, lo);
  return v;
}

}  // namespace

Matrix sample_from_proposal(const CategoricalProposal& proposal, std::size_t n, Rng& rng) {
  proposal.validate();
  const std::size_t B = proposal.grid.bins();
  const std::size_t k = proposal.grid.is_2d() ? 2 : 1;
  Matrix out(n, k);
  for (std::size_t r = 0; r < n; ++r) {
    const std::size_t cls = rng.categorical(proposal.weights);
    if (!proposal.grid.is_2d()) {
      out(r, 0) = uniform_half_open(rng, proposal.grid.edges_i[cls], proposal.grid.edges_i[cls + 1]);
    } else {
      const std::size_t ri = cls / B;
      const std::size_t cj = cls % B;
      out(r, 0) = uniform_half_open(rng, proposal.grid.edges_i[ri], proposal.grid.edges_i[ri + 1]);
      out(r, 1) = uniform_half_open(rng, proposal.grid.edges_j[cj], proposal.grid.edges_j[cj + 1]);
    }
  }
  return out;
}

double DeltaSchedule::at(int round) const {
  if (round < 1) throw std::invalid_argument("DeltaSchedule: rounds are counted from 1");
  if (kind == Kind::Constant) return base;
  return base * std::exp(-decay * static_cast<double>(round - 1));
}

void DeltaSchedule::validate() const {
  if (!(base >= 0.0 && base < 1.0))
    throw std::invalid_argument("DeltaSchedule: base must be in [0, 1)");
  if (decay < 0.0) throw std::invalid_argument("DeltaSchedule: decay must be >= 0");
}

}  // namespace lfi
