#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "visidim/projection.hpp"
#include "visidim/rational.hpp"

namespace visidim {

/// Unique s with sum r_i^s = 1 (bisection to 1e-12).
double moran_dimension(std::span<const Rational> ratios);

struct Sample {
  double delta = 0.0;
  double count = 0.0;
};

struct AssouadWitness {
  std::int64_t col = 0;  ///< center cell at the r scale
  std::int64_t row = 0;
  double R = 0.0;
  double r = 0.0;
  std::size_t count = 0;
};

struct DimensionReport {
  std::string method;
  std::vector<Sample> samples;
  double slope = 0.0;
  double intercept = 0.0;
  double residual = 0.0;  ///< RMS of the fit residuals
  double min_pair_slope = 0.0;
  double max_pair_slope = 0.0;
  std::vector<std::string> notes;
  AssouadWitness witness;  ///< assouad_estimate only
};

/// Least-squares slope of log(count) against log(1/delta).
DimensionReport fit_box_dimension(std::span<const Sample> samples, std::string method = "box");

/// Max over occupied r-cells x and (R, r) of log N(Q(x, R) ∩ E, r) / log(R/r),
/// Q(x, R) the axis cube of side R centered on x's r-cell. E is a set of
/// grid cells of side `resolution`; every r must be at least 4 * resolution.
DimensionReport assouad_estimate(std::span<const std::pair<std::int64_t, std::int64_t>> cells, double resolution,
                                 std::span<const double> R_list, std::span<const double> r_list);

/// Box-counting samples of a cell set at coarser scales resolution * 2^k, k in levels.
std::vector<Sample> cell_box_counts(std::span<const std::pair<std::int64_t, std::int64_t>> cells, double resolution,
                                    std::span<const int> levels);

struct WeightedDigraph {
  struct Edge {
    std::size_t from = 0;
    std::size_t to = 0;
    Rational ratio;
  };
  std::size_t vertices = 0;
  std::vector<Edge> edges;
};

WeightedDigraph digraph_of(const ProjectionGraph& graph);

/// Spectral radius of a nonnegative matrix (row-major n x n) by power
/// iteration on M + I with Collatz-Wielandt bounds.
double spectral_radius(const std::vector<double>& m, std::size_t n, double tol = 1e-10);

/// s with spectral radius of M(s) equal to 1, M(s)[a][b] = sum over edges a->b of ratio^s.
/// Max over strongly connected components; bisection on [0, 2] to 1e-9.
double perron_dimension(const WeightedDigraph& g);

nlohmann::json to_json(const DimensionReport& r);

}  // namespace visidim
