#include "visidim/dimension.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>

#include "visidim/error.hpp"

namespace visidim {

double moran_dimension(std::span<const Rational> ratios) {
  if (ratios.empty()) throw Error(ErrorKind::EmptySystem, "no ratios");
  std::vector<double> r;
  for (const auto& q : ratios) {
    if (q <= 0 || q >= 1) throw Error(ErrorKind::NonContractive, "ratio " + to_string(q) + " not in (0,1)");
    r.push_back(q.get_d());
  }
  auto sum = [&](double s) {
    double acc = 0.0;
    for (double x : r) acc += std::pow(x, s);
    return acc;
  };
  // The sum is strictly decreasing; find a bracket [0, hi] then bisect.
  double lo = 0.0, hi = 1.0;
  while (sum(hi) > 1.0) hi *= 2.0;
  while (hi - lo > 1e-13) {
    const double mid = 0.5 * (lo + hi);
    (sum(mid) > 1.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

DimensionReport fit_box_dimension(std::span<const Sample> samples, std::string method) {
  if (samples.size() < 3) throw Error(ErrorKind::InsufficientSamples, "a fit needs at least 3 samples");
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (!(samples[i].delta > 0) || !(samples[i].count > 0)) {
      throw Error(ErrorKind::Validation, "samples need positive scales and counts");
    }
    if (i && !(samples[i].delta < samples[i - 1].delta)) {
      throw Error(ErrorKind::Validation, "scales must be strictly decreasing");
    }
  }
  DimensionReport rep;
  rep.method = std::move(method);
  rep.samples.assign(samples.begin(), samples.end());
  const std::size_t n = samples.size();
  std::vector<double> x(n), y(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = -std::log(samples[i].delta);
    y[i] = std::log(samples[i].count);
  }
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(n);
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / static_cast<double>(n);
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  rep.slope = sxy / sxx;
  rep.intercept = my - rep.slope * mx;
  double ss = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double e = y[i] - (rep.intercept + rep.slope * x[i]);
    ss += e * e;
  }
  rep.residual = std::sqrt(ss / static_cast<double>(n));
  rep.min_pair_slope = INFINITY;
  rep.max_pair_slope = -INFINITY;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double s = (y[j] - y[i]) / (x[j] - x[i]);
      rep.min_pair_slope = std::min(rep.min_pair_slope, s);
      rep.max_pair_slope = std::max(rep.max_pair_slope, s);
    }
  }
  return rep;
}

namespace {

using Cell = std::pair<std::int64_t, std::int64_t>;

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::vector<Cell> coarsen(std::span<const Cell> cells, std::int64_t k) {
  std::vector<Cell> out;
  out.reserve(cells.size());
  for (const auto& [c, r] : cells) out.emplace_back(floor_div(c, k), floor_div(r, k));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::int64_t ratio_to_cells(double scale, double resolution) {
  return std::max<std::int64_t>(1, std::llround(scale / resolution));
}

}  // namespace

std::vector<Sample> cell_box_counts(std::span<const Cell> cells, double resolution, std::span<const int> levels) {
  std::vector<Sample> out;
  for (const int k : levels) {
    const std::int64_t side = std::int64_t{1} << k;
    out.push_back({resolution * static_cast<double>(side), static_cast<double>(coarsen(cells, side).size())});
  }
  return out;
}

DimensionReport assouad_estimate(std::span<const Cell> cells, double resolution, std::span<const double> R_list,
                                 std::span<const double> r_list) {
  if (cells.empty()) throw Error(ErrorKind::Validation, "empty cell set");
  if (R_list.empty() || r_list.empty()) throw Error(ErrorKind::InsufficientSamples, "no scale pairs");
  DimensionReport rep;
  rep.method = "assouad";
  rep.notes.push_back("estimate, not certificate");
  rep.slope = -INFINITY;
  for (const double r : r_list) {
    if (r < 4.0 * resolution * (1.0 - 1e-12)) {
      throw Error(ErrorKind::Validation, "grid resolution must be at most r/4");
    }
    const std::int64_t rk = ratio_to_cells(r, resolution);
    const std::vector<Cell> coarse = coarsen(cells, rk);
    std::map<std::int64_t, std::vector<std::int64_t>> columns;
    for (const auto& [c, row] : coarse) columns[c].push_back(row);
    for (const double R : R_list) {
      if (R <= r) throw Error(ErrorKind::ScaleOrder, "R must exceed r");
      const std::int64_t w = std::max<std::int64_t>(1, std::llround(R / r));
      const std::int64_t before = w / 2;
      const std::int64_t after = w - before - 1;
      for (const auto& [c, row] : coarse) {
        std::size_t count = 0;
        for (auto it = columns.lower_bound(c - before); it != columns.end() && it->first <= c + after; ++it) {
          const auto& rows = it->second;
          count += static_cast<std::size_t>(std::upper_bound(rows.begin(), rows.end(), row + after) -
                                            std::lower_bound(rows.begin(), rows.end(), row - before));
        }
        const double est = std::log(static_cast<double>(count)) / std::log(static_cast<double>(w));
        if (est > rep.slope) {
          rep.slope = est;
          rep.witness = {c, row, R, r, count};
        }
      }
    }
  }
  rep.min_pair_slope = rep.max_pair_slope = rep.slope;
  return rep;
}

WeightedDigraph digraph_of(const ProjectionGraph& graph) {
  WeightedDigraph g;
  g.vertices = graph.size();
  for (const auto& e : graph.edges) g.edges.push_back({e.from, e.to, e.ratio});
  return g;
}

namespace {

// Tarjan over adjacency lists.
std::vector<std::vector<std::size_t>> strongly_connected(const std::vector<std::vector<std::size_t>>& adj) {
  const std::size_t vertices = adj.size();
  std::vector<int> index(vertices, -1), low(vertices, 0);
  std::vector<bool> on(vertices, false);
  std::vector<std::size_t> stack;
  std::vector<std::vector<std::size_t>> comps;
  int counter = 0;
  std::function<void(std::size_t)> dfs = [&](std::size_t v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on[v] = true;
    for (const auto w : adj[v]) {
      if (index[w] < 0) {
        dfs(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      std::vector<std::size_t> comp;
      std::size_t w;
      do {
        w = stack.back();
        stack.pop_back();
        on[w] = false;
        comp.push_back(w);
      } while (w != v);
      comps.push_back(std::move(comp));
    }
  };
  for (std::size_t v = 0; v < vertices; ++v) {
    if (index[v] < 0) dfs(v);
  }
  return comps;
}

// Collatz-Wielandt bounds for an irreducible block; M + I makes it primitive.
double irreducible_radius(const std::vector<double>& m, std::size_t n, double tol) {
  std::vector<double> x(n, 1.0), y(n);
  double lo = 0.0, hi = INFINITY;
  for (int it = 0; it < 200000; ++it) {
    for (std::size_t i = 0; i < n; ++i) {
      double acc = x[i];
      for (std::size_t j = 0; j < n; ++j) acc += m[i * n + j] * x[j];
      y[i] = acc;
    }
    lo = INFINITY;
    hi = 0.0;
    double norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double q = y[i] / x[i];
      lo = std::min(lo, q);
      hi = std::max(hi, q);
      norm = std::max(norm, y[i]);
    }
    if (hi - lo <= tol * hi) break;
    for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / norm;
  }
  return 0.5 * (lo + hi) - 1.0;
}

}  // namespace

double spectral_radius(const std::vector<double>& m, std::size_t n, double tol) {
  if (m.size() != n * n) throw Error(ErrorKind::Validation, "matrix size mismatch");
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (m[i * n + j] > 0) adj[i].push_back(j);
    }
  }
  // Reducible matrices: the radius is the largest over diagonal blocks.
  double best = 0.0;
  for (const auto& comp : strongly_connected(adj)) {
    const std::size_t k = comp.size();
    std::vector<double> block(k * k);
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = 0; b < k; ++b) block[a * k + b] = m[comp[a] * n + comp[b]];
    }
    best = std::max(best, irreducible_radius(block, k, tol));
  }
  return best;
}

double perron_dimension(const WeightedDigraph& g) {
  if (g.vertices == 0 || g.edges.empty()) throw Error(ErrorKind::EmptyGraph, "graph has no edges");
  for (const auto& e : g.edges) {
    if (e.from >= g.vertices || e.to >= g.vertices) throw Error(ErrorKind::Validation, "edge endpoint out of range");
    if (e.ratio <= 0 || e.ratio >= 1) throw Error(ErrorKind::NonContractive, "edge weight not in (0,1)");
  }
  double best = 0.0;
  std::vector<std::vector<std::size_t>> adj(g.vertices);
  for (const auto& e : g.edges) adj[e.from].push_back(e.to);
  for (const auto& comp : strongly_connected(adj)) {
    std::vector<std::size_t> local(g.vertices, SIZE_MAX);
    for (std::size_t i = 0; i < comp.size(); ++i) local[comp[i]] = i;
    std::vector<std::pair<std::size_t, double>> inner;  // (cell, log ratio)
    const std::size_t n = comp.size();
    for (const auto& e : g.edges) {
      if (local[e.from] != SIZE_MAX && local[e.to] != SIZE_MAX) {
        inner.emplace_back(local[e.from] * n + local[e.to], std::log(e.ratio.get_d()));
      }
    }
    if (inner.empty()) continue;
    auto rho = [&](double s) {
      std::vector<double> m(n * n, 0.0);
      for (const auto& [cell, lr] : inner) m[cell] += std::exp(s * lr);
      return irreducible_radius(m, n, 1e-12);
    };
    double lo = 0.0, hi = 2.0;
    if (rho(hi) >= 1.0) {
      best = std::max(best, hi);
      continue;
    }
    if (rho(lo) <= 1.0) continue;
    while (hi - lo > 1e-11) {
      const double mid = 0.5 * (lo + hi);
      (rho(mid) > 1.0 ? lo : hi) = mid;
    }
    best = std::max(best, 0.5 * (lo + hi));
  }
  return best;
}

nlohmann::json to_json(const DimensionReport& r) {
  nlohmann::json j;
  j["method"] = r.method;
  j["slope"] = r.slope;
  j["intercept"] = r.intercept;
  j["residual"] = r.residual;
  j["pair_slope_band"] = {r.min_pair_slope, r.max_pair_slope};
  auto& s = j["samples"] = nlohmann::json::array();
  for (const auto& x : r.samples) s.push_back({{"delta", x.delta}, {"count", x.count}});
  j["notes"] = r.notes;
  if (r.method == "assouad") {
    j["witness"] = {{"col", r.witness.col}, {"row", r.witness.row}, {"R", r.witness.R}, {"r", r.witness.r},
                    {"count", r.witness.count}};
  }
  return j;
}

}  // namespace visidim
