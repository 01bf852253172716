#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <json.hpp>

#include "visidim/ifs.hpp"
#include "visidim/kernels.hpp"

namespace visidim {

/// Viewing line L = {x : <x, theta/|theta|> = y}. `effective` points from L
/// towards K (theta or its opposite), so visible points minimize height.
struct ViewSpec {
  Direction theta;
  double y = 0.0;
  Direction effective;
  bool flipped = false;
};

/// Throws PlaneIntersectsSet unless L misses the enclosing ball (certified).
ViewSpec make_view(const IFSystem& ifs, const Direction& theta, double y);
/// Line at distance `margin` outside the enclosing ball, on the -theta side.
ViewSpec default_view(const IFSystem& ifs, const Direction& theta, double margin = 1.0);

/// Cells of side delta in the frame (column along effective_perp, height
/// along effective), anchored at the certified hull minimum of K. Closed
/// cells; a box occupies every cell its relative interior meets, and points
/// on the far edge are clamped into the last cell.
struct GridFrame {
  Rational delta;
  std::size_t cols = 1;
  std::size_t rows = 1;
  // Raw (unnormalized) frame coordinates: <x, e_perp> and <x, e>.
  Interval u0;
  Interval h0;
  std::optional<QSqrt2> exact_u0;
  std::optional<QSqrt2> exact_h0;
  Rational norm2{1};  ///< |theta|^2
  Interval norm{1.0};
  Interval inv_cell{1.0};  ///< 1 / (delta * |theta|)

  double delta_d() const { return delta.get_d(); }
};

GridFrame make_frame(const IFSystem& ifs, const ViewSpec& view, const Rational& delta);
/// Plain frame with origin 0 and unit norm, for synthetic box sets.
GridFrame make_box_frame(const Rational& delta, std::size_t cols, std::size_t rows);

/// Dense row-major occupancy bitmap (row 0 nearest the viewing line).
struct OccupancyGrid {
  GridFrame frame;
  std::vector<std::uint8_t> cells;
  Rational cover_scale;  ///< relative threshold of the cylinders used

  std::size_t cols() const { return frame.cols; }
  std::size_t rows() const { return frame.rows; }
  bool occupied(std::size_t col, std::size_t row) const { return cells[row * frame.cols + col] != 0; }
  std::vector<std::size_t> occupied_rows(std::size_t col) const;
  std::size_t count() const;
};

inline constexpr std::size_t kDenseGridCap = std::size_t{1} << 26;

/// Marks every cell met by the hull box of some cylinder of the cover at delta.
OccupancyGrid rasterize(const IFSystem& ifs, const ViewSpec& view, const Rational& delta);
/// Boxes given in frame coordinates: x along columns, y along heights.
OccupancyGrid rasterize_boxes(const GridFrame& frame, std::span<const Box2> boxes);

struct Envelope {
  GridFrame frame;
  std::vector<std::int32_t> rows;  ///< lowest occupied row per column, kernels::kEmpty if none

  std::size_t defined() const;
  friend bool operator==(const Envelope& a, const Envelope& b) { return a.rows == b.rows; }
};

Envelope lower_envelope(const OccupancyGrid& grid);
/// Same envelope as lower_envelope(rasterize(...)) without the dense grid:
/// a pruned cylinder walk, split into column slices across workers.
Envelope fine_envelope(const IFSystem& ifs, const ViewSpec& view, const Rational& delta);

struct VisibleCover {
  Rational delta;
  std::size_t count = 0;
  bool stable = false;
  int levels = 0;                   ///< refinement level m reached
  std::vector<std::size_t> trace;   ///< coarse count per level m = 1..levels
  bool monotone = true;             ///< fine envelopes rose with m
  std::vector<std::pair<std::int64_t, std::int64_t>> cells;  ///< coarse (col, row) at the last level
};

inline constexpr int kDefaultRefinement = 6;

/// Coarse delta-cells met by the fine envelope at delta / 2^m, for m = 1..,
/// until two successive counts agree or m reaches max_levels.
VisibleCover visible_cover(const IFSystem& ifs, const ViewSpec& view, const Rational& delta,
                           int max_levels = kDefaultRefinement);
/// Several coarse scales sharing the fine envelopes.
std::vector<VisibleCover> visible_cover_series(const IFSystem& ifs, const ViewSpec& view,
                                               std::span<const Rational> deltas, int max_levels = kDefaultRefinement);

nlohmann::json to_json(const VisibleCover& v);
/// column_index,height_row,coarse_cell_count (cells in the column's coarse column at level m).
void write_envelope_csv(std::ostream& os, const Envelope& env, int level = 0);
void write_pgm(std::ostream& os, const OccupancyGrid& grid);

}  // namespace visidim
