#include "visidim/visibility.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <ostream>
#include <thread>

#include "visidim/error.hpp"
#include "visidim/support.hpp"
#include "visidim/threads.hpp"

namespace visidim {

namespace {

const OrthoElement& turn(int quarters) {
  static const std::array<OrthoElement, 4> turns{
      OrthoElement::identity(), OrthoElement::rotation(Rational(1, 2)), OrthoElement::rotation(Rational(1)),
      OrthoElement::rotation(Rational(3, 2))};
  return turns[static_cast<std::size_t>(quarters)];
}

// Sides of a hull box: support directions e_perp, -e_perp, e, -e.
enum Side { kUp = 0, kUdown = 1, kHup = 2, kHdown = 3 };
constexpr std::array<int, 4> kSideTurn{1, 3, 0, 2};

// Sign of q - k * sqrt(n2).
int compare_scaled(const QSqrt2& q, long k, const Rational& n2) {
  const int sq = q.sign();
  if (k == 0) return sq;
  if (k > 0 && sq <= 0) return -1;
  if (k < 0 && sq >= 0) return 1;
  const QSqrt2 diff = q * q - QSqrt2(Rational(Rational(k) * k * n2));
  return k > 0 ? diff.sign() : -diff.sign();
}

// floor and ceil of v / (delta * sqrt(n2)), starting from an estimate.
long exact_floor(const QSqrt2& v, const Rational& delta, const Rational& n2, double estimate) {
  const QSqrt2 q = v / QSqrt2(delta);
  long k = static_cast<long>(std::floor(estimate));
  while (compare_scaled(q, k + 1, n2) >= 0) ++k;
  while (compare_scaled(q, k, n2) < 0) --k;
  return k;
}

long exact_ceil(const QSqrt2& v, const Rational& delta, const Rational& n2, double estimate) {
  const QSqrt2 q = v / QSqrt2(delta);
  long k = static_cast<long>(std::ceil(estimate));
  while (compare_scaled(q, k - 1, n2) <= 0) --k;
  while (compare_scaled(q, k, n2) > 0) ++k;
  return k;
}

struct Axis {
  Interval origin;
  std::optional<QSqrt2> exact_origin;
  Interval inv_cell;
  Rational delta;
  Rational n2;
  long count = 1;

  Interval coord(const Interval& raw) const { return (raw - origin) * inv_cell; }
  long clamp(long j) const { return std::clamp(j, 0L, count - 1); }

  // Cells met by [lo, hi]; exact() yields the exact endpoints or nothing.
  template <class Exact>
  std::pair<long, long> range(const Interval& lo, const Interval& hi, Exact&& exact) const {
    const Interval a = coord(lo);
    const Interval b = coord(hi);
    long j0 = static_cast<long>(std::floor(a.lo()));
    long k = static_cast<long>(std::ceil(b.hi()));
    const bool amb_lo = std::floor(a.lo()) != std::floor(a.hi());
    const bool amb_hi = std::ceil(b.lo()) != std::ceil(b.hi());
    if ((amb_lo || amb_hi) && exact_origin) {
      if (const auto e = exact()) {
        if (amb_lo) j0 = exact_floor(e->first - *exact_origin, delta, n2, a.mid());
        if (amb_hi) k = exact_ceil(e->second - *exact_origin, delta, n2, b.mid());
      }
    }
    long j1 = std::max(j0, k - 1);
    return {clamp(j0), clamp(j1)};
  }

  long conservative_floor(const Interval& lo) const { return clamp(static_cast<long>(std::floor(coord(lo).lo()))); }
  long conservative_ceil_minus_one(const Interval& hi) const {
    return clamp(static_cast<long>(std::ceil(coord(hi).hi())) - 1);
  }
};

// Per-element data for walking cylinders in the view frame.
struct Geometry {
  const IFSystem* ifs = nullptr;
  SupportTable table;
  bool exact = false;
  std::size_t maps = 0;
  std::vector<std::array<Interval, 4>> sup;
  std::vector<std::array<std::optional<QSqrt2>, 4>> sup_exact;
  std::vector<Interval> proj_u, proj_h;
  std::vector<std::optional<QSqrt2>> proj_u_exact, proj_h_exact;
  std::vector<std::size_t> child;
  std::vector<Interval> ratio;

  Geometry(const IFSystem& system, const Direction& effective) : ifs(&system) {
    table = SupportTable::build(system, effective);
    exact = table.exact();
    const RotationGroup& G = system.group();
    maps = system.size();
    sup.resize(G.size());
    sup_exact.resize(G.size());
    proj_u.resize(G.size() * maps);
    proj_h.resize(G.size() * maps);
    proj_u_exact.resize(G.size() * maps);
    proj_h_exact.resize(G.size() * maps);
    child.resize(G.size() * maps);
    std::vector<std::size_t> letter(maps);
    for (std::size_t i = 0; i < maps; ++i) letter[i] = *G.index_of(system[i].ortho);
    for (const auto& m : system.maps()) ratio.push_back(Interval::from(m.ratio));
    for (std::size_t g = 0; g < G.size(); ++g) {
      const OrthoElement inv = G[g].inverse();
      for (int s = 0; s < 4; ++s) {
        const std::size_t h = table.index(inv * turn(kSideTurn[s]));
        sup[g][s] = table.value(h);
        sup_exact[g][s] = table.exact_value(h);
      }
      const Direction lu = effective.transformed(inv * turn(1));
      const Direction lh = effective.transformed(inv);
      const auto lue = exact ? lu.exact_vector() : std::nullopt;
      const auto lhe = exact ? lh.exact_vector() : std::nullopt;
      for (std::size_t i = 0; i < maps; ++i) {
        const Similarity& f = system[i];
        const std::size_t k = g * maps + i;
        proj_u[k] = dot(f.translation, lu.vector());
        proj_h[k] = dot(f.translation, lh.vector());
        if (lue && lhe && f.exact_translation) {
          proj_u_exact[k] = dot(*f.exact_translation, *lue);
          proj_h_exact[k] = dot(*f.exact_translation, *lhe);
        }
        child[k] = G.product(g, letter[i]);
      }
    }
  }

  Interval hull_lo(Side s) const { return -sup[0][s]; }
};

struct Node {
  Interval r{1.0};
  std::size_t g = 0;
  Interval ou{0.0};
  Interval oh{0.0};
};

struct ExactBox4 {
  QSqrt2 u_lo, u_hi, h_lo, h_hi;
};

std::optional<ExactBox4> exact_box(const Geometry& geo, const Word& word) {
  if (!geo.exact) return std::nullopt;
  Rational r(1);
  std::size_t g = 0;
  QSqrt2 ou, oh;
  for (const auto i : word) {
    const std::size_t k = g * geo.maps + i;
    ou += QSqrt2(r) * *geo.proj_u_exact[k];
    oh += QSqrt2(r) * *geo.proj_h_exact[k];
    r *= (*geo.ifs)[i].ratio;
    g = geo.child[k];
  }
  const QSqrt2 qr(r);
  const auto& s = geo.sup_exact[g];
  return ExactBox4{ou - qr * *s[kUdown], ou + qr * *s[kUp], oh - qr * *s[kHdown], oh + qr * *s[kHup]};
}

Rational ratio_of(const IFSystem& ifs, const Word& word) {
  Rational r(1);
  for (const auto i : word) r *= ifs[i].ratio;
  return r;
}

GridFrame frame_from(const Geometry& geo, const Direction& effective, const Rational& delta) {
  GridFrame f;
  f.delta = delta;
  f.norm2 = effective.base().x * effective.base().x + effective.base().y * effective.base().y;
  f.norm = sqrt(Interval::from(f.norm2));
  f.inv_cell = Interval(1.0) / (Interval::from(delta) * f.norm);
  f.u0 = geo.hull_lo(kUdown);
  f.h0 = geo.hull_lo(kHdown);
  const Interval wu = geo.sup[0][kUp] + geo.sup[0][kUdown];
  const Interval wh = geo.sup[0][kHup] + geo.sup[0][kHdown];
  long cols = static_cast<long>(std::ceil((wu * f.inv_cell).hi()));
  long rows = static_cast<long>(std::ceil((wh * f.inv_cell).hi()));
  if (geo.exact) {
    f.exact_u0 = -*geo.sup_exact[0][kUdown];
    f.exact_h0 = -*geo.sup_exact[0][kHdown];
    const QSqrt2 ewu = *geo.sup_exact[0][kUp] + *geo.sup_exact[0][kUdown];
    const QSqrt2 ewh = *geo.sup_exact[0][kHup] + *geo.sup_exact[0][kHdown];
    cols = exact_ceil(ewu, delta, f.norm2, (wu * f.inv_cell).mid());
    rows = exact_ceil(ewh, delta, f.norm2, (wh * f.inv_cell).mid());
  }
  if (cols > (1L << 40) || rows > (1L << 40)) throw Error(ErrorKind::ResourceLimit, "grid too large");
  f.cols = static_cast<std::size_t>(std::max(1L, cols));
  f.rows = static_cast<std::size_t>(std::max(1L, rows));
  return f;
}

Axis axis_u(const GridFrame& f) { return {f.u0, f.exact_u0, f.inv_cell, f.delta, f.norm2, static_cast<long>(f.cols)}; }
Axis axis_h(const GridFrame& f) { return {f.h0, f.exact_h0, f.inv_cell, f.delta, f.norm2, static_cast<long>(f.rows)}; }

// Depth-first cylinder walk over the cover at threshold `rel`. In envelope
// mode, subtrees that cannot lower env inside [slice0, slice1) are skipped.
class Walker {
 public:
  Walker(const Geometry& geo, const GridFrame& frame, const Rational& rel)
      : geo_(geo), frame_(frame), u_(axis_u(frame)), h_(axis_h(frame)), rel_(rel), rel_iv_(Interval::from(rel)) {}

  void envelope(std::int32_t* env, long slice0, long slice1) {
    env_ = env;
    grid_ = nullptr;
    s0_ = slice0;
    s1_ = slice1;
    run();
  }

  void dense(std::uint8_t* grid) {
    grid_ = grid;
    env_ = nullptr;
    s0_ = 0;
    s1_ = static_cast<long>(frame_.cols) - 1;
    run();
  }

 private:
  void run() {
    word_.clear();
    buffers_.assign(1, {});
    visit(Node{}, 0);
  }

  bool is_leaf(const Node& n) {
    if (certainly_leq(n.r, rel_iv_)) return true;
    if (certainly_less(rel_iv_, n.r)) return false;
    return ratio_of(*geo_.ifs, word_) <= rel_;
  }

  void visit(const Node& n, std::size_t depth) {
    const auto& s = geo_.sup[n.g];
    const Interval u_lo = n.ou - n.r * s[kUdown];
    const Interval u_hi = n.ou + n.r * s[kUp];
    const Interval h_lo = n.oh - n.r * s[kHdown];
    const Interval h_hi = n.oh + n.r * s[kHup];
    if (is_leaf(n)) {
      std::optional<std::optional<ExactBox4>> cache;
      auto exact = [&]() -> const std::optional<ExactBox4>& {
        if (!cache) cache = exact_box(geo_, word_);
        return *cache;
      };
      const auto [c0, c1] = u_.range(u_lo, u_hi, [&]() -> std::optional<std::pair<QSqrt2, QSqrt2>> {
        const auto& e = exact();
        if (!e) return std::nullopt;
        return std::pair{e->u_lo, e->u_hi};
      });
      const auto [r0, r1] = h_.range(h_lo, h_hi, [&]() -> std::optional<std::pair<QSqrt2, QSqrt2>> {
        const auto& e = exact();
        if (!e) return std::nullopt;
        return std::pair{e->h_lo, e->h_hi};
      });
      const long a = std::max(c0, s0_);
      const long b = std::min(c1, s1_);
      if (a > b) return;
      if (env_) {
        kernels::active().fill_min(env_ + (a - s0_), static_cast<std::size_t>(b - a + 1), static_cast<std::int32_t>(r0));
      } else {
        for (long r = r0; r <= r1; ++r) {
          std::fill(grid_ + r * static_cast<long>(frame_.cols) + a, grid_ + r * static_cast<long>(frame_.cols) + b + 1,
                    std::uint8_t{1});
        }
      }
      return;
    }
    if (depth >= kDefaultDepthCap) {
      throw Error(ErrorKind::DepthCapExceeded, "scale needs words longer than " + std::to_string(kDefaultDepthCap));
    }
    const long a = std::max(u_.conservative_floor(u_lo), s0_);
    const long b = std::min(u_.conservative_ceil_minus_one(u_hi), s1_);
    if (a > b) return;
    if (env_) {
      const long row = h_.conservative_floor(h_lo);
      if (!kernels::active().any_greater(env_ + (a - s0_), static_cast<std::size_t>(b - a + 1),
                                         static_cast<std::int32_t>(row))) {
        return;
      }
    }
    if (buffers_.size() <= depth + 1) buffers_.resize(depth + 2);
    std::vector<std::pair<double, Node>>& kids = buffers_[depth + 1];
    kids.clear();
    for (std::size_t i = 0; i < geo_.maps; ++i) {
      const std::size_t k = n.g * geo_.maps + i;
      Node c;
      c.r = n.r * geo_.ratio[i];
      c.g = geo_.child[k];
      c.ou = n.ou + n.r * geo_.proj_u[k];
      c.oh = n.oh + n.r * geo_.proj_h[k];
      const double low = (c.oh - c.r * geo_.sup[c.g][kHdown]).lo();
      kids.push_back({low, c});
    }
    // Lowest children first: they settle the envelope and prune the rest.
    std::vector<std::size_t> order(kids.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return kids[x].first < kids[y].first; });
    std::vector<std::pair<std::uint16_t, Node>> sorted;
    sorted.reserve(order.size());
    for (const auto i : order) sorted.push_back({static_cast<std::uint16_t>(i), kids[i].second});
    for (const auto& [letter, c] : sorted) {
      word_.push_back(letter);
      visit(c, depth + 1);
      word_.pop_back();
    }
  }

  const Geometry& geo_;
  const GridFrame& frame_;
  Axis u_, h_;
  Rational rel_;
  Interval rel_iv_;
  Word word_;
  std::vector<std::vector<std::pair<double, Node>>> buffers_;
  std::int32_t* env_ = nullptr;
  std::uint8_t* grid_ = nullptr;
  long s0_ = 0;
  long s1_ = 0;
};

Rational relative_for(const IFSystem& ifs, const Rational& delta) { return relative_scale(ifs, delta.get_d()); }

}  // namespace

ViewSpec make_view(const IFSystem& ifs, const Direction& theta, double y) {
  const Ball& ball = ifs.ball();
  const Interval along = dot(Vec2<Interval>{Interval(ball.center.x), Interval(ball.center.y)}, theta.vector()) / theta.norm();
  ViewSpec v;
  v.theta = theta;
  v.y = y;
  if (certainly_less(Interval(y), along - Interval(ball.radius))) {
    v.effective = theta;
  } else if (certainly_less(along + Interval(ball.radius), Interval(y))) {
    v.effective = theta.opposite();
    v.flipped = true;
  } else {
    throw Error(ErrorKind::PlaneIntersectsSet, "viewing line meets the enclosing ball of K");
  }
  return v;
}

ViewSpec default_view(const IFSystem& ifs, const Direction& theta, double margin) {
  const Ball& ball = ifs.ball();
  const Interval along = dot(Vec2<Interval>{Interval(ball.center.x), Interval(ball.center.y)}, theta.vector()) / theta.norm();
  return make_view(ifs, theta, std::floor((along - Interval(ball.radius)).lo() - margin));
}

GridFrame make_frame(const IFSystem& ifs, const ViewSpec& view, const Rational& delta) {
  if (delta <= 0) throw Error(ErrorKind::Validation, "cell size must be positive");
  const Geometry geo(ifs, view.effective);
  return frame_from(geo, view.effective, delta);
}

GridFrame make_box_frame(const Rational& delta, std::size_t cols, std::size_t rows) {
  if (delta <= 0) throw Error(ErrorKind::Validation, "cell size must be positive");
  GridFrame f;
  f.delta = delta;
  f.cols = std::max<std::size_t>(1, cols);
  f.rows = std::max<std::size_t>(1, rows);
  f.u0 = Interval(0.0);
  f.h0 = Interval(0.0);
  f.exact_u0 = QSqrt2(0);
  f.exact_h0 = QSqrt2(0);
  f.inv_cell = Interval(1.0) / Interval::from(delta);
  return f;
}

std::vector<std::size_t> OccupancyGrid::occupied_rows(std::size_t col) const {
  std::vector<std::size_t> out;
  for (std::size_t r = 0; r < frame.rows; ++r) {
    if (occupied(col, r)) out.push_back(r);
  }
  return out;
}

std::size_t OccupancyGrid::count() const {
  return static_cast<std::size_t>(std::count_if(cells.begin(), cells.end(), [](std::uint8_t c) { return c != 0; }));
}

OccupancyGrid rasterize(const IFSystem& ifs, const ViewSpec& view, const Rational& delta) {
  if (delta <= 0) throw Error(ErrorKind::Validation, "cell size must be positive");
  const Geometry geo(ifs, view.effective);
  OccupancyGrid grid;
  grid.frame = frame_from(geo, view.effective, delta);
  if (grid.frame.cols * grid.frame.rows > kDenseGridCap) {
    throw Error(ErrorKind::ResourceLimit, "dense grid of " + std::to_string(grid.frame.cols) + "x" +
                                              std::to_string(grid.frame.rows) + " cells exceeds the cap");
  }
  grid.cover_scale = relative_for(ifs, delta);
  grid.cells.assign(grid.frame.cols * grid.frame.rows, 0);
  Walker(geo, grid.frame, grid.cover_scale).dense(grid.cells.data());
  return grid;
}

OccupancyGrid rasterize_boxes(const GridFrame& frame, std::span<const Box2> boxes) {
  OccupancyGrid grid;
  grid.frame = frame;
  if (frame.cols * frame.rows > kDenseGridCap) throw Error(ErrorKind::ResourceLimit, "dense grid exceeds the cap");
  grid.cells.assign(frame.cols * frame.rows, 0);
  const Axis u = axis_u(frame);
  const Axis h = axis_h(frame);
  for (const Box2& b : boxes) {
    const auto [c0, c1] = u.range(Interval(b.x.lo()), Interval(b.x.hi()), [&] {
      return std::optional<std::pair<QSqrt2, QSqrt2>>(std::pair{QSqrt2(from_double(b.x.lo())), QSqrt2(from_double(b.x.hi()))});
    });
    const auto [r0, r1] = h.range(Interval(b.y.lo()), Interval(b.y.hi()), [&] {
      return std::optional<std::pair<QSqrt2, QSqrt2>>(std::pair{QSqrt2(from_double(b.y.lo())), QSqrt2(from_double(b.y.hi()))});
    });
    for (long r = r0; r <= r1; ++r) {
      for (long c = c0; c <= c1; ++c) grid.cells[static_cast<std::size_t>(r) * frame.cols + static_cast<std::size_t>(c)] = 1;
    }
  }
  return grid;
}

std::size_t Envelope::defined() const {
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(), [](std::int32_t r) { return r != kernels::kEmpty; }));
}

Envelope lower_envelope(const OccupancyGrid& grid) {
  Envelope env;
  env.frame = grid.frame;
  env.rows.assign(grid.cols(), kernels::kEmpty);
  kernels::active().column_lowest(grid.cells.data(), grid.rows(), grid.cols(), env.rows.data());
  return env;
}

Envelope fine_envelope(const IFSystem& ifs, const ViewSpec& view, const Rational& delta) {
  if (delta <= 0) throw Error(ErrorKind::Validation, "cell size must be positive");
  const Geometry geo(ifs, view.effective);
  Envelope env;
  env.frame = frame_from(geo, view.effective, delta);
  const Rational rel = relative_for(ifs, delta);
  const long cols = static_cast<long>(env.frame.cols);
  env.rows.assign(env.frame.cols, kernels::kEmpty);
  const long workers = std::min<long>(static_cast<long>(worker_count()), std::max<long>(1, cols / 4096));
  if (workers <= 1) {
    Walker(geo, env.frame, rel).envelope(env.rows.data(), 0, cols - 1);
    return env;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
  for (long w = 0; w < workers; ++w) {
    const long a = cols * w / workers;
    const long b = cols * (w + 1) / workers - 1;
    pool.emplace_back([&, w, a, b] {
      try {
        Walker(geo, env.frame, rel).envelope(env.rows.data() + a, a, b);
      } catch (...) {
        errors[static_cast<std::size_t>(w)] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return env;
}

namespace {

std::vector<std::pair<std::int64_t, std::int64_t>> coarse_cells(const Envelope& env, int level) {
  std::vector<std::pair<std::int64_t, std::int64_t>> cells;
  for (std::size_t c = 0; c < env.rows.size(); ++c) {
    if (env.rows[c] == kernels::kEmpty) continue;
    cells.emplace_back(static_cast<std::int64_t>(c) >> level, static_cast<std::int64_t>(env.rows[c]) >> level);
  }
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  return cells;
}

// Fine level m+1 against level m: every defined column's parent is defined and lower.
bool rises(const Envelope& coarse, const Envelope& fine) {
  for (std::size_t c = 0; c < fine.rows.size(); ++c) {
    if (fine.rows[c] == kernels::kEmpty) continue;
    const std::size_t p = c >> 1;
    if (p >= coarse.rows.size() || coarse.rows[p] == kernels::kEmpty) return false;
    if (coarse.rows[p] > (fine.rows[c] >> 1)) return false;
  }
  return true;
}

}  // namespace

std::vector<VisibleCover> visible_cover_series(const IFSystem& ifs, const ViewSpec& view,
                                               std::span<const Rational> deltas, int max_levels) {
  if (max_levels < 1) throw Error(ErrorKind::Validation, "refinement levels must be at least 1");
  std::map<Rational, Envelope> cache;
  auto envelope_at = [&](const Rational& d) -> const Envelope& {
    auto it = cache.find(d);
    if (it == cache.end()) it = cache.emplace(d, fine_envelope(ifs, view, d)).first;
    return it->second;
  };
  std::vector<VisibleCover> out;
  for (const Rational& delta : deltas) {
    VisibleCover v;
    v.delta = delta;
    Rational fine = delta;
    const Envelope* previous = nullptr;
    for (int m = 1; m <= max_levels; ++m) {
      fine /= 2;
      const Envelope& env = envelope_at(fine);
      if (previous && !rises(*previous, env)) v.monotone = false;
      previous = &env;
      v.cells = coarse_cells(env, m);
      v.trace.push_back(v.cells.size());
      v.levels = m;
      if (m >= 2 && v.trace[m - 1] == v.trace[m - 2]) {
        v.stable = true;
        break;
      }
    }
    v.count = v.trace.back();
    out.push_back(std::move(v));
  }
  return out;
}

VisibleCover visible_cover(const IFSystem& ifs, const ViewSpec& view, const Rational& delta, int max_levels) {
  return visible_cover_series(ifs, view, std::span<const Rational>(&delta, 1), max_levels).front();
}

nlohmann::json to_json(const VisibleCover& v) {
  nlohmann::json j;
  j["delta"] = to_string(v.delta);
  j["count"] = v.count;
  j["stable"] = v.stable;
  j["levels"] = v.levels;
  j["trace"] = v.trace;
  j["monotone"] = v.monotone;
  return j;
}

void write_envelope_csv(std::ostream& os, const Envelope& env, int level) {
  std::map<std::int64_t, std::size_t> per_column;
  for (const auto& [c, r] : coarse_cells(env, level)) ++per_column[c];
  os << "column_index,height_row,coarse_cell_count\n";
  for (std::size_t c = 0; c < env.rows.size(); ++c) {
    if (env.rows[c] == kernels::kEmpty) continue;
    os << c << ',' << env.rows[c] << ',' << per_column[static_cast<std::int64_t>(c) >> level] << '\n';
  }
}

void write_pgm(std::ostream& os, const OccupancyGrid& grid) {
  os << "P5\n" << grid.cols() << ' ' << grid.rows() << "\n255\n";
  for (std::size_t r = grid.rows(); r-- > 0;) {
    for (std::size_t c = 0; c < grid.cols(); ++c) os.put(grid.occupied(c, r) ? '\0' : static_cast<char>(255));
  }
}

}  // namespace visidim
