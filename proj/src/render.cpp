#include "visidim/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "visidim/error.hpp"
#include "visidim/projection.hpp"
#include "visidim/visibility.hpp"

namespace visidim {

namespace {

constexpr double kCanvas = 800.0;
constexpr double kPad = 20.0;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

Vec2<double> approx_point(const Similarity& f, const Vec2<QSqrt2>& p) {
  if (const auto e = f.apply(p)) return {e->x.approx(), e->y.approx()};
  const auto q = f.apply(Vec2<Interval>{p.x.enclosure(), p.y.enclosure()});
  return {q.x.mid(), q.y.mid()};
}

std::string header(double w, double h) {
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(w) + "\" height=\"" + num(h) +
         "\" viewBox=\"0 0 " + num(w) + " " + num(h) + "\">\n";
}

}  // namespace

RenderKind parse_render_kind(std::string_view s) {
  if (s == "attractor") return RenderKind::Attractor;
  if (s == "envelope") return RenderKind::Envelope;
  if (s == "projection") return RenderKind::Projection;
  throw Error(ErrorKind::Parse, "render target must be attractor, envelope or projection");
}

std::string attractor_svg(const IFSystem& ifs, const Rational& relative) {
  ExactBox base;
  if (ifs.declared_open_set()) {
    base = *ifs.declared_open_set();
  } else {
    const Box2 b = ifs.ball().bounding_box();
    base = {{QSqrt2(from_double(b.x.lo())), QSqrt2(from_double(b.y.lo()))},
            {QSqrt2(from_double(b.x.hi())), QSqrt2(from_double(b.y.hi()))}};
  }
  const Vec2<QSqrt2> corners[4] = {base.lo, {base.hi.x, base.lo.y}, base.hi, {base.lo.x, base.hi.y}};
  const Box2 frame = base.enclosure();
  const double span = std::max(frame.x.width(), frame.y.width());
  const double scale = span > 0 ? kCanvas / span : 1.0;
  const auto sx = [&](double x) { return kPad + (x - frame.x.lo()) * scale; };
  const auto sy = [&](double y) { return kPad + (frame.y.hi() - y) * scale; };

  std::vector<std::string> polys;
  for (const auto& e : cover_relative(ifs, relative).entries) {
    std::string pts;
    for (int k = 0; k < 4; ++k) {
      const Vec2<double> p = approx_point(e.map, corners[k]);
      pts += (k ? " " : "") + num(sx(p.x)) + "," + num(sy(p.y));
    }
    polys.push_back("  <polygon points=\"" + pts + "\"/>\n");
  }
  std::sort(polys.begin(), polys.end());

  std::string out = header(frame.x.width() * scale + 2 * kPad, frame.y.width() * scale + 2 * kPad);
  out += "  <g fill=\"black\" stroke=\"none\">\n";
  for (const auto& p : polys) out += "  " + p;
  out += "  </g>\n</svg>\n";
  return out;
}

std::string projection_svg(const IFSystem& ifs, const Direction& theta, const Rational& delta) {
  const ProjectionGraph g = build_projection_graph(ifs, theta);
  const double rmax = ifs.max_ratio().get_d();
  int depth = static_cast<int>(std::ceil(std::log(1.0 / delta.get_d()) / std::log(1.0 / rmax)));
  depth = std::clamp(depth, 1, kMaxClassifyDepth);
  const Classification c = classify_projection(g, 0, depth);

  const double lo = g.hull_lo(0).mid();
  const double hi = g.hull_hi(0).mid();
  const double scale = hi > lo ? kCanvas / (hi - lo) : 1.0;
  const auto sx = [&](double x) { return kPad + (x - lo) * scale; };

  std::string out = header(kCanvas + 2 * kPad, 60);
  out += "  <line x1=\"" + num(sx(lo)) + "\" y1=\"40\" x2=\"" + num(sx(hi)) +
         "\" y2=\"40\" stroke=\"gray\" stroke-width=\"1\"/>\n";
  for (std::size_t i = 0; i < c.components.size(); ++i) {
    const auto& s = c.components[i];
    const bool resolved = i < c.resolved.size() && c.resolved[i];
    out += "  <rect x=\"" + num(sx(s.lo)) + "\" y=\"32\" width=\"" + num(std::max(0.5, (s.hi - s.lo) * scale)) +
           "\" height=\"16\" fill=\"" + (resolved ? "black" : "gray") + "\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

std::string envelope_pgm(const IFSystem& ifs, const Direction& theta, const Rational& delta) {
  const Envelope env = fine_envelope(ifs, default_view(ifs, theta), delta);
  OccupancyGrid grid;
  grid.frame = env.frame;
  grid.cells.assign(env.frame.cols * env.frame.rows, 0);
  for (std::size_t col = 0; col < env.rows.size(); ++col) {
    const auto r = env.rows[col];
    if (r >= 0 && static_cast<std::size_t>(r) < env.frame.rows) grid.cells[static_cast<std::size_t>(r) * env.frame.cols + col] = 1;
  }
  std::ostringstream os;
  write_pgm(os, grid);
  return os.str();
}

void render(const IFSystem& ifs, const RenderOptions& opt, const std::filesystem::path& path) {
  std::string data;
  switch (opt.kind) {
    case RenderKind::Attractor: data = attractor_svg(ifs, opt.delta); break;
    case RenderKind::Projection: data = projection_svg(ifs, opt.theta, opt.delta); break;
    case RenderKind::Envelope: data = envelope_pgm(ifs, opt.theta, opt.delta); break;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::Io, "cannot open " + path.string() + " for writing");
  out.write(data.data(), static_cast<std::streamsize>(data.size()));
  if (!out) throw Error(ErrorKind::Io, "write failed: " + path.string());
}

}  // namespace visidim
