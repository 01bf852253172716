#include "visidim/projection.hpp"

#include "visidim/error.hpp"

namespace visidim {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::FiniteUnion: return "FiniteUnion";
    case Verdict::GapDetected: return "GapDetected";
    case Verdict::Undetermined: return "Undetermined";
  }
  return "?";
}

namespace {

const OrthoElement& quarter_turn() {
  static const OrthoElement q = OrthoElement::rotation(Rational(1, 2));
  return q;
}

const OrthoElement& three_quarter_turn() {
  static const OrthoElement q = OrthoElement::rotation(Rational(3, 2));
  return q;
}

}  // namespace

Interval ProjectionGraph::hull_hi(std::size_t v) const {
  return support.value(quarter_turn() * group[element[v]]);
}

Interval ProjectionGraph::hull_lo(std::size_t v) const {
  return -support.value(three_quarter_turn() * group[element[v]]);
}

std::optional<QSqrt2> ProjectionGraph::exact_hull_hi(std::size_t v) const {
  return support.exact_value(support.index(quarter_turn() * group[element[v]]));
}

std::optional<QSqrt2> ProjectionGraph::exact_hull_lo(std::size_t v) const {
  const auto& h = support.exact_value(support.index(three_quarter_turn() * group[element[v]]));
  if (!h) return std::nullopt;
  return -*h;
}

ProjectionGraph build_projection_graph(const IFSystem& ifs, const Direction& theta, const RotationGroup& group) {
  ProjectionGraph g;
  g.theta = theta;
  g.group = group;
  g.maps = ifs.size();
  g.vertex_of.assign(group.size(), 0);
  for (std::size_t e = 0; e < group.size(); ++e) {
    const Direction d = theta.transformed(group[e]);
    std::size_t v = 0;
    while (v < g.vertices.size() && !g.vertices[v].same_as(d)) ++v;
    if (v == g.vertices.size()) {
      g.vertices.push_back(d);
      g.element.push_back(e);
    }
    g.vertex_of[e] = v;
  }
  g.support = SupportTable::build(ifs, theta);
  g.exact = g.support.exact();
  g.edges.reserve(g.vertices.size() * g.maps);
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    const Direction normal = g.vertices[v].perpendicular();
    const Vec2<Interval> n = normal.vector();
    const auto ne = g.exact ? normal.exact_vector() : std::nullopt;
    for (std::size_t i = 0; i < g.maps; ++i) {
      const Similarity& f = ifs[i];
      const auto target = group.index_of(f.ortho.inverse() * group[g.element[v]]);
      if (!target) {
        throw Error(ErrorKind::OrbitMismatch, "map " + std::to_string(i + 1) + " leaves the orbit of " + theta.str());
      }
      LineMap e;
      e.from = v;
      e.to = g.vertex_of[*target];
      e.source = i;
      e.ratio = f.ratio;
      e.sign = f.ortho.reflects() ? -1 : 1;
      e.offset = dot(f.translation, n);
      if (ne && f.exact_translation) e.exact_offset = dot(*f.exact_translation, *ne);
      g.edges.push_back(std::move(e));
    }
  }
  return g;
}

namespace {

struct ExactOps {
  using T = QSqrt2;
  const ProjectionGraph& g;

  Segment<T> hull(std::size_t v) const { return {*g.exact_hull_lo(v), *g.exact_hull_hi(v)}; }
  Segment<T> outer(const LineMap& e, const Segment<T>& s) const {
    const QSqrt2 r(Rational(e.sign * e.ratio));
    T a = r * s.lo + *e.exact_offset;
    T b = r * s.hi + *e.exact_offset;
    if (e.sign < 0) std::swap(a, b);
    return {std::move(a), std::move(b)};
  }
  std::optional<Segment<T>> inner(const LineMap& e, const Segment<T>& s) const { return outer(e, s); }
  static Segment<double> approx(const Segment<T>& s) { return {s.lo.enclosure().lo(), s.hi.enclosure().hi()}; }
  static Segment<double> approx_inner(const Segment<T>& s) {
    return {s.lo.enclosure().hi(), s.hi.enclosure().lo()};
  }
};

struct CertifiedOps {
  using T = double;
  const ProjectionGraph& g;

  Segment<T> hull(std::size_t v) const { return {g.hull_lo(v).lo(), g.hull_hi(v).hi()}; }
  std::pair<Interval, Interval> ends(const LineMap& e, const Segment<T>& s) const {
    const Interval r = Interval::from(e.ratio) * Interval(static_cast<double>(e.sign));
    return {r * Interval(s.lo) + e.offset, r * Interval(s.hi) + e.offset};
  }
  Segment<T> outer(const LineMap& e, const Segment<T>& s) const {
    auto [a, b] = ends(e, s);
    return {std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi())};
  }
  std::optional<Segment<T>> inner(const LineMap& e, const Segment<T>& s) const {
    auto [a, b] = ends(e, s);
    if (e.sign < 0) std::swap(a, b);
    if (a.hi() > b.lo()) return std::nullopt;
    return Segment<T>{a.hi(), b.lo()};
  }
  static Segment<double> approx(const Segment<T>& s) { return s; }
  static Segment<double> approx_inner(const Segment<T>& s) { return s; }
};

template <class Ops>
class Classifier {
 public:
  using T = typename Ops::T;
  using Union = IntervalUnion<T>;

  Classifier(const ProjectionGraph& g, Ops ops) : g_(g), ops_(ops), n_(g.size()) {}

  std::vector<Classification> run(int depth, bool exact) {
    std::vector<Union> outer(n_);
    std::vector<std::vector<std::size_t>> trace(n_);
    std::vector<std::vector<bool>> nested(n_);
    for (std::size_t v = 0; v < n_; ++v) {
      outer[v] = Union({ops_.hull(v)});
      trace[v].push_back(1);
    }
    int m = 0;
    bool truncated = false;
    std::vector<bool> cert = certify(outer);
    for (;;) {
      const bool all_cert = std::all_of(cert.begin(), cert.end(), [](bool b) { return b; });
      if (exact && all_cert) break;
      if (!exact && all_stable(trace, nested)) break;
      if (m == depth) break;
      std::vector<Union> next = step(outer, outer, false);
      if (std::any_of(next.begin(), next.end(), [](const Union& u) { return u.size() > kComponentCap; })) {
        truncated = true;
        break;
      }
      for (std::size_t v = 0; v < n_; ++v) {
        nested[v].push_back(outer[v].covers(next[v]));
        trace[v].push_back(next[v].size());
      }
      outer = std::move(next);
      ++m;
      cert = certify(outer);
    }

    // Inner approximation seeded by the certified vertices.
    std::vector<Union> inner(n_);
    for (std::size_t v = 0; v < n_; ++v) {
      if (cert[v]) inner[v] = outer[v];
    }
    for (int j = 0; j < m; ++j) {
      std::vector<Union> next = step(inner, inner, true);
      if (next == inner) break;
      if (std::any_of(next.begin(), next.end(), [](const Union& u) { return u.size() > kComponentCap; })) break;
      inner = std::move(next);
    }

    std::vector<Classification> out(n_);
    for (std::size_t v = 0; v < n_; ++v) {
      Classification& c = out[v];
      c.vertex = v;
      c.direction = g_.vertices[v];
      c.depth = m;
      c.exact = exact;
      c.truncated = truncated;
      c.count_trace = trace[v];
      std::size_t resolved = 0;
      for (const auto& s : outer[v].components()) {
        c.components.push_back(Ops::approx(s));
        if constexpr (std::is_same_v<T, QSqrt2>) c.exact_components.push_back(s);
        const Segment<T>* in = inner[v].find(s);
        const bool r = in && !(s.lo < in->lo) && !(in->hi < s.hi);
        c.resolved.push_back(r);
        resolved += r;
      }
      for (const auto& s : inner[v].components()) {
        const Segment<double> a = Ops::approx_inner(s);
        if (a.lo <= a.hi) c.inner.push_back(a);
        if constexpr (std::is_same_v<T, QSqrt2>) c.exact_inner.push_back(s);
      }
      const std::size_t total = outer[v].size();
      c.certified = resolved == total;
      c.residual_count = total - resolved;
      if (c.certified) {
        c.verdict = Verdict::FiniteUnion;
        c.count = total;
      } else if (stable(trace[v], nested[v])) {
        c.verdict = Verdict::FiniteUnion;
        c.count = total;
      } else if (resolved > 0) {
        c.verdict = Verdict::FiniteUnion;
        c.count = resolved;
      } else if (total >= 2) {
        c.verdict = Verdict::GapDetected;
        c.count = total;
      } else {
        c.verdict = Verdict::Undetermined;
      }
    }
    return out;
  }

 private:
  static bool stable(const std::vector<std::size_t>& trace, const std::vector<bool>& nested) {
    const std::size_t k = trace.size();
    if (k < 3 || trace[k - 1] != trace[k - 2] || trace[k - 2] != trace[k - 3]) return false;
    return nested[nested.size() - 1] && nested[nested.size() - 2];
  }

  bool all_stable(const std::vector<std::vector<std::size_t>>& trace,
                  const std::vector<std::vector<bool>>& nested) const {
    for (std::size_t v = 0; v < n_; ++v) {
      if (!stable(trace[v], nested[v])) return false;
    }
    return true;
  }

  // One refinement step: next_v = union of edge images of sets[to]. With
  // `keep`, the previous content of base[v] is kept as well.
  std::vector<Union> step(const std::vector<Union>& sets, const std::vector<Union>& base, bool inner) const {
    std::vector<Union> next(n_);
    for (std::size_t v = 0; v < n_; ++v) {
      std::vector<Segment<T>> parts;
      if (inner) parts = base[v].components();
      for (std::size_t i = 0; i < g_.maps; ++i) {
        const LineMap& e = g_.edge(v, i);
        for (const auto& s : sets[e.to].components()) {
          if (inner) {
            if (auto im = ops_.inner(e, s)) parts.push_back(std::move(*im));
          } else {
            parts.push_back(ops_.outer(e, s));
          }
        }
      }
      next[v] = Union(std::move(parts));
    }
    return next;
  }

  // Greatest vertex set S with outer_v covered by the images along edges into S.
  // For v in S the outer approximation equals the projection.
  std::vector<bool> certify(const std::vector<Union>& outer) const {
    std::vector<bool> in(n_, true);
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t v = 0; v < n_; ++v) {
        if (!in[v]) continue;
        std::vector<Segment<T>> parts;
        for (std::size_t i = 0; i < g_.maps; ++i) {
          const LineMap& e = g_.edge(v, i);
          if (!in[e.to]) continue;
          for (const auto& s : outer[e.to].components()) {
            if (auto im = ops_.inner(e, s)) parts.push_back(std::move(*im));
          }
        }
        if (!Union(std::move(parts)).covers(outer[v])) {
          in[v] = false;
          changed = true;
        }
      }
    }
    return in;
  }

  const ProjectionGraph& g_;
  Ops ops_;
  std::size_t n_;
};

}  // namespace

std::vector<Segment<double>> Classification::gaps() const {
  std::vector<Segment<double>> out;
  for (std::size_t i = 1; i < components.size(); ++i) out.push_back({components[i - 1].hi, components[i].lo});
  return out;
}

std::size_t Classification::resolved_count() const {
  return static_cast<std::size_t>(std::count(resolved.begin(), resolved.end(), true));
}

std::vector<Classification> classify_all(const ProjectionGraph& graph, int depth) {
  if (depth < 0 || depth > kMaxClassifyDepth) {
    throw Error(ErrorKind::DepthCapExceeded, "classification depth must lie in [0, 40]");
  }
  if (graph.exact) return Classifier<ExactOps>(graph, ExactOps{graph}).run(depth, true);
  return Classifier<CertifiedOps>(graph, CertifiedOps{graph}).run(depth, false);
}

Classification classify_projection(const ProjectionGraph& graph, std::size_t vertex, int depth) {
  if (vertex >= graph.size()) throw Error(ErrorKind::Validation, "vertex out of range");
  return classify_all(graph, depth)[vertex];
}

nlohmann::json to_json(const Classification& c) {
  nlohmann::json j;
  j["vertex"] = c.vertex;
  j["direction"] = c.direction.str();
  j["verdict"] = to_string(c.verdict);
  j["count"] = c.count;
  j["depth"] = c.depth;
  j["residual_count"] = c.residual_count;
  j["certified"] = c.certified;
  j["exact"] = c.exact;
  if (c.truncated) j["truncated"] = true;
  auto& comps = j["components"] = nlohmann::json::array();
  for (const auto& s : c.components) comps.push_back({s.lo, s.hi});
  if (!c.exact_components.empty()) {
    auto& ex = j["exact_components"] = nlohmann::json::array();
    for (const auto& s : c.exact_components) ex.push_back({s.lo.str(), s.hi.str()});
  }
  j["resolved"] = c.resolved;
  j["count_trace"] = c.count_trace;
  return j;
}

ProjectedHull projected_hull(const ProjectionGraph& graph, const Similarity& f) {
  const SupportTable& table = graph.support;
  const Direction normal = graph.theta.perpendicular();
  const OrthoElement inv = f.ortho.inverse();
  const std::size_t up = table.index(inv * quarter_turn());
  const std::size_t down = table.index(inv * three_quarter_turn());
  const Interval r = Interval::from(f.ratio);
  const Interval off = dot(f.translation, normal.vector());
  ProjectedHull h{off - r * table.value(down), off + r * table.value(up), std::nullopt, std::nullopt};
  if (table.exact() && f.exact_translation) {
    if (const auto ne = normal.exact_vector()) {
      const QSqrt2 eoff = dot(*f.exact_translation, *ne);
      h.exact_lo = eoff - QSqrt2(f.ratio) * *table.exact_value(down);
      h.exact_hi = eoff + QSqrt2(f.ratio) * *table.exact_value(up);
    }
  }
  return h;
}

PenetrableCover penetrable_cover(const IFSystem& ifs, const ProjectionGraph& graph, const Classification& root,
                                 const CylinderCover& cover) {
  (void)ifs;
  if (root.verdict == Verdict::Undetermined) {
    throw Error(ErrorKind::UnclassifiedProjection, "projection along " + graph.theta.str() + " is undetermined");
  }
  PenetrableCover pen;
  pen.direction = graph.theta;
  pen.scale = cover.scale;
  pen.total = cover.size();
  const IntervalUnion<QSqrt2> exact_inner(root.exact_inner);
  const IntervalUnion<double> inner(root.inner);
  for (const CoverEntry& entry : cover.entries) {
    const ProjectedHull h = projected_hull(graph, entry.map);
    bool interior = false;
    if (h.exact_lo && !exact_inner.empty()) {
      const Segment<QSqrt2>* c = exact_inner.find({*h.exact_lo, *h.exact_hi});
      interior = c && c->lo < *h.exact_lo && *h.exact_hi < c->hi;
    } else if (!inner.empty()) {
      const Segment<double>* c = inner.find({h.lo.lo(), h.hi.hi()});
      interior = c && c->lo < h.lo.lo() && h.hi.hi() < c->hi;
    }
    if (!interior) pen.entries.push_back(entry);
  }
  return pen;
}

PenetrableCover penetrable_cover(const IFSystem& ifs, const Direction& theta, const RotationGroup& group,
                                 double delta, int depth) {
  const ProjectionGraph graph = build_projection_graph(ifs, theta, group);
  const Classification root = classify_all(graph, depth).front();
  return penetrable_cover(ifs, graph, root, cover(ifs, delta));
}

}  // namespace visidim
