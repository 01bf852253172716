#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "visidim/ifs.hpp"
#include "visidim/support.hpp"

namespace visidim {

/// Coordinates on L_d are p_d(x) = <x, d_perp>, d_perp the quarter turn of d.
/// Direction vectors are not normalized, so coordinates carry the factor |d|.

/// x -> ratio * sign * x + offset on a projection line.
struct LineMap {
  std::size_t from = 0;
  std::size_t to = 0;
  std::size_t source = 0;  ///< index of the IFS map
  Rational ratio;
  int sign = 1;
  Interval offset;
  std::optional<QSqrt2> exact_offset;
};

/// Directed multigraph on the orbit of theta: vertex v carries P_{d_v}(K) and
/// the edge for map i goes to the unique w with O_i(d_w) = d_v.
struct ProjectionGraph {
  Direction theta;
  RotationGroup group;
  std::vector<Direction> vertices;
  std::vector<std::size_t> vertex_of;  ///< group element g -> vertex of g(theta)
  std::vector<LineMap> edges;          ///< edges[v * maps + i]
  std::size_t maps = 0;
  SupportTable support;                ///< support function with base theta
  std::vector<std::size_t> element;    ///< representative group element per vertex
  bool exact = false;

  std::size_t size() const { return vertices.size(); }
  const LineMap& edge(std::size_t v, std::size_t i) const { return edges[v * maps + i]; }
  /// Hull [lo, hi] of P_{d_v}(K).
  Interval hull_lo(std::size_t v) const;
  Interval hull_hi(std::size_t v) const;
  std::optional<QSqrt2> exact_hull_lo(std::size_t v) const;
  std::optional<QSqrt2> exact_hull_hi(std::size_t v) const;
};

ProjectionGraph build_projection_graph(const IFSystem& ifs, const Direction& theta, const RotationGroup& group);
inline ProjectionGraph build_projection_graph(const IFSystem& ifs, const Direction& theta) {
  return build_projection_graph(ifs, theta, ifs.group());
}

template <class T>
struct Segment {
  T lo;
  T hi;
  friend bool operator==(const Segment&, const Segment&) = default;
};

/// Sorted union of closed intervals; overlapping or touching parts merge.
template <class T>
class IntervalUnion {
 public:
  IntervalUnion() = default;
  explicit IntervalUnion(std::vector<Segment<T>> parts) : parts_(std::move(parts)) { normalize(); }

  const std::vector<Segment<T>>& components() const { return parts_; }
  std::size_t size() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }

  /// Component containing s, if any.
  const Segment<T>* find(const Segment<T>& s) const {
    auto it = std::upper_bound(parts_.begin(), parts_.end(), s.lo,
                               [](const T& v, const Segment<T>& p) { return v < p.lo; });
    if (it == parts_.begin()) return nullptr;
    --it;
    return s.hi <= it->hi ? &*it : nullptr;
  }
  bool covers(const Segment<T>& s) const { return find(s) != nullptr; }
  bool covers(const IntervalUnion& o) const {
    return std::all_of(o.parts_.begin(), o.parts_.end(), [&](const Segment<T>& s) { return covers(s); });
  }
  std::vector<Segment<T>> gaps() const {
    std::vector<Segment<T>> out;
    for (std::size_t i = 1; i < parts_.size(); ++i) out.push_back({parts_[i - 1].hi, parts_[i].lo});
    return out;
  }
  friend bool operator==(const IntervalUnion&, const IntervalUnion&) = default;

 private:
  void normalize() {
    std::sort(parts_.begin(), parts_.end(), [](const Segment<T>& a, const Segment<T>& b) { return a.lo < b.lo; });
    std::vector<Segment<T>> merged;
    merged.reserve(parts_.size());
    for (auto& p : parts_) {
      if (!merged.empty() && !(merged.back().hi < p.lo)) {
        if (merged.back().hi < p.hi) merged.back().hi = std::move(p.hi);
      } else {
        merged.push_back(std::move(p));
      }
    }
    parts_ = std::move(merged);
  }

  std::vector<Segment<T>> parts_;
};

enum class Verdict { FiniteUnion, GapDetected, Undetermined };
std::string_view to_string(Verdict v);

inline constexpr int kMaxClassifyDepth = 40;
inline constexpr std::size_t kComponentCap = std::size_t{1} << 16;

/// Interval structure of P_{d_v}(K) at a finite depth.
///
/// `components` are the outer approximation (a superset of the projection).
/// A component is resolved when the inner approximation covers it; resolved
/// components are components of the true projection. `count` is the number
/// of components for FiniteUnion and `residual_count` the unresolved ones.
struct Classification {
  std::size_t vertex = 0;
  Direction direction;
  Verdict verdict = Verdict::Undetermined;
  std::size_t count = 0;
  std::size_t residual_count = 0;
  int depth = 0;
  bool exact = false;
  bool certified = false;  ///< every component resolved
  bool truncated = false;  ///< component cap reached before the requested depth
  std::vector<Segment<double>> components;
  std::vector<Segment<QSqrt2>> exact_components;
  std::vector<bool> resolved;
  std::vector<std::size_t> count_trace;  ///< component count per depth
  /// Inner approximation: subsets of the projection (endpoints rounded inward).
  std::vector<Segment<double>> inner;
  std::vector<Segment<QSqrt2>> exact_inner;

  std::vector<Segment<double>> gaps() const;
  std::size_t resolved_count() const;
};

/// Classifies every vertex; iterates hull refinement to at most `depth`,
/// stopping early once every vertex is certified (exact path) or its count
/// has been stable for three depths.
std::vector<Classification> classify_all(const ProjectionGraph& graph, int depth);
Classification classify_projection(const ProjectionGraph& graph, std::size_t vertex, int depth);

nlohmann::json to_json(const Classification& c);

struct PenetrableCover {
  Direction direction;
  double scale = 0.0;
  std::vector<CoverEntry> entries;  ///< survivors
  std::size_t total = 0;            ///< N_K: size of the full cover

  std::size_t size() const { return entries.size(); }
};

/// Cover of the penetrable part: drops every cylinder of cover(delta) whose
/// projected hull lies strictly inside a resolved component of P_theta(K).
PenetrableCover penetrable_cover(const IFSystem& ifs, const ProjectionGraph& graph,
                                 const Classification& root, const CylinderCover& cover);
PenetrableCover penetrable_cover(const IFSystem& ifs, const Direction& theta, const RotationGroup& group,
                                 double delta, int depth = 12);

/// Hull of P_theta(f(K)) for a composed map f, exact when possible.
struct ProjectedHull {
  Interval lo, hi;
  std::optional<QSqrt2> exact_lo, exact_hi;
};
ProjectedHull projected_hull(const ProjectionGraph& graph, const Similarity& f);

}  // namespace visidim
