#include "visidim/ifs.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <random>
#include <sstream>

#include <json.hpp>

#include "visidim/error.hpp"

namespace visidim {

std::string to_string(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += '.';
    out += std::to_string(w[i] + 1);
  }
  return out.empty() ? "()" : out;
}

std::string_view to_string(OpenSetStatus s) {
  switch (s) {
    case OpenSetStatus::NotDeclared: return "not declared";
    case OpenSetStatus::Verified: return "verified";
    case OpenSetStatus::Unverified: return "declared, unverified";
  }
  return "?";
}

namespace {

std::vector<OrthoElement> orthogonal_parts(const std::vector<Similarity>& maps) {
  std::vector<OrthoElement> out;
  out.reserve(maps.size());
  for (const auto& m : maps) out.push_back(m.ortho);
  return out;
}

bool interiors_disjoint(const ExactBox& a, const ExactBox& b) {
  return a.hi.x <= b.lo.x || b.hi.x <= a.lo.x || a.hi.y <= b.lo.y || b.hi.y <= a.lo.y;
}

bool contained(const ExactBox& inner, const ExactBox& outer) {
  return outer.lo.x <= inner.lo.x && inner.hi.x <= outer.hi.x && outer.lo.y <= inner.lo.y &&
         inner.hi.y <= outer.hi.y;
}

bool interiors_disjoint(const Box2& a, const Box2& b) {
  return a.x.hi() <= b.x.lo() || b.x.hi() <= a.x.lo() || a.y.hi() <= b.y.lo() || b.y.hi() <= a.y.lo();
}

// Sufficient certificate: every image box lies in the closure of U and the
// image boxes have pairwise disjoint interiors. An axis-aligned exact image
// is the box itself, so overlapping interiors there are a genuine violation.
OpenSetStatus check_open_set(const std::vector<Similarity>& maps, const ExactBox& u) {
  const std::size_t n = maps.size();
  std::vector<std::optional<ExactBox>> exact(n);
  std::vector<Box2> approx(n);
  for (std::size_t i = 0; i < n; ++i) {
    exact[i] = image_box(maps[i], u);
    approx[i] = image_box(maps[i], u.enclosure());
  }
  bool verified = true;
  const Box2 ue = u.enclosure();
  for (std::size_t i = 0; i < n; ++i) {
    if (exact[i] ? !contained(*exact[i], u) : !ue.contains(approx[i])) verified = false;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (exact[i] && exact[j]) {
        if (interiors_disjoint(*exact[i], *exact[j])) continue;
        if (maps[i].ortho.axis_aligned() && maps[j].ortho.axis_aligned()) {
          throw Error(ErrorKind::OpenSetViolation,
                      "images of maps " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " overlap");
        }
        verified = false;
      } else if (!interiors_disjoint(approx[i], approx[j])) {
        verified = false;
      }
    }
  }
  return verified ? OpenSetStatus::Verified : OpenSetStatus::Unverified;
}

}  // namespace

IFSystem::IFSystem(std::string name, std::vector<Similarity> maps, std::optional<ExactBox> open_set,
                   std::string notes)
    : name_(std::move(name)), maps_(std::move(maps)), open_set_(std::move(open_set)), notes_(std::move(notes)) {
  if (maps_.empty()) throw Error(ErrorKind::EmptySystem, "an IFS needs at least one map");
  if (maps_.size() > 0xFFFF) throw Error(ErrorKind::Validation, "too many maps");
  for (std::size_t i = 0; i < maps_.size(); ++i) {
    const Rational& r = maps_[i].ratio;
    if (r <= 0 || r >= 1) {
      throw Error(ErrorKind::Validation, "map " + std::to_string(i + 1) + ": ratio " + to_string(r) +
                                             " not in (0,1)");
    }
  }
  ball_ = enclosing_ball(maps_);
  const auto parts = orthogonal_parts(maps_);
  group_ = RotationGroup::closure(parts);
  if (open_set_) osc_ = check_open_set(maps_, *open_set_);
}

Rational IFSystem::min_ratio() const {
  Rational r = maps_.front().ratio;
  for (const auto& m : maps_) r = std::min(r, m.ratio);
  return r;
}

Rational IFSystem::max_ratio() const {
  Rational r = maps_.front().ratio;
  for (const auto& m : maps_) r = std::max(r, m.ratio);
  return r;
}

bool IFSystem::exact() const {
  return group_.quarter_exact() &&
         std::all_of(maps_.begin(), maps_.end(), [](const Similarity& s) { return s.is_exact(); });
}

namespace {

using nlohmann::json;

Rational rational_field(const json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key)) throw Error(ErrorKind::Parse, where + ": missing '" + key + "'");
  const json& v = obj.at(key);
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long>());
  throw Error(ErrorKind::Parse, where + ": '" + key + "' must be a \"p/q\" string");
}

Vec2<Rational> rational_pair(const json& v, const std::string& where) {
  if (!v.is_array() || v.size() != 2) throw Error(ErrorKind::Parse, where + ": expected a pair");
  auto one = [&](const json& e) {
    if (e.is_string()) return parse_rational(e.get<std::string>());
    if (e.is_number_integer()) return Rational(e.get<long>());
    throw Error(ErrorKind::Parse, where + ": rationals must be \"p/q\" strings");
  };
  return {one(v[0]), one(v[1])};
}

}  // namespace

IFSystem parse_spec(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
  if (!doc.is_object()) throw Error(ErrorKind::Parse, "spec must be a JSON object");
  const std::string name = doc.value("name", std::string("unnamed"));
  if (!doc.contains("maps") || !doc["maps"].is_array()) throw Error(ErrorKind::Parse, "missing 'maps' array");
  std::vector<Similarity> maps;
  std::size_t index = 0;
  for (const json& m : doc["maps"]) {
    const std::string where = "map " + std::to_string(++index);
    if (!m.is_object()) throw Error(ErrorKind::Parse, where + ": must be an object");
    const Rational ratio = rational_field(m, "ratio", where);
    if (ratio <= 0 || ratio >= 1) {
      throw Error(ErrorKind::Validation, where + ": ratio " + to_string(ratio) + " not in (0,1)");
    }
    const Rational angle = m.contains("angle_pi") ? rational_field(m, "angle_pi", where) : Rational(0);
    const bool reflect = m.value("reflect", false);
    const OrthoElement ortho(angle, reflect);
    if (m.contains("translate") && m.contains("fixed_point")) {
      throw Error(ErrorKind::Validation, where + ": give either 'translate' or 'fixed_point'");
    }
    if (m.contains("fixed_point")) {
      maps.push_back(Similarity::with_fixed_point(ratio, ortho, rational_pair(m["fixed_point"], where)));
    } else {
      const Vec2<Rational> t = m.contains("translate") ? rational_pair(m["translate"], where)
                                                       : Vec2<Rational>{Rational(0), Rational(0)};
      maps.push_back(Similarity::make(ratio, ortho, t));
    }
  }
  std::optional<ExactBox> open_set;
  if (doc.contains("open_set")) {
    const json& u = doc["open_set"];
    if (!u.is_object() || !u.contains("x") || !u.contains("y")) {
      throw Error(ErrorKind::Parse, "open_set needs 'x' and 'y'");
    }
    const Vec2<Rational> x = rational_pair(u["x"], "open_set.x");
    const Vec2<Rational> y = rational_pair(u["y"], "open_set.y");
    if (x.x >= x.y || y.x >= y.y) throw Error(ErrorKind::Validation, "open_set is empty");
    open_set = ExactBox{{QSqrt2(x.x), QSqrt2(y.x)}, {QSqrt2(x.y), QSqrt2(y.y)}};
  }
  std::string notes;
  if (doc.contains("notes") && doc["notes"].is_string()) notes = doc["notes"].get<std::string>();
  return IFSystem(name, std::move(maps), std::move(open_set), std::move(notes));
}

IFSystem load_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot read " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_spec(ss.str());
}

namespace {

struct CoverBuilder {
  const IFSystem& ifs;
  const Rational& relative;
  std::size_t depth_cap;
  Box2 base_box;
  std::vector<CoverEntry>& out;
  Word word;

  void visit(const Similarity& f, const Rational& ratio) {
    if (ratio <= relative) {
      out.push_back({word, f, image_box(f, base_box)});
      return;
    }
    if (word.size() >= depth_cap) {
      throw Error(ErrorKind::DepthCapExceeded, "cover needs words longer than " + std::to_string(depth_cap));
    }
    for (std::size_t i = 0; i < ifs.size(); ++i) {
      word.push_back(static_cast<std::uint16_t>(i));
      visit(compose(f, ifs[i]), Rational(ratio * ifs[i].ratio));
      word.pop_back();
    }
  }
};

}  // namespace

CylinderCover cover_relative(const IFSystem& ifs, const Rational& relative, std::size_t depth_cap) {
  if (relative <= 0) throw Error(ErrorKind::Validation, "scale must be positive");
  CylinderCover result;
  result.relative_scale = relative;
  result.scale = (Interval::from(relative) * Interval(ifs.diameter())).mid();
  CoverBuilder builder{ifs, relative, depth_cap, ifs.ball().bounding_box(), result.entries, {}};
  builder.visit(Similarity::identity(), Rational(1));
  return result;
}

// delta is usually produced as (ratio product) * diam in binary64; the slack
// keeps such exact ties on the coarse side.
Rational relative_scale(const IFSystem& ifs, double delta) {
  if (!(delta > 0)) throw Error(ErrorKind::Validation, "scale must be positive");
  if (ifs.diameter() == 0.0) return Rational(1);
  return Rational(from_double(delta) / from_double(ifs.diameter()) * Rational(1099511627777, 1099511627776));
}

CylinderCover cover(const IFSystem& ifs, double delta, std::size_t depth_cap) {
  if (!(delta > 0)) throw Error(ErrorKind::Validation, "scale must be positive");
  const double diam = ifs.diameter();
  if (diam == 0.0) {
    // Degenerate single-point attractor: the empty word already has diameter 0.
    CylinderCover result;
    result.scale = delta;
    result.relative_scale = 1;
    result.entries.push_back({{}, Similarity::identity(), ifs.ball().bounding_box()});
    return result;
  }
  CylinderCover result = cover_relative(ifs, relative_scale(ifs, delta), depth_cap);
  result.scale = delta;
  return result;
}

std::size_t cube_multiplicity(const CylinderCover& cover, double side) {
  if (!(side > 0)) throw Error(ErrorKind::Validation, "cube side must be positive");
  std::map<std::pair<std::int64_t, std::int64_t>, std::size_t> hits;
  std::size_t best = 0;
  for (const auto& e : cover.entries) {
    const auto x0 = static_cast<std::int64_t>(std::floor(e.box.x.lo() / side));
    const auto x1 = static_cast<std::int64_t>(std::floor(e.box.x.hi() / side));
    const auto y0 = static_cast<std::int64_t>(std::floor(e.box.y.lo() / side));
    const auto y1 = static_cast<std::int64_t>(std::floor(e.box.y.hi() / side));
    for (auto x = x0; x <= x1; ++x) {
      for (auto y = y0; y <= y1; ++y) best = std::max(best, ++hits[{x, y}]);
    }
  }
  return best;
}

std::vector<Vec2<double>> chaos_game(const IFSystem& ifs, std::size_t count, std::uint64_t seed,
                                     std::size_t word_length) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, ifs.size() - 1);
  const Vec2<Interval> start = ifs[0].fixed_point();
  std::vector<Vec2<double>> points;
  points.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    Vec2<Interval> p = start;
    // Apply the innermost map first so the word reads f_{u1} o ... o f_{un}.
    for (std::size_t j = 0; j < word_length; ++j) p = ifs[pick(rng)].apply(p);
    points.push_back({p.x.mid(), p.y.mid()});
  }
  return points;
}

}  // namespace visidim
