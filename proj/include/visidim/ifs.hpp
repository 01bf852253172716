#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "visidim/rotation_group.hpp"
#include "visidim/similarity.hpp"

namespace visidim {

/// Finite word over the map alphabet; letters index IFSystem::maps().
using Word = std::vector<std::uint16_t>;

std::string to_string(const Word& w);

enum class OpenSetStatus { NotDeclared, Verified, Unverified };
std::string_view to_string(OpenSetStatus s);

/// Iterated function system of planar similarities with rational angles.
class IFSystem {
 public:
  IFSystem(std::string name, std::vector<Similarity> maps, std::optional<ExactBox> open_set = std::nullopt,
           std::string notes = {});

  const std::string& name() const { return name_; }
  const std::vector<Similarity>& maps() const { return maps_; }
  std::size_t size() const { return maps_.size(); }
  const Similarity& operator[](std::size_t i) const { return maps_[i]; }
  const std::optional<ExactBox>& declared_open_set() const { return open_set_; }
  OpenSetStatus open_set_status() const { return osc_; }
  const std::string& notes() const { return notes_; }

  const Ball& ball() const { return ball_; }
  /// 2R of the enclosing ball: an over-estimate of diam(K).
  double diameter() const { return ball_.diameter(); }
  const RotationGroup& group() const { return group_; }
  Rational min_ratio() const;
  Rational max_ratio() const;

  /// All maps exact and the group inside the pi/4 lattice.
  bool exact() const;

 private:
  std::string name_;
  std::vector<Similarity> maps_;
  std::optional<ExactBox> open_set_;
  std::string notes_;
  OpenSetStatus osc_ = OpenSetStatus::NotDeclared;
  Ball ball_;
  RotationGroup group_;
};

/// Parses a JSON spec document:
///   {"name": "...", "maps": [{"ratio": "p/q", "angle_pi": "p/q", "reflect": false,
///    "translate": ["p/q", "p/q"]}, ...], "open_set": {"x": [..], "y": [..]}, "notes": "..."}
/// A map may give "fixed_point": ["p/q", "p/q"] instead of "translate".
/// Omitted angle_pi, reflect and translate default to 0, false and (0, 0).
IFSystem parse_spec(std::string_view text);
IFSystem load_spec(const std::filesystem::path& path);

inline constexpr std::size_t kDefaultDepthCap = 64;

struct CoverEntry {
  Word word;
  Similarity map;
  Box2 box;
};

/// Maximal antichain of cylinders at a scale: every word has
/// ratio * diam <= scale while its parent has ratio * diam > scale.
struct CylinderCover {
  std::vector<CoverEntry> entries;
  double scale = 0.0;
  Rational relative_scale;  ///< scale / diam(K) as used by the refinement test

  std::size_t size() const { return entries.size(); }
};

/// delta / diam(K) as an exact threshold on ratio(u). Near-ties round to the
/// coarse side (relative slack 2^-40).
Rational relative_scale(const IFSystem& ifs, double delta);

/// Depth-first refinement at absolute scale delta.
CylinderCover cover(const IFSystem& ifs, double delta, std::size_t depth_cap = kDefaultDepthCap);
/// Same, with the threshold given exactly relative to diam(K): expand u while ratio(u) > relative.
CylinderCover cover_relative(const IFSystem& ifs, const Rational& relative,
                             std::size_t depth_cap = kDefaultDepthCap);

/// Largest number of cover boxes meeting one cell of the grid of side
/// `side` anchored at the origin: an empirical stand-in for the bounded
/// multiplicity constant of open-set covers.
std::size_t cube_multiplicity(const CylinderCover& cover, double side);

/// Points of K by the chaos game (random words applied to a fixed point).
std::vector<Vec2<double>> chaos_game(const IFSystem& ifs, std::size_t count, std::uint64_t seed,
                                     std::size_t word_length = 48);

}  // namespace visidim
