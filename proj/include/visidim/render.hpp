#pragma once

#include <filesystem>
#include <string>

#include "visidim/ifs.hpp"
#include "visidim/rotation_group.hpp"
#include "visidim/rational.hpp"

namespace visidim {

enum class RenderKind { Attractor, Envelope, Projection };
RenderKind parse_render_kind(std::string_view s);

struct RenderOptions {
  RenderKind kind = RenderKind::Attractor;
  Rational delta{1, 27};  ///< relative to diam(K) for attractors, absolute otherwise
  Direction theta = Direction::from_vector(1, 0);
};

/// SVG of the cylinders at relative scale delta: every f_u applied to the
/// declared open set (or the ball's bounding box).
std::string attractor_svg(const IFSystem& ifs, const Rational& relative);
/// SVG of the projection onto L_theta, refined to depth ~ log(1/delta)/log(1/r_max).
std::string projection_svg(const IFSystem& ifs, const Direction& theta, const Rational& delta);
/// P5 bitmap with one black cell per column at the lower envelope.
std::string envelope_pgm(const IFSystem& ifs, const Direction& theta, const Rational& delta);

/// Writes the artifact; throws Io on failure.
void render(const IFSystem& ifs, const RenderOptions& opt, const std::filesystem::path& path);

}  // namespace visidim
