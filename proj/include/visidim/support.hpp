#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "visidim/ifs.hpp"

namespace visidim {

/// Support function h(l) = max_{x in K} <x, l> on the orbit of a base
/// direction under the group generated by G(F) and the quarter turn.
///
/// Values solve h(l) = max_i r_i h(O_i^{-1} l) + <t_i, l>. When every map is
/// exact and the group lies in the pi/4 lattice the system is solved exactly
/// by policy iteration; otherwise by interval value iteration from the
/// enclosing-ball bounds.
class SupportTable {
 public:
  static SupportTable build(const IFSystem& ifs, const Direction& base);

  const Direction& base() const { return base_; }
  /// closure(G(F) + rot(pi/2)); directions are g(base) for g in this group.
  const RotationGroup& group() const { return group_; }
  bool exact() const { return exact_; }

  /// h(g(base)) for the element with index g.
  const Interval& value(std::size_t g) const { return values_[slot_[g]]; }
  const std::optional<QSqrt2>& exact_value(std::size_t g) const { return exact_values_[slot_[g]]; }
  Interval value(const OrthoElement& g) const { return value(index(g)); }

  /// Index of g in group(); throws OrbitMismatch when g is not in the group.
  std::size_t index(const OrthoElement& g) const;
  std::size_t slots() const { return values_.size(); }
  std::size_t slot(std::size_t g) const { return slot_[g]; }

 private:
  Direction base_;
  RotationGroup group_;
  bool exact_ = false;
  std::vector<std::size_t> slot_;  // group element -> distinct direction
  std::vector<Interval> values_;
  std::vector<std::optional<QSqrt2>> exact_values_;
};

}  // namespace visidim
