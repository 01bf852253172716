#include "visidim/support.hpp"

#include <algorithm>
#include <cmath>

#include "visidim/error.hpp"

namespace visidim {

namespace {

// successor[s][i]: slot of O_i^{-1} l_s. offset[s][i]: <t_i, l_s>.
struct Bellman {
  std::size_t n = 0;
  std::size_t maps = 0;
  std::vector<std::size_t> successor;
  std::vector<Rational> ratio;
  std::vector<Interval> offset;
  std::vector<std::optional<QSqrt2>> exact_offset;

  std::size_t next(std::size_t s, std::size_t i) const { return successor[s * maps + i]; }
};

std::vector<std::size_t> greedy_policy(const Bellman& b, const std::vector<double>& h) {
  std::vector<std::size_t> policy(b.n, 0);
  for (std::size_t s = 0; s < b.n; ++s) {
    double best = -INFINITY;
    for (std::size_t i = 0; i < b.maps; ++i) {
      const double v = b.ratio[i].get_d() * h[b.next(s, i)] + b.offset[s * b.maps + i].mid();
      if (v > best) {
        best = v;
        policy[s] = i;
      }
    }
  }
  return policy;
}

// Values of a fixed policy: every slot has one successor, so the policy graph
// is functional. Each cycle is solved in closed form, then tails by
// back-substitution.
std::vector<QSqrt2> evaluate_policy(const Bellman& b, const std::vector<std::size_t>& policy) {
  std::vector<QSqrt2> h(b.n);
  std::vector<int> state(b.n, 0);  // 0 new, 1 on path, 2 solved
  for (std::size_t start = 0; start < b.n; ++start) {
    if (state[start] == 2) continue;
    std::vector<std::size_t> path;
    std::size_t s = start;
    while (state[s] == 0) {
      state[s] = 1;
      path.push_back(s);
      s = b.next(s, policy[s]);
    }
    std::size_t stop = path.size();
    if (state[s] == 1) {
      const auto first = static_cast<std::size_t>(std::find(path.begin(), path.end(), s) - path.begin());
      // h(c0) = A + R h(c0) around the cycle.
      QSqrt2 acc;
      Rational prod(1);
      for (std::size_t k = first; k < path.size(); ++k) {
        const std::size_t c = path[k];
        const std::size_t i = policy[c];
        acc += QSqrt2(prod) * *b.exact_offset[c * b.maps + i];
        prod *= b.ratio[i];
      }
      h[path[first]] = acc / QSqrt2(Rational(1 - prod));
      state[path[first]] = 2;
      for (std::size_t k = path.size(); k-- > first + 1;) {
        const std::size_t c = path[k];
        const std::size_t i = policy[c];
        h[c] = QSqrt2(b.ratio[i]) * h[b.next(c, i)] + *b.exact_offset[c * b.maps + i];
        state[c] = 2;
      }
      stop = first;
    }
    for (std::size_t k = stop; k-- > 0;) {
      const std::size_t c = path[k];
      const std::size_t i = policy[c];
      h[c] = QSqrt2(b.ratio[i]) * h[b.next(c, i)] + *b.exact_offset[c * b.maps + i];
      state[c] = 2;
    }
  }
  return h;
}

std::vector<QSqrt2> solve_exact(const Bellman& b, const std::vector<double>& warm) {
  std::vector<std::size_t> policy = greedy_policy(b, warm);
  for (;;) {
    std::vector<QSqrt2> h = evaluate_policy(b, policy);
    bool improved = false;
    for (std::size_t s = 0; s < b.n; ++s) {
      QSqrt2 current = QSqrt2(b.ratio[policy[s]]) * h[b.next(s, policy[s])] + *b.exact_offset[s * b.maps + policy[s]];
      for (std::size_t i = 0; i < b.maps; ++i) {
        if (i == policy[s]) continue;
        QSqrt2 v = QSqrt2(b.ratio[i]) * h[b.next(s, i)] + *b.exact_offset[s * b.maps + i];
        if (v > current) {
          current = std::move(v);
          policy[s] = i;
          improved = true;
        }
      }
    }
    if (!improved) return h;
  }
}

}  // namespace

std::size_t SupportTable::index(const OrthoElement& g) const {
  const auto i = group_.index_of(g);
  if (!i) throw Error(ErrorKind::OrbitMismatch, "element " + g.str() + " outside the support group");
  return *i;
}

SupportTable SupportTable::build(const IFSystem& ifs, const Direction& base) {
  SupportTable t;
  t.base_ = base;
  std::vector<OrthoElement> gens;
  for (const auto& m : ifs.maps()) gens.push_back(m.ortho);
  gens.push_back(OrthoElement::rotation(Rational(1, 2)));
  t.group_ = RotationGroup::closure(gens);
  const RotationGroup& H = t.group_;

  // Distinct directions g(base); slot_ maps each element to its direction.
  std::vector<Direction> dirs;
  std::vector<std::size_t> rep;
  t.slot_.assign(H.size(), 0);
  for (std::size_t g = 0; g < H.size(); ++g) {
    const Direction d = base.transformed(H[g]);
    std::size_t s = 0;
    while (s < dirs.size() && !dirs[s].same_as(d)) ++s;
    if (s == dirs.size()) {
      dirs.push_back(d);
      rep.push_back(g);
    }
    t.slot_[g] = s;
  }

  Bellman b;
  b.n = dirs.size();
  b.maps = ifs.size();
  b.successor.resize(b.n * b.maps);
  b.offset.resize(b.n * b.maps);
  b.exact_offset.resize(b.n * b.maps);
  for (const auto& m : ifs.maps()) b.ratio.push_back(m.ratio);
  t.exact_ = ifs.exact() && H.quarter_exact();
  for (std::size_t s = 0; s < b.n; ++s) {
    const Vec2<Interval> l = dirs[s].vector();
    const auto le = t.exact_ ? dirs[s].exact_vector() : std::nullopt;
    for (std::size_t i = 0; i < b.maps; ++i) {
      const Similarity& f = ifs[i];
      const std::size_t gi = t.index(f.ortho.inverse() * H[rep[s]]);
      b.successor[s * b.maps + i] = t.slot_[gi];
      b.offset[s * b.maps + i] = dot(f.translation, l);
      if (le && f.exact_translation) b.exact_offset[s * b.maps + i] = dot(*f.exact_translation, *le);
      else t.exact_ = false;
    }
  }

  // Interval value iteration from the ball bounds; T is monotone, so the
  // lower and upper iterates keep bracketing h.
  const Ball& ball = ifs.ball();
  const Vec2<Interval> c{Interval(ball.center.x), Interval(ball.center.y)};
  std::vector<Interval> lo(b.n), hi(b.n);
  for (std::size_t s = 0; s < b.n; ++s) {
    const Interval centre = dot(c, dirs[s].vector());
    const Interval reach = Interval(ball.radius) * dirs[s].norm();
    lo[s] = centre - reach;
    hi[s] = centre + reach;
  }
  std::vector<Interval> ratio_iv;
  for (const auto& r : b.ratio) ratio_iv.push_back(Interval::from(r));
  const double rmax = ifs.max_ratio().get_d();
  const int steps = std::min(20000, static_cast<int>(std::ceil(60.0 / -std::log2(rmax))) + 8);
  for (int it = 0; it < steps; ++it) {
    std::vector<Interval> nlo(b.n), nhi(b.n);
    for (std::size_t s = 0; s < b.n; ++s) {
      double best_lo = -INFINITY, best_hi = -INFINITY;
      for (std::size_t i = 0; i < b.maps; ++i) {
        const std::size_t w = b.next(s, i);
        const Interval& off = b.offset[s * b.maps + i];
        best_lo = std::max(best_lo, (ratio_iv[i] * lo[w] + off).lo());
        best_hi = std::max(best_hi, (ratio_iv[i] * hi[w] + off).hi());
      }
      nlo[s] = Interval(std::max(best_lo, lo[s].lo()));
      nhi[s] = Interval(std::min(best_hi, hi[s].hi()));
    }
    lo.swap(nlo);
    hi.swap(nhi);
  }
  t.values_.resize(b.n);
  for (std::size_t s = 0; s < b.n; ++s) t.values_[s] = Interval(lo[s].lo(), std::max(lo[s].lo(), hi[s].hi()));

  t.exact_values_.assign(b.n, std::nullopt);
  if (t.exact_) {
    std::vector<double> warm(b.n);
    for (std::size_t s = 0; s < b.n; ++s) warm[s] = t.values_[s].mid();
    const std::vector<QSqrt2> h = solve_exact(b, warm);
    for (std::size_t s = 0; s < b.n; ++s) {
      t.exact_values_[s] = h[s];
      t.values_[s] = h[s].enclosure();
    }
  }
  return t;
}

}  // namespace visidim
