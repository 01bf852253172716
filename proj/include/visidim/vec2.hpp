#pragma once

namespace visidim {

template <class T>
struct Vec2 {
  T x{};
  T y{};

  friend Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator*(const T& s, const Vec2& v) { return {s * v.x, s * v.y}; }
  friend bool operator==(const Vec2& a, const Vec2& b) { return a.x == b.x && a.y == b.y; }
};

template <class T>
T dot(const Vec2<T>& a, const Vec2<T>& b) {
  return a.x * b.x + a.y * b.y;
}

/// Counter-clockwise quarter turn.
template <class T>
Vec2<T> perp(const Vec2<T>& v) {
  return {-v.y, v.x};
}

}  // namespace visidim
