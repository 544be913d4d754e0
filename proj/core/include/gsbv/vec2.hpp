#pragma once

#include <cmath>

namespace gsbv {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator*(double c, Vec2 a) { return {c * a.x, c * a.y}; }
  friend Vec2 operator*(Vec2 a, double c) { return {c * a.x, c * a.y}; }
  friend Vec2 operator/(Vec2 a, double c) { return {a.x / c, a.y / c}; }
  Vec2 operator-() const { return {-x, -y}; }

  double dot(Vec2 o) const { return x * o.x + y * o.y; }
  double norm() const { return std::hypot(x, y); }
  double norm_squared() const { return x * x + y * y; }
  Vec2 normalized() const {
    const double n = norm();
    return {x / n, y / n};
  }
  // 90-degree counterclockwise rotation
  Vec2 perp() const { return {-y, x}; }
  double cross(Vec2 o) const { return x * o.y - y * o.x; }
};

}  // namespace gsbv
