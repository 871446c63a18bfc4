#pragma once

#include <cmath>

namespace ipp {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator*(Vec2 a, double s) { return {a.x * s, a.y * s}; }
  friend bool operator==(Vec2 a, Vec2 b) { return a.x == b.x && a.y == b.y; }
  double norm() const { return std::hypot(x, y); }
};

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  friend Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend Vec3 operator*(Vec3 a, double s) { return {a.x * s, a.y * s, a.z * s}; }
  friend bool operator==(Vec3 a, Vec3 b) { return a.x == b.x && a.y == b.y && a.z == b.z; }
  double norm() const { return std::sqrt(x * x + y * y + z * z); }
  Vec2 xy() const { return {x, y}; }
};

inline double distance(Vec3 a, Vec3 b) { return (a - b).norm(); }

// Axis-aligned 3D box, used for workspace limits.
struct AxisBox3 {
  Vec3 lo;
  Vec3 hi;

  bool valid() const { return lo.x < hi.x && lo.y < hi.y && lo.z < hi.z; }
  bool contains(Vec3 p) const {
    return p.x >= lo.x && p.x <= hi.x && p.y >= lo.y && p.y <= hi.y &&
           p.z >= lo.z && p.z <= hi.z;
  }
  Vec3 clamp(Vec3 p) const {
    auto cl = [](double v, double a, double b) { return v < a ? a : (v > b ? b : v); };
    return {cl(p.x, lo.x, hi.x), cl(p.y, lo.y, hi.y), cl(p.z, lo.z, hi.z)};
  }
  Vec3 center() const { return {(lo.x + hi.x) / 2, (lo.y + hi.y) / 2, (lo.z + hi.z) / 2}; }
  Vec3 extent() const { return hi - lo; }
};

}  // namespace ipp
