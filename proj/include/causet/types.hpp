#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace causet {

struct Vec2 {
  double x = 0.0;  // first chart coordinate
  double y = 0.0;  // second chart coordinate

  Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  bool operator==(const Vec2&) const = default;
};

// Symmetric 2x2 matrix [[xx, xy], [xy, yy]].
struct Sym2 {
  double xx = 0.0;
  double xy = 0.0;
  double yy = 0.0;

  double quad(const Vec2& v) const { return xx * v.x * v.x + 2.0 * xy * v.x * v.y + yy * v.y * v.y; }
  double bilinear(const Vec2& v, const Vec2& w) const {
    return xx * v.x * w.x + xy * (v.x * w.y + v.y * w.x) + yy * v.y * w.y;
  }
  Vec2 apply(const Vec2& v) const { return {xx * v.x + xy * v.y, xy * v.x + yy * v.y}; }
  double det() const { return xx * yy - xy * xy; }
  double trace() const { return xx + yy; }
  Sym2 operator*(double s) const { return {xx * s, xy * s, yy * s}; }
  Sym2 operator+(const Sym2& o) const { return {xx + o.xx, xy + o.xy, yy + o.yy}; }
  Sym2 operator-(const Sym2& o) const { return {xx - o.xx, xy - o.xy, yy - o.yy}; }

  // Eigenvalues in ascending order.
  std::array<double, 2> eigenvalues() const {
    const double m = 0.5 * trace();
    const double r = std::hypot(0.5 * (xx - yy), xy);
    return {m - r, m + r};
  }

  static Sym2 outer(const Vec2& v) { return {v.x * v.x, v.x * v.y, v.y * v.y}; }
  static Sym2 diag(double a, double b) { return {a, 0.0, b}; }
};

inline double max_abs_diff(const Sym2& a, const Sym2& b) {
  return std::max({std::abs(a.xx - b.xx), std::abs(a.xy - b.xy), std::abs(a.yy - b.yy)});
}

using NodeId = std::int32_t;
inline constexpr NodeId kNoNode = -1;

// Dense per-node membership mask. Byte storage so that OpenMP workers can
// write disjoint entries without sharing words.
class Mask {
 public:
  Mask() = default;
  explicit Mask(std::size_t n, bool value = false) : bits_(n, value ? 1 : 0) {}

  std::size_t size() const { return bits_.size(); }
  bool operator[](std::size_t i) const { return bits_[i] != 0; }
  bool test(std::size_t i) const { return bits_[i] != 0; }
  void set(std::size_t i, bool v = true) { bits_[i] = v ? 1 : 0; }

  std::size_t count() const;
  bool none() const { return count() == 0; }
  bool all() const { return count() == size(); }

  Mask& operator|=(const Mask& o);
  Mask& operator&=(const Mask& o);
  Mask operator~() const;
  bool subset_of(const Mask& o) const;
  bool operator==(const Mask& o) const { return bits_ == o.bits_; }

  std::vector<NodeId> nodes() const;
  const std::vector<std::uint8_t>& raw() const { return bits_; }

 private:
  std::vector<std::uint8_t> bits_;
};

inline Mask operator|(Mask a, const Mask& b) { return a |= b; }
inline Mask operator&(Mask a, const Mask& b) { return a &= b; }

}  // namespace causet
