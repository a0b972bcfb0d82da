#pragma once

// Exact arithmetic in the quadratic field Q(phi), phi = (1 + sqrt 5) / 2.

#include <boost/rational.hpp>

#include <cstdint>
#include <ostream>
#include <stdexcept>

namespace hemi {

using Rational = boost::rational<std::int64_t>;

/// a + b*phi with rational a, b. phi satisfies phi^2 = phi + 1.
///
/// There is deliberately no constructor from floating point.
class GoldenRational {
public:
  constexpr GoldenRational() = default;
  GoldenRational(std::int64_t a) : a_(a) {}
  GoldenRational(Rational a, Rational b = Rational(0)) : a_(a), b_(b) {}

  static GoldenRational phi() { return {Rational(0), Rational(1)}; }

  const Rational &rational_part() const { return a_; }
  const Rational &phi_part() const { return b_; }

  GoldenRational operator-() const { return {-a_, -b_}; }

  friend GoldenRational operator+(const GoldenRational &x, const GoldenRational &y) {
    return {x.a_ + y.a_, x.b_ + y.b_};
  }
  friend GoldenRational operator-(const GoldenRational &x, const GoldenRational &y) {
    return {x.a_ - y.a_, x.b_ - y.b_};
  }
  friend GoldenRational operator*(const GoldenRational &x, const GoldenRational &y) {
    // (a + b phi)(c + d phi) = (ac + bd) + (ad + bc + bd) phi
    const Rational bd = x.b_ * y.b_;
    return {x.a_ * y.a_ + bd, x.a_ * y.b_ + x.b_ * y.a_ + bd};
  }
  friend GoldenRational operator/(const GoldenRational &x, const GoldenRational &y) {
    return x * y.inverse();
  }

  GoldenRational &operator+=(const GoldenRational &o) { return *this = *this + o; }
  GoldenRational &operator-=(const GoldenRational &o) { return *this = *this - o; }
  GoldenRational &operator*=(const GoldenRational &o) { return *this = *this * o; }

  /// Galois conjugate: phi -> 1 - phi.
  GoldenRational conjugate() const { return {a_ + b_, -b_}; }

  /// Field norm x * conjugate(x) = a^2 + ab - b^2, always rational.
  Rational norm() const { return a_ * a_ + a_ * b_ - b_ * b_; }

  GoldenRational inverse() const {
    const Rational n = norm();
    if (n.numerator() == 0) {
      throw std::domain_error("GoldenRational: division by zero");
    }
    const GoldenRational c = conjugate();
    return {c.a_ / n, c.b_ / n};
  }

  /// Sign of the real number a + b*phi, computed exactly.
  int sign() const {
    // a + b phi = p + q sqrt5 with p = a + b/2, q = b/2
    const Rational p = a_ + b_ / 2;
    const Rational q = b_ / 2;
    const int sp = p > 0 ? 1 : (p < 0 ? -1 : 0);
    const int sq = q > 0 ? 1 : (q < 0 ? -1 : 0);
    if (sp == 0) return sq;
    if (sq == 0 || sp == sq) return sp;
    const Rational lhs = p * p;
    const Rational rhs = 5 * q * q;
    if (lhs == rhs) return 0;
    return lhs > rhs ? sp : sq;
  }

  bool is_zero() const { return a_.numerator() == 0 && b_.numerator() == 0; }

  friend bool operator==(const GoldenRational &, const GoldenRational &) = default;

  friend std::ostream &operator<<(std::ostream &os, const GoldenRational &x) {
    return os << x.a_ << " + " << x.b_ << "*phi";
  }

private:
  Rational a_{0};
  Rational b_{0};
};

struct GVec3 {
  GoldenRational x, y, z;

  GVec3 operator-() const { return {-x, -y, -z}; }
  friend GVec3 operator+(const GVec3 &u, const GVec3 &v) { return {u.x + v.x, u.y + v.y, u.z + v.z}; }
  friend GVec3 operator-(const GVec3 &u, const GVec3 &v) { return {u.x - v.x, u.y - v.y, u.z - v.z}; }
  friend bool operator==(const GVec3 &, const GVec3 &) = default;

  /// Cyclic coordinate shift (x, y, z) -> (z, x, y).
  GVec3 shifted() const { return {z, x, y}; }
};

inline GoldenRational dot(const GVec3 &u, const GVec3 &v) { return u.x * v.x + u.y * v.y + u.z * v.z; }

inline GVec3 cross(const GVec3 &u, const GVec3 &v) {
  return {u.y * v.z - u.z * v.y, u.z * v.x - u.x * v.z, u.x * v.y - u.y * v.x};
}

inline GoldenRational squared_distance(const GVec3 &u, const GVec3 &v) {
  const GVec3 d = u - v;
  return dot(d, d);
}

} // namespace hemi
