#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

namespace minemb {

// Order-2 truncated Taylor jet of a scalar curve t -> f(t) at t = 0.
// a2 is the order-2 Taylor coefficient, i.e. half the second derivative.
// Truncation is exact for every quantity this library differentiates, so jet
// arithmetic yields machine-precision first and second derivatives.
struct Jet2 {
  double a0 = 0.0;
  double a1 = 0.0;
  double a2 = 0.0;

  constexpr Jet2() = default;
  constexpr Jet2(double v) : a0(v) {}
  constexpr Jet2(double v, double d1, double h2) : a0(v), a1(d1), a2(h2) {}

  // Jet of the curve t -> t0 + t.
  static constexpr Jet2 variable(double t0) { return Jet2(t0, 1.0, 0.0); }

  double value() const { return a0; }
  double d1() const { return a1; }
  double d2() const { return 2.0 * a2; }
};

constexpr Jet2 operator+(const Jet2& x, const Jet2& y) {
  return {x.a0 + y.a0, x.a1 + y.a1, x.a2 + y.a2};
}

constexpr Jet2 operator-(const Jet2& x, const Jet2& y) {
  return {x.a0 - y.a0, x.a1 - y.a1, x.a2 - y.a2};
}

constexpr Jet2 operator-(const Jet2& x) { return {-x.a0, -x.a1, -x.a2}; }

// Cauchy product truncated at order 2: (xy)' = x'y + xy'.
constexpr Jet2 operator*(const Jet2& x, const Jet2& y) {
  return {x.a0 * y.a0, x.a0 * y.a1 + x.a1 * y.a0,
          x.a0 * y.a2 + x.a1 * y.a1 + x.a2 * y.a0};
}

constexpr Jet2 operator*(double s, const Jet2& x) {
  return {s * x.a0, s * x.a1, s * x.a2};
}
constexpr Jet2 operator*(const Jet2& x, double s) { return s * x; }

// Division solves z*y = x coefficient by coefficient; requires y.a0 != 0.
inline Jet2 operator/(const Jet2& x, const Jet2& y) {
  if (y.a0 == 0.0) throw std::domain_error("jet division by zero value");
  const double z0 = x.a0 / y.a0;
  const double z1 = (x.a1 - z0 * y.a1) / y.a0;
  const double z2 = (x.a2 - z0 * y.a2 - z1 * y.a1) / y.a0;
  return {z0, z1, z2};
}

inline Jet2 operator/(const Jet2& x, double s) { return x * (1.0 / s); }

// Square root solves z*z = x; requires x.a0 > 0.
inline Jet2 sqrt(const Jet2& x) {
  if (!(x.a0 > 0.0)) throw std::domain_error("jet sqrt of non-positive value");
  const double z0 = std::sqrt(x.a0);
  const double z1 = x.a1 / (2.0 * z0);
  const double z2 = (x.a2 - z1 * z1) / (2.0 * z0);
  return {z0, z1, z2};
}

// Trigonometric jets via the order-2 Taylor recurrence of cos/sin around g.a0.
inline Jet2 sin(const Jet2& g) {
  const double s = std::sin(g.a0), c = std::cos(g.a0);
  return {s, c * g.a1, c * g.a2 - 0.5 * s * g.a1 * g.a1};
}

inline Jet2 cos(const Jet2& g) {
  const double s = std::sin(g.a0), c = std::cos(g.a0);
  return {c, -s * g.a1, -s * g.a2 - 0.5 * c * g.a1 * g.a1};
}

using JetVector = std::vector<Jet2>;

}  // namespace minemb
