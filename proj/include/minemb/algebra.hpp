#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "minemb/jet.hpp"

namespace minemb {

// The three normed division algebras over R that carry the embedding tower.
enum class Field { R, C, H };

constexpr int real_dim(Field f) {
  return f == Field::R ? 1 : (f == Field::C ? 2 : 4);
}

// Dimension of the unit group acting on sphere fibers: Z/2, U(1), Sp(1).
constexpr int fiber_dim(Field f) { return real_dim(f) - 1; }

constexpr const char* field_name(Field f) {
  return f == Field::R ? "R" : (f == Field::C ? "C" : "H");
}

inline Field parse_field(const std::string& s) {
  if (s == "R" || s == "r") return Field::R;
  if (s == "C" || s == "c") return Field::C;
  if (s == "H" || s == "h") return Field::H;
  throw std::domain_error("unknown field tag: " + s);
}

// Element of R, C, or H in a single 4-slot layout on the basis (1, i, j, k).
// Slots beyond real_dim(tag) stay zero, so R -> C -> H inclusion is the
// identity on coefficients. Scalar-generic: S is double for plain evaluation
// and Jet2 for differentiation along curves.
template <class S>
struct AlgebraElem {
  Field tag = Field::R;
  std::array<S, 4> c{S(0), S(0), S(0), S(0)};

  static AlgebraElem zero(Field f) { return {f, {S(0), S(0), S(0), S(0)}}; }
  static AlgebraElem real(Field f, const S& v) {
    return {f, {v, S(0), S(0), S(0)}};
  }
};

using AlgebraElement = AlgebraElem<double>;

namespace detail {
inline void require_same_tag(Field a, Field b) {
  if (a != b) throw std::domain_error("algebra elements with mismatched tags");
}
}  // namespace detail

// Hamilton product with the right-handed table ij = k, jk = i, ki = j.
// Restricted to the C slots this is complex multiplication, and to the first
// slot real multiplication; the zero-padding makes one table serve all tags.
template <class S>
AlgebraElem<S> mul(const AlgebraElem<S>& x, const AlgebraElem<S>& y) {
  detail::require_same_tag(x.tag, y.tag);
  const auto& a = x.c;
  const auto& b = y.c;
  AlgebraElem<S> r = AlgebraElem<S>::zero(x.tag);
  r.c[0] = a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3];
  r.c[1] = a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2];
  r.c[2] = a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1];
  r.c[3] = a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0];
  return r;
}

// Product in the opposite algebra, i.e. under the flipped convention ij = -k.
// Reversing the order of every product is exactly a handedness flip, so this
// is what the convention-independence checks run against.
template <class S>
AlgebraElem<S> mul_opposite(const AlgebraElem<S>& x, const AlgebraElem<S>& y) {
  return mul(y, x);
}

template <class S>
AlgebraElem<S> conj(const AlgebraElem<S>& x) {
  return {x.tag, {x.c[0], -x.c[1], -x.c[2], -x.c[3]}};
}

template <class S>
S norm2(const AlgebraElem<S>& x) {
  return x.c[0] * x.c[0] + x.c[1] * x.c[1] + x.c[2] * x.c[2] +
         x.c[3] * x.c[3];
}

template <class S>
AlgebraElem<S> add(const AlgebraElem<S>& x, const AlgebraElem<S>& y) {
  detail::require_same_tag(x.tag, y.tag);
  AlgebraElem<S> r = x;
  for (int t = 0; t < 4; ++t) r.c[t] = r.c[t] + y.c[t];
  return r;
}

template <class S>
AlgebraElem<S> scale(const S& s, const AlgebraElem<S>& x) {
  return {x.tag, {s * x.c[0], s * x.c[1], s * x.c[2], s * x.c[3]}};
}

// Vector over F with a shared tag; entries are (n+1) algebra elements.
template <class S>
struct HVec {
  Field tag = Field::R;
  std::vector<AlgebraElem<S>> e;

  std::size_t size() const { return e.size(); }
};

using HVector = HVec<double>;

// Flattening order within each entry is (1, i, j, k) truncated to the slot
// count of the tag. All real-coordinate views of F^{n+1} use this order.
template <class S>
std::vector<S> flatten(const HVec<S>& v) {
  const int d = real_dim(v.tag);
  std::vector<S> out;
  out.reserve(v.e.size() * d);
  for (const auto& q : v.e)
    for (int t = 0; t < d; ++t) out.push_back(q.c[t]);
  return out;
}

template <class S>
HVec<S> unflatten(Field f, const std::vector<S>& x) {
  const int d = real_dim(f);
  if (x.size() % d != 0)
    throw std::domain_error("coordinate count not a multiple of the slot count");
  HVec<S> v;
  v.tag = f;
  v.e.resize(x.size() / d, AlgebraElem<S>::zero(f));
  for (std::size_t i = 0; i < v.e.size(); ++i)
    for (int t = 0; t < d; ++t) v.e[i].c[t] = x[i * d + t];
  return v;
}

// Entrywise left action v -> lambda * v of the unit group F_1. Requires
// |lambda| = 1; each |v_i|^2 is then preserved exactly by multiplicativity.
inline HVector scalar_action(const AlgebraElement& lambda, const HVector& v) {
  detail::require_same_tag(lambda.tag, v.tag);
  if (std::abs(norm2(lambda) - 1.0) > 1e-9)
    throw std::domain_error("scalar action requires a unit-norm scalar");
  HVector out;
  out.tag = v.tag;
  out.e.reserve(v.e.size());
  for (const auto& q : v.e) out.e.push_back(mul(lambda, q));
  return out;
}

}  // namespace minemb
