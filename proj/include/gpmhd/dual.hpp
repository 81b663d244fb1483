#pragma once

// Forward-mode dual numbers with a fixed number of directional derivatives.
// Nesting (Dual<Dual<double, N>, N>) yields exact second derivatives, which
// the strong-form residual operator uses to take divergences of viscous
// fluxes evaluated on closed-form fields.

#include <array>
#include <cmath>
#include <concepts>
#include <type_traits>

namespace gpmhd {

template <class T, int N>
struct Dual {
  T v{};
  std::array<T, N> d{};

  Dual() = default;
  template <class S>
    requires std::is_arithmetic_v<S>
  Dual(S value) : v(static_cast<T>(value)) {
    d.fill(T(0));
  }
  Dual(const T &value, const std::array<T, N> &deriv) : v(value), d(deriv) {}

  /// Independent variable `index` with value `value`.
  static Dual variable(const T &value, int index) {
    Dual r;
    r.v = value;
    r.d.fill(T(0));
    r.d[index] = T(1);
    return r;
  }

  Dual &operator+=(const Dual &o) {
    v += o.v;
    for (int i = 0; i < N; ++i) d[i] += o.d[i];
    return *this;
  }
  Dual &operator-=(const Dual &o) {
    v -= o.v;
    for (int i = 0; i < N; ++i) d[i] -= o.d[i];
    return *this;
  }
  Dual &operator*=(const Dual &o) {
    for (int i = 0; i < N; ++i) d[i] = d[i] * o.v + v * o.d[i];
    v *= o.v;
    return *this;
  }
  Dual &operator/=(const Dual &o) {
    const T inv = T(1) / o.v;
    for (int i = 0; i < N; ++i) d[i] = (d[i] - v * inv * o.d[i]) * inv;
    v *= inv;
    return *this;
  }
};

template <class T>
struct is_dual : std::false_type {};
template <class T, int N>
struct is_dual<Dual<T, N>> : std::true_type {};

template <class S>
concept Arithmetic = std::is_arithmetic_v<S>;

template <class T, int N>
Dual<T, N> operator-(Dual<T, N> a) {
  a.v = -a.v;
  for (auto &x : a.d) x = -x;
  return a;
}
template <class T, int N>
Dual<T, N> operator+(const Dual<T, N> &a) {
  return a;
}

template <class T, int N>
Dual<T, N> operator+(Dual<T, N> a, const Dual<T, N> &b) {
  return a += b;
}
template <class T, int N>
Dual<T, N> operator-(Dual<T, N> a, const Dual<T, N> &b) {
  return a -= b;
}
template <class T, int N>
Dual<T, N> operator*(Dual<T, N> a, const Dual<T, N> &b) {
  return a *= b;
}
template <class T, int N>
Dual<T, N> operator/(Dual<T, N> a, const Dual<T, N> &b) {
  return a /= b;
}

template <class T, int N, Arithmetic S>
Dual<T, N> operator+(Dual<T, N> a, S s) {
  a.v += static_cast<T>(s);
  return a;
}
template <class T, int N, Arithmetic S>
Dual<T, N> operator+(S s, Dual<T, N> a) {
  a.v += static_cast<T>(s);
  return a;
}
template <class T, int N, Arithmetic S>
Dual<T, N> operator-(Dual<T, N> a, S s) {
  a.v -= static_cast<T>(s);
  return a;
}
template <class T, int N, Arithmetic S>
Dual<T, N> operator-(S s, const Dual<T, N> &a) {
  return Dual<T, N>(s) - a;
}
template <class T, int N, Arithmetic S>
Dual<T, N> operator*(Dual<T, N> a, S s) {
  a.v *= static_cast<T>(s);
  for (auto &x : a.d) x *= static_cast<T>(s);
  return a;
}
template <class T, int N, Arithmetic S>
Dual<T, N> operator*(S s, Dual<T, N> a) {
  return a * s;
}
template <class T, int N, Arithmetic S>
Dual<T, N> operator/(Dual<T, N> a, S s) {
  return a * (1.0 / static_cast<double>(s));
}
template <class T, int N, Arithmetic S>
Dual<T, N> operator/(S s, const Dual<T, N> &a) {
  return Dual<T, N>(s) / a;
}
template <class T, int N, Arithmetic S>
Dual<T, N> &operator+=(Dual<T, N> &a, S s) {
  a.v += static_cast<T>(s);
  return a;
}
template <class T, int N, Arithmetic S>
Dual<T, N> &operator*=(Dual<T, N> &a, S s) {
  a = a * s;
  return a;
}

namespace detail {
// Chain rule: f(a) with f(a.v) = fv and f'(a.v) = dfv.
template <class T, int N>
Dual<T, N> chain(const Dual<T, N> &a, const T &fv, const T &dfv) {
  Dual<T, N> r;
  r.v = fv;
  for (int i = 0; i < N; ++i) r.d[i] = dfv * a.d[i];
  return r;
}
}  // namespace detail

template <class T, int N>
Dual<T, N> sqrt(const Dual<T, N> &a) {
  using std::sqrt;
  const T s = sqrt(a.v);
  return detail::chain(a, s, T(0.5) / s);
}
template <class T, int N>
Dual<T, N> exp(const Dual<T, N> &a) {
  using std::exp;
  const T e = exp(a.v);
  return detail::chain(a, e, e);
}
template <class T, int N>
Dual<T, N> log(const Dual<T, N> &a) {
  using std::log;
  return detail::chain(a, log(a.v), T(1) / a.v);
}
template <class T, int N>
Dual<T, N> sin(const Dual<T, N> &a) {
  using std::cos;
  using std::sin;
  return detail::chain(a, sin(a.v), cos(a.v));
}
template <class T, int N>
Dual<T, N> cos(const Dual<T, N> &a) {
  using std::cos;
  using std::sin;
  return detail::chain(a, cos(a.v), -sin(a.v));
}
template <class T, int N>
Dual<T, N> tanh(const Dual<T, N> &a) {
  using std::tanh;
  const T th = tanh(a.v);
  return detail::chain(a, th, T(1) - th * th);
}
template <class T, int N>
Dual<T, N> cosh(const Dual<T, N> &a) {
  using std::cosh;
  using std::sinh;
  return detail::chain(a, cosh(a.v), sinh(a.v));
}
template <class T, int N>
Dual<T, N> sinh(const Dual<T, N> &a) {
  using std::cosh;
  using std::sinh;
  return detail::chain(a, sinh(a.v), cosh(a.v));
}

/// Plain value of a (possibly nested) dual number.
inline double value_of(double x) { return x; }
template <class T, int N>
double value_of(const Dual<T, N> &x) {
  return value_of(x.v);
}

}  // namespace gpmhd
