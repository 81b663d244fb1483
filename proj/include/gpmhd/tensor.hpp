#pragma once

// Small fixed-size vectors/tensors over an arbitrary scalar type (double or
// dual numbers). Gradient convention: (grad u)(i, j) = d u_j / d x_i.

#include <array>

namespace gpmhd {

template <class T>
using Vec3 = std::array<T, 3>;
template <class T>
using Mat3 = std::array<std::array<T, 3>, 3>;

template <class T>
Vec3<T> zero_vec() {
  return {T(0), T(0), T(0)};
}

template <class T>
Mat3<T> zero_mat() {
  Mat3<T> m;
  for (auto &row : m) row = zero_vec<T>();
  return m;
}

template <class T>
Mat3<T> identity_mat() {
  auto m = zero_mat<T>();
  for (int i = 0; i < 3; ++i) m[i][i] = T(1);
  return m;
}

template <class T>
T dot(const Vec3<T> &a, const Vec3<T> &b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

template <class T>
T norm2(const Vec3<T> &a) {
  return dot(a, a);
}

template <class T>
Vec3<T> cross(const Vec3<T> &a, const Vec3<T> &b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

/// (a ⊗ b)(i, j) = a_i b_j
template <class T>
Mat3<T> outer(const Vec3<T> &a, const Vec3<T> &b) {
  Mat3<T> m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] = a[i] * b[j];
  return m;
}

template <class T>
Mat3<T> transpose(const Mat3<T> &a) {
  Mat3<T> m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] = a[j][i];
  return m;
}

/// (A b)_i = sum_j A(i, j) b_j
template <class T>
Vec3<T> matvec(const Mat3<T> &a, const Vec3<T> &b) {
  Vec3<T> r;
  for (int i = 0; i < 3; ++i) r[i] = a[i][0] * b[0] + a[i][1] * b[1] + a[i][2] * b[2];
  return r;
}

template <class T>
Mat3<T> matmul(const Mat3<T> &a, const Mat3<T> &b) {
  auto m = zero_mat<T>();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) m[i][j] += a[i][k] * b[k][j];
  return m;
}

/// A : B = sum_ij A(i, j) B(i, j)
template <class T>
T contract(const Mat3<T> &a, const Mat3<T> &b) {
  T s = T(0);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) s += a[i][j] * b[i][j];
  return s;
}

template <class T>
Mat3<T> symmetric_part(const Mat3<T> &a) {
  Mat3<T> m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] = 0.5 * (a[i][j] + a[j][i]);
  return m;
}

template <class T>
Vec3<T> add(const Vec3<T> &a, const Vec3<T> &b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}
template <class T>
Vec3<T> sub(const Vec3<T> &a, const Vec3<T> &b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}
template <class T, class S>
Vec3<T> scale(const S &s, const Vec3<T> &a) {
  return {s * a[0], s * a[1], s * a[2]};
}

template <class T>
Mat3<T> add(const Mat3<T> &a, const Mat3<T> &b) {
  Mat3<T> m;
  for (int i = 0; i < 3; ++i) m[i] = add(a[i], b[i]);
  return m;
}
template <class T>
Mat3<T> sub(const Mat3<T> &a, const Mat3<T> &b) {
  Mat3<T> m;
  for (int i = 0; i < 3; ++i) m[i] = sub(a[i], b[i]);
  return m;
}
template <class T, class S>
Mat3<T> scale(const S &s, const Mat3<T> &a) {
  Mat3<T> m;
  for (int i = 0; i < 3; ++i) m[i] = scale(s, a[i]);
  return m;
}

}  // namespace gpmhd
