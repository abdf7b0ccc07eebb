#pragma once

// Fixed-size matrices over exact scalars, projective classes, and exact
// dense elimination. Works for any field scalar S (CycNum, Fp<P>).

#include <functional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "cremona/cyclo.hpp"

namespace cremona {

template <class S, int N>
using MatN = Eigen::Matrix<S, N, N>;
template <class S>
using Mat2 = MatN<S, 2>;
template <class S>
using MatX = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;

template <class S, int N>
std::size_t hash_value(const MatN<S, N>& m) {
  std::size_t h = 0;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) h = h * 1000003u ^ std::hash<S>{}(m(i, j));
  return h;
}

template <class S, int N>
MatN<S, N> identity_of(const MatN<S, N>&) {
  return MatN<S, N>::Identity();
}

template <class S>
Mat2<S> mat2(const S& a, const S& b, const S& c, const S& d) {
  Mat2<S> m;
  m << a, b, c, d;
  return m;
}

template <class S>
S det2(const Mat2<S>& m) {
  return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
}

template <class S>
Mat2<S> inverse2(const Mat2<S>& m) {
  S di = inverse(det2(m));
  return mat2<S>(m(1, 1) * di, -m(0, 1) * di, -m(1, 0) * di, m(0, 0) * di);
}

template <class S, int N>
bool is_scalar_matrix(const MatN<S, N>& m) {
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      if (i != j && !is_zero(m(i, j))) return false;
      if (i == j && m(i, i) != m(0, 0)) return false;
    }
  return true;
}

/// Projective class of an invertible N x N matrix. The representative is
/// scaled so that its first nonzero entry in row-major order is 1.
template <class S, int N>
class ProjMat {
 public:
  using Matrix = MatN<S, N>;

  ProjMat() : m_(Matrix::Identity()) {}
  explicit ProjMat(const Matrix& m) : m_(m) { canonicalize(); }

  const Matrix& matrix() const { return m_; }
  const S& operator()(int i, int j) const { return m_(i, j); }

  friend ProjMat operator*(const ProjMat& a, const ProjMat& b) { return ProjMat(a.m_ * b.m_); }
  friend bool operator==(const ProjMat& a, const ProjMat& b) { return a.m_ == b.m_; }
  friend bool operator!=(const ProjMat& a, const ProjMat& b) { return !(a == b); }

 private:
  void canonicalize() {
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j)
        if (!is_zero(m_(i, j))) {
          if (m_(i, j) == S(1)) return;
          S inv = inverse(m_(i, j));
          for (int r = 0; r < N; ++r)
            for (int c = 0; c < N; ++c)
              if (!is_zero(m_(r, c))) m_(r, c) *= inv;
          return;
        }
    throw ArithmeticError("zero matrix has no projective class");
  }

  Matrix m_;
};

template <class S>
using ProjMat2 = ProjMat<S, 2>;

template <class S, int N>
std::size_t hash_value(const ProjMat<S, N>& p) {
  return hash_value(p.matrix());
}

template <class S, int N>
ProjMat<S, N> identity_of(const ProjMat<S, N>&) {
  return ProjMat<S, N>();
}

/// Rank by fraction-free (Bareiss) elimination; also reports pivot columns.
template <class S>
int rank(MatX<S> m, std::vector<int>* pivots = nullptr) {
  const int rows = static_cast<int>(m.rows()), cols = static_cast<int>(m.cols());
  S prev(1);
  int r = 0;
  if (pivots) pivots->clear();
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = r;
    while (p < rows && is_zero(m(p, c))) ++p;
    if (p == rows) continue;
    if (p != r) m.row(p).swap(m.row(r));
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j) {
        S v = m(r, c) * m(i, j) - m(i, c) * m(r, j);
        m(i, j) = prev == S(1) ? v : v / prev;
      }
      m(i, c) = S(0);
    }
    prev = m(r, c);
    if (pivots) pivots->push_back(c);
    ++r;
  }
  return r;
}

/// Basis of the right kernel {v : m v = 0}, one column per basis vector.
template <class S>
MatX<S> kernel(MatX<S> m) {
  const int rows = static_cast<int>(m.rows()), cols = static_cast<int>(m.cols());
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = r;
    while (p < rows && is_zero(m(p, c))) ++p;
    if (p == rows) continue;
    if (p != r) m.row(p).swap(m.row(r));
    S inv = inverse(m(r, c));
    for (int j = c; j < cols; ++j) m(r, j) *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      S f = m(i, c);
      for (int j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  MatX<S> basis(cols, cols - r);
  for (int i = 0; i < basis.rows(); ++i)
    for (int j = 0; j < basis.cols(); ++j) basis(i, j) = S(0);
  int k = 0;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    basis(f, k) = S(1);
    for (int i = 0; i < r; ++i) basis(pivot_col[i], k) = -m(i, f);
    ++k;
  }
  return basis;
}

/// "a | b | c | d" with entries in the scalar's text format.
template <class S, int N>
std::string to_string(const MatN<S, N>& m) {
  std::string out;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      if (i || j) out += " | ";
      out += to_string(m(i, j));
    }
  return out;
}

}  // namespace cremona
