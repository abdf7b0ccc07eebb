#pragma once

// Homogeneous binary forms in t0, t1 over an exact field, the substitution
// action of 2x2 matrices, and gcd / squarefree / divisibility machinery.

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cremona/cyclo.hpp"
#include "cremona/errors.hpp"
#include "cremona/linalg.hpp"

namespace cremona {

/// Form of degree n; index k holds the coefficient of t0^k t1^(n-k).
template <class S>
class BinFormT {
 public:
  using Scalar = S;

  BinFormT() : c_(1, S(0)) {}
  /// Zero form of degree n.
  explicit BinFormT(int n) : c_(check_degree(n) + 1, S(0)) {}
  explicit BinFormT(std::vector<S> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw DegreeMismatch("binary form needs at least one coefficient");
  }

  /// c * t0^k t1^(n-k).
  static BinFormT monomial(int n, int k, const S& c = S(1)) {
    BinFormT f(n);
    f.c_.at(k) = c;
    return f;
  }
  static BinFormT constant(const S& c) { return BinFormT(std::vector<S>{c}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const S& operator[](int k) const { return c_[k]; }
  S& operator[](int k) { return c_[k]; }
  const std::vector<S>& coeffs() const { return c_; }

  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const S& x) { return cremona::is_zero(x); });
  }
  int term_count() const {
    return static_cast<int>(std::count_if(c_.begin(), c_.end(), [](const S& x) { return !cremona::is_zero(x); }));
  }

  BinFormT& operator+=(const BinFormT& g) {
    same_degree(g);
    for (std::size_t k = 0; k < c_.size(); ++k)
      if (!cremona::is_zero(g.c_[k])) c_[k] += g.c_[k];
    return *this;
  }
  BinFormT& operator-=(const BinFormT& g) {
    same_degree(g);
    for (std::size_t k = 0; k < c_.size(); ++k)
      if (!cremona::is_zero(g.c_[k])) c_[k] -= g.c_[k];
    return *this;
  }
  BinFormT& operator*=(const S& s) {
    for (auto& x : c_)
      if (!cremona::is_zero(x)) x *= s;
    return *this;
  }
  BinFormT operator-() const {
    BinFormT r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }

  friend BinFormT operator+(BinFormT f, const BinFormT& g) { return f += g; }
  friend BinFormT operator-(BinFormT f, const BinFormT& g) { return f -= g; }
  friend BinFormT operator*(BinFormT f, const S& s) { return f *= s; }
  friend BinFormT operator*(const S& s, BinFormT f) { return f *= s; }
  friend BinFormT operator*(const BinFormT& f, const BinFormT& g) {
    BinFormT r(f.degree() + g.degree());
    for (int i = 0; i <= f.degree(); ++i) {
      if (cremona::is_zero(f.c_[i])) continue;
      for (int j = 0; j <= g.degree(); ++j)
        if (!cremona::is_zero(g.c_[j])) r.c_[i + j] += f.c_[i] * g.c_[j];
    }
    return r;
  }
  friend bool operator==(const BinFormT& f, const BinFormT& g) { return f.c_ == g.c_; }
  friend bool operator!=(const BinFormT& f, const BinFormT& g) { return !(f == g); }

  BinFormT pow(int e) const {
    BinFormT r = constant(S(1));
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
  }

  S eval(const S& t0, const S& t1) const {
    // Homogeneous Horner in t0 with t1 powers accumulated alongside.
    S acc = c_.back();
    S t1pow(1);
    for (int k = degree() - 1; k >= 0; --k) {
      t1pow *= t1;
      acc = acc * t0 + c_[k] * t1pow;
    }
    return acc;
  }

  /// Partial derivative in t0 (degree drops by one; degree-0 forms give 0).
  BinFormT d0() const {
    if (degree() == 0) return BinFormT(0);
    BinFormT r(degree() - 1);
    for (int k = 1; k <= degree(); ++k) r.c_[k - 1] = c_[k] * S(k);
    return r;
  }
  BinFormT d1() const {
    if (degree() == 0) return BinFormT(0);
    BinFormT r(degree() - 1);
    for (int k = 0; k < degree(); ++k) r.c_[k] = c_[k] * S(degree() - k);
    return r;
  }

  /// Scales so that the highest nonzero t0-power coefficient is 1.
  BinFormT monic() const {
    for (int k = degree(); k >= 0; --k)
      if (!cremona::is_zero(c_[k])) return *this * inverse(c_[k]);
    return *this;
  }

  std::string to_string() const {
    std::string out = "deg=" + std::to_string(degree()) + "; ";
    for (int k = 0; k <= degree(); ++k) {
      if (k) out += ',';
      out += cremona::to_string(c_[k]);
    }
    return out;
  }

 private:
  static int check_degree(int n) {
    if (n < 0) throw DegreeMismatch("negative form degree");
    return n;
  }
  void same_degree(const BinFormT& g) const {
    if (g.degree() != degree())
      throw DegreeMismatch("degree " + std::to_string(degree()) + " vs " + std::to_string(g.degree()));
  }

  std::vector<S> c_;
};

using BinForm = BinFormT<CycNum>;

/// Parses "deg=n; c0,...,cn" with CycNum entries (8 rationals each).
BinForm parse_binform(std::string_view text);

/// act(g, f) = f(a t0 + b t1, c t0 + d t1); act(h, act(g, f)) = act(g h, f).
template <class S>
BinFormT<S> act(const Mat2<S>& g, const BinFormT<S>& f) {
  const int n = f.degree();
  const S &a = g(0, 0), &b = g(0, 1), &c = g(1, 0), &d = g(1, 1);
  BinFormT<S> r(n);
  if (is_zero(b) && is_zero(c)) {
    for (int k = 0; k <= n; ++k)
      if (!is_zero(f[k])) r[k] = f[k] * a.pow(k) * d.pow(n - k);
    return r;
  }
  if (is_zero(a) && is_zero(d)) {
    for (int k = 0; k <= n; ++k)
      if (!is_zero(f[k])) r[n - k] = f[k] * b.pow(k) * c.pow(n - k);
    return r;
  }
  // P_j = P_{j-1} * L1 + f[n-j] * L2^j, with L1 = a t0 + b t1, L2 = c t0 + d t1.
  std::vector<S> p{f[n]};
  std::vector<S> l2pow{S(1)};
  for (int j = 1; j <= n; ++j) {
    std::vector<S> next(j + 1, S(0)), l2(j + 1, S(0));
    for (int k = 0; k < j; ++k) {
      // Coefficient of t0^k t1^(j-1-k) times (a t0 + b t1).
      if (!is_zero(p[k])) {
        next[k + 1] += p[k] * a;
        next[k] += p[k] * b;
      }
      if (!is_zero(l2pow[k])) {
        l2[k + 1] += l2pow[k] * c;
        l2[k] += l2pow[k] * d;
      }
    }
    const S& coef = f[n - j];
    if (!is_zero(coef))
      for (int k = 0; k <= j; ++k)
        if (!is_zero(l2[k])) next[k] += coef * l2[k];
    p = std::move(next);
    l2pow = std::move(l2);
  }
  for (int k = 0; k <= n; ++k) r[k] = p[k];
  return r;
}

template <std::uint32_t P>
BinFormT<Fp<P>> reduce_mod_p(const BinForm& f) {
  std::vector<Fp<P>> c;
  c.reserve(f.degree() + 1);
  for (const auto& x : f.coeffs()) c.push_back(reduce_mod_p<P>(x));
  return BinFormT<Fp<P>>(std::move(c));
}

template <std::uint32_t P>
Mat2<Fp<P>> reduce_mod_p(const Mat2<CycNum>& g) {
  return mat2<Fp<P>>(reduce_mod_p<P>(g(0, 0)), reduce_mod_p<P>(g(0, 1)), reduce_mod_p<P>(g(1, 0)),
                     reduce_mod_p<P>(g(1, 1)));
}

// Dense univariate polynomials (index = power), used after dehomogenizing at t1 = 1.
namespace upoly {

template <class S>
int degree(const std::vector<S>& u) {
  for (int k = static_cast<int>(u.size()) - 1; k >= 0; --k)
    if (!is_zero(u[k])) return k;
  return -1;
}

template <class S>
void trim(std::vector<S>& u) {
  u.resize(degree(u) + 1);
}

/// lc(b)^(deg a - deg b + 1) * a mod b.
template <class S>
std::vector<S> pseudo_rem(std::vector<S> a, const std::vector<S>& b) {
  const int db = degree(b);
  const S& lb = b[db];
  for (int da = degree(a); da >= db; da = degree(a)) {
    S la = a[da];
    for (int k = 0; k <= da; ++k)
      if (!is_zero(a[k])) a[k] *= lb;
    for (int k = 0; k <= db; ++k)
      if (!is_zero(b[k])) a[k + da - db] -= la * b[k];
  }
  trim(a);
  return a;
}

/// Remainder of a modulo b over a field.
template <class S>
std::vector<S> rem(std::vector<S> a, const std::vector<S>& b) {
  const int db = degree(b);
  const S inv = inverse(b[db]);
  for (int da = degree(a); da >= db; da = degree(a)) {
    S q = a[da] * inv;
    for (int k = 0; k <= db; ++k)
      if (!is_zero(b[k])) a[k + da - db] -= q * b[k];
    a[da] = S(0);
  }
  trim(a);
  return a;
}

template <class S>
std::vector<S> derivative(const std::vector<S>& u) {
  std::vector<S> r;
  for (std::size_t k = 1; k < u.size(); ++k) r.push_back(u[k] * S(static_cast<long>(k)));
  trim(r);
  return r;
}

/// gcd up to a unit, by the subresultant pseudo-remainder sequence; monic.
template <class S>
std::vector<S> gcd(std::vector<S> a, std::vector<S> b) {
  trim(a);
  trim(b);
  if (degree(a) < degree(b)) std::swap(a, b);
  if (degree(b) < 0) {
    if (degree(a) < 0) throw ArithmeticError("gcd of two zero polynomials");
    S inv = inverse(a.back());
    for (auto& x : a) x *= inv;
    return a;
  }
  S g(1), h(1);
  while (true) {
    const int delta = degree(a) - degree(b);
    std::vector<S> r = pseudo_rem(a, b);
    if (degree(r) < 0) break;
    if (degree(r) == 0) return {S(1)};
    a = std::move(b);
    S div = g * h.pow(delta);
    S dinv = inverse(div);
    for (auto& x : r)
      if (!is_zero(x)) x *= dinv;
    b = std::move(r);
    g = a.back();
    h = delta == 0 ? h : g.pow(delta) * inverse(h.pow(delta - 1));
  }
  S inv = inverse(b.back());
  for (auto& x : b) x *= inv;
  return b;
}

}  // namespace upoly

/// Power of t1 dividing f (n for the zero form).
template <class S>
int t1_multiplicity(const BinFormT<S>& f) {
  for (int k = f.degree(); k >= 0; --k)
    if (!is_zero(f[k])) return f.degree() - k;
  return f.degree();
}

/// Monic gcd; both zero is an arithmetic error.
template <class S>
BinFormT<S> gcd(const BinFormT<S>& f, const BinFormT<S>& g) {
  if (f.is_zero() && g.is_zero()) throw ArithmeticError("gcd of two zero forms");
  if (g.is_zero()) return f.monic();
  if (f.is_zero()) return g.monic();
  const int m = std::min(t1_multiplicity(f), t1_multiplicity(g));
  std::vector<S> w = upoly::gcd(f.coeffs(), g.coeffs());
  const int dw = upoly::degree(w);
  BinFormT<S> r(dw + m);
  for (int k = 0; k <= dw; ++k) r[k] = w[k];
  return r;
}

/// Exact divisibility of g by f.
template <class S>
bool divides(const BinFormT<S>& f, const BinFormT<S>& g) {
  if (f.is_zero()) throw ArithmeticError("divisibility by the zero form");
  if (g.is_zero()) return true;
  if (f.degree() > g.degree() || t1_multiplicity(f) > t1_multiplicity(g)) return false;
  return upoly::degree(upoly::rem(g.coeffs(), f.coeffs())) < 0;
}

/// gcd(f, df/dt0, df/dt1) is constant. Exact in characteristic 0; over F_p a
/// true answer certifies squarefreeness of any lift.
template <class S>
bool squarefree_direct(const BinFormT<S>& f) {
  if (f.is_zero()) return false;
  if (t1_multiplicity(f) > 1) return false;
  std::vector<S> u = f.coeffs();
  upoly::trim(u);
  if (upoly::degree(u) <= 0) return true;
  return upoly::degree(upoly::gcd(u, upoly::derivative(u))) == 0;
}

struct SquarefreeResult {
  bool value = false;
  /// Prime of the modular certificate, or 0 when decided exactly.
  std::uint32_t prime = 0;
  std::string method() const { return prime ? "mod " + std::to_string(prime) : "exact"; }
};

/// First certificate prime at which f reduces to a squarefree form.
std::optional<std::uint32_t> squarefree_mod_p(const BinForm& f);
/// Same over a chosen subset of kCertPrimes, tried in the given order.
std::optional<std::uint32_t> squarefree_mod_p(const BinForm& f, const std::vector<std::uint32_t>& primes);

/// Modular certificate when available; negatives always confirmed exactly.
SquarefreeResult is_squarefree(const BinForm& f);
SquarefreeResult is_squarefree(const BinForm& f, const std::vector<std::uint32_t>& primes);

/// p0 p2 - p1^2; degrees are checked only when p1 is nonzero.
BinForm disc_conic(const BinForm& p0, const BinForm& p1, const BinForm& p2);

/// The three icosahedral Gruendformen, of degrees 30, 20, 12.
BinForm grundform(int i);

}  // namespace cremona
