#pragma once

// Sparse polynomials on weighted projective spaces, monomial maps, and
// weighted projective classes of block matrices.

#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cremona/binform.hpp"
#include "cremona/group.hpp"
#include "cremona/icosahedral.hpp"
#include "cremona/linalg.hpp"

namespace cremona {

/// Polynomial in variables T_0..T_{k-1} of weights w_i, stored as a sorted
/// exponent map. Homogeneity is not enforced on construction; callers that
/// need a hypersurface check `is_homogeneous`.
template <class S>
class WeightedPoly {
 public:
  using Exponent = std::vector<int>;

  WeightedPoly() = default;
  explicit WeightedPoly(std::vector<int> weights) : w_(std::move(weights)) {}

  static WeightedPoly variable(const std::vector<int>& weights, int i) {
    Exponent e(weights.size(), 0);
    e.at(i) = 1;
    return monomial(weights, e);
  }
  static WeightedPoly monomial(const std::vector<int>& weights, const Exponent& e, const S& c = S(1)) {
    WeightedPoly p(weights);
    p.add_term(e, c);
    return p;
  }
  static WeightedPoly constant(const std::vector<int>& weights, const S& c) {
    return monomial(weights, Exponent(weights.size(), 0), c);
  }

  const std::vector<int>& weights() const { return w_; }
  int nvars() const { return static_cast<int>(w_.size()); }
  const std::map<Exponent, S>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  std::size_t term_count() const { return t_.size(); }

  int weighted_degree(const Exponent& e) const {
    int d = 0;
    for (int i = 0; i < nvars(); ++i) d += e[i] * w_[i];
    return d;
  }
  /// Weighted degree of a nonzero homogeneous polynomial.
  std::optional<int> degree() const {
    if (t_.empty()) return std::nullopt;
    const int d = weighted_degree(t_.begin()->first);
    for (const auto& [e, c] : t_)
      if (weighted_degree(e) != d) return std::nullopt;
    return d;
  }
  bool is_homogeneous() const { return degree().has_value(); }

  void add_term(const Exponent& e, const S& c) {
    if (static_cast<int>(e.size()) != nvars()) throw std::invalid_argument("exponent length differs from variable count");
    if (is_zero_s(c)) return;
    auto [it, fresh] = t_.emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (is_zero_s(it->second)) t_.erase(it);
    }
  }

  WeightedPoly& operator+=(const WeightedPoly& g) {
    same_ring(g);
    for (const auto& [e, c] : g.t_) add_term(e, c);
    return *this;
  }
  WeightedPoly& operator-=(const WeightedPoly& g) {
    same_ring(g);
    for (const auto& [e, c] : g.t_) add_term(e, -c);
    return *this;
  }
  WeightedPoly& operator*=(const S& s) {
    if (is_zero_s(s)) {
      t_.clear();
      return *this;
    }
    for (auto& [e, c] : t_) c *= s;
    return *this;
  }
  friend WeightedPoly operator+(WeightedPoly f, const WeightedPoly& g) { return f += g; }
  friend WeightedPoly operator-(WeightedPoly f, const WeightedPoly& g) { return f -= g; }
  friend WeightedPoly operator*(WeightedPoly f, const S& s) { return f *= s; }
  friend WeightedPoly operator*(const WeightedPoly& f, const WeightedPoly& g) {
    f.same_ring(g);
    WeightedPoly r(f.w_);
    Exponent e(f.w_.size());
    for (const auto& [ea, ca] : f.t_)
      for (const auto& [eb, cb] : g.t_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    return r;
  }
  friend bool operator==(const WeightedPoly& f, const WeightedPoly& g) { return f.w_ == g.w_ && f.t_ == g.t_; }
  friend bool operator!=(const WeightedPoly& f, const WeightedPoly& g) { return !(f == g); }

  WeightedPoly pow(int k) const {
    WeightedPoly r = constant(w_, S(1)), b = *this;
    for (; k > 0; k >>= 1) {
      if (k & 1) r = r * b;
      if (k > 1) b = b * b;
    }
    return r;
  }

  WeightedPoly derivative(int i) const {
    WeightedPoly r(w_);
    for (const auto& [e, c] : t_) {
      if (e[i] == 0) continue;
      Exponent f = e;
      --f[i];
      r.add_term(f, c * S(static_cast<long>(e[i])));
    }
    return r;
  }

  S eval(const std::vector<S>& x) const {
    S acc(0);
    for (const auto& [e, c] : t_) {
      S m = c;
      for (int i = 0; i < nvars(); ++i)
        for (int k = 0; k < e[i]; ++k) m *= x[i];
      acc += m;
    }
    return acc;
  }

  /// f(images_0, ..., images_{k-1}); the images share one target ring.
  WeightedPoly substitute(const std::vector<WeightedPoly>& images) const {
    if (static_cast<int>(images.size()) != nvars()) throw std::invalid_argument("substitution needs one image per variable");
    std::vector<std::vector<WeightedPoly>> powers(images.size());
    WeightedPoly r(images.front().weights());
    for (const auto& [e, c] : t_) {
      WeightedPoly m = constant(r.weights(), c);
      for (int i = 0; i < nvars(); ++i) {
        auto& p = powers[i];
        if (p.empty()) p.push_back(constant(r.weights(), S(1)));
        while (static_cast<int>(p.size()) <= e[i]) p.push_back(p.back() * images[i]);
        if (e[i]) m = m * p[e[i]];
      }
      r += m;
    }
    return r;
  }

  /// Exact division by the variable T_i; nullopt when some term lacks it.
  std::optional<WeightedPoly> divide_by_variable(int i) const {
    WeightedPoly r(w_);
    for (const auto& [e, c] : t_) {
      if (e[i] == 0) return std::nullopt;
      Exponent f = e;
      --f[i];
      r.add_term(f, c);
    }
    return r;
  }

  template <class T, class F>
  WeightedPoly<T> map_coeffs(F&& f) const {
    WeightedPoly<T> r(w_);
    for (const auto& [e, c] : t_) r.add_term(e, f(c));
    return r;
  }

  /// Terms "c*T0^a0*T1^a1..." in exponent order, with c in the scalar's text form.
  std::string to_string() const {
    if (t_.empty()) return "0";
    std::string s;
    for (const auto& [e, c] : t_) {
      if (!s.empty()) s += " + ";
      s += "(" + cremona::to_string(c) + ")";
      for (int i = 0; i < nvars(); ++i)
        if (e[i]) s += "*T" + std::to_string(i) + (e[i] > 1 ? "^" + std::to_string(e[i]) : "");
    }
    return s;
  }

 private:
  static bool is_zero_s(const S& c) { return cremona::is_zero(c); }
  void same_ring(const WeightedPoly& g) const {
    if (w_ != g.w_) throw std::invalid_argument("polynomials live on different weighted spaces");
  }

  std::vector<int> w_;
  std::map<Exponent, S> t_;
};

using WPoly = WeightedPoly<CycNum>;

/// Integer-coefficient polynomial from (coefficient, exponent) pairs.
WPoly wpoly(const std::vector<int>& weights, const std::vector<std::pair<long, std::vector<int>>>& terms);

/// The bihomogeneous form sum_k c_k x0^(a) x1^(b) t0^k t1^(n-k) on P^1 x P^1,
/// as a polynomial in (x0, x1, t0, t1).
WPoly bihomogeneous(const BinForm& f, int x0_exp, int x1_exp);

/// Segre coordinates (x : y : z : w) = (x0 t0 : x0 t1 : x1 t0 : x1 t1). Each
/// monomial of bidegree (k, k) is lifted with the largest power of x.
WPoly segre_lift(const WPoly& f);
/// nu^* of a polynomial in (x, y, z, w).
WPoly segre_pullback(const WPoly& f);

/// T_i -> eps_M^(e_i) T_(perm_i) on a weighted projective space, where eps_M
/// is a primitive M-th root of unity. Stored projectively: exponents are
/// shifted by a weighted scalar so that the first weight-1 coordinate has
/// exponent 0.
struct MonomialMap {
  int modulus = 1;
  std::vector<int> weights;
  std::vector<int> perm;
  std::vector<int> expo;

  static MonomialMap make(int modulus, std::vector<int> weights, std::vector<int> perm, std::vector<int> expo);
  /// (a * b)(x) = a(b(x)).
  friend MonomialMap operator*(const MonomialMap& a, const MonomialMap& b);
  friend bool operator==(const MonomialMap& a, const MonomialMap& b) {
    return a.perm == b.perm && a.expo == b.expo;
  }
  std::string to_string() const;
};
std::size_t hash_value(const MonomialMap& m);
MonomialMap identity_of(const MonomialMap& m);

/// k with f(phi(T)) = eps_M^k f(T), or nullopt when phi does not preserve
/// the hypersurface f = 0. Exact: monomial maps send distinct monomials to
/// distinct monomials.
std::optional<int> preserved_phase(const MonomialMap& phi, const WPoly& f);

/// Points of the weighted space fixed by every map of `gens` and lying on
/// f = 0, found by eigen-analysis of the first (diagonal) map. Each
/// eigenspace must be a coordinate point; throws UnsupportedOrder otherwise.
std::vector<std::vector<int>> common_fixed_points_on(const std::vector<MonomialMap>& gens, const WPoly& f);

/// Result of a smoothness enumeration over F_p.
struct SmoothCert {
  bool smooth = false;
  std::uint32_t prime = 0;
  std::size_t points = 0;
  /// A singular point of the cone when one was found.
  std::vector<std::uint32_t> witness;
};

/// Enumerates the F_p-points of the affine cone over f = 0 (up to the
/// weighted scaling, which preserves the singular locus) and looks for a
/// common zero of f and its partials. Supported primes are kCertPrimes.
/// Throws BadPrime when f has a denominator divisible by p or vanishes mod p.
SmoothCert smooth_mod_p(const WPoly& f, std::uint32_t p);

/// Class of a block matrix modulo a torus acting diagonally on coordinates.
/// Coordinate i carries the character grading[k][i] of the k-th C* factor;
/// grading {w} is the ordinary weighted projective space P(w). Stage k scales
/// row i by c^(-grading[k][i]) so that the first nonzero entry among rows with
/// grading[k][i] = 1 becomes 1. Later stages must not move earlier pivot rows.
template <class S>
class WeightedClass {
 public:
  using Grading = std::vector<std::vector<int>>;

  WeightedClass() = default;
  WeightedClass(MatX<S> m, std::vector<int> weights) : WeightedClass(std::move(m), Grading{std::move(weights)}) {}
  WeightedClass(MatX<S> m, Grading grading) : m_(std::move(m)), g_(std::move(grading)) { canonicalize(); }

  const MatX<S>& matrix() const { return m_; }
  const Grading& grading() const { return g_; }
  friend WeightedClass operator*(const WeightedClass& a, const WeightedClass& b) {
    return WeightedClass(MatX<S>(a.m_ * b.m_), a.g_);
  }
  friend bool operator==(const WeightedClass& a, const WeightedClass& b) { return a.m_ == b.m_; }
  bool is_identity() const { return m_ == MatX<S>::Identity(m_.rows(), m_.cols()); }

 private:
  static S power(const S& c, int e) {
    S base = e < 0 ? inverse(c) : c, r(1);
    for (int k = 0; k < std::abs(e); ++k) r *= base;
    return r;
  }

  void canonicalize() {
    std::vector<int> pivots;
    for (const auto& w : g_) {
      if (static_cast<int>(w.size()) != m_.rows()) throw std::invalid_argument("grading length differs from matrix size");
      for (int p : pivots)
        if (w[p] != 0) throw std::invalid_argument("grading stage moves an earlier pivot row");
      int pr = -1, pc = -1;
      for (int i = 0; i < m_.rows() && pr < 0; ++i) {
        if (w[i] != 1) continue;
        for (int j = 0; j < m_.cols(); ++j)
          if (!is_zero(m_(i, j))) {
            pr = i;
            pc = j;
            break;
          }
      }
      if (pr < 0) throw ArithmeticError("weighted class needs a nonzero row of weight 1");
      pivots.push_back(pr);
      const S c = m_(pr, pc);
      if (c == S(1)) continue;
      for (int r = 0; r < m_.rows(); ++r) {
        if (w[r] == 0) continue;
        const S f = power(c, -w[r]);
        for (int j = 0; j < m_.cols(); ++j)
          if (!is_zero(m_(r, j))) m_(r, j) *= f;
      }
    }
  }

  MatX<S> m_;
  Grading g_;
};

template <class S>
std::size_t hash_value(const WeightedClass<S>& c) {
  std::size_t h = 0;
  const auto& m = c.matrix();
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) h = h * 1000003u ^ std::hash<S>{}(m(i, j));
  return h;
}

template <class S>
WeightedClass<S> identity_of(const WeightedClass<S>& c) {
  return WeightedClass<S>(MatX<S>::Identity(c.matrix().rows(), c.matrix().cols()), c.grading());
}

template <class S>
struct WeightedClassHash {
  std::size_t operator()(const WeightedClass<S>& c) const { return hash_value(c); }
};

/// Matrix of f -> act(g, f) on degree-n forms, in the monomial basis
/// t0^k t1^(n-k) ordered by k.
template <class S>
MatX<S> sym_power(const Mat2<S>& g, int n) {
  MatX<S> m = MatX<S>::Zero(n + 1, n + 1);
  for (int k = 0; k <= n; ++k) {
    const BinFormT<S> img = act(g, BinFormT<S>::monomial(n, k));
    for (int r = 0; r <= n; ++r) m(r, k) = img[r];
  }
  return m;
}

/// Point action of g on the coordinates dual to degree-n monomials:
/// the transpose of sym_power, so that point_power(g h) = point_power(g) point_power(h).
template <class S>
MatX<S> point_power(const Mat2<S>& g, int n) {
  return sym_power(g, n).transpose();
}

/// Block-diagonal assembly.
template <class S>
MatX<S> block_diag(const std::vector<MatX<S>>& blocks) {
  int n = 0;
  for (const auto& b : blocks) n += static_cast<int>(b.rows());
  MatX<S> m = MatX<S>::Zero(n, n);
  int o = 0;
  for (const auto& b : blocks) {
    m.block(o, o, b.rows(), b.cols()) = b;
    o += static_cast<int>(b.rows());
  }
  return m;
}

/// Primitive m-th root of unity in F_61 (m | 60), compatible with the image of
/// zeta_20 used by reduce_mod_p: root_f61(20) = zeta_image<61>().
F61 root_f61(int m);

}  // namespace cremona
