#pragma once

// Orbits and stabilizers of finite subgroups of PGL(2) acting on P^1:
// (t0 : t1) -> (a t0 + b t1 : c t0 + d t1).

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cremona/binform.hpp"
#include "cremona/group.hpp"
#include "cremona/icosahedral.hpp"

namespace cremona {

/// Point of P^1 scaled so that its first nonzero coordinate is 1.
template <class S>
class P1PointT {
 public:
  P1PointT() : x0_(1), x1_(0) {}
  P1PointT(S x0, S x1) : x0_(std::move(x0)), x1_(std::move(x1)) {
    if (is_zero(x0_)) {
      if (is_zero(x1_)) throw std::invalid_argument("(0:0) is not a point of P^1");
      x1_ = S(1);
    } else if (x0_ != S(1)) {
      if (!is_zero(x1_)) x1_ *= inverse(x0_);
      x0_ = S(1);
    }
  }
  const S& x0() const { return x0_; }
  const S& x1() const { return x1_; }
  friend bool operator==(const P1PointT&, const P1PointT&) = default;
  std::string to_string() const { return cremona::to_string(x0_) + " : " + cremona::to_string(x1_); }

 private:
  S x0_, x1_;
};

template <class S>
std::size_t hash_value(const P1PointT<S>& p) {
  return std::hash<S>{}(p.x0()) * 31 + std::hash<S>{}(p.x1());
}

using P1Point = P1PointT<CycNum>;

template <class S>
struct P1Hash {
  std::size_t operator()(const P1PointT<S>& p) const { return hash_value(p); }
};

template <class S>
P1PointT<S> apply(const ProjMat2<S>& g, const P1PointT<S>& x) {
  return {g(0, 0) * x.x0() + g(0, 1) * x.x1(), g(1, 0) * x.x0() + g(1, 1) * x.x1()};
}

/// Linear form vanishing at x: x1 t0 - x0 t1.
template <class S>
BinFormT<S> vanishing_form(const P1PointT<S>& x) {
  return BinFormT<S>(std::vector<S>{-x.x0(), x.x1()});
}

template <class S>
struct OrbitCertT {
  P1PointT<S> base;
  std::vector<P1PointT<S>> points;
  std::size_t orbit_size = 0;
  /// Generator of the (cyclic) stabilizer; empty when it is trivial.
  std::vector<ProjMat2<S>> stabilizer_generators;
  std::size_t stabilizer_order = 0;
  std::size_t group_order = 0;

  bool orbit_stabilizer_holds() const { return orbit_size * stabilizer_order == group_order; }
  /// Product of the vanishing forms of all orbit points.
  BinFormT<S> orbit_form() const {
    BinFormT<S> f = BinFormT<S>::constant(S(1));
    for (const auto& p : points) f = f * vanishing_form(p);
    return f;
  }
};

using OrbitCert = OrbitCertT<CycNum>;

template <class S>
OrbitCertT<S> orbit_of(const P1PointT<S>& x, const FinGroup<ProjMat2<S>>& g) {
  OrbitCertT<S> c;
  c.base = x;
  c.group_order = g.order();
  std::unordered_map<P1PointT<S>, std::size_t, P1Hash<S>> seen;
  std::vector<std::size_t> stab;
  for (std::size_t i = 0; i < g.order(); ++i) {
    P1PointT<S> y = apply(g[i], x);
    if (y == x) stab.push_back(i);
    if (seen.emplace(y, c.points.size()).second) c.points.push_back(std::move(y));
  }
  c.orbit_size = c.points.size();
  c.stabilizer_order = stab.size();
  std::size_t best = 0;
  for (std::size_t i : stab)
    if (g.element_order(i) > g.element_order(best)) best = i;
  if (best != 0) c.stabilizer_generators.push_back(g[best]);
  return c;
}

/// Fixed-point quadratic c t0^2 + (d - a) t0 t1 - b t1^2 of g.
template <class S>
BinFormT<S> fixed_point_form(const ProjMat2<S>& g) {
  return BinFormT<S>(std::vector<S>{-g(0, 1), g(1, 1) - g(0, 0), g(1, 0)});
}

/// Nontrivial elements sharing a fixed-point pair. For a finite group these
/// are the nontrivial elements of a cyclic point stabilizer.
template <class S>
struct FixedPointClass {
  BinFormT<S> form;  // monic fixed-point quadratic
  std::vector<std::size_t> elements;
  std::size_t stabilizer_order() const { return elements.size() + 1; }
};

template <class S>
std::vector<FixedPointClass<S>> fixed_point_classes(const FinGroup<ProjMat2<S>>& g) {
  std::vector<FixedPointClass<S>> classes;
  for (std::size_t i = 1; i < g.order(); ++i) {
    BinFormT<S> q = fixed_point_form(g[i]).monic();
    auto it = std::find_if(classes.begin(), classes.end(), [&](const auto& c) { return c.form == q; });
    if (it == classes.end())
      classes.push_back({q, {i}});
    else
      it->elements.push_back(i);
  }
  for (std::size_t a = 0; a < classes.size(); ++a)
    for (std::size_t b = a + 1; b < classes.size(); ++b)
      if (gcd(classes[a].form, classes[b].form).degree() != 0)
        throw IntegrityError("distinct fixed-point classes share a point");
  return classes;
}

/// |G| divided by the largest point stabilizer.
template <class S>
std::size_t min_orbit_bound(const FinGroup<ProjMat2<S>>& g) {
  std::size_t best = 1;
  for (const auto& c : fixed_point_classes(g)) best = std::max(best, c.stabilizer_order());
  return g.order() / best;
}

/// Points (1 : r) with r = p/q, |p| <= 9, 1 <= q <= 9, drawn from the seed.
std::vector<P1Point> random_points(std::uint64_t seed, int count = 100);

struct StabilizerSweep {
  std::set<std::size_t> orders;
  /// Realized order -> number of fixed-point classes with it.
  std::map<std::size_t, std::size_t> class_counts;
  std::size_t random_points = 0;
  std::size_t random_trivial = 0;
  std::set<std::size_t> random_orbit_sizes;
};

/// Stabilizer orders realized on P^1: the fixed-point classes plus generic
/// random points.
StabilizerSweep stabilizer_orders(const ProjectiveGroup& g, std::uint64_t seed = 0, int samples = 100);

struct SpecialOrbit {
  std::size_t stabilizer_order = 0;
  std::size_t orbit_size = 0;
  int grundform_index = 0;
  /// Product of fixed-point quadratics of the class family equals Phi_i up to scalar.
  bool exact_form_match = false;
  /// Pointwise orbit mod 61 whose orbit form divides and is divided by Phi_i mod 61.
  bool modular_match = false;
  /// Pointwise orbit over Q(zeta_20), when its points are rational there.
  std::optional<OrbitCert> exact_orbit;
  OrbitCertT<F61> modular_orbit;
};

/// The orbits of sizes 12, 20, 30. Throws IntegrityError on a form mismatch.
std::vector<SpecialOrbit> special_orbits();

}  // namespace cremona
