#include <optional>

#include "cremona/cyclo7.hpp"
#include "family_internal.hpp"

namespace cremona {

using namespace detail;

namespace {

using Terms = std::vector<std::pair<long, std::vector<int>>>;

template <class S>
WeightedPoly<S> from_terms(const std::vector<int>& weights, const Terms& terms) {
  WeightedPoly<S> f(weights);
  for (const auto& [c, e] : terms) f.add_term(e, S(c));
  return f;
}

// x_i -> sum_j g(i, j) x_j.
template <class S>
WeightedPoly<S> linear_image(const WeightedPoly<S>& f, const MatX<S>& g) {
  const auto& w = f.weights();
  std::vector<WeightedPoly<S>> img;
  for (int i = 0; i < g.rows(); ++i) {
    WeightedPoly<S> l(w);
    for (int j = 0; j < g.cols(); ++j) {
      if (is_zero(g(i, j))) continue;
      if (w[i] != w[j]) throw std::invalid_argument("linear map mixes weights");
      l.add_term(WeightedPoly<S>::variable(w, j).terms().begin()->first, g(i, j));
    }
    img.push_back(l);
  }
  return f.substitute(img);
}

// lambda with f(g x) = lambda f(x).
template <class S>
std::optional<S> scale_factor(const WeightedPoly<S>& f, const MatX<S>& g) {
  const WeightedPoly<S> h = linear_image(f, g);
  if (f.is_zero()) return std::nullopt;
  const auto& [e, c] = *f.terms().begin();
  auto it = h.terms().find(e);
  if (it == h.terms().end()) return std::nullopt;
  const S lambda = it->second / c;
  if (h != f * lambda) return std::nullopt;
  return lambda;
}

void add_smooth(FamilyCert& c, const WPoly& f, const CertOptions& opt, const std::string& what) {
  std::string ev;
  bool ok = false;
  for (std::uint32_t p : opt.primes) {
    try {
      const SmoothCert s = smooth_mod_p(f, p);
      ev += (ev.empty() ? "" : "; ") + std::string(s.smooth ? "smooth" : "singular") + " mod " + std::to_string(p) +
            " (" + std::to_string(s.points) + " points)";
      if (s.smooth) {
        ok = true;
        break;
      }
    } catch (const BadPrime& e) {
      ev += (ev.empty() ? "" : "; ") + std::string("bad prime ") + std::to_string(p);
    }
  }
  c.add("smooth", ok, what + ": " + ev);
}

const Terms kKlein = {{1, {3, 1, 0}}, {1, {0, 3, 1}}, {1, {1, 0, 3}}};

MatX<Cyc7> cyclic3() {
  MatX<Cyc7> a = MatX<Cyc7>::Zero(3, 3);
  a(0, 1) = a(1, 2) = a(2, 0) = Cyc7(1);
  return a;
}

MatX<Cyc7> beta7() {
  MatX<Cyc7> b = MatX<Cyc7>::Zero(3, 3);
  b(0, 0) = Cyc7::zeta_pow(1);
  b(1, 1) = Cyc7::zeta_pow(4);
  b(2, 2) = Cyc7::zeta_pow(2);
  return b;
}

// The involution of the Klein quartic: entries zeta^a - zeta^(-a) over sqrt(-7).
MatX<Cyc7> klein_involution() {
  const auto d = [](int a) { return Cyc7::zeta_pow(a) - Cyc7::zeta_pow(7 - a); };
  const Cyc7 x = d(1), y = d(2), z = d(4);
  MatX<Cyc7> m(3, 3);
  m << x, y, z, y, z, x, z, x, y;
  const Cyc7 s = inverse(sqrt_minus7());
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) *= s;
  return m;
}

template <class S>
S det3(const MatX<S>& m) {
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

template <int N>
ProjMat<Cyc7, N> proj(const MatX<Cyc7>& m) {
  return ProjMat<Cyc7, N>(MatN<Cyc7, N>(m));
}

}  // namespace

FamilyCert cert_klein(const CertOptions& opt) {
  FamilyCert c = start({"K_S9", "klein", {}, {}}, opt);
  c.predicted = "L2(7)";
  const auto f = from_terms<Cyc7>({1, 1, 1}, kKlein);
  const auto a = cyclic3(), b = beta7(), r = klein_involution();
  const auto la = scale_factor(f, a), lb = scale_factor(f, b), lr = scale_factor(f, r);
  c.add("alpha-beta-invariant", la == Cyc7(1) && lb == Cyc7(1),
        "cyclic shift and diag(e7, e7^4, e7^2) fix the quartic: monomial exponents 3+4, 12+2, 6+1 are 0 mod 7");
  const auto h21 = FinGroup<ProjMat<Cyc7, 3>>::closure({proj<3>(a), proj<3>(b)}, opt.cap);
  c.add("order-21", h21.order() == 21, "<alpha, beta> has order " + std::to_string(h21.order()));
  const MatX<Cyc7> r2 = r * r;
  c.add("involution", lr == Cyc7(1) && r2 == MatX<Cyc7>::Identity(3, 3) && det3(r) == Cyc7(-1),
        "R = M / sqrt(-7) fixes the quartic exactly, R^2 = I, det R = -1");
  add_smooth(c, from_terms<CycNum>({1, 1, 1}, kKlein), opt, "Klein quartic");
  guarded(c, "group-type", [&] {
    const auto g = FinGroup<ProjMat<Cyc7, 3>>::closure({proj<3>(a), proj<3>(b), proj<3>(r)}, opt.cap);
    const auto rep = report(g);
    add_group_check(c, rep.label, rep.evidence());
  });
  return c;
}

FamilyCert cert_valentiner(const CertOptions& opt) {
  FamilyCert c = start({"K_S9", "valentiner", {}, {}}, opt);
  c.predicted = "A6";
  const Terms sextic = {{10, {3, 3, 0}}, {9, {5, 0, 1}}, {1, {0, 6, 0}},
                        {-45, {2, 2, 2}}, {-135, {1, 1, 4}}, {27, {0, 0, 6}}};
  add_smooth(c, from_terms<CycNum>({1, 1, 1}, sextic), opt, "sextic");
  c.notes.push_back("no generators of the A6 action are given; only nonsingularity is certified");
  return c;
}

FamilyCert cert_dp2(const CertOptions& opt) {
  FamilyCert c = start({"dp2", "", {}, {}}, opt);
  c.predicted = "Z2xL2(7)";
  // T3 carries weight 2.
  const std::vector<int> w{1, 1, 1, 2};
  Terms eq = kKlein;
  for (auto& [k, e] : eq) e.push_back(0);
  eq.push_back({1, {0, 0, 0, 2}});
  const auto f = from_terms<Cyc7>(w, eq);
  const auto lift = [](const MatX<Cyc7>& m, long s) {
    MatX<Cyc7> x = MatX<Cyc7>::Zero(4, 4);
    x.block(0, 0, 3, 3) = m;
    x(3, 3) = Cyc7(s);
    return x;
  };
  const MatX<Cyc7> alpha = lift(cyclic3(), 1), beta = lift(beta7(), 1), rho = lift(klein_involution(), 1),
                   bertini = lift(MatX<Cyc7>::Identity(3, 3), -1);
  c.add("alpha-beta-invariant", scale_factor(f, alpha) == Cyc7(1) && scale_factor(f, beta) == Cyc7(1),
        "alpha and beta fix T3^2 + T0^3 T1 + T1^3 T2 + T2^3 T0 in P(1,1,1,2)");
  c.add("lifts-invariant", scale_factor(f, rho) == Cyc7(1) && scale_factor(f, bertini) == Cyc7(1),
        "the lift of R and the Bertini involution T3 -> -T3 fix the surface");
  {
    // beta has the coordinate points as eigenpoints; alpha moves each of them.
    const auto mb = MonomialMap::make(7, w, {0, 1, 2, 3}, {1, 4, 2, 0});
    const auto ma = MonomialMap::make(7, w, {1, 2, 0, 3}, {0, 0, 0, 0});
    std::string ev;
    bool ok = false;
    try {
      const auto fixed = common_fixed_points_on({mb, ma}, from_terms<CycNum>(w, eq));
      ok = fixed.empty();
      ev = std::to_string(fixed.size()) + " points of the surface fixed by <alpha, beta>";
    } catch (const std::exception& e) {
      ev = std::string("error: ") + e.what();
    }
    c.add("no-fixed-point", ok, ev);
  }
  add_smooth(c, from_terms<CycNum>(w, eq), opt, "double cover branched in the Klein quartic");
  guarded(c, "group-type", [&] {
    std::vector<WeightedClass<Cyc7>> gens;
    for (const auto* m : {&alpha, &beta, &rho, &bertini}) gens.emplace_back(*m, w);
    const auto rep = report(FinGroup<WeightedClass<Cyc7>>::closure(gens, opt.cap));
    add_group_check(c, rep.label, rep.evidence());
  });
  return c;
}

FamilyCert cert_dp3(const CertOptions& opt) {
  FamilyCert c = start({"dp3", "", {}, {}}, opt);
  c.predicted = "S5";
  const std::vector<int> w{1, 1, 1, 1};
  const Terms cubic = {{1, {2, 1, 0, 0}}, {1, {0, 2, 1, 0}}, {1, {0, 0, 2, 1}}, {1, {1, 0, 0, 2}}};
  const auto f = from_terms<CycNum>(w, cubic);
  MatX<CycNum> d = MatX<CycNum>::Zero(4, 4), s = MatX<CycNum>::Zero(4, 4);
  d(0, 0) = CycNum(1);
  d(1, 1) = root_of_unity(4, 5);
  d(2, 2) = root_of_unity(1, 5);
  d(3, 3) = root_of_unity(2, 5);
  s(0, 1) = s(1, 2) = s(2, 3) = s(3, 0) = CycNum(1);
  const auto ld = scale_factor(f, d), ls = scale_factor(f, s);
  c.add("maps-invariant", ld.has_value() && ls.has_value(),
        std::string("diagonal map ") + (ld ? "fixes" : "does not fix") + " the cubic up to a scalar; cyclic map " +
            (ls ? "fixes" : "does not fix") + " it");
  add_smooth(c, f, opt, "cubic");
  guarded(c, "group-type", [&] {
    const auto g = FinGroup<ProjMat<CycNum, 4>>::closure(
        {ProjMat<CycNum, 4>(MatN<CycNum, 4>(d)), ProjMat<CycNum, 4>(MatN<CycNum, 4>(s))}, opt.cap);
    const auto rep = report(g);
    c.observed = rep.label;
    c.add("closure-order", g.order() == 120, "projective closure of the two maps has order " + std::to_string(g.order()));
    add_group_check(c, rep.label, rep.evidence());
    if (g.order() != 120)
      c.notes.push_back("the two maps generate a group of order " + std::to_string(g.order()) +
                        "; S5 needs a further generator");
  });
  return c;
}

namespace {

using V3 = Eigen::Matrix<CycNum, 3, 1>;

V3 v3(long a, long b, long c) {
  V3 v;
  v << CycNum(a), CycNum(b), CycNum(c);
  return v;
}

V3 cross(const V3& a, const V3& b) {
  V3 r;
  r << a(1) * b(2) - a(2) * b(1), a(2) * b(0) - a(0) * b(2), a(0) * b(1) - a(1) * b(0);
  return r;
}

bool proportional(const V3& a, const V3& b) {
  const V3 x = cross(a, b);
  return is_zero(x(0)) && is_zero(x(1)) && is_zero(x(2));
}

// The quadratic map of the quintic del Pezzo surface.
V3 sigma(const V3& t) {
  V3 r;
  r << t(0) * (t(2) - t(1)), t(2) * (t(0) - t(1)), t(0) * t(2);
  return r;
}

// Blown-up points p1..p4 and the ten lines: E_k = k, L_ij = 4 + pair index.
struct Dp5Lines {
  std::array<V3, 4> pts{v3(0, 0, 1), v3(0, 1, 0), v3(1, 0, 0), v3(1, 1, 1)};
  std::array<std::pair<int, int>, 6> pairs{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

  int point(const V3& v) const {
    for (int k = 0; k < 4; ++k)
      if (proportional(v, pts[k])) return k;
    return -1;
  }
  int pair(int i, int j) const {
    for (int k = 0; k < 6; ++k)
      if (pairs[k] == std::pair(std::min(i, j), std::max(i, j))) return 4 + k;
    return -1;
  }
  int line(const V3& l) const {
    for (int k = 0; k < 6; ++k)
      if (proportional(l, cross(pts[pairs[k].first], pts[pairs[k].second]))) return 4 + k;
    return -1;
  }
  // Intersection number of two distinct lines.
  int meet(int a, int b) const {
    if (a < 4 && b < 4) return 0;
    if (a >= 4 && b >= 4) {
      const auto [i, j] = pairs[a - 4];
      const auto [k, l] = pairs[b - 4];
      return i != k && i != l && j != k && j != l;
    }
    if (a >= 4) std::swap(a, b);
    return pairs[b - 4].first == a || pairs[b - 4].second == a;
  }

  std::vector<int> linear(const MatX<CycNum>& g) const {
    std::vector<int> img(10, -1), pi(4);
    for (int k = 0; k < 4; ++k) pi[k] = img[k] = point(V3(g * pts[k]));
    for (int k = 0; k < 6; ++k)
      if (pi[pairs[k].first] >= 0 && pi[pairs[k].second] >= 0) img[4 + k] = pair(pi[pairs[k].first], pi[pairs[k].second]);
    return img;
  }

  // Base points p1, p2, p3; L_ij inside the base is contracted, E_k expands.
  std::vector<int> quadratic() const {
    std::vector<int> img(10, -1);
    std::array<int, 4> c{};  // image point of L_ij, indexed by the missing base point
    for (int m = 0; m < 3; ++m) {
      const int i = (m + 1) % 3, j = (m + 2) % 3;
      const V3 q = sigma(V3(pts[i] + pts[j] * CycNum(2))), q2 = sigma(V3(pts[i] + pts[j] * CycNum(3)));
      c[m] = proportional(q, q2) ? point(q) : -1;
      img[pair(i, j)] = c[m];
    }
    for (int k = 0; k < 3; ++k) {
      // E_k maps to the line through the images of the two base lines through p_k.
      const int i = (k + 1) % 3, j = (k + 2) % 3;
      img[k] = c[j] >= 0 && c[i] >= 0 ? pair(c[j], c[i]) : -1;
      const V3 a = sigma(pts[3]), b = sigma(V3(pts[k] + pts[3] * CycNum(2)));
      img[pair(k, 3)] = line(cross(a, b));
    }
    img[3] = point(sigma(pts[3]));
    return img;
  }

  std::string check(const std::vector<int>& img) const {
    std::vector<int> seen(10, 0);
    for (int x : img) {
      if (x < 0) return "a line has no image among the ten";
      if (seen[x]++) return "map is not a bijection of the lines";
    }
    for (int a = 0; a < 10; ++a)
      for (int b = a + 1; b < 10; ++b)
        if (meet(a, b) != meet(img[a], img[b])) return "incidence not preserved";
    return {};
  }
};

MatX<CycNum> m3(std::initializer_list<long> e) {
  MatX<CycNum> m(3, 3);
  auto it = e.begin();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = CycNum(*it++);
  return m;
}

}  // namespace

FamilyCert cert_dp5_aut(const CertOptions& opt) {
  FamilyCert c = start({"dp5", "aut", {}, {}}, opt);
  c.predicted = "S5";
  const Dp5Lines d;
  const auto g1 = d.linear(m3({0, 1, 0, 0, 0, 1, 1, 0, 0}));
  const auto g2 = d.linear(m3({0, 0, 1, -1, 0, 1, 0, -1, 1}));
  const auto s = d.quadratic();
  const std::string e1 = d.check(g1), e2 = d.check(g2), es = d.check(s);
  c.add("linear-maps", e1.empty() && e2.empty(), e1.empty() && e2.empty()
                                                     ? "both linear maps permute p1..p4 and preserve the ten lines"
                                                     : e1 + e2);
  c.add("quadratic-map", es.empty(), es.empty() ? "the quadratic map permutes the ten lines preserving incidence" : es);
  if (!e1.empty() || !e2.empty() || !es.empty()) return c;
  guarded(c, "group-type", [&] {
    const auto to_perm = [](const std::vector<int>& v) {
      Perm p;
      for (int x : v) p.img.push_back(static_cast<std::uint8_t>(x));
      return p;
    };
    const auto rep = report(FinGroup<Perm>::closure({to_perm(g1), to_perm(g2), to_perm(s)}, opt.cap));
    add_group_check(c, rep.label, rep.evidence() + " on the ten lines");
  });
  return c;
}

FamilyCert cert_dp5_involution(const CertOptions& opt) {
  FamilyCert c = start({"dp5", "involution", {}, {}}, opt);
  const std::vector<int> w{1, 1, 1};
  const auto t = [&](int i) { return WPoly::variable(w, i); };
  const std::vector<WPoly> s = {t(0) * (t(2) - t(1)), t(2) * (t(0) - t(1)), t(0) * t(2)};
  std::vector<WPoly> pow = s;
  int order = 0;
  for (int k = 1; k <= 6 && !order; ++k) {
    if (k > 1) {
      std::vector<WPoly> next;
      for (const auto& si : s) next.push_back(si.substitute(pow));
      pow = std::move(next);
    }
    // sigma^k(T) proportional to T: c_i T_j = c_j T_i.
    bool prop = true;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) prop = prop && pow[i] * t(j) == pow[j] * t(i);
    if (prop) order = k;
  }
  const int factor = order ? *pow[0].degree() - 1 : -1;
  c.add("involution", order == 2,
        order ? "sigma^" + std::to_string(order) + " = id up to a common factor of degree " + std::to_string(factor) +
                    "; sigma^k is not the identity for 1 <= k < " + std::to_string(order)
              : "sigma^k differs from the identity for k <= 6");
  return c;
}

std::vector<FamilyCert> delpezzo_suite(const CertOptions& opt) {
  return {cert_klein(opt), cert_valentiner(opt), cert_dp2(opt), cert_dp3(opt), cert_dp5_aut(opt), cert_dp5_involution(opt)};
}

}  // namespace cremona
