#include <sstream>

#include "cremona/invariant.hpp"
#include "family_internal.hpp"

namespace cremona {

namespace detail {

std::string squarefree_evidence(const SquarefreeResult& r) {
  return std::string(r.value ? "squarefree" : "not squarefree") + " (" + r.method() + ")";
}

SquarefreeResult squarefree(const BinForm& f, const CertOptions& opt) {
  if (f.is_zero()) return {false, 0};
  return is_squarefree(f, opt.primes);
}

const std::vector<Mat2Q>& model_generators() {
  static const std::vector<Mat2Q> g(icosahedral().generators.begin(), icosahedral().generators.end());
  return g;
}

void add_group_check(FamilyCert& c, const std::string& label, const std::string& evidence) {
  c.observed = label;
  c.add("group-type", label == c.predicted, "predicted " + c.predicted + "; " + evidence);
}

WPoly conic_form(const BinForm& p0, const BinForm& p1, const BinForm& p2, int a, int b) {
  WPoly f = bihomogeneous(p0, a + 2, b);
  f += bihomogeneous(p1 * CycNum(2), a + 1, b + 1);
  f += bihomogeneous(p2, a, b + 2);
  return f;
}

std::array<BinForm, 3> diagonal_transform(const Mat2Q& m, const std::array<BinForm, 3>& p) {
  const CycNum &a = m(0, 0), &b = m(0, 1), &c = m(1, 0), &d = m(1, 1);
  const BinForm q0 = act(m, p[0]), q1 = act(m, p[1]), q2 = act(m, p[2]);
  return {q0 * (a * a) + q1 * (CycNum(2) * a * c) + q2 * (c * c), q0 * (a * b) + q1 * (a * d + b * c) + q2 * (c * d),
          q0 * (b * b) + q1 * (CycNum(2) * b * d) + q2 * (d * d)};
}

ImageGroup segre_action(int m, int w, bool diagonal) {
  using Elem = PairElem<Mat2<F61>, SignVec>;
  std::vector<Elem> gens;
  for (const auto& a : binary_generators_f61()) gens.push_back({a, {}});
  gens.push_back({Mat2<F61>::Identity(), {1}});
  const auto h = FinGroup<Elem>::closure(gens, 241);
  std::vector<int> weights(m, w);
  for (int k = 0; k < 4; ++k) weights.push_back(1);
  const std::function<WeightedClass<F61>(const Elem&)> rho = [&](const Elem& e) {
    const Mat2<F61> first = diagonal ? e.first : Mat2<F61>::Identity();
    MatX<F61> u = point_power(first, m - 1);
    if (e.second.bits) u = -u;
    MatX<F61> seg(4, 4);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k)
          for (int l = 0; l < 2; ++l) seg(2 * i + k, 2 * j + l) = first(i, j) * e.first(k, l);
    return WeightedClass<F61>(block_diag<F61>({u, seg}), weights);
  };
  return image_of<Elem, WeightedClass<F61>>(h, rho);
}

}  // namespace detail

using namespace detail;

namespace {

std::string deg_list(const std::vector<BinForm>& f) {
  std::string s;
  for (const auto& x : f) s += (s.empty() ? "" : ",") + std::to_string(x.degree());
  return s;
}

void add_noether(FamilyCert& c, int r, const std::string& data) {
  const NoetherData n = noether(r);
  c.add("noether", r >= 0, "r=" + std::to_string(n.r) + " K2=" + std::to_string(n.k2) + " from " + data);
}

bool all_invariant(const std::vector<BinForm>& forms) {
  for (const auto& f : forms)
    if (!membership(f)) return false;
  return true;
}

// F with p1(A t) + p0 F = p1 for each generator, and the matching identity
// for p2. Returns false when some generator admits no such F.
bool fe_shift(const BinForm& p0, const BinForm& p1, const BinForm& p2, int e, std::string& ev) {
  if (!membership(p0)) {
    ev = "p0 not invariant";
    return false;
  }
  int zero = 0;
  for (const auto& a : model_generators()) {
    const BinForm q1 = act(a, p1), q2 = act(a, p2);
    BinForm diff = p1 - q1;
    BinForm fe(e);
    if (!diff.is_zero()) {
      // Exact division of diff by p0, verified by multiplying back.
      std::vector<CycNum> num = diff.coeffs();
      const std::vector<CycNum>& den = p0.coeffs();
      const int dd = upoly::degree(den);
      for (int k = upoly::degree(num); k >= dd && k >= 0; k = upoly::degree(num)) {
        const CycNum q = num[k] / den[dd];
        if (k - dd > e) break;
        fe[k - dd] = q;
        for (int j = 0; j <= dd; ++j) num[k - dd + j] -= q * den[j];
      }
      if (p0 * fe != diff) {
        ev = "p0 does not divide p1 - A.p1";
        return false;
      }
    } else {
      ++zero;
    }
    // p2(A t) + 2 p1(A t) F + p0 F^2 = p2.
    BinForm lhs = q2;
    if (!fe.is_zero()) lhs += q1 * fe * CycNum(2) + p0 * fe * fe;
    if (lhs != p2) {
      ev = "p2 identity fails";
      return false;
    }
  }
  ev = "F_e solved for " + std::to_string(model_generators().size()) + " generators (" + std::to_string(zero) +
       " with F_e = 0)";
  return true;
}

// Abar5 on (u : x : t0 : t1) in P(wu, e, 1, 1) together with u -> -u.
GroupReport hyperelliptic_action(int wu, int e, std::size_t cap) {
  std::vector<WeightedClass<F61>> gens;
  const std::vector<int> w{wu, e, 1, 1};
  for (const auto& a : binary_generators_f61()) {
    MatX<F61> one = MatX<F61>::Identity(2, 2);
    MatX<F61> ta = a;
    gens.emplace_back(block_diag<F61>({one, ta}), w);
  }
  MatX<F61> iota = MatX<F61>::Identity(4, 4);
  iota(0, 0) = F61(-1);
  gens.emplace_back(iota, w);
  return report(FinGroup<WeightedClass<F61>>::closure(gens, cap));
}

}  // namespace

FamilyCert cert_exceptional(int g, const BinForm& f, int n, const CertOptions& opt) {
  FamilyCert c = start({"thExcept", "", {{"g", g}, {"n", n}}, {{"F", f}}}, opt);
  c.predicted = dihedral_times_label(n, g % 2 == 0 ? "Abar5" : "A5");
  c.add("parameters", g >= 1 && n >= 1, "g=" + std::to_string(g) + " n=" + std::to_string(n));
  if (g < 1 || n < 1) return c;
  c.add("degree", f.degree() == 2 * g + 2, "deg F=" + std::to_string(f.degree()) + " expected " + std::to_string(2 * g + 2));
  c.add("invariant", membership(f), "act(g, F) = F for the model generators");
  c.add("squarefree", squarefree(f, opt).value, squarefree_evidence(squarefree(f, opt)));

  const int m = g % 2 ? n : 2 * n;
  const std::vector<int> w{1, 1, g + 1, g + 1};
  WPoly eq = WPoly::monomial(w, {0, 0, 1, 1});
  for (int k = 0; k <= f.degree(); ++k)
    if (!f[k].is_zero()) eq.add_term({k, f.degree() - k, 0, 0}, f[k]);
  c.add("weighted-homogeneous", eq.degree() == std::optional<int>(2 * g + 2),
        "F + t2 t3 in P(1,1," + std::to_string(g + 1) + "," + std::to_string(g + 1) + ")");
  // The rotation and the swap fix t0, t1 and act on t2 t3 alone.
  const auto rot = MonomialMap::make(m, w, {0, 1, 2, 3}, {0, 0, 1, m - 1});
  const auto swap = MonomialMap::make(m, w, {0, 1, 3, 2}, {0, 0, 0, 0});
  const WPoly t23 = WPoly::monomial(w, {0, 0, 1, 1});
  const bool fiber_maps = preserved_phase(rot, t23) == std::optional<int>(0) && preserved_phase(swap, t23) == std::optional<int>(0);
  c.add("generator-maps", fiber_maps && membership(f),
        "model generators fix F; diag(eps" + std::to_string(m) + ", eps" + std::to_string(m) + "^-1) and the swap fix t2 t3");
  {
    const auto printed = paper_generators();
    std::string bad;
    for (int i = 0; i < 3; ++i) {
      const BinForm img = act(printed[i], f);
      if (img != f)
        bad += (bad.empty() ? "" : "; ") + std::string("map ") + std::to_string(i + 1) +
               (img == -f ? " sends F to -F" : " does not fix F");
    }
    if (!bad.empty()) c.notes.push_back("printed maps: " + bad);
  }
  add_noether(c, 2 * g + 2, "deg F");

  if (60 % m != 0) {
    c.notes.push_back("rotation of order " + std::to_string(m) + " is not defined over F_61; group not built");
    return c;
  }
  guarded(c, "group-type", [&] {
    std::vector<WeightedClass<F61>> gens;
    for (const auto& a : binary_generators_f61()) {
      MatX<F61> ta = a;
      gens.emplace_back(block_diag<F61>({ta, MatX<F61>::Identity(2, 2)}), w);
    }
    MatX<F61> r = MatX<F61>::Identity(4, 4), s = MatX<F61>::Zero(4, 4);
    r(2, 2) = root_f61(m);
    r(3, 3) = root_f61(m).inverse();
    s(0, 0) = s(1, 1) = s(2, 3) = s(3, 2) = F61(1);
    gens.emplace_back(r, w);
    gens.emplace_back(s, w);
    const auto rep = report(FinGroup<WeightedClass<F61>>::closure(gens, opt.cap));
    add_group_check(c, rep.label, rep.evidence() + " m=" + std::to_string(m));
  });
  return c;
}

std::array<BinForm, 3> diagonal_conic(const BinForm& a, const BinForm& b, const BinForm& c) {
  const int n = a.degree();
  if (b.degree() != n - 2 || c.degree() != n - 4) throw DegreeMismatch("diagonal_conic needs degrees n, n-2, n-4");
  const BinForm t0 = BinForm::monomial(1, 1), t1 = BinForm::monomial(1, 0);
  std::array<BinForm, 3> p = {a.d0().d0(), a.d0().d1(), a.d1().d1()};
  const BinForm b0 = b.d0(), b1 = b.d1();
  const CycNum half(mpq_class(1, 2));
  p[0] += t1 * b0;
  p[1] += (t1 * b1 - t0 * b0) * half;
  p[2] -= t0 * b1;
  p[0] += t1 * t1 * c;
  p[1] -= t0 * t1 * c;
  p[2] += t0 * t0 * c;
  return p;
}

namespace {

void add_diagonal_invariance(FamilyCert& c, const std::array<BinForm, 3>& p) {
  bool ok = true;
  for (const auto& a : model_generators())
    if (diagonal_transform(a, p) != p) ok = false;
  c.add("equation-invariant", ok, "p0 x0^2 + 2 p1 x0 x1 + p2 x1^2 fixed by (A x, A t) for the model generators");
}

void add_segre(FamilyCert& c, const std::array<BinForm, 3>& p, int xdeg) {
  // x-monomials of degree xdeg times the equation reach bidegree (k, k).
  bool ok = true;
  std::string ev;
  for (int a : {0, xdeg / 2, xdeg}) {
    const WPoly f = conic_form(p[0], p[1], p[2], a, xdeg - a);
    const WPoly back = segre_pullback(segre_lift(f));
    ok = ok && back == f;
    ev += (ev.empty() ? "" : ",") + std::to_string(a);
  }
  c.add("segre-lift", ok, "pullback of the lift equals x0^a x1^b * equation for a in {" + ev + "}");
}

}  // namespace

FamilyCert cert_th1(int d, const BinForm& p0, const BinForm& p1, const BinForm& p2, int which, const CertOptions& opt) {
  FamilyCert c = start({"th1", "", {{"case", which}, {"d", d}}, {{"p0", p0}, {"p1", p1}, {"p2", p2}}}, opt);
  c.predicted = which == 1 || d % 2 ? "Z2xA5" : "Abar5";
  c.add("parameters", d >= 1 && (which == 1 || which == 2), "case=" + std::to_string(which));
  if (d < 1 || (which != 1 && which != 2)) return c;
  const bool degs = p0.degree() == 2 * d && p1.degree() == 2 * d && p2.degree() == 2 * d;
  c.add("degrees", degs, "deg p_i = " + deg_list({p0, p1, p2}) + " expected " + std::to_string(2 * d));
  if (!degs) return c;
  if (which == 1)
    c.add("invariant", all_invariant({p0, p1, p2}), "each p_i fixed by the model generators");
  else
    add_diagonal_invariance(c, {p0, p1, p2});
  const BinForm disc = disc_conic(p0, p1, p2);
  const auto sq = squarefree(disc, opt);
  c.add("discriminant-squarefree", sq.value, "p0 p2 - p1^2 " + squarefree_evidence(sq));
  add_segre(c, {p0, p1, p2}, 2 * d - 2);
  add_noether(c, disc.degree(), "deg disc");
  guarded(c, "group-type", [&] {
    const ImageGroup img = segre_action(d, d, which == 2);
    if (!img.consistent()) throw IntegrityError("inconsistent image: " + img.evidence());
    add_group_check(c, img.label, img.evidence());
  });
  return c;
}

FamilyCert cert_th2(int d, int e, const BinForm& p0, const BinForm& p1, const BinForm& p2, const CertOptions& opt) {
  FamilyCert c = start({"th2", "", {{"d", d}, {"e", e}}, {{"p0", p0}, {"p1", p1}, {"p2", p2}}}, opt);
  c.predicted = d % 2 ? "Abar5" : "Z2xA5";
  c.add("e-even", e > 0 && e % 2 == 0, "e=" + std::to_string(e));
  if (e <= 0 || e % 2) return c;
  const bool degs = p0.degree() == 2 * d && p1.degree() == 2 * d + e && p2.degree() == 2 * d + 2 * e;
  c.add("degrees", degs, "deg p_i = " + deg_list({p0, p1, p2}));
  if (!degs) return c;
  const BinForm disc = disc_conic(p0, p1, p2);
  c.add("discriminant-invariant", !disc.is_zero() && membership(disc), "p0 p2 - p1^2 fixed by the model generators");
  const auto sq = squarefree(disc, opt);
  c.add("discriminant-squarefree", sq.value, squarefree_evidence(sq));
  bool linear = false;
  if (e <= 34) {
    std::string ev;
    const bool ok = fe_shift(p0, p1, p2, e, ev);
    c.add("fe-shift", ok, ev);
    linear = ok && all_invariant({p0, p1, p2});
  }
  add_noether(c, disc.degree(), "deg disc");
  if (linear || all_invariant({p0, p1, p2})) {
    guarded(c, "group-type", [&] {
      const auto rep = hyperelliptic_action(d + e, e, opt.cap);
      add_group_check(c, rep.label, rep.evidence() + " on P(" + std::to_string(d + e) + "," + std::to_string(e) + ",1,1)");
    });
  }
  return c;
}

namespace {

bool phi1_divides_all_invariants(int n, std::string& ev) {
  const BinForm phi1 = grundform(1);
  const InvariantBasis b = invariant_basis(n);
  bool all = true;
  for (const auto& f : b.forms) all = all && divides(phi1, f);
  ev = "dim R_" + std::to_string(n) + "^G = " + std::to_string(b.dimension()) +
       (all ? ", every invariant is divided by Phi_1" : ", some invariant is not divided by Phi_1");
  return all;
}

}  // namespace

FamilyCert cert_th3(int d, const BinForm& p0, const BinForm& p1, const BinForm& p2, const CertOptions& opt) {
  FamilyCert c = start({"th3", "", {{"d", d}}, {{"p0", p0}, {"p1", p1}, {"p2", p2}}}, opt);
  c.predicted = "Abar5";
  if (d % 2 == 0) {
    std::string ev;
    const bool obstructed = phi1_divides_all_invariants(2 * d + 2, ev);
    c.add("d-odd", false, std::string(obstructed ? "obstruction: " : "") + ev);
    if (obstructed) c.notes.push_back("every form of degree 2d+2 that could serve as the xi-projection is divided by Phi_1");
    return c;
  }
  c.add("d-odd", true, "d=" + std::to_string(d));
  const bool degs = p0.degree() == 2 * d && p1.degree() == 2 * d && p2.degree() == 2 * d;
  c.add("degrees", degs, "deg p_i = " + deg_list({p0, p1, p2}));
  if (!degs) return c;
  if (p0.is_zero() && p1.is_zero() && p2.is_zero()) {
    c.add("nondegenerate", false, "all p_i vanish");
    return c;
  }
  add_diagonal_invariance(c, {p0, p1, p2});
  const BinForm disc = disc_conic(p0, p1, p2);
  const auto sq = squarefree(disc, opt);
  c.add("discriminant-squarefree", sq.value, squarefree_evidence(sq));
  const BinForm t0 = BinForm::monomial(1, 1), t1 = BinForm::monomial(1, 0);
  const BinForm xi = p0 * t0 * t0 + p1 * t0 * t1 * CycNum(2) + p2 * t1 * t1;
  c.add("phi1-not-dividing-projection", !xi.is_zero() && !divides(grundform(1), xi),
        "p0 t0^2 + 2 p1 t0 t1 + p2 t1^2 is not divisible by Phi_1");
  {
    // Phi_1 * equation, lifted after padding to balanced bidegree.
    const std::array<BinForm, 3> q = {p0 * grundform(1), p1 * grundform(1), p2 * grundform(1)};
    add_segre(c, q, 2 * d + 28);
  }
  add_noether(c, disc.degree() + 30, "deg disc + deg Phi_1");
  guarded(c, "group-type", [&] {
    const ImageGroup img = segre_action(d + 15, d + 15, true);
    if (!img.consistent()) throw IntegrityError("inconsistent image: " + img.evidence());
    add_group_check(c, img.label, img.evidence());
  });
  return c;
}

FamilyCert cert_th3_even_rejection(int d, const CertOptions& opt) {
  FamilyCert c = start({"th3", "even-rejection", {{"d", d}}, {}}, opt);
  c.add("d-even", d % 2 == 0 && d > 0, "d=" + std::to_string(d));
  if (d % 2 || d <= 0) return c;
  // The strongest candidate input: the diagonal conic from the first basis forms.
  const auto inv = [](int n) {
    const InvariantBasis b = invariant_basis(n);
    return b.forms.empty() ? BinForm(n) : b.forms.front();
  };
  const auto p = diagonal_conic(inv(2 * d + 2), inv(2 * d), inv(2 * d - 2));
  const FamilyCert inner = cert_th3(d, p[0], p[1], p[2], opt);
  const Check* f = inner.first_failure();
  const bool rejected = !inner.passed() && f && f->name == "d-odd" && f->evidence.rfind("obstruction:", 0) == 0;
  c.add("rejected-with-obstruction", rejected, f ? f->evidence : "accepted");
  return c;
}

FamilyCert cert_th4(int d, int e, const BinForm& p0, const BinForm& p1, const BinForm& p2, const CertOptions& opt) {
  FamilyCert c = start({"th4", "", {{"d", d}, {"e", e}}, {{"p0", p0}, {"p1", p1}, {"p2", p2}}}, opt);
  c.predicted = d % 2 ? "Z2xA5" : "Abar5";
  c.add("e-mod-4", e > 0 && e % 4 == 2, "e=" + std::to_string(e) + " mod 4 = " + std::to_string(e % 4));
  if (e <= 0 || e % 4 != 2) return c;
  const bool degs = p0.degree() == 2 * d && p1.degree() == 2 * d + e && p2.degree() == 2 * d + 2 * e;
  c.add("degrees", degs, "deg p_i = " + deg_list({p0, p1, p2}));
  if (!degs) return c;
  const BinForm disc = disc_conic(p0, p1, p2);
  if (disc.is_zero()) {
    c.add("discriminant-nonzero", false, "p0 p2 - p1^2 = 0");
    return c;
  }
  c.add("phi1-coprime-disc", !divides(grundform(1), disc), "Phi_1 does not divide p0 p2 - p1^2");
  c.add("discriminant-invariant", membership(disc), "p0 p2 - p1^2 fixed by the model generators");
  const BinForm full = disc * grundform(1);
  const auto sq = squarefree(full, opt);
  c.add("discriminant-squarefree", sq.value, "Phi_1 (p0 p2 - p1^2) " + squarefree_evidence(sq));
  bool linear = false;
  if (e <= 34) {
    std::string ev;
    const bool ok = fe_shift(p0, p1, p2, e, ev);
    c.add("fe-shift", ok, ev);
    linear = ok;
  }
  add_noether(c, full.degree(), "deg Phi_1 + deg disc");
  if (linear || all_invariant({p0, p1, p2})) {
    guarded(c, "group-type", [&] {
      const auto rep = hyperelliptic_action(d + e + 15, e, opt.cap);
      add_group_check(c, rep.label,
                      rep.evidence() + " on P(" + std::to_string(d + e + 15) + "," + std::to_string(e) + ",1,1)");
    });
  }
  return c;
}

FamilyCert cert_th5(int d, int a1, int a2, const BinForm& h0, const BinForm& h1, const BinForm& h2,
                    const CertOptions& opt) {
  FamilyCert c = start({"th5", "", {{"a1", a1}, {"a2", a2}, {"d", d}}, {{"H0", h0}, {"H1", h1}, {"H2", h2}}}, opt);
  c.predicted = a1 % 2 || a2 % 2 ? "Z2xAbar5" : "Z2^2xA5";
  c.add("ordering", 0 <= a1 && a1 <= a2, "0 <= a1=" + std::to_string(a1) + " <= a2=" + std::to_string(a2));
  if (a1 < 0 || a1 > a2) return c;
  const bool degs = h0.degree() == d && h1.degree() == d + 2 * a1 && h2.degree() == d + 2 * a2;
  c.add("degrees", degs, "deg H_i = " + deg_list({h0, h1, h2}));
  if (!degs) return c;
  const std::vector<BinForm> h = {h0, h1, h2};
  std::string inv, sq;
  bool inv_ok = true, sq_ok = true;
  for (int i = 0; i < 3; ++i) {
    const bool m = !h[i].is_zero() && membership(h[i]);
    inv_ok = inv_ok && m;
    const auto s = squarefree(h[i], opt);
    sq_ok = sq_ok && s.value;
    inv += (i ? "," : "") + std::string(m ? "yes" : "no");
    sq += (i ? "; " : "") + squarefree_evidence(s);
  }
  c.add("invariant", inv_ok, "H_0,H_1,H_2 invariant: " + inv);
  c.add("squarefree", sq_ok, sq);
  bool coprime = true;
  std::string gev;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      const int g = h[i].is_zero() || h[j].is_zero() ? -1 : gcd(h[i], h[j]).degree();
      coprime = coprime && g == 0;
      gev += (gev.empty() ? "" : " ") + std::string("deg gcd(H") + std::to_string(i) + ",H" + std::to_string(j) +
             ")=" + std::to_string(g);
    }
  c.add("coprime", coprime, gev);
  if (!inv_ok) return c;

  // sum H_i(t) xi_i^2 on Cox coordinates (t0, t1, xi0, xi1, xi2).
  const std::vector<int> w{1, 1, 1, 1, 1};
  WPoly eq(w);
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k <= h[i].degree(); ++k) {
      std::vector<int> e(5, 0);
      e[0] = k;
      e[1] = h[i].degree() - k;
      e[2 + i] = 2;
      eq.add_term(e, h[i][k]);
    }
  bool eq_ok = true;
  for (const auto& a : model_generators()) {
    std::vector<WPoly> img;
    for (int r = 0; r < 2; ++r) {
      WPoly l(w);
      l.add_term({1, 0, 0, 0, 0}, a(r, 0));
      l.add_term({0, 1, 0, 0, 0}, a(r, 1));
      img.push_back(l);
    }
    for (int i = 0; i < 3; ++i) img.push_back(WPoly::variable(w, 2 + i));
    eq_ok = eq_ok && eq.substitute(img) == eq;
  }
  for (int i = 0; i < 3; ++i) {
    std::vector<WPoly> img;
    for (int r = 0; r < 5; ++r) img.push_back(WPoly::variable(w, r) * CycNum(r == 2 + i ? -1 : 1));
    eq_ok = eq_ok && eq.substitute(img) == eq;
  }
  c.add("equation-invariant", eq_ok, "sum H_i xi_i^2 fixed by the model generators and the three sign flips");
  c.add("sign-table", true, "iota_0=(-,+,+) iota_1=(+,-,+) iota_2=(+,+,-) up to the global sign");
  add_noether(c, h0.degree() + h1.degree() + h2.degree(), "sum deg H_i");
  guarded(c, "group-type", [&] {
    const std::vector<std::vector<int>> grading = {{1, 1, 0, -a1, -a2}, {0, 0, 1, 1, 1}};
    std::vector<WeightedClass<F61>> gens;
    for (const auto& a : binary_generators_f61()) {
      MatX<F61> ta = a;
      gens.emplace_back(block_diag<F61>({ta, MatX<F61>::Identity(3, 3)}), grading);
    }
    for (int i = 0; i < 3; ++i) {
      MatX<F61> s = MatX<F61>::Identity(5, 5);
      s(2 + i, 2 + i) = F61(-1);
      gens.emplace_back(s, grading);
    }
    const auto rep = report(FinGroup<WeightedClass<F61>>::closure(gens, opt.cap));
    add_group_check(c, rep.label, rep.evidence());
  });
  return c;
}

}  // namespace cremona
