#include "family_internal.hpp"

namespace cremona {

using namespace detail;

namespace {

using P61 = ProjMat2<F61>;
using Aut61 = F0Aut<F61>;

MatX<F61> lift3(const Mat2<F61>& a, F61 s, F61 last) {
  MatX<F61> m = MatX<F61>::Zero(3, 3);
  m.block(0, 0, 2, 2) = a * s;
  m(2, 2) = last;
  return m;
}

std::vector<P61> projective_gens() {
  std::vector<P61> g;
  for (const auto& a : binary_generators_f61()) g.emplace_back(a);
  return g;
}

Mat2<F61> m2(F61 a, F61 b, F61 c, F61 d) { return mat2<F61>(a, b, c, d); }

// Generators of the second factor B in A5 x B.
std::vector<P61> factor_generators(const std::string& b) {
  const F61 i = root_f61(4), w = root_f61(3), e5 = root_f61(5), one(1), zero(0);
  const P61 s4a(m2(i, zero, zero, one)), s4b(m2(one, one, F61(-1), one));
  if (b == "A5") return projective_gens();
  if (b == "S4") return {s4a, s4b};
  if (b == "A4") {
    const auto s4 = FinGroup<P61>::closure({s4a, s4b});
    std::vector<P61> out;
    for (std::size_t k : derived_subgroup(s4)) out.push_back(s4[k]);
    return out;
  }
  if (b == "Z2") return {P61(m2(F61(-1), zero, zero, one))};
  if (b == "Z2^2") return {P61(m2(F61(-1), zero, zero, one)), P61(m2(zero, one, one, zero))};
  if (b == "D3") return {P61(m2(w, zero, zero, one)), P61(m2(zero, one, one, zero))};
  if (b == "Z5") return {P61(m2(e5, zero, zero, one))};
  throw std::invalid_argument("unknown factor " + b);
}

std::string product_label(const std::string& b) {
  if (b == "diagonal") return "A5";
  if (b == "A5" || b == "S4" || b == "A4") return "A5x" + b;
  if (b == "Z2") return "Z2xA5";
  if (b == "Z2^2") return "Z2^2xA5";
  if (b == "D3") return "D3xA5";
  if (b == "Z5") return "Z5xA5";
  return "?";
}

}  // namespace

FamilyCert cert_plane_linear(int n, const CertOptions& opt) {
  FamilyCert c = start({"K_S9", "linear", {{"n", n}}, {}}, opt);
  c.predicted = cyclic_times_label(n, "Abar5");
  const bool ok = n >= 1 && n % 2 == 1 && 60 % n == 0;
  c.add("parameters", ok, "odd n dividing 60 so that eps_n is in F_61; n=" + std::to_string(n));
  if (!ok) return c;
  guarded(c, "group-type", [&] {
    std::vector<WeightedClass<F61>> gens;
    const std::vector<int> w{1, 1, 1};
    for (const auto& a : binary_generators_f61()) gens.emplace_back(lift3(a, F61(1), F61(1)), w);
    gens.emplace_back(lift3(Mat2<F61>::Identity(), root_f61(n), F61(1)), w);
    const auto rep = report(FinGroup<WeightedClass<F61>>::closure(gens, opt.cap));
    add_group_check(c, rep.label, rep.evidence() + " for (a x0 + b x1 : c x0 + d x1 : x2) and eps_n on x0, x1");
  });
  return c;
}

FamilyCert cert_plane_conic(const CertOptions& opt) {
  FamilyCert c = start({"K_S9", "conic", {}, {}}, opt);
  c.predicted = "A5";
  {
    // Sym^2 of the model on the Veronese conic.
    const std::vector<std::pair<std::string, std::array<long, 2>>> candidates = {{"y0 y2 - y1^2", {1, -1}},
                                                                                 {"4 y0 y2 - y1^2", {4, -1}}};
    std::string found;
    for (const auto& [name, q] : candidates) {
      MatX<CycNum> qm = MatX<CycNum>::Zero(3, 3);
      qm(0, 2) = qm(2, 0) = CycNum(q[0]);
      qm(1, 1) = CycNum(2 * q[1]);
      bool all = true;
      for (const auto& a : model_generators()) {
        const MatX<CycNum> m = point_power(a, 2);
        const MatX<CycNum> t = m.transpose() * qm * m;
        // Both sides are determined up to det(a)^2 = 1.
        all = all && t == qm;
      }
      if (all) found = name;
      if (all) break;
    }
    c.add("conic-invariant", !found.empty(), found.empty() ? "no candidate conic is preserved" : found + " is preserved");
  }
  guarded(c, "group-type", [&] {
    std::vector<WeightedClass<F61>> gens;
    for (const auto& a : binary_generators_f61()) gens.emplace_back(point_power(a, 2), std::vector<int>{1, 1, 1});
    const auto rep = report(FinGroup<WeightedClass<F61>>::closure(gens, opt.cap));
    add_group_check(c, rep.label, rep.evidence() + " through Sym^2");
  });
  return c;
}

FamilyCert cert_quadric(const std::string& which, const CertOptions& opt) {
  FamilyCert c = start({"K_S8", which, {}, {}}, opt);
  c.predicted = which == "wreath" ? "A5wrZ2" : "Z2xA5";
  const bool known = which == "wreath" || which == "diagonal";
  c.add("variant", known, which);
  if (!known) return c;
  guarded(c, "group-type", [&] {
    std::vector<Aut61> gens;
    for (const auto& g : projective_gens()) {
      if (which == "wreath") {
        gens.push_back({g, P61(), 0});
        gens.push_back({P61(), g, 0});
      } else {
        gens.push_back({g, g, 0});
      }
    }
    gens.push_back({P61(), P61(), 1});
    const auto rep = report(FinGroup<Aut61>::closure(gens, std::max<std::size_t>(opt.cap, 7201)));
    add_group_check(c, rep.label, rep.evidence() + " on P^1 x P^1 with the factor swap");
  });
  return c;
}

FamilyCert cert_th01_quadric(const std::string& b, const CertOptions& opt) {
  FamilyCert c = start({"th01", "F0-" + b, {}, {}}, opt);
  c.predicted = product_label(b);
  guarded(c, "group-type", [&] {
    std::vector<Aut61> gens;
    if (b == "diagonal") {
      for (const auto& g : projective_gens()) gens.push_back({g, g, 0});
    } else {
      for (const auto& g : projective_gens()) gens.push_back({g, P61(), 0});
      for (const auto& h : factor_generators(b)) gens.push_back({P61(), h, 0});
    }
    const auto rep = report(FinGroup<Aut61>::closure(gens, opt.cap));
    add_group_check(c, rep.label, rep.evidence() + " acting factorwise on P^1 x P^1");
  });
  return c;
}

FamilyCert cert_th01_hirzebruch(int n, int k, const CertOptions& opt) {
  FamilyCert c = start({"th01", "Fn", {{"k", k}, {"n", n}}, {}}, opt);
  // On P(n, 1, 1), -I is trivial exactly when n is even.
  c.predicted = cyclic_times_label(k, n % 2 ? "Abar5" : "A5");
  const bool ok = n >= 2 && k >= 1 && 60 % k == 0 && std::gcd(n, k) == 1;
  c.add("parameters", ok, "n=" + std::to_string(n) + " >= 2, k=" + std::to_string(k) + " divides 60, gcd(n, k) = 1");
  if (!ok) return c;
  guarded(c, "group-type", [&] {
    const std::vector<int> w{n, 1, 1};
    std::vector<WeightedClass<F61>> gens;
    const auto cone = [](const Mat2<F61>& a) {
      MatX<F61> m = MatX<F61>::Zero(3, 3);
      m(0, 0) = F61(1);
      m.block(1, 1, 2, 2) = a;
      return m;
    };
    for (const auto& a : binary_generators_f61()) gens.emplace_back(cone(a), w);
    gens.emplace_back(cone(Mat2<F61>::Identity() * root_f61(k)), w);
    const auto rep = report(FinGroup<WeightedClass<F61>>::closure(gens, opt.cap));
    add_group_check(c, rep.label, rep.evidence() + " on the cone P(" + std::to_string(n) + ",1,1)");
  });
  return c;
}

}  // namespace cremona
