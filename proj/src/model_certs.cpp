#include "cremona/invariant.hpp"
#include "cremona/orbit.hpp"
#include "family_internal.hpp"

namespace cremona {

using namespace detail;

namespace {

FamilyCert cert_generators(const CertOptions& opt) {
  FamilyCert c = start({"model", "generators", {}, {}}, opt);
  const IcosahedralModel& m = icosahedral();
  c.add("literal-set", true,
        m.literal().summary() + (m.used_fallback ? "; fallback generators in use" : "; printed generators in use"));
  for (const auto& d : m.discrepancies) c.notes.push_back(d);
  const GeneratorCheck& used = m.attempts.back();
  c.add("validated-set", used.passed && used.fixes_all(), used.summary());
  c.add("binary-order", m.binary.order() == 120, "order " + std::to_string(m.binary.order()));
  std::size_t inv = 0;
  for (std::size_t i = 0; i < m.binary.order(); ++i)
    if (m.binary.element_order(i) == 2) ++inv;
  c.add("unique-involution", inv == 1, std::to_string(inv) + " elements of order 2");
  const GroupSignature s = signature(m.projective);
  const std::map<int, std::size_t> want{{1, 1}, {2, 15}, {3, 20}, {5, 24}};
  c.add("projective-image", s.order == 60 && s.order_histogram == want, s.to_string());
  c.predicted = "Abar5";
  add_group_check(c, report(m.binary).label, report(m.binary).evidence());
  return c;
}

FamilyCert cert_squarefree(const CertOptions& opt) {
  FamilyCert c = start({"model", "squarefree", {}, {}}, opt);
  const std::array<int, 3> degs{30, 20, 12};
  std::string dev, sev;
  bool dok = true, sok = true;
  for (int k = 1; k <= 3; ++k) {
    const BinForm f = grundform(k);
    dok = dok && f.degree() == degs[k - 1];
    dev += (k > 1 ? "," : "") + std::to_string(f.degree());
    const auto r = squarefree(f, opt);
    sok = sok && r.value;
    sev += (k > 1 ? "; " : "") + std::string("Phi_") + std::to_string(k) + " " + squarefree_evidence(r);
  }
  c.add("degrees", dok, "deg Phi_1, Phi_2, Phi_3 = " + dev);
  c.add("squarefree", sok, sev);
  bool cop = true;
  for (int i = 1; i <= 3; ++i)
    for (int j = i + 1; j <= 3; ++j) cop = cop && gcd(grundform(i), grundform(j)).degree() == 0;
  c.add("coprime", cop, "pairwise gcd of the Gruendformen is constant");
  return c;
}

FamilyCert cert_orbits(const CertOptions& opt) {
  FamilyCert c = start({"model", "orbits", {}, {}}, opt);
  const auto special = special_orbits();
  std::string ev;
  bool ok = special.size() == 3;
  for (const auto& o : special) {
    ok = ok && (o.exact_form_match || o.modular_match) && o.orbit_size * o.stabilizer_order == 60;
    ev += (ev.empty() ? "" : "; ") + std::to_string(o.orbit_size) + " points, stabilizer " +
          std::to_string(o.stabilizer_order) + ", zeros of Phi_" + std::to_string(o.grundform_index) +
          (o.exact_form_match ? " (exact)" : o.modular_match ? " (mod p)" : " (no match)");
  }
  c.add("special-orbits", ok, ev);
  const auto sweep = stabilizer_orders(projective_icosahedral(), opt.seed);
  const std::set<std::size_t> want{1, 2, 3, 5};
  std::string so;
  for (auto x : sweep.orders) so += (so.empty() ? "" : ",") + std::to_string(x);
  c.add("stabilizer-orders", sweep.orders == want,
        "{" + so + "}; " + std::to_string(sweep.random_trivial) + " of " + std::to_string(sweep.random_points) +
            " random points with trivial stabilizer");
  const std::size_t bound = min_orbit_bound(projective_icosahedral());
  c.add("min-orbit", bound == 12, "every orbit has at least " + std::to_string(bound) + " points");
  return c;
}

FamilyCert cert_molien(const CertOptions& opt) {
  FamilyCert c = start({"model", "molien", {}, {}}, opt);
  const auto table = molien_table();
  bool agree = true, odd = true;
  std::string bad;
  for (const auto& [n, dim] : table) {
    if (n % 2 && dim != 0) odd = false;
    if (n % 2) continue;
    const long r = reynolds_basis(n).dimension();
    if (r != dim) {
      agree = false;
      bad += " n=" + std::to_string(n);
    }
  }
  c.add("molien-vs-reynolds", agree,
        agree ? "Molien dimension equals the Reynolds rank for n <= " + std::to_string(kMolienBound) : "differs at" + bad);
  c.add("odd-degrees", odd, "no invariants of odd degree");
  c.add("degree-60", table.at(60) == 2, "dim R_60 = " + std::to_string(table.at(60)));
  const Syzygy s = syzygy_60();
  c.add("syzygy", s.kernel_dimension == 1,
        "relation " + s.lambda[0].get_str() + " Phi_1^2 + " + s.lambda[1].get_str() + " Phi_2^3 + " +
            s.lambda[2].get_str() + " Phi_3^5 = 0, kernel dimension " + std::to_string(s.kernel_dimension));
  {
    // Leading coefficients at (1 : 0) must cancel through the relation.
    const CycNum v = CycNum(s.lambda[0]) * grundform(1).eval(1, 0).pow(2) +
                     CycNum(s.lambda[1]) * grundform(2).eval(1, 0).pow(3) +
                     CycNum(s.lambda[2]) * grundform(3).eval(1, 0).pow(5);
    c.add("syzygy-at-1-0", cremona::is_zero(v) && s.kernel_dimension == 1,
          "lambda_1 Phi_1(1,0)^2 + lambda_2 Phi_2(1,0)^3 + lambda_3 Phi_3(1,0)^5 = " + to_string(v));
  }
  return c;
}

}  // namespace

FamilyCert cert_invariance(const BinForm& phi1, const BinForm& phi2, const BinForm& phi3, const CertOptions& opt) {
  FamilyCert c = start({"model", "grundformen", {}, {{"Phi1", phi1}, {"Phi2", phi2}, {"Phi3", phi3}}}, opt);
  const std::array<const BinForm*, 3> f{&phi1, &phi2, &phi3};
  const auto& group = icosahedral().binary;
  for (int k = 0; k < 3; ++k) {
    std::size_t moved = 0, first = 0;
    for (std::size_t g = 0; g < group.order(); ++g)
      if (act(group[g], *f[k]) != *f[k] && !moved++) first = g;
    c.add("Phi" + std::to_string(k + 1) + "-invariant", moved == 0,
          moved == 0 ? "fixed exactly by all " + std::to_string(group.order()) + " elements"
                     : std::to_string(moved) + " of " + std::to_string(group.order()) + " elements move it, first index " +
                           std::to_string(first));
  }
  return c;
}

std::vector<FamilyCert> model_suite(const CertOptions& opt, bool corrupt_phi1) {
  BinForm phi1 = grundform(1);
  if (corrupt_phi1) phi1[1] += CycNum(1);
  return {cert_generators(opt), cert_invariance(phi1, grundform(2), grundform(3), opt), cert_squarefree(opt),
          cert_orbits(opt), cert_molien(opt)};
}

}  // namespace cremona
