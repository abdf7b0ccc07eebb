// One line per acceptance criterion; exit status 1 when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>

#include "cremona/cli.hpp"
#include "cremona/icosahedral.hpp"
#include "cremona/invariant.hpp"
#include "cremona/orbit.hpp"
#include "cremona/recognize.hpp"

using namespace cremona;

namespace {

struct Verdict {
  bool ok = true;
  std::string evidence;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      evidence += (evidence.empty() ? "" : "; ") + std::string("FAILED ") + what;
    }
  }
  void note(const std::string& what) { evidence += (evidence.empty() ? "" : "; ") + what; }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

const std::vector<FamilyCert>& suite() {
  static const std::vector<FamilyCert> s = full_suite();
  return s;
}

bool check_ok(const FamilyCert* c, const std::string& name) {
  if (!c) return false;
  const Check* k = c->find(name);
  return k && k->passed;
}

std::string check_evidence(const FamilyCert* c, const std::string& name) {
  const Check* k = c ? c->find(name) : nullptr;
  return k ? k->evidence : "missing";
}

Verdict model() {
  Verdict v;
  const auto t0 = std::chrono::steady_clock::now();
  const IcosahedralModel m = build_icosahedral_model();
  const double t = seconds_since(t0);
  v.require(m.binary.order() == 120, "binary order " + std::to_string(m.binary.order()));
  v.require(m.projective.order() == 60, "projective order " + std::to_string(m.projective.order()));
  const auto s = signature(m.projective);
  v.require(s.order_histogram == std::map<int, std::size_t>{{1, 1}, {2, 15}, {3, 20}, {5, 24}},
            "histogram " + s.to_string());
  v.require(signature(m.binary).involutions() == 1, "unique involution");
  v.require(t < 5, "runtime " + fmt(t));
  v.note("orders 120/60, histogram {1:1,2:15,3:20,5:24}, one involution, built in " + fmt(t));
  return v;
}

Verdict invariance() {
  Verdict v;
  const auto& m = icosahedral();
  std::size_t moved = 0;
  for (int k = 1; k <= 3; ++k)
    for (const auto& g : m.binary.elements()) moved += act(g, grundform(k)) != grundform(k);
  v.require(moved == 0, std::to_string(moved) + " (element, form) pairs not fixed");
  const GeneratorCheck& lit = m.literal();
  if (lit.passed && lit.fixes_all()) {
    v.note("printed generators validate; all 360 actions fixed exactly");
  } else {
    v.require(!m.discrepancies.empty(), "printed generators fail without a discrepancy report");
    v.require(m.used_fallback && m.attempts.back().passed && m.attempts.back().fixes_all(), "fallback validates");
    v.note(lit.summary() + "; fallback " + m.attempts.back().name + " validates; all 360 actions fixed");
  }
  return v;
}

Verdict squarefree() {
  Verdict v;
  const std::array<int, 3> deg{30, 20, 12};
  for (int k = 1; k <= 3; ++k) {
    v.require(grundform(k).degree() == deg[k - 1], "degree of Phi_" + std::to_string(k));
    v.require(is_squarefree(grundform(k)).value, "Phi_" + std::to_string(k) + " squarefree");
    for (int j = k + 1; j <= 3; ++j) v.require(gcd(grundform(k), grundform(j)).degree() == 0, "coprime pair");
  }
  v.note("degrees 30/20/12, each squarefree, pairwise gcd 1");
  return v;
}

Verdict orbits() {
  Verdict v;
  const auto t0 = std::chrono::steady_clock::now();
  std::map<std::size_t, std::size_t> sizes;
  for (const auto& o : special_orbits()) sizes[o.orbit_size] = o.stabilizer_order;
  v.require(sizes == std::map<std::size_t, std::size_t>{{12, 5}, {20, 3}, {30, 2}}, "special orbit sizes");
  const auto sweep = stabilizer_orders(projective_icosahedral());
  v.require(sweep.orders == std::set<std::size_t>{1, 2, 3, 5}, "stabilizer orders");
  v.require(min_orbit_bound(projective_icosahedral()) == 12, "minimum orbit 12");
  const double t = seconds_since(t0);
  v.require(t < 10, "runtime " + fmt(t));
  v.note("orbits 12/20/30 with stabilizers 5/3/2, stabilizer set {1,2,3,5}, bound 12, " + fmt(t));
  return v;
}

Verdict molien() {
  Verdict v;
  int bad = 0;
  for (int n = 0; n <= kMolienBound; ++n) {
    const long r = n % 2 ? 0 : reynolds_basis(n).dimension();
    bad += molien_dim(n) != r;
    if (n % 2) bad += molien_dim(n) != 0;
  }
  v.require(bad == 0, std::to_string(bad) + " degrees disagree");
  v.require(molien_dim(60) == 2, "dim R_60 = 2");
  const Syzygy s = syzygy_60();
  v.require(s.kernel_dimension == 1, "one-dimensional syzygy");
  // At (1 : 0): Phi_1 = 1, Phi_2 = -1, Phi_3 = 0, so lambda_1 = lambda_2.
  v.require(s.lambda[0] == s.lambda[1], "(1,0) constraint");
  v.note("Molien = Reynolds for n <= 64, odd degrees 0, dim R_60 = 2, relation (" + s.lambda[0].get_str() + ", " +
         s.lambda[1].get_str() + ", " + s.lambda[2].get_str() + ")");
  return v;
}

Verdict instances() {
  Verdict v;
  const BinForm p1 = grundform(1), p2 = grundform(2), p3 = grundform(3);
  v.require(cert_exceptional(5, p3, 3).passed(), "(a) exceptional g=5, F=Phi_3");
  const auto b = cert_th2(6, 4, p3, BinForm(16), p2);
  v.require(b.passed(), "(b) th2 (Phi_3, 0, Phi_2)");
  v.require(check_evidence(&b, "noether").rfind("r=32 K2=-24", 0) == 0, "(b) r = 32, K^2 = -24");
  auto timed = [&](const std::string& label, const std::map<std::string, long>& t, const std::string& tag) {
    const auto t0 = std::chrono::steady_clock::now();
    const SearchReport r = search_instance(label, t, 0);
    const double s = seconds_since(t0);
    v.require(s < 60, tag + " search time " + fmt(s));
    v.require(r.cert && r.cert->passed(), tag + " search: " + r.report);
    return std::make_pair(r, s);
  };
  const auto [c, tc] = timed("th2", {{"d", 15}, {"e", 30}}, "(c)");
  if (c.cert) {
    v.require(gcd(c.cert->spec.form("p0"), p1).degree() == 30, "(c) p0 spans R_30 = <Phi_1>");
    v.require(check_ok(&*c.cert, "discriminant-squarefree"), "(c) Phi_1 h' - h^2 squarefree");
  }
  const auto [d, td] = timed("th4", {{"d", 6}, {"e", 34}}, "(d)");
  if (d.cert) v.require(check_ok(&*d.cert, "phi1-coprime-disc"), "(d) Phi_1 does not divide disc");
  const auto e = cert_th5(12, 4, 9, p3, p2, p1);
  v.require(e.passed() && e.predicted == "Z2xAbar5", "(e) th5 (12, 4, 9)");
  int rejected = 0;
  for (int dd = 2; dd <= 60; dd += 2) rejected += cert_th3_even_rejection(dd).passed();
  v.require(rejected == 30, "(f) " + std::to_string(rejected) + " of 30 even d rejected");
  v.note("(a)-(e) pass, (f) rejects every even d <= 60 with the Phi_1 obstruction; searches " + fmt(tc) + ", " +
         fmt(td));
  return v;
}

Verdict group_types() {
  Verdict v;
  std::size_t n = 0;
  for (const auto& c : suite()) {
    const auto& l = c.spec.label;
    if ((l != "thExcept" && l != "th1" && l != "th5") || c.spec.variant == "search") continue;
    ++n;
    v.require(!c.observed.empty() && c.observed == c.predicted,
              c.id() + " " + check_evidence(&c, "group-type"));
  }
  const auto a = model_signature("Abar5"), z = product_signature(cyclic_signature(2), model_signature("A5"));
  v.require(a.involutions() == 1 && z.involutions() == 31, "involution counts 1 vs 31");
  v.require(recognize(a) == "Abar5" && recognize(z) == "Z2xA5", "Abar5 and Z2xA5 separated");
  v.note(std::to_string(n) + " constructed groups compared; Abar5 has 1 involution, Z2xA5 has 31");
  return v;
}

Verdict del_pezzo() {
  Verdict v;
  auto timed = [](const std::function<FamilyCert()>& f, double& s) {
    const auto t0 = std::chrono::steady_clock::now();
    FamilyCert c = f();
    s = seconds_since(t0);
    return c;
  };
  double tk, tv, t2, t3, t5;
  const auto klein = timed([] { return cert_klein(); }, tk);
  const auto val = timed([] { return cert_valentiner(); }, tv);
  const auto dp2 = timed([] { return cert_dp2(); }, t2);
  const auto dp3 = timed([] { return cert_dp3(); }, t3);
  const auto dp5 = timed([] { return cert_dp5_involution(); }, t5);
  v.require(check_ok(&klein, "alpha-beta-invariant") && check_ok(&klein, "order-21"), "Klein quartic alpha, beta");
  v.require(check_ok(&dp3, "closure-order"), "cubic closure order 120: " + check_evidence(&dp3, "closure-order"));
  v.require(check_ok(&dp5, "involution"), "dP5 quadratic involution: " + check_evidence(&dp5, "involution"));
  v.require(check_ok(&dp2, "smooth"), "dP2 quartic smooth");
  v.require(check_ok(&dp3, "smooth"), "cubic smooth");
  v.require(check_ok(&klein, "smooth"), "Klein quartic smooth");
  v.require(check_ok(&val, "smooth"), "Valentiner sextic smooth");
  v.require(check_ok(&dp2, "no-fixed-point"), "dP2 fixed-point freeness");
  for (double s : {tk, tv, t2, t3, t5}) v.require(s < 60, "certificate time " + fmt(s));
  v.note("smoothness, Klein and dP2 checks hold; times " + fmt(tk) + ", " + fmt(tv) + ", " + fmt(t2) + ", " + fmt(t3) +
         ", " + fmt(t5));
  return v;
}

Verdict table() {
  Verdict v;
  const auto rows = classification_table(suite());
  v.require(rows.size() == 16, std::to_string(rows.size()) + " rows");
  std::vector<std::string> gaps;
  for (const auto& r : rows) {
    v.require(r.gap() || !r.witnesses.empty(), r.group + " has neither witness nor GAP marker");
    if (r.gap()) gaps.push_back(r.group);
  }
  for (const auto& g : gaps) v.require(false, "GAP at " + g);
  v.note(std::to_string(rows.size()) + " rows, " + std::to_string(gaps.size()) + " GAP marker(s)");
  return v;
}

Verdict determinism() {
  Verdict v;
  const Bundle a = make_bundle(suite(), "text");
  const Bundle b = make_bundle(full_suite(), "text");
  v.require(a.files == b.files && a.manifest == b.manifest, "text bundles differ");
  const Bundle sa = make_bundle(suite(), "structured");
  const Bundle sb = make_bundle(full_suite(), "structured");
  v.require(sa.files == sb.files, "structured bundles differ");
  v.note("two seed-0 runs give byte-identical bundles, manifest sha256 " + sha256_hex(a.manifest).substr(0, 16));
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, Verdict (*)()>> criteria{
      {"icosahedral model", model},     {"Gruendform invariance", invariance},
      {"squarefree and coprime", squarefree}, {"orbit certificates", orbits},
      {"invariant-ring oracles", molien}, {"theorem instances", instances},
      {"group-type cross-validation", group_types}, {"del Pezzo suite", del_pezzo},
      {"classification table", table},  {"determinism", determinism}};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v.require(false, std::string("exception: ") + e.what());
    }
    failed += !v.ok;
    std::printf("criterion %zu %s %s: %s\n", i + 1, v.ok ? "PASS" : "FAIL", criteria[i].first, v.evidence.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria pass\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed ? 1 : 0;
}
