#include "cremona/family.hpp"

#include <algorithm>
#include <future>
#include <functional>
#include <stdexcept>

#include "cremona/invariant.hpp"

namespace cremona {

std::string FamilySpec::id() const {
  std::string s = label;
  if (!variant.empty()) s += "." + variant;
  for (const auto& [k, v] : params) s += "." + k + "=" + std::to_string(v);
  return s;
}

long FamilySpec::param(const std::string& name) const {
  auto it = params.find(name);
  if (it == params.end()) throw std::invalid_argument(id() + ": missing parameter " + name);
  return it->second;
}

const BinForm& FamilySpec::form(const std::string& name) const {
  for (const auto& [k, f] : forms)
    if (k == name) return f;
  throw std::invalid_argument(id() + ": missing form " + name);
}

bool FamilyCert::passed() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

const Check* FamilyCert::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

const Check* FamilyCert::first_failure() const {
  for (const auto& c : checks)
    if (!c.passed) return &c;
  return nullptr;
}

void FamilyCert::add(std::string name, bool ok, std::string evidence) {
  checks.push_back({std::move(name), ok, std::move(evidence)});
}

namespace {

int ip(const FamilySpec& s, const char* name) { return static_cast<int>(s.param(name)); }

FamilyCert dispatch(const FamilySpec& s, const CertOptions& opt) {
  const std::string& l = s.label;
  const std::string& v = s.variant;
  if (l == "model") {
    if (v == "grundformen") return cert_invariance(s.form("Phi1"), s.form("Phi2"), s.form("Phi3"), opt);
    for (auto& c : model_suite(opt))
      if (c.spec.variant == v) return c;
  }
  if (l == "thExcept") {
    if (v == "search") {
      auto r = search_instance("thExcept", s.params, opt.seed, opt);
      if (r.cert) return *r.cert;
      FamilyCert c;
      c.spec = s;
      c.seed = opt.seed;
      c.primes = opt.primes;
      c.add("search", r.empty, r.report);
      return c;
    }
    return cert_exceptional(ip(s, "g"), s.form("F"), ip(s, "n"), opt);
  }
  if (l == "th1") return cert_th1(ip(s, "d"), s.form("p0"), s.form("p1"), s.form("p2"), ip(s, "case"), opt);
  if (l == "th2") return cert_th2(ip(s, "d"), ip(s, "e"), s.form("p0"), s.form("p1"), s.form("p2"), opt);
  if (l == "th3") {
    if (v == "even-rejection") return cert_th3_even_rejection(ip(s, "d"), opt);
    return cert_th3(ip(s, "d"), s.form("p0"), s.form("p1"), s.form("p2"), opt);
  }
  if (l == "th4") return cert_th4(ip(s, "d"), ip(s, "e"), s.form("p0"), s.form("p1"), s.form("p2"), opt);
  if (l == "th5")
    return cert_th5(ip(s, "d"), ip(s, "a1"), ip(s, "a2"), s.form("H0"), s.form("H1"), s.form("H2"), opt);
  if (l == "K_S9") {
    if (v == "klein") return cert_klein(opt);
    if (v == "valentiner") return cert_valentiner(opt);
    if (v == "linear") return cert_plane_linear(ip(s, "n"), opt);
    if (v == "conic") return cert_plane_conic(opt);
  }
  if (l == "K_S8") return cert_quadric(v, opt);
  if (l == "dp2") return cert_dp2(opt);
  if (l == "dp3") return cert_dp3(opt);
  if (l == "dp5") {
    if (v == "aut") return cert_dp5_aut(opt);
    if (v == "involution") return cert_dp5_involution(opt);
  }
  if (l == "th01") {
    if (v == "Fn") return cert_th01_hirzebruch(ip(s, "n"), ip(s, "k"), opt);
    if (v.rfind("F0-", 0) == 0) return cert_th01_quadric(v.substr(3), opt);
  }
  throw std::invalid_argument("no constructor for " + s.id());
}

}  // namespace

FamilyCert certify(const FamilySpec& spec, const CertOptions& opt) { return dispatch(spec, opt); }

bool recheck(const FamilyCert& cert) {
  CertOptions opt;
  opt.seed = cert.seed;
  opt.primes = cert.primes;
  const FamilyCert again = certify(cert.spec, opt);
  return again.checks == cert.checks && again.predicted == cert.predicted && again.observed == cert.observed;
}

}  // namespace cremona
