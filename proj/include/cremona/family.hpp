#pragma once

// Certified constructors for the surface families: del Pezzo instances,
// the witnesses on P^2 and on Hirzebruch surfaces, and the conic bundles.
// Each constructor returns a FamilyCert listing every check it ran.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cremona/binform.hpp"
#include "cremona/group.hpp"

namespace cremona {

struct CertOptions {
  std::uint64_t seed = 0;
  std::vector<std::uint32_t> primes{kCertPrimes.begin(), kCertPrimes.end()};
  std::size_t cap = kDefaultClosureCap;
};

/// Inputs of one certificate: a family label, an optional variant naming the
/// construction inside the family, integer parameters and named forms.
struct FamilySpec {
  std::string label;
  std::string variant;
  std::map<std::string, long> params;
  std::vector<std::pair<std::string, BinForm>> forms;

  /// "label[.variant][.name=value...]" with parameters in name order.
  std::string id() const;
  long param(const std::string& name) const;
  bool has(const std::string& name) const { return params.count(name) != 0; }
  const BinForm& form(const std::string& name) const;
};

struct Check {
  std::string name;
  bool passed = false;
  std::string evidence;
  friend bool operator==(const Check&, const Check&) = default;
};

struct FamilyCert {
  FamilySpec spec;
  std::uint64_t seed = 0;
  std::vector<std::uint32_t> primes;
  std::vector<Check> checks;
  /// Group type read from the theorem's branch rule; empty when the family
  /// makes no group claim.
  std::string predicted;
  /// Label recognized from the constructed action group, when one is built.
  std::string observed;
  std::vector<std::string> notes;

  std::string id() const { return spec.id(); }
  bool passed() const;
  const Check* find(const std::string& name) const;
  const Check* first_failure() const;
  void add(std::string name, bool ok, std::string evidence = {});
};

/// Reducible fibre count r and K^2 = 8 - r of a conic bundle.
struct NoetherData {
  int r = 0;
  int k2 = 0;
};
inline NoetherData noether(int r) { return {r, 8 - r}; }

// Conic bundles.
FamilyCert cert_exceptional(int g, const BinForm& f, int n, const CertOptions& opt = {});
FamilyCert cert_th1(int d, const BinForm& p0, const BinForm& p1, const BinForm& p2, int which,
                    const CertOptions& opt = {});
FamilyCert cert_th2(int d, int e, const BinForm& p0, const BinForm& p1, const BinForm& p2, const CertOptions& opt = {});
FamilyCert cert_th3(int d, const BinForm& p0, const BinForm& p1, const BinForm& p2, const CertOptions& opt = {});
/// Passes when the th3 constructor rejects even d, for the invariant-basis
/// input of bidegree (2, 2d), with the divisibility obstruction.
FamilyCert cert_th3_even_rejection(int d, const CertOptions& opt = {});
FamilyCert cert_th4(int d, int e, const BinForm& p0, const BinForm& p1, const BinForm& p2, const CertOptions& opt = {});
FamilyCert cert_th5(int d, int a1, int a2, const BinForm& h0, const BinForm& h1, const BinForm& h2,
                    const CertOptions& opt = {});

/// Invariant bihomogeneous form of bidegree (2, 2d) for the diagonal action:
/// the second polar of a in R_{2d+2}, det * polar of b in R_{2d}, and det^2 * c
/// in R_{2d-2}, with det = x0 t1 - x1 t0. Returns (p0, p1, p2) with the form
/// written p0 x0^2 + 2 p1 x0 x1 + p2 x1^2.
std::array<BinForm, 3> diagonal_conic(const BinForm& a, const BinForm& b, const BinForm& c);

// Del Pezzo surfaces and the witnesses with K^2 = 9 and 8.
FamilyCert cert_klein(const CertOptions& opt = {});
FamilyCert cert_valentiner(const CertOptions& opt = {});
/// Maps (a x0 + b x1 : c x0 + d x1 : x2) scaled by powers of eps_n.
FamilyCert cert_plane_linear(int n, const CertOptions& opt = {});
/// The icosahedral group on the conic, through Sym^2.
FamilyCert cert_plane_conic(const CertOptions& opt = {});
FamilyCert cert_dp2(const CertOptions& opt = {});
FamilyCert cert_dp3(const CertOptions& opt = {});
FamilyCert cert_dp5_aut(const CertOptions& opt = {});
FamilyCert cert_dp5_involution(const CertOptions& opt = {});
/// "wreath" or "diagonal".
FamilyCert cert_quadric(const std::string& which, const CertOptions& opt = {});
/// A5 x B on P^1 x P^1 for B in {A5, S4, A4, Z2, Z2^2, D3, Z5}, or "diagonal".
FamilyCert cert_th01_quadric(const std::string& b, const CertOptions& opt = {});
/// A5 extended by eps_k scalars on F_n, n >= 2.
FamilyCert cert_th01_hirzebruch(int n, int k, const CertOptions& opt = {});

/// The del Pezzo certificates, in a fixed order.
std::vector<FamilyCert> delpezzo_suite(const CertOptions& opt = {});

/// Certificates of the icosahedral model itself; `corrupt_phi1` perturbs one
/// coefficient of Phi_1 before the invariance certificate runs.
std::vector<FamilyCert> model_suite(const CertOptions& opt = {}, bool corrupt_phi1 = false);
FamilyCert cert_invariance(const BinForm& phi1, const BinForm& phi2, const BinForm& phi3, const CertOptions& opt = {});

/// Reruns the constructor named by the spec.
FamilyCert certify(const FamilySpec& spec, const CertOptions& opt = {});
/// True when rerunning the stored spec reproduces every check.
bool recheck(const FamilyCert& cert);

struct SearchReport {
  std::optional<FamilySpec> spec;
  std::optional<FamilyCert> cert;
  int tried = 0;
  /// The invariant spaces to combine are empty, so no instance exists.
  bool empty = false;
  std::string report;
};

/// Seeded search over invariant-basis combinations for a family branch:
///   th1   {case, d}         th2 {d, e}     th3 {d}
///   th4   {d, e}            th5 {d, a1, a2}
///   thExcept {g, n}
/// Coefficients are drawn as rng() % 7 - 3 from mt19937_64(seed).
SearchReport search_instance(const std::string& label, const std::map<std::string, long>& targets,
                             std::uint64_t seed, const CertOptions& opt = {}, int budget = 32);

/// Every certificate emitted by a full verification run.
std::vector<FamilyCert> full_suite(const CertOptions& opt = {}, bool corrupt_phi1 = false);

}  // namespace cremona
