#include <random>

#include "cremona/invariant.hpp"
#include "family_internal.hpp"

namespace cremona {

using namespace detail;

namespace {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  /// Random combination of the Gruendform-monomial basis of R_n; the zero
  /// form when R_n = 0.
  BinForm draw(int n) {
    BinForm f(n);
    for (const auto& b : basis(n)) f += b * CycNum(static_cast<long>(rng_() % 7) - 3);
    return f;
  }
  /// Like draw but never zero when R_n is nonzero.
  BinForm draw_nonzero(int n) {
    for (;;) {
      BinForm f = draw(n);
      if (!f.is_zero() || basis(n).empty()) return f;
    }
  }
  const std::vector<BinForm>& basis(int n) {
    auto it = cache_.find(n);
    if (it == cache_.end()) it = cache_.emplace(n, n < 0 ? std::vector<BinForm>{} : monomial_basis(n).forms).first;
    return it->second;
  }
  bool empty(int n) { return basis(n).empty(); }

 private:
  std::mt19937_64 rng_;
  std::map<int, std::vector<BinForm>> cache_;
};

std::string dim_note(Sampler& s, int n) {
  std::string how = n <= kMolienBound ? " by the Molien series" : " in the Gruendform-monomial basis";
  const long dim = n <= kMolienBound ? molien_dim(n) : static_cast<long>(s.basis(n).size());
  return "dim R_" + std::to_string(n) + " = " + std::to_string(dim) + how;
}

long get(const std::map<std::string, long>& t, const char* k) {
  auto it = t.find(k);
  if (it == t.end()) throw std::invalid_argument(std::string("search target needs ") + k);
  return it->second;
}

}  // namespace

SearchReport search_instance(const std::string& label, const std::map<std::string, long>& targets, std::uint64_t seed,
                             const CertOptions& opt, int budget) {
  SearchReport out;
  Sampler s(seed);
  std::function<FamilyCert()> attempt;
  // Spaces whose emptiness rules the branch out: any one of them, or all
  // together when all_empty is set.
  std::vector<int> needed;
  bool all_empty = false;
  if (label == "thExcept") {
    const int g = get(targets, "g"), n = get(targets, "n");
    needed = {2 * g + 2};
    attempt = [&, g, n] { return cert_exceptional(g, s.draw_nonzero(2 * g + 2), n, opt); };
  } else if (label == "th1") {
    const int d = get(targets, "d"), which = get(targets, "case");
    if (which == 1) {
      needed = {2 * d};
      attempt = [&, d] { return cert_th1(d, s.draw(2 * d), s.draw(2 * d), s.draw(2 * d), 1, opt); };
    } else {
      needed = {2 * d + 2, 2 * d, 2 * d - 2};
      all_empty = true;
      attempt = [&, d] {
        const auto p = diagonal_conic(s.draw(2 * d + 2), s.draw(2 * d), s.draw(2 * d - 2));
        return cert_th1(d, p[0], p[1], p[2], 2, opt);
      };
    }
  } else if (label == "th2" || label == "th4") {
    const int d = get(targets, "d"), e = get(targets, "e");
    needed = {2 * d};
    attempt = [&, d, e, label] {
      const BinForm p0 = s.draw_nonzero(2 * d), p1 = s.draw(2 * d + e), p2 = s.draw(2 * d + 2 * e);
      return label == "th2" ? cert_th2(d, e, p0, p1, p2, opt) : cert_th4(d, e, p0, p1, p2, opt);
    };
  } else if (label == "th3") {
    const int d = get(targets, "d");
    needed = {2 * d + 2, 2 * d, 2 * d - 2};
    all_empty = true;
    attempt = [&, d] {
      const auto p = diagonal_conic(s.draw(2 * d + 2), s.draw(2 * d), s.draw(2 * d - 2));
      return cert_th3(d, p[0], p[1], p[2], opt);
    };
  } else if (label == "th5") {
    const int d = get(targets, "d"), a1 = get(targets, "a1"), a2 = get(targets, "a2");
    needed = {d, d + 2 * a1, d + 2 * a2};
    attempt = [&, d, a1, a2] {
      return cert_th5(d, a1, a2, s.draw_nonzero(d), s.draw_nonzero(d + 2 * a1), s.draw_nonzero(d + 2 * a2), opt);
    };
  } else {
    throw std::invalid_argument("no search for " + label);
  }

  bool any = false, all = !needed.empty();
  for (int n : needed) {
    any = any || s.empty(n);
    all = all && s.empty(n);
    out.report += (out.report.empty() ? "" : "; ") + dim_note(s, n);
  }
  const bool empty = all_empty ? all : any;
  if (empty) {
    out.empty = true;
    out.report = "no instance: " + out.report;
    return out;
  }
  std::string last;
  for (out.tried = 1; out.tried <= budget; ++out.tried) {
    FamilyCert c = attempt();
    if (c.passed()) {
      out.spec = c.spec;
      out.cert = std::move(c);
      out.report = "found on try " + std::to_string(out.tried) + " with seed " + std::to_string(seed);
      return out;
    }
    if (const Check* f = c.first_failure()) last = f->name + ": " + f->evidence;
  }
  out.tried = budget;
  out.report = "exhausted " + std::to_string(budget) + " tries; last failure " + last;
  return out;
}

}  // namespace cremona
