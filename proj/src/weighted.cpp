#include "cremona/weighted.hpp"

#include <numeric>
#include <sstream>

namespace cremona {

WPoly wpoly(const std::vector<int>& weights, const std::vector<std::pair<long, std::vector<int>>>& terms) {
  WPoly f(weights);
  for (const auto& [c, e] : terms) f.add_term(e, CycNum(c));
  return f;
}

WPoly bihomogeneous(const BinForm& f, int x0_exp, int x1_exp) {
  WPoly r({1, 1, 1, 1});
  const int n = f.degree();
  for (int k = 0; k <= n; ++k)
    if (!f[k].is_zero()) r.add_term({x0_exp, x1_exp, k, n - k}, f[k]);
  return r;
}

WPoly segre_lift(const WPoly& f) {
  if (f.weights() != std::vector<int>{1, 1, 1, 1}) throw NotLiftable("segre_lift expects (x0, x1, t0, t1)");
  WPoly r({1, 1, 1, 1});
  for (const auto& [e, c] : f.terms()) {
    const int al = e[0], be = e[1], ga = e[2], de = e[3];
    if (al + be != ga + de) throw NotLiftable("monomial of unbalanced bidegree");
    const int a = std::min(al, ga), b = al - a, cz = ga - a, w = de - b;
    r.add_term({a, b, cz, w}, c);
  }
  return r;
}

WPoly segre_pullback(const WPoly& f) {
  const std::vector<int> w{1, 1, 1, 1};
  auto mono = [&](int i, int j) {
    std::vector<int> e(4, 0);
    e[i] = 1;
    e[j] = 1;
    return WPoly::monomial(w, e);
  };
  // x = x0 t0, y = x0 t1, z = x1 t0, w = x1 t1.
  return f.substitute({mono(0, 2), mono(0, 3), mono(1, 2), mono(1, 3)});
}

namespace {

int mod(long a, int m) { return static_cast<int>(((a % m) + m) % m); }

}  // namespace

MonomialMap MonomialMap::make(int modulus, std::vector<int> weights, std::vector<int> perm, std::vector<int> expo) {
  if (modulus < 1 || weights.size() != perm.size() || perm.size() != expo.size())
    throw std::invalid_argument("inconsistent monomial map data");
  MonomialMap m{modulus, std::move(weights), std::move(perm), std::move(expo)};
  for (std::size_t i = 0; i < m.perm.size(); ++i)
    if (m.weights[m.perm[i]] != m.weights[i]) throw std::invalid_argument("monomial map mixes weights");
  for (auto& x : m.expo) x = mod(x, modulus);
  for (std::size_t i = 0; i < m.weights.size(); ++i) {
    if (m.weights[i] != 1) continue;
    const int c = m.expo[i];
    for (std::size_t j = 0; j < m.expo.size(); ++j) m.expo[j] = mod(m.expo[j] - static_cast<long>(c) * m.weights[j], modulus);
    break;
  }
  return m;
}

MonomialMap operator*(const MonomialMap& a, const MonomialMap& b) {
  // (a(b(x)))_i = eps^(a_i) b(x)_(pi_a(i)) = eps^(a_i + b_(pi_a(i))) x_(pi_b(pi_a(i))).
  std::vector<int> perm(a.perm.size()), expo(a.perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) {
    perm[i] = b.perm[a.perm[i]];
    expo[i] = a.expo[i] + b.expo[a.perm[i]];
  }
  return MonomialMap::make(a.modulus, a.weights, std::move(perm), std::move(expo));
}

std::string MonomialMap::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (i) os << " : ";
    if (expo[i]) os << "e" << modulus << '^' << expo[i] << ' ';
    os << 'T' << perm[i];
  }
  os << ')';
  return os.str();
}

std::size_t hash_value(const MonomialMap& m) {
  std::size_t h = 0;
  for (std::size_t i = 0; i < m.perm.size(); ++i) h = h * 977 + static_cast<std::size_t>(m.perm[i] * 64 + m.expo[i]);
  return h;
}

MonomialMap identity_of(const MonomialMap& m) {
  std::vector<int> perm(m.perm.size());
  std::iota(perm.begin(), perm.end(), 0);
  return MonomialMap::make(m.modulus, m.weights, std::move(perm), std::vector<int>(m.perm.size(), 0));
}

std::optional<int> preserved_phase(const MonomialMap& phi, const WPoly& f) {
  const int m = phi.modulus;
  std::optional<int> phase;
  for (const auto& [a, c] : f.terms()) {
    if (!c.is_rational()) throw std::invalid_argument("preserved_phase needs rational coefficients");
    std::vector<int> b(a.size(), 0);
    long ph = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      b[phi.perm[i]] += a[i];
      ph += static_cast<long>(a[i]) * phi.expo[i];
    }
    auto it = f.terms().find(b);
    if (it == f.terms().end()) return std::nullopt;
    // c eps^ph = eps^k f_b with rational c, f_b: f_b = c, or f_b = -c with eps^(m/2) = -1.
    int k = mod(ph, m);
    if (it->second == -c && !(c == -c) && m % 2 == 0)
      k = mod(ph + m / 2, m);
    else if (it->second != c)
      return std::nullopt;
    if (phase && *phase != k) return std::nullopt;
    phase = k;
  }
  return phase;
}

std::vector<std::vector<int>> common_fixed_points_on(const std::vector<MonomialMap>& gens, const WPoly& f) {
  if (gens.empty()) throw std::invalid_argument("no maps given");
  const MonomialMap& d = gens.front();
  const int k = static_cast<int>(d.perm.size());
  for (int i = 0; i < k; ++i)
    if (d.perm[i] != i) throw UnsupportedOrder("first map must be diagonal");
  // x is fixed iff eps_M^(e_i) = lambda^(w_i) on its support for one root of
  // unity lambda = eps_N^s, N = M lcm(w).
  int l = 1;
  for (int w : d.weights) l = std::lcm(l, w);
  const int n = d.modulus * l;
  for (int s = 0; s < n; ++s) {
    int support = 0;
    for (int i = 0; i < k; ++i)
      if (mod(static_cast<long>(s) * d.weights[i] - static_cast<long>(d.expo[i]) * l, n) == 0) ++support;
    if (support > 1) throw UnsupportedOrder("eigenspace of the diagonal map is not a coordinate point");
  }
  std::vector<std::vector<int>> out;
  for (int i = 0; i < k; ++i) {
    bool fixed = true;
    for (const auto& g : gens)
      if (g.perm[i] != i) fixed = false;
    if (!fixed) continue;
    // f(e_i) = 0 iff no pure power of T_i occurs.
    bool on = true;
    for (const auto& [e, c] : f.terms()) {
      int others = 0;
      for (int j = 0; j < k; ++j)
        if (j != i) others += e[j];
      if (others == 0) on = false;
    }
    if (!on) continue;
    std::vector<int> pt(k, 0);
    pt[i] = 1;
    out.push_back(std::move(pt));
  }
  return out;
}

namespace {

template <std::uint32_t P>
struct ModPoly {
  std::vector<std::pair<Fp<P>, std::vector<int>>> terms;
  int max_exp = 0;

  explicit ModPoly(const WPoly& f) {
    for (const auto& [e, c] : f.terms()) {
      Fp<P> r = reduce_mod_p<P>(c);
      if (is_zero(r)) continue;
      for (int x : e) max_exp = std::max(max_exp, x);
      terms.emplace_back(r, e);
    }
  }
  bool vanishes(const std::vector<std::vector<Fp<P>>>& pw) const {
    Fp<P> acc(0);
    for (const auto& [c, e] : terms) {
      Fp<P> m = c;
      for (std::size_t i = 0; i < e.size(); ++i) m *= pw[i][e[i]];
      acc += m;
    }
    return is_zero(acc);
  }
};

template <std::uint32_t P>
SmoothCert smooth_at(const WPoly& f) {
  SmoothCert cert;
  cert.prime = P;
  const int k = f.nvars();
  ModPoly<P> fp(f);
  if (fp.terms.empty()) throw BadPrime("form vanishes mod " + std::to_string(P));
  std::vector<ModPoly<P>> parts;
  for (int i = 0; i < k; ++i) parts.emplace_back(f.derivative(i));
  int top = fp.max_exp;
  std::vector<Fp<P>> x(k, Fp<P>(0));
  std::vector<std::vector<Fp<P>>> pw(k, std::vector<Fp<P>>(top + 1));

  auto test = [&]() {
    for (int i = 0; i < k; ++i) {
      pw[i][0] = Fp<P>(1);
      for (int e = 1; e <= top; ++e) pw[i][e] = pw[i][e - 1] * x[i];
    }
    ++cert.points;
    if (!fp.vanishes(pw)) return false;
    for (const auto& d : parts)
      if (!d.vanishes(pw)) return false;
    return true;
  };
  // Runs through all values of the free coordinates, returning true at a
  // singular point.
  auto sweep = [&](const std::vector<int>& free, bool skip_zero) {
    for (int i : free) x[i] = Fp<P>(0);
    while (true) {
      bool zero = true;
      for (int i : free) zero = zero && is_zero(x[i]);
      if (!(skip_zero && zero) && test()) return true;
      std::size_t j = 0;
      for (; j < free.size(); ++j) {
        const int i = free[j];
        x[i] = x[i] + Fp<P>(1);
        if (!is_zero(x[i])) break;
      }
      if (j == free.size()) return false;
    }
  };

  const auto& w = f.weights();
  bool found = false;
  // First nonzero weight-1 coordinate normalized to 1.
  for (int lead = 0; lead < k && !found; ++lead) {
    if (w[lead] != 1) continue;
    std::vector<int> free;
    for (int i = 0; i < k; ++i) {
      if (i == lead) continue;
      if (i < lead && w[i] == 1) {
        x[i] = Fp<P>(0);
        continue;
      }
      free.push_back(i);
    }
    x[lead] = Fp<P>(1);
    found = sweep(free, false);
  }
  // All weight-1 coordinates zero.
  if (!found) {
    std::vector<int> free;
    for (int i = 0; i < k; ++i) {
      if (w[i] == 1)
        x[i] = Fp<P>(0);
      else
        free.push_back(i);
    }
    if (!free.empty()) found = sweep(free, true);
  }
  cert.smooth = !found;
  if (found)
    for (const auto& v : x) cert.witness.push_back(v.value());
  return cert;
}

}  // namespace

SmoothCert smooth_mod_p(const WPoly& f, std::uint32_t p) {
  if (!f.is_homogeneous()) throw std::invalid_argument("smooth_mod_p needs a homogeneous form");
  static_assert(kCertPrimes.size() == 4);
  switch (p) {
    case kCertPrimes[0]: return smooth_at<kCertPrimes[0]>(f);
    case kCertPrimes[1]: return smooth_at<kCertPrimes[1]>(f);
    case kCertPrimes[2]: return smooth_at<kCertPrimes[2]>(f);
    case kCertPrimes[3]: return smooth_at<kCertPrimes[3]>(f);
    default: throw std::invalid_argument("unsupported certificate prime " + std::to_string(p));
  }
}

F61 root_f61(int m) {
  if (m < 1 || 60 % m != 0) throw UnsupportedOrder("F_61 has no primitive root of unity of order " + std::to_string(m));
  static const F61 omega = [] {
    const F61 z = zeta_image<kModelPrime>();
    for (std::uint32_t r = 2; r < kModelPrime; ++r) {
      F61 w(r);
      if (w.pow(3) == z && w.pow(20) != F61(1) && w.pow(12) != F61(1)) return w;
    }
    throw IntegrityError("no primitive 60th root of unity cubing to zeta_20 mod 61");
  }();
  return omega.pow(60 / m);
}

}  // namespace cremona
