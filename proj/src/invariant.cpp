#include "cremona/invariant.hpp"

#include <mutex>
#include <unordered_map>

namespace cremona {

namespace {

// Coset representative scaled into Z[zeta] where possible; acting with
// sigma * c multiplies a degree-n form by sigma^n.
struct ScaledRep {
  Mat2Q m;
  CycNum sigma_inv;
};

struct CosetData {
  std::vector<ScaledRep> reps;
  std::size_t subgroup_order = 0;
};

bool integral(const Mat2Q& m) {
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if (m(i, j).denominator() != 1) return false;
  return true;
}

std::size_t height(const Mat2Q& m) {
  std::size_t h = 0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      h += mpz_sizeinbase(m(i, j).denominator().get_mpz_t(), 2);
      for (int k = 0; k < CycNum::kDegree; ++k)
        if (sgn(m(i, j).numerator(k)) != 0) h += mpz_sizeinbase(m(i, j).numerator(k).get_mpz_t(), 2) + 1;
    }
  return h;
}

ScaledRep scale_rep(const Mat2Q& m) {
  const CycNum r5 = sqrt5();
  for (const CycNum& sigma : {CycNum(1), r5, CycNum(5)}) {
    Mat2Q s = m * sigma;
    if (integral(s)) return {s, sigma.inverse()};
  }
  return {m, CycNum(1)};
}

// Right cosets H c of H = <g1>, so that G = union of H c. Each coset is
// represented by its element of smallest coefficient height.
const CosetData& cosets() {
  static const CosetData data = [] {
    const auto& m = icosahedral();
    const BinaryGroup& g = m.binary;
    const auto h = g.generated_subgroup({g.index_of(m.generators[0])});
    CosetData d;
    d.subgroup_order = h.size();
    std::vector<char> covered(g.order(), 0);
    for (std::size_t x = 0; x < g.order(); ++x) {
      if (covered[x]) continue;
      std::size_t best = x;
      for (std::size_t y : h) {
        const std::size_t z = g.mul(y, x);
        covered[z] = 1;
        if (height(scale_rep(g[z]).m) < height(scale_rep(g[best]).m)) best = z;
      }
      d.reps.push_back(scale_rep(g[best]));
    }
    return d;
  }();
  return data;
}

bool survives(int n, int k) { return ((2 * k - n) % 10 + 10) % 10 == 0; }

// Powers L^0..L^n of a linear form L = u t0 + v t1.
std::vector<BinForm> linear_powers(const CycNum& u, const CycNum& v, int n) {
  std::vector<BinForm> p{BinForm::constant(1)};
  const BinForm l(std::vector<CycNum>{v, u});
  for (int j = 1; j <= n; ++j) p.push_back(p.back() * l);
  return p;
}

// sum over coset reps of act(c, t0^k t1^(n-k)) for each requested k.
std::vector<BinForm> coset_sums(int n, const std::vector<int>& ks) {
  std::vector<BinForm> out(ks.size(), BinForm(n));
  for (const auto& r : cosets().reps) {
    const auto p1 = linear_powers(r.m(0, 0), r.m(0, 1), n);
    const auto p2 = linear_powers(r.m(1, 0), r.m(1, 1), n);
    const CycNum scale = r.sigma_inv.pow(n);
    for (std::size_t i = 0; i < ks.size(); ++i) out[i] += p1[ks[i]] * p2[n - ks[i]] * scale;
  }
  return out;
}

}  // namespace

BinForm reynolds(const BinForm& f) {
  const auto& m = icosahedral();
  const CycNum& e10 = m.generators[0](0, 0);
  if (m.generators[0] != mat2<CycNum>(e10, 0, 0, e10.inverse()) || e10 != root_of_unity(1, 10))
    throw IntegrityError("first generator is not diag(eps10, eps10^-1)");
  // Averaging over <g1> keeps exactly the monomials with 2k = n (mod 10).
  const int n = f.degree();
  std::vector<int> ks;
  for (int k = 0; k <= n; ++k)
    if (survives(n, k) && !f[k].is_zero()) ks.push_back(k);
  BinForm acc(n);
  const auto sums = coset_sums(n, ks);
  for (std::size_t i = 0; i < ks.size(); ++i) acc += sums[i] * f[ks[i]];
  return acc * CycNum(mpq_class(1, static_cast<long>(cosets().reps.size())));
}

std::map<int, long> molien_table(int bound) {
  // 1 / (1 - t q + q^2) = sum c_n q^n with c_n = t c_{n-1} - c_{n-2}.
  const BinaryGroup& g = canonical_binary_icosahedral();
  std::unordered_map<CycNum, long> traces;
  for (const auto& x : g.elements()) ++traces[x(0, 0) + x(1, 1)];
  std::vector<CycNum> total(bound + 1, CycNum(0));
  for (const auto& [t, mult] : traces) {
    CycNum prev(0), cur(1);
    for (int n = 0; n <= bound; ++n) {
      total[n] += cur * CycNum(mult);
      CycNum next = t * cur - prev;
      prev = std::move(cur);
      cur = std::move(next);
    }
  }
  std::map<int, long> out;
  for (int n = 0; n <= bound; ++n) {
    CycNum v = total[n] * CycNum(mpq_class(1, static_cast<long>(g.order())));
    if (!v.is_rational() || v.denominator() != 1) throw IntegrityError("Molien coefficient is not an integer");
    out[n] = v.numerator(0).get_si();
  }
  return out;
}

long molien_dim(int n) {
  if (n < 0) return 0;
  static std::mutex mu;
  static std::map<int, long> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (!cache.count(n)) cache = molien_table(std::max(n, kMolienBound));
  return cache.at(n);
}

std::vector<std::array<int, 3>> grundform_exponents(int n, bool all_a) {
  std::vector<std::array<int, 3>> out;
  for (int a = 0; 30 * a <= n && (all_a || a <= 1); ++a)
    for (int b = 0; 30 * a + 20 * b <= n; ++b) {
      const int rest = n - 30 * a - 20 * b;
      if (rest % 12 == 0) out.push_back({a, b, rest / 12});
    }
  return out;
}

BinForm grundform_monomial(const std::array<int, 3>& e) {
  static const std::array<BinForm, 3> phi = {grundform(1), grundform(2), grundform(3)};
  BinForm r = BinForm::constant(1);
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < e[i]; ++k) r = r * phi[i];
  return r;
}

namespace {

MatX<CycNum> coefficient_matrix(const std::vector<BinForm>& forms, int n) {
  MatX<CycNum> m(forms.size(), n + 1);
  for (std::size_t i = 0; i < forms.size(); ++i)
    for (int k = 0; k <= n; ++k) m(i, k) = forms[i][k];
  return m;
}

}  // namespace

InvariantBasis reynolds_basis(int n) {
  InvariantBasis b{n, {}, "reynolds"};
  if (n % 2 != 0) return b;
  std::vector<int> ks;
  for (int k = 0; k <= n; ++k)
    if (survives(n, k)) ks.push_back(k);
  std::vector<BinForm> images;
  const CycNum avg(mpq_class(1, static_cast<long>(cosets().reps.size())));
  for (auto& r : coset_sums(n, ks))
    if (!r.is_zero()) images.push_back(r * avg);
  if (images.empty()) return b;
  // Keep the rows selected as pivots of the transposed system.
  MatX<CycNum> m = coefficient_matrix(images, n).transpose();
  std::vector<int> piv;
  rank(m, &piv);
  for (int c : piv) b.forms.push_back(images[c]);
  return b;
}

InvariantBasis monomial_basis(int n) {
  InvariantBasis b{n, {}, "grundform-monomials"};
  for (const auto& e : grundform_exponents(n)) b.forms.push_back(grundform_monomial(e));
  if (!b.forms.empty() && rank(coefficient_matrix(b.forms, n)) != b.dimension())
    throw IntegrityError("Gruendform monomials are dependent in degree " + std::to_string(n));
  return b;
}

InvariantBasis invariant_basis(int n) {
  if (n < 0) throw std::invalid_argument("negative degree");
  return n <= kMolienBound ? reynolds_basis(n) : monomial_basis(n);
}

bool membership(const BinForm& f) { return is_invariant(f); }

Syzygy syzygy_60() {
  const std::vector<BinForm> forms = {grundform_monomial({2, 0, 0}), grundform_monomial({0, 3, 0}),
                                      grundform_monomial({0, 0, 5})};
  MatX<CycNum> ker = kernel(MatX<CycNum>(coefficient_matrix(forms, 60).transpose()));
  Syzygy s;
  s.kernel_dimension = static_cast<int>(ker.cols());
  if (ker.cols() == 0) throw IntegrityError("no degree-60 relation among the Gruendformen");
  std::array<CycNum, 3> v = {ker(0, 0), ker(1, 0), ker(2, 0)};
  for (const auto& x : v)
    if (!x.is_rational()) throw IntegrityError("degree-60 relation is not rational");
  CycNum scale = v[0].is_zero() ? CycNum(1) : v[0].inverse();
  for (int i = 0; i < 3; ++i) s.lambda[i] = (v[i] * scale).coeff(0);
  return s;
}

}  // namespace cremona
