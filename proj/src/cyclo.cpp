#include "cremona/cyclo.hpp"

#include <cmath>
#include <numbers>

namespace cremona {

namespace {

// Basis coordinates of zeta^m, 0 <= m < 20. Every entry is -1, 0 or 1.
using PowTable = std::array<std::array<int, CycNum::kDegree>, 20>;

PowTable make_pow_table() {
  PowTable t{};
  for (int m = 0; m < 8; ++m) t[m][m] = 1;
  for (int m = 8; m < 20; ++m) {
    // zeta^m = zeta * zeta^(m-1); fold the zeta^8 overflow.
    std::array<int, CycNum::kDegree> prev = t[m - 1];
    int top = prev[7];
    for (int k = 7; k > 0; --k) t[m][k] = prev[k - 1];
    t[m][0] = 0;
    t[m][6] += top;
    t[m][4] -= top;
    t[m][2] += top;
    t[m][0] -= top;
  }
  return t;
}

const PowTable& pow_table() {
  static const PowTable t = make_pow_table();
  return t;
}

long mod20(long m) {
  long r = m % 20;
  return r < 0 ? r + 20 : r;
}

}  // namespace

CycNum::CycNum(const mpq_class& q) {
  mpq_class c = q;
  c.canonicalize();
  num_[0] = c.get_num();
  den_ = c.get_den();
}

CycNum CycNum::from_coeffs(const std::array<mpq_class, kDegree>& c) {
  CycNum r;
  mpz_class den = 1;
  for (const auto& q : c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
  for (int k = 0; k < kDegree; ++k) r.num_[k] = c[k].get_num() * (den / c[k].get_den());
  r.den_ = den;
  r.normalize();
  return r;
}

CycNum CycNum::zeta_pow(long m) {
  CycNum r;
  const auto& row = pow_table()[mod20(m)];
  for (int k = 0; k < kDegree; ++k) r.num_[k] = row[k];
  return r;
}

mpq_class CycNum::coeff(int k) const {
  mpq_class q(num_[k], den_);
  q.canonicalize();
  return q;
}

std::array<mpq_class, CycNum::kDegree> CycNum::coeffs() const {
  std::array<mpq_class, kDegree> c;
  for (int k = 0; k < kDegree; ++k) c[k] = coeff(k);
  return c;
}

bool CycNum::is_zero() const {
  for (const auto& n : num_)
    if (sgn(n) != 0) return false;
  return true;
}

bool CycNum::is_one() const { return den_ == 1 && num_[0] == 1 && is_rational(); }

bool CycNum::is_rational() const {
  for (int k = 1; k < kDegree; ++k)
    if (sgn(num_[k]) != 0) return false;
  return true;
}

void CycNum::normalize() {
  if (den_ == 1) return;
  mpz_class g = den_;
  for (const auto& n : num_) {
    if (sgn(n) == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    if (g == 1) return;
  }
  if (is_zero()) {
    den_ = 1;
    return;
  }
  for (auto& n : num_)
    if (sgn(n) != 0) mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), g.get_mpz_t());
  mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
}

CycNum& CycNum::operator+=(const CycNum& b) {
  if (den_ == b.den_) {
    for (int k = 0; k < kDegree; ++k) num_[k] += b.num_[k];
  } else {
    for (int k = 0; k < kDegree; ++k) {
      num_[k] *= b.den_;
      mpz_addmul(num_[k].get_mpz_t(), b.num_[k].get_mpz_t(), den_.get_mpz_t());
    }
    den_ *= b.den_;
  }
  normalize();
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& b) {
  if (den_ == b.den_) {
    for (int k = 0; k < kDegree; ++k) num_[k] -= b.num_[k];
  } else {
    for (int k = 0; k < kDegree; ++k) {
      num_[k] *= b.den_;
      mpz_submul(num_[k].get_mpz_t(), b.num_[k].get_mpz_t(), den_.get_mpz_t());
    }
    den_ *= b.den_;
  }
  normalize();
  return *this;
}

CycNum CycNum::operator-() const {
  CycNum r = *this;
  for (auto& n : r.num_) n = -n;
  return r;
}

CycNum operator*(const CycNum& a, const CycNum& b) {
  int ia[CycNum::kDegree], ib[CycNum::kDegree];
  int na = 0, nb = 0;
  for (int k = 0; k < CycNum::kDegree; ++k) {
    if (sgn(a.num_[k]) != 0) ia[na++] = k;
    if (sgn(b.num_[k]) != 0) ib[nb++] = k;
  }
  CycNum r;
  if (na == 0 || nb == 0) return r;
  thread_local std::array<mpz_class, 2 * CycNum::kDegree - 1> acc;
  for (auto& x : acc) x = 0;
  int top = 0;
  for (int x = 0; x < na; ++x)
    for (int y = 0; y < nb; ++y) {
      int k = ia[x] + ib[y];
      mpz_addmul(acc[k].get_mpz_t(), a.num_[ia[x]].get_mpz_t(), b.num_[ib[y]].get_mpz_t());
      if (k > top) top = k;
    }
  for (int k = top; k >= CycNum::kDegree; --k) {
    if (sgn(acc[k]) == 0) continue;
    acc[k - 2] += acc[k];
    acc[k - 4] -= acc[k];
    acc[k - 6] += acc[k];
    acc[k - 8] -= acc[k];
  }
  for (int k = 0; k < CycNum::kDegree; ++k) mpz_swap(r.num_[k].get_mpz_t(), acc[k].get_mpz_t());
  mpz_mul(r.den_.get_mpz_t(), a.den_.get_mpz_t(), b.den_.get_mpz_t());
  r.normalize();
  return r;
}

CycNum& CycNum::operator*=(const CycNum& b) { return *this = *this * b; }

CycNum operator/(const CycNum& a, const CycNum& b) { return a * b.inverse(); }

CycNum& CycNum::operator/=(const CycNum& b) { return *this = *this / b; }

bool operator==(const CycNum& a, const CycNum& b) {
  return a.den_ == b.den_ && a.num_ == b.num_;
}

CycNum CycNum::conjugate(int k) const {
  if (k % 2 == 0 || k % 5 == 0) throw ArithmeticError("conjugate index must be a unit mod 20");
  CycNum r;
  r.den_ = den_;
  const auto& tab = pow_table();
  for (int j = 0; j < kDegree; ++j) {
    if (sgn(num_[j]) == 0) continue;
    const auto& row = tab[mod20(static_cast<long>(j) * k)];
    for (int m = 0; m < kDegree; ++m) {
      if (row[m] > 0) r.num_[m] += num_[j];
      if (row[m] < 0) r.num_[m] -= num_[j];
    }
  }
  return r;
}

namespace {
constexpr int kOtherUnits[] = {3, 7, 9, 11, 13, 17, 19};
}

mpq_class CycNum::norm() const {
  CycNum p = *this;
  for (int k : kOtherUnits) p *= conjugate(k);
  if (!p.is_rational()) throw IntegrityError("norm is not rational");
  return p.coeff(0);
}

CycNum CycNum::inverse() const {
  if (is_zero()) throw ArithmeticError("division by zero in Q(zeta_20)");
  if (is_rational()) return CycNum(mpq_class(den_, num_[0]));
  CycNum p(1);
  for (int k : kOtherUnits) p *= conjugate(k);
  CycNum n = *this * p;
  if (!n.is_rational()) throw IntegrityError("norm is not rational");
  mpq_class inv(n.den_, n.num_[0]);
  inv.canonicalize();
  return p * CycNum(inv);
}

CycNum CycNum::pow(long e) const {
  CycNum base = e < 0 ? inverse() : *this;
  unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  CycNum r(1);
  while (n > 0) {
    if (n & 1) r *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return r;
}

std::size_t CycNum::hash() const {
  std::size_t h = mpz_fdiv_ui(den_.get_mpz_t(), 1000000007UL);
  for (const auto& n : num_) {
    std::size_t v = mpz_fdiv_ui(n.get_mpz_t(), 1000000007UL);
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::string CycNum::to_string() const {
  std::string out;
  for (int k = 0; k < kDegree; ++k) {
    if (k) out += ',';
    mpq_class q = coeff(k);
    out += q.get_num().get_str();
    out += '/';
    out += q.get_den().get_str();
  }
  return out;
}

CycNum CycNum::parse(std::string_view text) {
  std::array<mpq_class, kDegree> c;
  std::size_t pos = 0;
  for (int k = 0; k < kDegree; ++k) {
    std::size_t end = text.find(',', pos);
    if ((k < kDegree - 1) != (end != std::string_view::npos))
      throw ParseError("CycNum needs exactly 8 comma-separated rationals");
    std::string field(text.substr(pos, end == std::string_view::npos ? text.npos : end - pos));
    if (field.empty() || field.find_first_not_of("+-0123456789/") != std::string::npos)
      throw ParseError("bad rational '" + field + "'");
    if (field[0] == '+') field.erase(0, 1);
    if (mpq_set_str(c[k].get_mpq_t(), field.c_str(), 10) != 0 || sgn(c[k].get_den()) == 0)
      throw ParseError("bad rational '" + field + "'");
    c[k].canonicalize();
    pos = end + 1;
  }
  return from_coeffs(c);
}

CycNum root_of_unity(long k, int n) {
  if (n <= 0 || 20 % n != 0)
    throw UnsupportedOrder("root of unity of order " + std::to_string(n) + " is not in Q(zeta_20)");
  return CycNum::zeta_pow(k * (20 / n));
}

CycNum sqrt5() {
  const CycNum e = root_of_unity(1, 5);
  return e - e.pow(2) - e.pow(3) + e.pow(4);
}

std::complex<double> approx_complex(const CycNum& a) {
  std::complex<double> z = 0;
  for (int k = 0; k < CycNum::kDegree; ++k) {
    double angle = 2.0 * std::numbers::pi * k / 20.0;
    z += a.coeff(k).get_d() * std::polar(1.0, angle);
  }
  return z;
}

}  // namespace cremona
