#include "cremona/cyclo7.hpp"

namespace cremona {

namespace {

// x^6 = -(1 + x + ... + x^5).
void reduce(std::array<mpq_class, 12>& w) {
  for (int k = 11; k >= 6; --k) {
    if (sgn(w[k]) == 0) continue;
    // x^k = x^(k-7) * x^7 = x^(k-7) for k >= 7; x^6 is rewritten.
    if (k >= 7) {
      w[k - 7] += w[k];
    } else {
      for (int j = 0; j < 6; ++j) w[j] -= w[k];
    }
    w[k] = 0;
  }
}

}  // namespace

Cyc7 Cyc7::zeta_pow(long m) {
  const int r = static_cast<int>(((m % 7) + 7) % 7);
  Cyc7 z;
  if (r < 6) {
    z.c_[r] = 1;
  } else {
    for (auto& c : z.c_) c = -1;
  }
  return z;
}

bool Cyc7::is_zero() const {
  for (const auto& c : c_)
    if (sgn(c) != 0) return false;
  return true;
}

bool Cyc7::is_rational() const {
  for (int k = 1; k < kDegree; ++k)
    if (sgn(c_[k]) != 0) return false;
  return true;
}

Cyc7& Cyc7::operator+=(const Cyc7& b) {
  for (int k = 0; k < kDegree; ++k) c_[k] += b.c_[k];
  return *this;
}

Cyc7& Cyc7::operator-=(const Cyc7& b) {
  for (int k = 0; k < kDegree; ++k) c_[k] -= b.c_[k];
  return *this;
}

Cyc7 Cyc7::operator-() const {
  Cyc7 r;
  for (int k = 0; k < kDegree; ++k) r.c_[k] = -c_[k];
  return r;
}

Cyc7 operator*(const Cyc7& a, const Cyc7& b) {
  std::array<mpq_class, 12> w;
  for (int i = 0; i < Cyc7::kDegree; ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (int j = 0; j < Cyc7::kDegree; ++j)
      if (sgn(b.c_[j]) != 0) w[i + j] += a.c_[i] * b.c_[j];
  }
  reduce(w);
  Cyc7 r;
  for (int k = 0; k < Cyc7::kDegree; ++k) r.c_[k] = w[k];
  return r;
}

Cyc7 Cyc7::conjugate(int k) const {
  Cyc7 r;
  for (int j = 0; j < kDegree; ++j)
    if (sgn(c_[j]) != 0) r += zeta_pow(static_cast<long>(j) * k) * Cyc7(c_[j]);
  return r;
}

mpq_class Cyc7::norm() const {
  Cyc7 p = *this;
  for (int k = 2; k <= 6; ++k) p *= conjugate(k);
  if (!p.is_rational()) throw IntegrityError("norm of a Q(zeta_7) element is not rational");
  return p.c_[0];
}

Cyc7 Cyc7::inverse() const {
  if (is_zero()) throw ArithmeticError("inverse of zero in Q(zeta_7)");
  // Product of the other conjugates over the norm.
  Cyc7 p(1);
  for (int k = 2; k <= 6; ++k) p *= conjugate(k);
  const Cyc7 n = *this * p;
  if (!n.is_rational()) throw IntegrityError("norm of a Q(zeta_7) element is not rational");
  return p * Cyc7(mpq_class(1) / n.c_[0]);
}

std::size_t Cyc7::hash() const {
  std::size_t h = 0;
  for (const auto& c : c_)
    h = h * 1000003u ^ (mpz_get_ui(c.get_num_mpz_t()) * 31 + mpz_get_ui(c.get_den_mpz_t()) + (sgn(c) < 0));
  return h;
}

std::string Cyc7::to_string() const {
  std::string s;
  for (int k = 0; k < kDegree; ++k) {
    if (k) s += ',';
    s += c_[k].get_str();
  }
  return s;
}

Cyc7 sqrt_minus7() { return Cyc7(2) * (Cyc7::zeta_pow(1) + Cyc7::zeta_pow(2) + Cyc7::zeta_pow(4)) + Cyc7(1); }

}  // namespace cremona
