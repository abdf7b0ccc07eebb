#pragma once

// Exact arithmetic in Q(zeta) with zeta a primitive 20th root of unity,
// and reduction to prime fields F_p with p = 1 (mod 20).

#include <array>
#include <complex>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

#include <Eigen/Core>
#include <gmpxx.h>

#include "cremona/errors.hpp"

namespace cremona {

/// Element of Q(zeta_20) in the power basis 1, zeta, ..., zeta^7 modulo
/// x^8 - x^6 + x^4 - x^2 + 1.
///
/// Stored as eight integer numerators over one positive common denominator,
/// kept in lowest terms, so equality and hashing are representation-exact.
class CycNum {
 public:
  static constexpr int kDegree = 8;

  CycNum() : den_(1) {}
  CycNum(long v) : den_(1) { num_[0] = v; }  // NOLINT: scalar promotion
  explicit CycNum(const mpq_class& q);

  static CycNum from_coeffs(const std::array<mpq_class, kDegree>& c);
  /// zeta^m for any integer m.
  static CycNum zeta_pow(long m);

  mpq_class coeff(int k) const;
  std::array<mpq_class, kDegree> coeffs() const;
  const mpz_class& numerator(int k) const { return num_[k]; }
  const mpz_class& denominator() const { return den_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;

  CycNum& operator+=(const CycNum& b);
  CycNum& operator-=(const CycNum& b);
  CycNum& operator*=(const CycNum& b);
  CycNum& operator/=(const CycNum& b);
  CycNum operator-() const;

  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(const CycNum& a, const CycNum& b);
  friend CycNum operator/(const CycNum& a, const CycNum& b);
  friend bool operator==(const CycNum& a, const CycNum& b);
  friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

  /// Throws ArithmeticError on zero.
  CycNum inverse() const;
  CycNum pow(long e) const;
  /// Galois conjugate zeta -> zeta^k, k a unit mod 20.
  CycNum conjugate(int k) const;
  /// Field norm down to Q.
  mpq_class norm() const;

  std::size_t hash() const;

  /// "a0/b0,...,a7/b7", each rational in lowest terms.
  std::string to_string() const;
  static CycNum parse(std::string_view text);

 private:
  void normalize();

  std::array<mpz_class, kDegree> num_;
  mpz_class den_;
};

inline bool is_zero(const CycNum& a) { return a.is_zero(); }
inline CycNum inverse(const CycNum& a) { return a.inverse(); }
inline std::string to_string(const CycNum& a) { return a.to_string(); }

/// zeta^(20k/n); n must divide 20.
CycNum root_of_unity(long k, int n);
/// eps5 - eps5^2 - eps5^3 + eps5^4, whose square is 5.
CycNum sqrt5();
/// Numerical value under zeta -> exp(2 pi i / 20). Diagnostics only.
std::complex<double> approx_complex(const CycNum& a);

/// Residue mod a compile-time prime.
template <std::uint32_t P>
class Fp {
 public:
  static constexpr std::uint32_t modulus = P;

  constexpr Fp() = default;
  constexpr Fp(long long v)  // NOLINT: scalar promotion
      : v_(static_cast<std::uint32_t>(((v % static_cast<long long>(P)) + P) % P)) {}

  constexpr std::uint32_t value() const { return v_; }
  constexpr bool is_zero() const { return v_ == 0; }

  constexpr Fp& operator+=(Fp b) {
    v_ += b.v_;
    if (v_ >= P) v_ -= P;
    return *this;
  }
  constexpr Fp& operator-=(Fp b) {
    v_ = v_ >= b.v_ ? v_ - b.v_ : v_ + P - b.v_;
    return *this;
  }
  constexpr Fp& operator*=(Fp b) {
    v_ = static_cast<std::uint32_t>(static_cast<std::uint64_t>(v_) * b.v_ % P);
    return *this;
  }
  Fp& operator/=(Fp b) { return *this *= b.inverse(); }
  constexpr Fp operator-() const { return Fp(0) - *this; }

  friend constexpr Fp operator+(Fp a, Fp b) { return a += b; }
  friend constexpr Fp operator-(Fp a, Fp b) { return a -= b; }
  friend constexpr Fp operator*(Fp a, Fp b) { return a *= b; }
  friend Fp operator/(Fp a, Fp b) { return a /= b; }
  friend constexpr bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }
  friend constexpr bool operator!=(Fp a, Fp b) { return a.v_ != b.v_; }

  constexpr Fp pow(long long e) const {
    Fp base = *this, r(1);
    if (e < 0) {
      base = base.inverse();
      e = -e;
    }
    while (e > 0) {
      if (e & 1) r *= base;
      base *= base;
      e >>= 1;
    }
    return r;
  }
  constexpr Fp inverse() const {
    if (v_ == 0) throw ArithmeticError("inverse of zero in F_p");
    return pow(P - 2);
  }

  std::size_t hash() const { return v_; }
  std::string to_string() const { return std::to_string(v_); }

 private:
  std::uint32_t v_ = 0;
};

template <std::uint32_t P>
bool is_zero(Fp<P> a) {
  return a.is_zero();
}
template <std::uint32_t P>
Fp<P> inverse(Fp<P> a) {
  return a.inverse();
}
template <std::uint32_t P>
std::string to_string(Fp<P> a) {
  return a.to_string();
}

/// Smallest residue r with r^20 = 1, r^4 != 1, r^10 != 1.
template <std::uint32_t P>
constexpr Fp<P> zeta_image() {
  static_assert(P % 20 == 1, "zeta_20 lives in F_p only for p = 1 mod 20");
  for (std::uint32_t r = 2; r < P; ++r) {
    Fp<P> z(r);
    if (z.pow(20) == Fp<P>(1) && z.pow(4) != Fp<P>(1) && z.pow(10) != Fp<P>(1)) return z;
  }
  return Fp<P>(0);
}

/// reduce_mod_p for a chosen image of zeta; throws BadPrime when a
/// denominator vanishes mod P.
template <std::uint32_t P>
Fp<P> reduce_mod_p(const CycNum& a, Fp<P> zeta) {
  const unsigned long d = mpz_fdiv_ui(a.denominator().get_mpz_t(), P);
  if (d == 0) throw BadPrime("denominator divisible by " + std::to_string(P));
  Fp<P> acc(0), zk(1);
  for (int k = 0; k < CycNum::kDegree; ++k) {
    if (sgn(a.numerator(k)) != 0) {
      acc += Fp<P>(static_cast<long long>(mpz_fdiv_ui(a.numerator(k).get_mpz_t(), P))) * zk;
    }
    zk *= zeta;
  }
  return acc / Fp<P>(static_cast<long long>(d));
}

template <std::uint32_t P>
Fp<P> reduce_mod_p(const CycNum& a) {
  return reduce_mod_p<P>(a, zeta_image<P>());
}

/// Certificate primes, in the order they are tried.
inline constexpr std::array<std::uint32_t, 4> kCertPrimes = {41, 61, 101, 181};

}  // namespace cremona

template <>
struct std::hash<cremona::CycNum> {
  std::size_t operator()(const cremona::CycNum& a) const { return a.hash(); }
};

template <std::uint32_t P>
struct std::hash<cremona::Fp<P>> {
  std::size_t operator()(cremona::Fp<P> a) const { return a.hash(); }
};

namespace Eigen {

template <>
struct NumTraits<cremona::CycNum> : GenericNumTraits<cremona::CycNum> {
  using Real = cremona::CycNum;
  using NonInteger = cremona::CycNum;
  using Literal = cremona::CycNum;
  using Nested = cremona::CycNum;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 16,
    MulCost = 64
  };
  static Real epsilon() { return Real(0); }
  static Real dummy_precision() { return Real(0); }
  static Real highest() { return Real(0); }
  static Real lowest() { return Real(0); }
  static int digits10() { return 0; }
};

template <std::uint32_t P>
struct NumTraits<cremona::Fp<P>> : GenericNumTraits<cremona::Fp<P>> {
  using Real = cremona::Fp<P>;
  using NonInteger = cremona::Fp<P>;
  using Literal = cremona::Fp<P>;
  using Nested = cremona::Fp<P>;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 0,
    RequireInitialization = 0,
    ReadCost = 1,
    AddCost = 1,
    MulCost = 3
  };
  static Real epsilon() { return Real(0); }
  static Real dummy_precision() { return Real(0); }
  static Real highest() { return Real(P - 1); }
  static Real lowest() { return Real(0); }
  static int digits10() { return 0; }
};

}  // namespace Eigen
