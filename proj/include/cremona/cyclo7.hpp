#pragma once

// Exact arithmetic in Q(zeta_7), the field of definition of the Klein
// representation of L2(7) on P^2.

#include <array>
#include <string>

#include <Eigen/Core>
#include <gmpxx.h>

#include "cremona/errors.hpp"

namespace cremona {

/// Element of Q(zeta_7) in the power basis 1, zeta, ..., zeta^5 modulo
/// 1 + x + ... + x^6.
class Cyc7 {
 public:
  static constexpr int kDegree = 6;

  Cyc7() = default;
  Cyc7(long v) { c_[0] = v; }  // NOLINT: scalar promotion
  explicit Cyc7(const mpq_class& q) { c_[0] = q; }

  /// zeta^m for any integer m.
  static Cyc7 zeta_pow(long m);

  const mpq_class& coeff(int k) const { return c_[k]; }
  bool is_zero() const;
  bool is_rational() const;

  Cyc7& operator+=(const Cyc7& b);
  Cyc7& operator-=(const Cyc7& b);
  Cyc7& operator*=(const Cyc7& b) { return *this = *this * b; }
  Cyc7 operator-() const;

  friend Cyc7 operator+(Cyc7 a, const Cyc7& b) { return a += b; }
  friend Cyc7 operator-(Cyc7 a, const Cyc7& b) { return a -= b; }
  friend Cyc7 operator*(const Cyc7& a, const Cyc7& b);
  friend Cyc7 operator/(const Cyc7& a, const Cyc7& b) { return a * b.inverse(); }
  Cyc7& operator/=(const Cyc7& b) { return *this = *this / b; }
  friend bool operator==(const Cyc7& a, const Cyc7& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Cyc7& a, const Cyc7& b) { return !(a == b); }

  /// Galois conjugate zeta -> zeta^k, k a unit mod 7.
  Cyc7 conjugate(int k) const;
  mpq_class norm() const;
  /// Throws ArithmeticError on zero.
  Cyc7 inverse() const;

  std::size_t hash() const;
  /// "a0,...,a5" with each rational in lowest terms.
  std::string to_string() const;

 private:
  std::array<mpq_class, kDegree> c_;
};

inline bool is_zero(const Cyc7& a) { return a.is_zero(); }
inline Cyc7 inverse(const Cyc7& a) { return a.inverse(); }
inline std::string to_string(const Cyc7& a) { return a.to_string(); }

/// 2 (zeta + zeta^2 + zeta^4) + 1, whose square is -7.
Cyc7 sqrt_minus7();

}  // namespace cremona

template <>
struct std::hash<cremona::Cyc7> {
  std::size_t operator()(const cremona::Cyc7& a) const { return a.hash(); }
};

namespace Eigen {

template <>
struct NumTraits<cremona::Cyc7> : GenericNumTraits<cremona::Cyc7> {
  using Real = cremona::Cyc7;
  using NonInteger = cremona::Cyc7;
  using Literal = cremona::Cyc7;
  using Nested = cremona::Cyc7;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 12,
    MulCost = 48
  };
  static Real epsilon() { return Real(0); }
  static Real dummy_precision() { return Real(0); }
  static Real highest() { return Real(0); }
  static Real lowest() { return Real(0); }
  static int digits10() { return 0; }
};

}  // namespace Eigen
