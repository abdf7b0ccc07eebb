#pragma once

// Shared fixtures: seeded random field elements and a cached suite run.

#include <random>
#include <vector>

#include "cremona/family.hpp"

namespace cremona::test {

inline mpq_class small_rational(std::mt19937_64& rng) {
  return mpq_class(static_cast<long>(rng() % 19) - 9, static_cast<long>(rng() % 5) + 1);
}

inline CycNum random_cyc(std::mt19937_64& rng) {
  std::array<mpq_class, CycNum::kDegree> c;
  for (auto& x : c) x = rng() % 3 ? small_rational(rng) : mpq_class(0);
  return CycNum::from_coeffs(c);
}

inline CycNum random_nonzero_cyc(std::mt19937_64& rng) {
  for (;;) {
    CycNum a = random_cyc(rng);
    if (!a.is_zero()) return a;
  }
}

inline BinForm random_form(std::mt19937_64& rng, int n, int density = 3) {
  BinForm f(n);
  for (int k = 0; k <= n; ++k)
    if (rng() % density == 0) f[k] = CycNum(static_cast<long>(rng() % 7) - 3);
  return f;
}

/// The default suite, computed once per test process.
inline const std::vector<FamilyCert>& default_suite() {
  static const std::vector<FamilyCert> s = full_suite();
  return s;
}

inline const FamilyCert& suite_cert(const std::string& id) {
  for (const auto& c : default_suite())
    if (c.id() == id) return c;
  throw std::out_of_range("no certificate " + id);
}

}  // namespace cremona::test
