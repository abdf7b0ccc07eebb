#pragma once

// Abstract model groups and recognition of isomorphism types by signature.

#include <cstdint>
#include <string>
#include <vector>

#include "cremona/group.hpp"

namespace cremona {

/// Permutation of {0, ..., n-1}; (p * q)(x) = p(q(x)).
struct Perm {
  std::vector<std::uint8_t> img;

  static Perm identity(int n);
  /// Product of disjoint cycles on n points.
  static Perm from_cycles(int n, const std::vector<std::vector<int>>& cycles);

  friend Perm operator*(const Perm& p, const Perm& q);
  friend bool operator==(const Perm&, const Perm&) = default;
};
std::size_t hash_value(const Perm& p);
Perm identity_of(const Perm& p);

/// r^k in Z_m.
struct CycElem {
  int m = 1, k = 0;
  friend CycElem operator*(CycElem a, CycElem b) { return {a.m, (a.k + b.k) % a.m}; }
  friend bool operator==(CycElem, CycElem) = default;
};
inline std::size_t hash_value(CycElem c) { return static_cast<std::size_t>(c.k); }
inline CycElem identity_of(CycElem c) { return {c.m, 0}; }

/// r^a s^b in D_n (order 2n), with s r s = r^-1.
struct DihElem {
  int n = 1, a = 0, b = 0;
  friend DihElem operator*(DihElem x, DihElem y) {
    int shift = x.b ? -y.a : y.a;
    return {x.n, ((x.a + shift) % x.n + x.n) % x.n, x.b ^ y.b};
  }
  friend bool operator==(DihElem, DihElem) = default;
};
inline std::size_t hash_value(DihElem d) { return static_cast<std::size_t>(d.a * 2 + d.b); }
inline DihElem identity_of(DihElem d) { return {d.n, 0, 0}; }

FinGroup<Perm> alternating5();
FinGroup<Perm> symmetric5();
FinGroup<Perm> alternating6();
FinGroup<Perm> symmetric4();
FinGroup<Perm> alternating4();
FinGroup<CycElem> cyclic_group(int m);
FinGroup<DihElem> dihedral_group(int n);

/// Signature of a direct product, combined without enumeration.
GroupSignature product_signature(const GroupSignature& a, const GroupSignature& b);

/// Signatures of the named catalog models: "A5", "Abar5", "S5", "A6",
/// "L2(7)", "S4", "A4", "A5wrZ2". Computed once by enumeration.
const GroupSignature& model_signature(const std::string& name);
GroupSignature cyclic_signature(int m);
GroupSignature dihedral_signature(int n);

/// Label for Z_m x K, with Z_1 x K written K.
std::string cyclic_times_label(int m, const std::string& k);
/// Label for D_n x K, where D_1 = Z2 and D_2 = Z2^2.
std::string dihedral_times_label(int n, const std::string& k);

/// Catalog label matching the signature, or "unknown".
std::string recognize(const GroupSignature& sig);

}  // namespace cremona
