#pragma once

// Invariants of St(Abar5) acting on binary forms: Reynolds averaging, Molien
// dimensions, bases of R_n^G and the degree-60 relation among Phi_1..3.

#include <array>
#include <map>
#include <string>
#include <vector>

#include "cremona/binform.hpp"
#include "cremona/icosahedral.hpp"

namespace cremona {

/// (1/|G|) sum over G of act(g, f).
template <class S>
BinFormT<S> reynolds(const BinFormT<S>& f, const FinGroup<Mat2<S>>& g) {
  BinFormT<S> acc(f.degree());
  for (const auto& x : g.elements()) acc += act(x, f);
  return acc * inverse(S(static_cast<long>(g.order())));
}

/// Reynolds operator of the icosahedral model, factored through the cyclic
/// subgroup generated by g1 and its twelve right cosets.
BinForm reynolds(const BinForm& f);

/// Default bound for Molien tables and the Reynolds cross-check.
inline constexpr int kMolienBound = 64;

/// dim R_n^G for 0 <= n <= bound, by exact series expansion.
std::map<int, long> molien_table(int bound = kMolienBound);
long molien_dim(int n);

struct InvariantBasis {
  int degree = 0;
  std::vector<BinForm> forms;
  /// "reynolds" or "grundform-monomials".
  std::string method;
  int dimension() const { return static_cast<int>(forms.size()); }
};

/// Exponents (a, b, c) of Phi_1^a Phi_2^b Phi_3^c of degree n with a <= 1.
std::vector<std::array<int, 3>> grundform_exponents(int n, bool all_a = false);
BinForm grundform_monomial(const std::array<int, 3>& e);

/// Reynolds images of the monomial basis, reduced to an independent set.
InvariantBasis reynolds_basis(int n);
/// Phi_1^a Phi_2^b Phi_3^c with a in {0, 1}; independence checked by rank.
InvariantBasis monomial_basis(int n);
/// Reynolds up to degree 64, Gruendform monomials beyond.
InvariantBasis invariant_basis(int n);

/// act(g, f) = f for every generator of the validated model.
bool membership(const BinForm& f);

struct Syzygy {
  /// lambda_1 Phi_1^2 + lambda_2 Phi_2^3 + lambda_3 Phi_3^5 = 0.
  std::array<mpq_class, 3> lambda;
  int kernel_dimension = 0;
};

/// Throws IntegrityError when no relation exists.
Syzygy syzygy_60();

}  // namespace cremona
