#pragma once

// Helpers shared by the certificate constructors.

#include <string>
#include <vector>

#include "cremona/action.hpp"
#include "cremona/family.hpp"
#include "cremona/weighted.hpp"

namespace cremona::detail {

inline FamilyCert start(FamilySpec spec, const CertOptions& opt) {
  FamilyCert c;
  c.spec = std::move(spec);
  c.seed = opt.seed;
  c.primes = opt.primes;
  return c;
}

/// Runs `body`; an exception becomes a failing check carrying its message.
template <class F>
void guarded(FamilyCert& c, const std::string& name, F&& body) {
  try {
    body();
  } catch (const std::exception& e) {
    c.add(name, false, std::string("error: ") + e.what());
  }
}

std::string squarefree_evidence(const SquarefreeResult& r);
/// Squarefree check over the configured primes, with exact fallback.
SquarefreeResult squarefree(const BinForm& f, const CertOptions& opt);

/// Validated binary icosahedral generators over Q(zeta_20).
const std::vector<Mat2Q>& model_generators();

/// Adds the group-type check comparing a recognized label with the prediction.
void add_group_check(FamilyCert& c, const std::string& label, const std::string& evidence);

/// x0^a x1^b (p0 x0^2 + 2 p1 x0 x1 + p2 x1^2) on (x0, x1, t0, t1).
WPoly conic_form(const BinForm& p0, const BinForm& p1, const BinForm& p2, int a = 0, int b = 0);

/// p_i of the conic form after (x, t) -> (A x, A t).
std::array<BinForm, 3> diagonal_transform(const Mat2Q& a, const std::array<BinForm, 3>& p);

/// Image of Abar5 x <sign on u> acting on P(w^m, 1^4) with coordinates
/// (u_0..u_{m-1} : x : y : z : w), u carrying Sym^(m-1) of the first factor.
/// `diagonal` selects A x A on the Segre block, otherwise 1 x A.
ImageGroup segre_action(int m, int w, bool diagonal);

}  // namespace cremona::detail
