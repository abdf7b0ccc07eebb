#include <doctest.h>

#include "cremona/icosahedral.hpp"
#include "cremona/invariant.hpp"
#include "support.hpp"

using namespace cremona;

namespace {

BinForm t0_pow(int n) { return BinForm::monomial(n, n); }

// Hilbert function of Q[Phi_1, Phi_2, Phi_3] modulo one relation in degree 60.
long count_monomials(int n) {
  if (n < 0) return 0;
  return static_cast<long>(grundform_exponents(n, true).size());
}

}  // namespace

TEST_CASE("Reynolds averaging") {
  const BinForm phi3 = grundform(3);
  CHECK(reynolds(phi3) == phi3);
  CHECK(reynolds(phi3, canonical_binary_icosahedral()) == phi3);
  CHECK(reynolds(BinForm::monomial(1, 1)).is_zero());
  const BinForm r12 = reynolds(t0_pow(12));
  CHECK((r12.is_zero() || gcd(r12, phi3).degree() == 12));
  std::mt19937_64 rng(37);
  for (int n : {12, 20, 24, 30}) {
    const BinForm f = test::random_form(rng, n, 3);
    const BinForm r = reynolds(f);
    CHECK(reynolds(r) == r);
    CHECK(membership(r));
    CHECK(r == reynolds(f, canonical_binary_icosahedral()));
  }
}

TEST_CASE("invariant bases at small degrees") {
  const auto b12 = invariant_basis(12);
  REQUIRE(b12.dimension() == 1);
  CHECK(gcd(b12.forms[0], grundform(3)).degree() == 12);
  CHECK(invariant_basis(2).dimension() == 0);
  CHECK(invariant_basis(60).dimension() == 2);
  CHECK(invariant_basis(0).dimension() == 1);
  for (int n = 0; n <= 64; n += 2)
    for (const auto& f : invariant_basis(n).forms) CHECK(membership(f));
}

TEST_CASE("Molien dimensions") {
  CHECK(molien_dim(0) == 1);
  for (int n = 1; n <= 99; n += 2) CHECK(molien_dim(n) == 0);
  CHECK(molien_dim(12) == 1);
  CHECK(molien_dim(60) == 2);
  const auto table = molien_table();
  CHECK(table.size() == static_cast<std::size_t>(kMolienBound + 1));
  for (const auto& [n, d] : table) CHECK(d >= 0);
}

TEST_CASE("Molien series equals the Reynolds rank up to the bound") {
  for (int n = 0; n <= kMolienBound; n += 2) {
    INFO("n = ", n);
    CHECK(molien_dim(n) == reynolds_basis(n).dimension());
  }
}

TEST_CASE("Molien series equals the monomial count minus syzygy multiples") {
  for (int n = 0; n <= 200; n += 2) {
    INFO("n = ", n);
    CHECK(molien_dim(n) == count_monomials(n) - count_monomials(n - 60));
  }
  for (int n = 0; n <= 200; n += 2) CHECK(monomial_basis(n).dimension() == molien_dim(n));
}

TEST_CASE("membership") {
  CHECK(membership(grundform(1) * grundform(2) * grundform(3)));
  CHECK_FALSE(membership(t0_pow(30)));
  CHECK(membership(BinForm(10)));
  CHECK_FALSE(membership(grundform(3) + t0_pow(12)));
}

TEST_CASE("the degree-60 relation") {
  const Syzygy s = syzygy_60();
  CHECK(s.kernel_dimension == 1);
  CHECK(s.lambda[0] == 1);
  // Leading terms at (1 : 0): Phi_1 = 1, Phi_2 = -1, Phi_3 = 0.
  CHECK(s.lambda[0] == s.lambda[1]);
  const BinForm rel = grundform(1).pow(2) * CycNum(s.lambda[0]) + grundform(2).pow(3) * CycNum(s.lambda[1]) +
                      grundform(3).pow(5) * CycNum(s.lambda[2]);
  CHECK(rel.is_zero());
  std::mt19937_64 rng(41);
  for (int i = 0; i < 5; ++i) {
    const CycNum x = test::random_cyc(rng), y = test::random_cyc(rng);
    const CycNum v = CycNum(s.lambda[0]) * grundform(1).eval(x, y).pow(2) +
                     CycNum(s.lambda[1]) * grundform(2).eval(x, y).pow(3) +
                     CycNum(s.lambda[2]) * grundform(3).eval(x, y).pow(5);
    CHECK(v.is_zero());
  }
}

TEST_CASE("nonemptiness at the conic-bundle construction degrees") {
  const int d = 75;
  CHECK(molien_dim(2 * d - 2) >= 1);
  CHECK(molien_dim(2 * d) >= 1);
  CHECK(molien_dim(2 * d + 2) >= 1);
  CHECK(invariant_basis(2 * d + 2).dimension() == molien_dim(2 * d + 2));
  CHECK(invariant_basis(2 * d + 2).method != reynolds_basis(12).method);
}

TEST_CASE("Phi_1 divides every invariant of degree 2d+2 for even d") {
  std::vector<int> checked;
  for (int d = 2; checked.size() < 3; d += 2) {
    const auto b = invariant_basis(2 * d + 2);
    if (b.dimension() == 0) continue;
    checked.push_back(d);
    for (const auto& f : b.forms) CHECK(divides(grundform(1), f));
  }
  CHECK(checked == std::vector<int>{14, 20, 24});
}
