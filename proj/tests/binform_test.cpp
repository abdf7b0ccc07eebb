#include <doctest.h>

#include "cremona/binform.hpp"
#include "cremona/errors.hpp"
#include "cremona/icosahedral.hpp"
#include "cremona/weighted.hpp"
#include "support.hpp"

using namespace cremona;

namespace {

BinForm t0() { return BinForm::monomial(1, 1); }
BinForm t1() { return BinForm::monomial(1, 0); }

Mat2Q random_mat(std::mt19937_64& rng) {
  for (;;) {
    Mat2Q m = mat2<CycNum>(CycNum(static_cast<long>(rng() % 5) - 2), test::random_cyc(rng),
                           CycNum(static_cast<long>(rng() % 5) - 2), CycNum(static_cast<long>(rng() % 5) - 2));
    if (!det2(m).is_zero()) return m;
  }
}

}  // namespace

TEST_CASE("form storage and evaluation") {
  BinForm f(3);
  CHECK(f.coeffs().size() == 4);
  CHECK(f.is_zero());
  CHECK(BinForm(5) == BinForm(5));
  CHECK(BinForm(5) != BinForm(4));
  const BinForm g = t0() * t0() * t1() * CycNum(3);
  CHECK(g.degree() == 3);
  CHECK(g[2] == CycNum(3));
  CHECK(g.eval(CycNum(2), CycNum(5)) == CycNum(60));
  CHECK(parse_binform(g.to_string()) == g);
  CHECK_THROWS_AS(parse_binform("deg=2; 0/1,0/1"), ParseError);
}

TEST_CASE("substitution action") {
  const BinForm phi3 = grundform(3);
  CHECK(act(Mat2Q::Identity().eval(), grundform(1)) == grundform(1));
  const Mat2Q g1 = mat2<CycNum>(root_of_unity(1, 10), CycNum(0), CycNum(0), root_of_unity(9, 10));
  CHECK(act(g1, phi3) == phi3);
  const CycNum lam = CycNum(2) + CycNum::zeta_pow(3);
  const Mat2Q scal = mat2<CycNum>(lam, CycNum(0), CycNum(0), lam);
  CHECK(act(scal, phi3) == phi3 * lam.pow(12));
  // (t0, t1) -> (t0 + t1, t1) on t0^2.
  const Mat2Q u = mat2<CycNum>(CycNum(1), CycNum(1), CycNum(0), CycNum(1));
  CHECK(act(u, t0() * t0()) == t0() * t0() + t0() * t1() * CycNum(2) + t1() * t1());
}

TEST_CASE("action law and multiplicativity on random triples") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 25; ++i) {
    const Mat2Q g = random_mat(rng), h = random_mat(rng);
    const BinForm f = test::random_form(rng, 6, 2), f2 = test::random_form(rng, 4, 2);
    CHECK(act(h, act(g, f)) == act(Mat2Q(g * h), f));
    CHECK(act(g, f * f2) == act(g, f) * act(g, f2));
  }
}

TEST_CASE("Gruendformen as printed") {
  CHECK(grundform(1).degree() == 30);
  CHECK(grundform(2).degree() == 20);
  CHECK(grundform(3).degree() == 12);
  CHECK(grundform(1)[25] == CycNum(522));
  CHECK(grundform(3).eval(CycNum(1), CycNum(0)).is_zero());
  CHECK(grundform(3).eval(CycNum(1), CycNum(1)) == CycNum(11));
  CHECK(grundform(1).eval(CycNum(1), CycNum(0)) == CycNum(1));
  CHECK(grundform(2).eval(CycNum(1), CycNum(0)) == CycNum(-1));
  CHECK_THROWS(grundform(4));
}

TEST_CASE("gcd") {
  const BinForm a = t0() * t0() * t1(), b = t0() * t1() * t1();
  CHECK(gcd(a, b) == t0() * t1());
  const BinForm f = grundform(3) * CycNum(7);
  CHECK(gcd(f, BinForm(4)) == f.monic());
  CHECK(gcd(grundform(2), grundform(3)).degree() == 0);
  CHECK(gcd(grundform(1), grundform(2)).degree() == 0);
  CHECK(gcd(grundform(1) * grundform(3), grundform(2) * grundform(3)) == grundform(3).monic());
  CHECK_THROWS_AS(gcd(BinForm(2), BinForm(3)), ArithmeticError);
}

TEST_CASE("modular and exact gcd degrees agree on random pairs") {
  // A single prime may be unlucky; the minimum over the certificate primes
  // must match, and no prime may report a smaller gcd.
  std::mt19937_64 rng(19);
  int agree = 0, unlucky = 0;
  for (int i = 0; i < 200; ++i) {
    const int dh = static_cast<int>(rng() % 6);
    BinForm h = test::random_form(rng, dh, 2);
    h[dh] = CycNum(1);
    const int da = static_cast<int>(rng() % 15) + 1, db = static_cast<int>(rng() % 15) + 1;
    const BinForm f = h * test::random_form(rng, da, 2), g = h * test::random_form(rng, db, 2);
    if (f.is_zero() || g.is_zero()) {
      ++agree;
      continue;
    }
    const int exact = gcd(f, g).degree();
    const std::array<int, 4> mod{gcd(reduce_mod_p<41>(f), reduce_mod_p<41>(g)).degree(),
                                 gcd(reduce_mod_p<61>(f), reduce_mod_p<61>(g)).degree(),
                                 gcd(reduce_mod_p<101>(f), reduce_mod_p<101>(g)).degree(),
                                 gcd(reduce_mod_p<181>(f), reduce_mod_p<181>(g)).degree()};
    for (int m : mod) {
      CHECK(m >= exact);
      unlucky += m != exact;
    }
    agree += *std::min_element(mod.begin(), mod.end()) == exact;
  }
  CHECK(agree == 200);
  CHECK(unlucky < 20);
}

TEST_CASE("squarefreeness") {
  CHECK_FALSE(is_squarefree(t0() * t0()).value);
  CHECK_FALSE(is_squarefree(t1() * t1() * t0()).value);
  for (int k = 1; k <= 3; ++k) {
    const auto r = is_squarefree(grundform(k));
    CHECK(r.value);
    CHECK(r.prime == 41);
  }
  CHECK(is_squarefree(grundform(2) * grundform(3)).value);
  CHECK(is_squarefree(grundform(1) * grundform(2) * grundform(3)).value);
  CHECK_FALSE(is_squarefree(grundform(3) * grundform(3)).value);
  // A negative is always confirmed exactly.
  CHECK(is_squarefree(grundform(3) * grundform(3)).prime == 0);
}

TEST_CASE("squarefree fast path agrees with the exact test") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 60; ++i) {
    BinForm f = test::random_form(rng, static_cast<int>(rng() % 12) + 2, 2);
    if (f.is_zero()) continue;
    if (i % 3 == 0) f = f * test::random_form(rng, 1, 1) * test::random_form(rng, 1, 1);
    if (f.is_zero()) continue;
    CHECK(is_squarefree(f).value == squarefree_direct(f));
  }
}

TEST_CASE("conic discriminant") {
  CHECK(disc_conic(grundform(3), BinForm(16), grundform(2)) == grundform(3) * grundform(2));
  CHECK(disc_conic(grundform(3), BinForm(16), grundform(2)).degree() == 32);
  const BinForm f = grundform(3);
  CHECK(disc_conic(f, f, f).is_zero());
  CHECK_THROWS_AS(disc_conic(grundform(3), grundform(3), grundform(2)), DegreeMismatch);
  // Theorem-style degree pattern 2d, 2d+e, 2d+2e.
  const int d = 6, e = 4;
  CHECK(disc_conic(BinForm(2 * d), BinForm(2 * d + e), BinForm(2 * d + 2 * e)).degree() == 4 * d + 2 * e);
}

TEST_CASE("divisibility") {
  CHECK(divides(t0(), t0() * grundform(2)));
  CHECK_FALSE(divides(grundform(1), grundform(2) * grundform(3)));
  std::mt19937_64 rng(29);
  for (int i = 0; i < 10; ++i) {
    const BinForm h = test::random_form(rng, 7, 2);
    CHECK(divides(grundform(1), grundform(1) * h));
  }
  CHECK(divides(t1(), t1() * t1()));
  CHECK_FALSE(divides(t1() * t1(), t1() * t0()));
  CHECK_THROWS_AS(divides(BinForm(1), t0()), ArithmeticError);
}

TEST_CASE("Segre lift") {
  const WPoly x0t0 = bihomogeneous(t0(), 1, 0);
  const WPoly lifted = segre_lift(x0t0);
  CHECK(lifted == WPoly::monomial({1, 1, 1, 1}, {1, 0, 0, 0}));
  const WPoly mixed = bihomogeneous(t0() * t1(), 1, 1);
  CHECK(segre_lift(mixed) == WPoly::monomial({1, 1, 1, 1}, {1, 0, 0, 1}));
  CHECK(segre_pullback(segre_lift(mixed)) == mixed);
  CHECK_THROWS_AS(segre_lift(bihomogeneous(t0(), 2, 0)), NotLiftable);
}

TEST_CASE("Segre round trip on balanced forms") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 20; ++i) {
    const int n = static_cast<int>(rng() % 6) + 1;
    WPoly f = bihomogeneous(test::random_form(rng, n, 2), 0, n);
    f = f + bihomogeneous(test::random_form(rng, n, 2), n, 0);
    if (n >= 2) f = f + bihomogeneous(test::random_form(rng, n, 2), 1, n - 1);
    CHECK(segre_pullback(segre_lift(f)) == f);
  }
}
