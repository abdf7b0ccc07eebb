#include <doctest.h>

#include <cmath>

#include "cremona/cyclo.hpp"
#include "cremona/cyclo7.hpp"
#include "cremona/errors.hpp"
#include "support.hpp"

using namespace cremona;

namespace {

const CycNum zeta = CycNum::zeta_pow(1);
const CycNum eps5 = root_of_unity(1, 5);

}  // namespace

TEST_CASE("roots of unity have the expected orders") {
  CHECK((eps5 * eps5.pow(4)).is_one());
  for (int j = 1; j <= 4; ++j) CHECK_FALSE(eps5.pow(j).is_one());
  CHECK(eps5.pow(5).is_one());
  CHECK(root_of_unity(1, 2) == CycNum(-1));
  CHECK(root_of_unity(1, 10) == zeta.pow(2));
  CHECK(root_of_unity(1, 4).pow(2) == CycNum(-1));
  CHECK(root_of_unity(1, 4) == zeta.pow(5));
  CHECK_THROWS_AS(root_of_unity(1, 3), UnsupportedOrder);
  CHECK_THROWS_AS(root_of_unity(1, 7), UnsupportedOrder);
}

TEST_CASE("the Gauss sum squares to 5") {
  const CycNum g = eps5 - eps5.pow(2) - eps5.pow(3) + eps5.pow(4);
  CHECK(g * g == CycNum(5));
  CHECK(sqrt5() == g);
  CHECK(std::abs(std::abs(approx_complex(g)) - std::sqrt(5.0)) < 1e-12);
}

TEST_CASE("zeta satisfies the 20th cyclotomic relation") {
  CHECK(zeta.pow(8) == zeta.pow(6) - zeta.pow(4) + zeta.pow(2) - CycNum(1));
  CHECK(zeta.pow(10) == CycNum(-1));
  CHECK(zeta.pow(20).is_one());
  std::mt19937_64 rng(1);
  for (int i = 0; i < 50; ++i) {
    const CycNum a = test::random_cyc(rng), b = test::random_cyc(rng);
    const CycNum p = a * b;
    // Products are reduced: the stored coefficients reproduce the value.
    CycNum back;
    for (int k = 0; k < CycNum::kDegree; ++k) back += CycNum(p.coeff(k)) * zeta.pow(k);
    CHECK(back == p);
  }
}

TEST_CASE("field axioms on random elements") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const CycNum a = test::random_cyc(rng), b = test::random_cyc(rng), c = test::random_cyc(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a + b == b + a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == CycNum(0));
  }
}

TEST_CASE("every nonzero element is invertible") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 1000; ++i) {
    const CycNum a = test::random_nonzero_cyc(rng);
    REQUIRE((a * a.inverse()).is_one());
  }
  CHECK_THROWS_AS(CycNum(1) / CycNum(0), ArithmeticError);
  CHECK_THROWS_AS(CycNum(0).inverse(), ArithmeticError);
}

TEST_CASE("norm is multiplicative") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 30; ++i) {
    const CycNum a = test::random_cyc(rng), b = test::random_cyc(rng);
    CHECK((a * b).norm() == a.norm() * b.norm());
  }
  CHECK(sqrt5().norm() == mpq_class(625));
}

TEST_CASE("text serialization round-trips") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    const CycNum a = test::random_cyc(rng);
    CHECK(CycNum::parse(a.to_string()) == a);
  }
  CHECK(CycNum(0).to_string() == "0/1,0/1,0/1,0/1,0/1,0/1,0/1,0/1");
  CHECK(CycNum::parse("1/2,0,0,0,0,0,0,-3/4") == CycNum(mpq_class(1, 2)) - CycNum(mpq_class(3, 4)) * zeta.pow(7));
  CHECK_THROWS_AS(CycNum::parse("1,2,3"), ParseError);
  CHECK_THROWS_AS(CycNum::parse("1,2,3,4,5,6,7,x"), ParseError);
}

TEST_CASE("zeta image mod 41 is the smallest primitive 20th root") {
  using F41 = Fp<41>;
  std::uint32_t smallest = 0;
  for (std::uint32_t r = 2; r < 41 && !smallest; ++r) {
    // Plain integer arithmetic, independent of Fp.
    auto pw = [r](int e) {
      std::uint64_t v = 1;
      for (int k = 0; k < e; ++k) v = v * r % 41;
      return v;
    };
    if (pw(20) == 1 && pw(4) != 1 && pw(10) != 1) smallest = r;
  }
  CHECK(zeta_image<41>().value() == smallest);
  CHECK(reduce_mod_p<41>(CycNum(1)) == F41(1));
  CHECK(reduce_mod_p<41>(zeta) == zeta_image<41>());
  const F41 i41 = reduce_mod_p<41>(root_of_unity(1, 4));
  CHECK(i41 == zeta_image<41>().pow(5));
  CHECK(i41 * i41 == F41(40));
}

TEST_CASE("reduction mod p is a ring homomorphism") {
  std::mt19937_64 rng(13);
  int tested = 0;
  for (int i = 0; i < 200; ++i) {
    const CycNum a = test::random_cyc(rng), b = test::random_cyc(rng);
    try {
      CHECK(reduce_mod_p<61>(a + b) == reduce_mod_p<61>(a) + reduce_mod_p<61>(b));
      CHECK(reduce_mod_p<61>(a * b) == reduce_mod_p<61>(a) * reduce_mod_p<61>(b));
      CHECK(reduce_mod_p<101>(a * b) == reduce_mod_p<101>(a) * reduce_mod_p<101>(b));
      ++tested;
    } catch (const BadPrime&) {
    }
  }
  CHECK(tested > 150);
  CHECK_THROWS_AS(reduce_mod_p<41>(CycNum(mpq_class(1, 41))), BadPrime);
}

TEST_CASE("approximate values follow zeta -> exp(2 pi i / 20)") {
  CHECK(std::abs(approx_complex(CycNum(0))) == 0.0);
  CHECK(std::abs(approx_complex(CycNum(-1)) - std::complex<double>(-1, 0)) < 1e-15);
  CHECK(std::abs(approx_complex(zeta) - std::polar(1.0, 2 * M_PI / 20)) < 1e-12);
}

TEST_CASE("Q(zeta_7) arithmetic") {
  const Cyc7 z = Cyc7::zeta_pow(1);
  Cyc7 p(1);
  for (int k = 0; k < 7; ++k) p *= z;
  CHECK(p == Cyc7(1));
  CHECK(sqrt_minus7() * sqrt_minus7() == Cyc7(-7));
  Cyc7 s;
  for (int k = 0; k < 7; ++k) s += Cyc7::zeta_pow(k);
  CHECK(s.is_zero());
  const Cyc7 a = Cyc7(3) + z * Cyc7(2) - Cyc7::zeta_pow(4);
  CHECK(a * a.inverse() == Cyc7(1));
  CHECK((a * z).norm() == a.norm());
}
