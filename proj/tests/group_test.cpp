#include <doctest.h>

#include <set>

#include "cremona/action.hpp"
#include "cremona/binform.hpp"
#include "cremona/errors.hpp"
#include "cremona/group.hpp"
#include "cremona/icosahedral.hpp"
#include "cremona/recognize.hpp"

using namespace cremona;

namespace {

const Mat2Q I2 = Mat2Q::Identity();

// Full direct product A x B as a group of index pairs.
struct Product {
  CayleyTable ta, tb, td;
  FinGroup<CycElem> trivial = cyclic_group(1);
  FinGroup<IndexPair> group;

  template <class EA, class EB>
  Product(const FinGroup<EA>& a, const FinGroup<EB>& b) : ta(CayleyTable::of(a)), tb(CayleyTable::of(b)) {
    group = diagonal_product(a, b, trivial, EpiTable(a.order(), 0), EpiTable(b.order(), 0), ta, tb);
  }
};

template <class E>
bool closed(const FinGroup<E>& g) {
  for (const auto& x : g.elements())
    for (const auto& y : g.elements())
      if (!g.contains(x * y)) return false;
  for (std::size_t i = 0; i < g.order(); ++i)
    if (g.mul(i, g.inverse_index(i)) != 0) return false;
  return true;
}

}  // namespace

TEST_CASE("printed generators") {
  const auto g = paper_generators();
  CHECK(det2(g[0]).is_one());
  CHECK(det2(g[1]).is_one());
  CHECK(det2(g[2]).is_one());
  CHECK(bool(Mat2Q(g[1] * g[1]) == Mat2Q(-I2)));
  CHECK(g[1](0, 1) == root_of_unity(1, 4));
  CHECK(g[0](0, 0) == root_of_unity(1, 10));
}

TEST_CASE("closure") {
  CHECK(FinGroup<Mat2Q>::closure({I2}, 10).order() == 1);
  CHECK(FinGroup<Mat2Q>::closure({paper_generators()[0]}, 100).order() == 10);
  const auto& m = icosahedral();
  CHECK(FinGroup<Mat2Q>::closure(std::vector<Mat2Q>(m.generators.begin(), m.generators.end()), 1000).order() == 120);
  const Mat2Q shear = mat2<CycNum>(CycNum(1), CycNum(1), CycNum(0), CycNum(1));
  CHECK_THROWS_AS(FinGroup<Mat2Q>::closure({shear}, 50), ClosureOverflow);
}

TEST_CASE("closure is idempotent and closed") {
  const auto& b = canonical_binary_icosahedral();
  const auto again = FinGroup<Mat2Q>::closure(b.elements(), 1000);
  CHECK(again.order() == b.order());
  for (const auto& x : b.elements()) CHECK(again.contains(x));
  CHECK(closed(b));
  CHECK(closed(projective_icosahedral()));
  CHECK(bool(b.identity() == I2));
}

TEST_CASE("binary icosahedral model") {
  const auto& m = icosahedral();
  CHECK(m.binary.order() == 120);
  CHECK(m.projective.order() == 60);
  std::size_t square_roots_of_one = 0;
  for (const auto& g : m.binary.elements()) square_roots_of_one += Mat2Q(g * g) == I2;
  CHECK(square_roots_of_one == 2);
  const auto s = signature(m.binary);
  CHECK(s.center_order == 2);
  CHECK(s.derived_order == 120);
  CHECK(s.abelianization_order == 1);
  CHECK(s.involutions() == 1);
  const auto p = signature(m.projective);
  CHECK(p.order_histogram == std::map<int, std::size_t>{{1, 1}, {2, 15}, {3, 20}, {5, 24}});
  CHECK(p.center_order == 1);
  CHECK(p.derived_order == 60);
  for (const auto& g : m.binary.elements()) CHECK(act(g, grundform(3)) == grundform(3));
  // The printed set is tried first and either validates or is reported.
  CHECK(m.attempts.front().name == "printed");
  CHECK(m.used_fallback == !m.discrepancies.empty());
}

TEST_CASE("projectivize has kernel the scalar matrices") {
  const auto minus = FinGroup<Mat2Q>::closure({Mat2Q(-I2)});
  CHECK(projectivize(minus).order() == 1);
  const auto& m = icosahedral();
  std::size_t scalars = 0;
  for (const auto& g : m.binary.elements()) scalars += is_scalar_matrix(g);
  CHECK(m.binary.order() == scalars * m.projective.order());
  for (std::size_t i = 0; i < m.binary.order(); ++i)
    for (std::size_t j = 0; j < m.binary.order(); j += 7) {
      const ProjMat2Q lhs(Mat2Q(m.binary[i] * m.binary[j]));
      CHECK(lhs == ProjMat2Q(m.binary[i]) * ProjMat2Q(m.binary[j]));
    }
}

TEST_CASE("projective canonical form") {
  const Mat2Q g = paper_generators()[2];
  const ProjMat2Q a(g), b(Mat2Q(g * CycNum(7))), c(Mat2Q(g * CycNum::zeta_pow(3)));
  CHECK(a == b);
  CHECK(a == c);
  CHECK(a(0, 0).is_one());
  const ProjMat2Q anti(mat2<CycNum>(CycNum(0), CycNum(3), CycNum(5), CycNum(0)));
  CHECK(anti(0, 1).is_one());
}

TEST_CASE("signature invariants") {
  const auto t = signature(cyclic_group(1));
  CHECK(t.order == 1);
  CHECK(t.center_order == 1);
  CHECK(t.derived_order == 1);
  for (const auto& s : {signature(alternating5()), signature(symmetric5()), signature(dihedral_group(7)),
                        signature(canonical_binary_icosahedral())}) {
    std::size_t sum = 0;
    for (auto [k, v] : s.order_histogram) sum += v;
    CHECK(sum == s.order);
    CHECK(s.order_histogram.at(1) == 1);
  }
}

TEST_CASE("recognition against abstract products") {
  const auto& bin = canonical_binary_icosahedral();
  CHECK(recognize(signature(bin)) == "Abar5");
  CHECK(recognize(signature(projective_icosahedral())) == "A5");
  CHECK(recognize(signature(alternating5())) == "A5");
  CHECK(recognize(signature(symmetric5())) == "S5");
  CHECK(recognize(signature(alternating6())) == "A6");

  const Product z2a5(cyclic_group(2), alternating5());
  const auto s = signature(z2a5.group);
  CHECK(s.order == 120);
  CHECK(s.involutions() == 31);
  CHECK(s.center_order == 2);
  CHECK(recognize(s) == "Z2xA5");
  CHECK(recognize(product_signature(cyclic_signature(2), model_signature("A5"))) == "Z2xA5");

  for (int m : {3, 4}) {
    const Product pa(cyclic_group(m), alternating5());
    CHECK(recognize(signature(pa.group)) == cyclic_times_label(m, "A5"));
    const Product pb(cyclic_group(m), bin);
    CHECK(recognize(signature(pb.group)) == cyclic_times_label(m, "Abar5"));
  }
  const Product v4(dihedral_group(2), alternating5());
  CHECK(recognize(signature(v4.group)) == "Z2^2xA5");
  const Product d3(dihedral_group(3), alternating5());
  CHECK(recognize(signature(d3.group)) == "D3xA5");
  const Product d3b(dihedral_group(3), bin);
  CHECK(recognize(signature(d3b.group)) == "D3xAbar5");
  const Product z2b(cyclic_group(2), bin);
  CHECK(recognize(signature(z2b.group)) == "Z2xAbar5");
  // Mismatched data is never guessed.
  GroupSignature odd = model_signature("A5");
  odd.center_order = 5;
  CHECK(recognize(odd) == "unknown");
  CHECK_THROWS_AS(model_signature("M11"), std::invalid_argument);
}

TEST_CASE("the icosahedral rotation group is simple") {
  const auto& p = projective_icosahedral();
  for (std::size_t i = 1; i < p.order(); ++i) CHECK(p.normal_closure({i}).size() == 60);
}

TEST_CASE("Goursat products") {
  const auto& p = projective_icosahedral();
  const CayleyTable t = CayleyTable::of(p);
  EpiTable id(p.order());
  for (std::size_t i = 0; i < p.order(); ++i) id[i] = i;

  const auto diag = diagonal_product(p, p, p, id, id, t, t);
  CHECK(diag.order() == 60);

  // beta composed with conjugation by a fixed element.
  const std::size_t c = 7, ci = p.inverse_index(c);
  EpiTable conj(p.order());
  for (std::size_t j = 0; j < p.order(); ++j) conj[j] = p.mul(p.mul(ci, j), c);
  const auto twisted = diagonal_product(p, p, p, id, conj, t, t);
  CHECK(twisted.order() == 60);
  std::set<std::uint32_t> left, right;
  for (const auto& e : twisted.elements()) {
    left.insert(e.a);
    right.insert(e.b);
  }
  CHECK(left.size() == 60);
  CHECK(right.size() == 60);
  CHECK(closed(twisted));

  const auto z1 = cyclic_group(1);
  const auto full = diagonal_product(p, p, z1, EpiTable(60, 0), EpiTable(60, 0), t, t);
  CHECK(full.order() == 3600);

  // Order |A| |B| / |D| through a nontrivial common quotient.
  const auto z2 = cyclic_group(2), z4 = cyclic_group(4), z6 = cyclic_group(6);
  const CayleyTable t4 = CayleyTable::of(z4), t6 = CayleyTable::of(z6);
  EpiTable a4(4), a6(6);
  for (std::size_t i = 0; i < 4; ++i) a4[i] = z2.index_of(CycElem{2, static_cast<int>(z4[i].k % 2)});
  for (std::size_t i = 0; i < 6; ++i) a6[i] = z2.index_of(CycElem{2, static_cast<int>(z6[i].k % 2)});
  const auto half = diagonal_product(z4, z6, z2, a4, a6, t4, t6);
  CHECK(half.order() == 12);

  EpiTable bad = id;
  std::swap(bad[1], bad[2]);
  CHECK_THROWS_AS(diagonal_product(p, p, p, id, bad, t, t), InvalidEpimorphism);
  CHECK_THROWS_AS(diagonal_product(p, p, p, id, EpiTable(60, 0), t, t), InvalidEpimorphism);
}
