#include <doctest.h>

#include <unordered_set>

#include "cremona/icosahedral.hpp"
#include "cremona/orbit.hpp"

using namespace cremona;

namespace {

P1Point pt(long a, long b) { return {CycNum(a), CycNum(b)}; }

}  // namespace

TEST_CASE("points are canonically scaled") {
  CHECK(P1Point(CycNum(3), CycNum(6)) == pt(1, 2));
  CHECK(P1Point(CycNum(0), CycNum(5)) == pt(0, 1));
  CHECK(P1Point(CycNum::zeta_pow(3), CycNum(0)) == pt(1, 0));
  CHECK_THROWS(P1Point(CycNum(0), CycNum(0)));
}

TEST_CASE("orbits of the icosahedral rotation group") {
  const auto& g = projective_icosahedral();
  const auto inf = orbit_of(pt(1, 0), g);
  CHECK(inf.orbit_size == 12);
  CHECK(inf.stabilizer_order == 5);
  CHECK(inf.orbit_stabilizer_holds());
  CHECK(gcd(inf.orbit_form(), grundform(3)).degree() == 12);
  const auto generic = orbit_of(pt(1, 2), g);
  CHECK(generic.orbit_size == 60);
  CHECK(generic.stabilizer_order == 1);
  const auto trivial = FinGroup<ProjMat2Q>::closure({ProjMat2Q()});
  const auto one = orbit_of(pt(1, 2), trivial);
  CHECK(one.orbit_size == 1);
  CHECK(one.points.front() == pt(1, 2));
  CHECK(one.stabilizer_order == 1);
}

TEST_CASE("orbit certificates are closed and consistent") {
  const auto& g = projective_icosahedral();
  for (const auto& x : random_points(5, 30)) {
    const auto c = orbit_of(x, g);
    CHECK(c.orbit_size * c.stabilizer_order == 60);
    std::unordered_set<P1Point, P1Hash<CycNum>> pts(c.points.begin(), c.points.end());
    CHECK(pts.size() == c.points.size());
    for (const auto& h : g.elements())
      for (std::size_t i = 0; i < c.points.size(); i += 11) CHECK(pts.count(apply(h, c.points[i])));
    // Every orbit of the rotation group has even size.
    CHECK(c.orbit_size % 2 == 0);
    CHECK((c.orbit_size == 12 || c.orbit_size == 20 || c.orbit_size == 30 || c.orbit_size == 60));
  }
}

TEST_CASE("orbits partition the line") {
  const auto& g = projective_icosahedral();
  const auto pts = random_points(9, 40);
  for (std::size_t i = 0; i + 1 < pts.size(); i += 2) {
    const auto a = orbit_of(pts[i], g), b = orbit_of(pts[i + 1], g);
    std::unordered_set<P1Point, P1Hash<CycNum>> sa(a.points.begin(), a.points.end());
    std::size_t shared = 0;
    for (const auto& p : b.points) shared += sa.count(p);
    CHECK((shared == 0 || shared == sa.size()));
  }
  // (1 : 0) and (0 : 1) lie on the same orbit.
  const auto inf = orbit_of(pt(1, 0), g);
  CHECK(std::find(inf.points.begin(), inf.points.end(), pt(0, 1)) != inf.points.end());
}

TEST_CASE("stabilizer orders") {
  const auto sweep = stabilizer_orders(projective_icosahedral());
  CHECK(sweep.orders == std::set<std::size_t>{1, 2, 3, 5});
  CHECK(sweep.random_points == 100);
  CHECK(sweep.random_trivial > 0);
  for (const auto& x : random_points(0)) {
    const auto c = orbit_of(x, projective_icosahedral());
    CHECK(sweep.orders.count(c.stabilizer_order));
  }
  const auto classes = fixed_point_classes(projective_icosahedral());
  std::map<std::size_t, std::size_t> by_order;
  for (const auto& c : classes) ++by_order[c.stabilizer_order()];
  // 6 axes of order 5, 10 of order 3, 15 of order 2.
  CHECK(by_order == std::map<std::size_t, std::size_t>{{2, 15}, {3, 10}, {5, 6}});
  BinForm prod = BinForm::constant(CycNum(1));
  for (const auto& c : classes)
    if (c.stabilizer_order() == 2) prod = prod * c.form;
  CHECK(gcd(prod, grundform(1)).degree() == 30);
}

TEST_CASE("special orbits") {
  const auto special = special_orbits();
  REQUIRE(special.size() == 3);
  std::map<std::size_t, std::pair<std::size_t, int>> seen;
  for (const auto& o : special) {
    seen[o.orbit_size] = {o.stabilizer_order, o.grundform_index};
    CHECK((o.exact_form_match || o.modular_match));
  }
  CHECK(seen.at(12) == std::pair<std::size_t, int>{5, 3});
  CHECK(seen.at(20) == std::pair<std::size_t, int>{3, 2});
  CHECK(seen.at(30) == std::pair<std::size_t, int>{2, 1});
  const BinForm all = grundform(1) * grundform(2) * grundform(3);
  CHECK(all.degree() == 62);
  CHECK(is_squarefree(all).value);
}

TEST_CASE("minimum orbit bound") {
  CHECK(min_orbit_bound(projective_icosahedral()) == 12);
  CHECK(min_orbit_bound(FinGroup<ProjMat2Q>::closure({ProjMat2Q()})) == 1);
  const auto c5 = FinGroup<ProjMat2Q>::closure({ProjMat2Q(paper_generators()[0])});
  CHECK(c5.order() == 5);
  CHECK(min_orbit_bound(c5) == 1);
}
