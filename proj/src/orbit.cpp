#include "cremona/orbit.hpp"

#include <random>

namespace cremona {

std::vector<P1Point> random_points(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::vector<P1Point> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    // Plain modulo keeps the stream identical across standard libraries.
    const long p = static_cast<long>(rng() % 19) - 9;
    const long q = static_cast<long>(rng() % 9) + 1;
    out.emplace_back(CycNum(1), CycNum(mpq_class(p, q)));
  }
  return out;
}

StabilizerSweep stabilizer_orders(const ProjectiveGroup& g, std::uint64_t seed, int samples) {
  StabilizerSweep s;
  for (const auto& c : fixed_point_classes(g)) {
    s.orders.insert(c.stabilizer_order());
    ++s.class_counts[c.stabilizer_order()];
  }
  for (const auto& x : random_points(seed, samples)) {
    OrbitCert c = orbit_of(x, g);
    if (!c.orbit_stabilizer_holds()) throw IntegrityError("orbit-stabilizer identity fails");
    ++s.random_points;
    s.random_orbit_sizes.insert(c.orbit_size);
    s.orders.insert(c.stabilizer_order);
    if (c.stabilizer_order == 1) ++s.random_trivial;
  }
  return s;
}

namespace {

const FinGroup<ProjMat2<F61>>& projective_f61() {
  static const FinGroup<ProjMat2<F61>> g = projectivize(icosahedral().binary_f61);
  return g;
}

std::optional<P1PointT<F61>> root_in_p1(const BinFormT<F61>& q) {
  if (is_zero(q[q.degree()])) return P1PointT<F61>(F61(1), F61(0));
  for (std::uint32_t t = 0; t < kModelPrime; ++t)
    if (is_zero(q.eval(F61(t), F61(1)))) return P1PointT<F61>(F61(t), F61(1));
  return std::nullopt;
}

int grundform_for_stabilizer(std::size_t s) {
  switch (s) {
    case 5: return 3;
    case 3: return 2;
    case 2: return 1;
    default: return 0;
  }
}

// A fixed point of an element of order 4 in the binary group, i.e. an
// eigenvector for the eigenvalue i.
P1Point involution_fixed_point() {
  const BinaryGroup& g = canonical_binary_icosahedral();
  const CycNum i = root_of_unity(1, 4);
  for (std::size_t k = 0; k < g.order(); ++k) {
    if (g.element_order(k) != 4) continue;
    const Mat2Q& m = g[k];
    CycNum u = m(0, 1), v = i - m(0, 0);
    if (u.is_zero() && v.is_zero()) {
      u = i - m(1, 1);
      v = m(1, 0);
    }
    return P1Point(u, v);
  }
  throw IntegrityError("binary group has no element of order 4");
}

}  // namespace

std::vector<SpecialOrbit> special_orbits() {
  const ProjectiveGroup& g = projective_icosahedral();
  const auto classes = fixed_point_classes(g);
  const auto& gp = projective_f61();
  const auto classes_p = fixed_point_classes(gp);
  std::vector<SpecialOrbit> out;
  for (std::size_t s : {5u, 3u, 2u}) {
    SpecialOrbit o;
    o.stabilizer_order = s;
    o.orbit_size = g.order() / s;
    o.grundform_index = grundform_for_stabilizer(s);
    const BinForm phi = grundform(o.grundform_index);

    BinForm prod = BinForm::constant(1);
    for (const auto& c : classes)
      if (c.stabilizer_order() == s) prod = prod * c.form;
    o.exact_form_match = prod.monic() == phi.monic();

    auto cls = std::find_if(classes_p.begin(), classes_p.end(), [&](const auto& c) { return c.stabilizer_order() == s; });
    if (cls == classes_p.end()) throw IntegrityError("no mod-61 point with stabilizer " + std::to_string(s));
    auto base = root_in_p1(cls->form);
    if (!base) throw IntegrityError("fixed points are not rational mod 61");
    o.modular_orbit = orbit_of(*base, gp);
    const BinFormT<F61> orbit_form = o.modular_orbit.orbit_form();
    const BinFormT<F61> phi_p = reduce_mod_p<kModelPrime>(phi);
    o.modular_match = o.modular_orbit.orbit_size == o.orbit_size && orbit_form.degree() == phi_p.degree() &&
                      divides(orbit_form, phi_p) && divides(phi_p, orbit_form);

    if (s == 5) o.exact_orbit = orbit_of(P1Point(CycNum(1), CycNum(0)), g);
    if (s == 2) o.exact_orbit = orbit_of(involution_fixed_point(), g);
    if (o.exact_orbit) {
      const BinForm f = o.exact_orbit->orbit_form();
      if (o.exact_orbit->orbit_size != o.orbit_size || f.monic() != phi.monic())
        throw IntegrityError("exact orbit does not match Phi_" + std::to_string(o.grundform_index));
    }
    if (!o.exact_form_match || !o.modular_match)
      throw IntegrityError("special orbit of size " + std::to_string(o.orbit_size) + " does not match Phi_" +
                           std::to_string(o.grundform_index));
    out.push_back(std::move(o));
  }
  return out;
}

}  // namespace cremona
