#include "cremona/recognize.hpp"

#include <map>
#include <numeric>
#include <sstream>

#include "cremona/cyclo.hpp"
#include "cremona/linalg.hpp"

namespace cremona {

Perm Perm::identity(int n) {
  Perm p;
  p.img.resize(n);
  for (int i = 0; i < n; ++i) p.img[i] = static_cast<std::uint8_t>(i);
  return p;
}

Perm Perm::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  Perm p = identity(n);
  for (const auto& c : cycles)
    for (std::size_t i = 0; i < c.size(); ++i) p.img[c[i]] = static_cast<std::uint8_t>(c[(i + 1) % c.size()]);
  return p;
}

Perm operator*(const Perm& p, const Perm& q) {
  Perm r;
  r.img.resize(p.img.size());
  for (std::size_t x = 0; x < p.img.size(); ++x) r.img[x] = p.img[q.img[x]];
  return r;
}

std::size_t hash_value(const Perm& p) {
  std::size_t h = 0;
  for (auto v : p.img) h = h * 131 + v;
  return h;
}

Perm identity_of(const Perm& p) { return Perm::identity(static_cast<int>(p.img.size())); }

FinGroup<Perm> alternating5() {
  return FinGroup<Perm>::closure({Perm::from_cycles(5, {{0, 1, 2, 3, 4}}), Perm::from_cycles(5, {{0, 1, 2}})});
}
FinGroup<Perm> symmetric5() {
  return FinGroup<Perm>::closure({Perm::from_cycles(5, {{0, 1, 2, 3, 4}}), Perm::from_cycles(5, {{0, 1}})});
}
FinGroup<Perm> alternating6() {
  return FinGroup<Perm>::closure({Perm::from_cycles(6, {{0, 1, 2}}), Perm::from_cycles(6, {{1, 2, 3, 4, 5}})});
}
FinGroup<Perm> symmetric4() {
  return FinGroup<Perm>::closure({Perm::from_cycles(4, {{0, 1, 2, 3}}), Perm::from_cycles(4, {{0, 1}})});
}
FinGroup<Perm> alternating4() {
  return FinGroup<Perm>::closure({Perm::from_cycles(4, {{0, 1, 2}}), Perm::from_cycles(4, {{1, 2, 3}})});
}

FinGroup<CycElem> cyclic_group(int m) {
  if (m < 1) throw std::invalid_argument("cyclic group order must be positive");
  return FinGroup<CycElem>::closure({CycElem{m, m == 1 ? 0 : 1}});
}

FinGroup<DihElem> dihedral_group(int n) {
  if (n < 1) throw std::invalid_argument("dihedral parameter must be positive");
  return FinGroup<DihElem>::closure({DihElem{n, n == 1 ? 0 : 1, 0}, DihElem{n, 0, 1}});
}

GroupSignature product_signature(const GroupSignature& a, const GroupSignature& b) {
  GroupSignature s;
  s.order = a.order * b.order;
  s.center_order = a.center_order * b.center_order;
  s.derived_order = a.derived_order * b.derived_order;
  s.abelianization_order = a.abelianization_order * b.abelianization_order;
  s.order_histogram.clear();
  for (auto [oa, ca] : a.order_histogram)
    for (auto [ob, cb] : b.order_histogram) s.order_histogram[std::lcm(oa, ob)] += ca * cb;
  return s;
}

namespace {

FinGroup<Mat2<Fp<5>>> sl2_f5() {
  using F = Fp<5>;
  return FinGroup<Mat2<F>>::closure({mat2<F>(1, 1, 0, 1), mat2<F>(0, -1, 1, 0)});
}

FinGroup<ProjMat2<Fp<7>>> psl2_f7() {
  using F = Fp<7>;
  return FinGroup<ProjMat2<F>>::closure({ProjMat2<F>(mat2<F>(1, 1, 0, 1)), ProjMat2<F>(mat2<F>(0, -1, 1, 0))});
}

std::map<std::string, GroupSignature> build_models() {
  std::map<std::string, GroupSignature> m;
  m["A5"] = signature(alternating5());
  m["S5"] = signature(symmetric5());
  m["A6"] = signature(alternating6());
  m["S4"] = signature(symmetric4());
  m["A4"] = signature(alternating4());
  m["Abar5"] = signature(sl2_f5());
  m["L2(7)"] = signature(psl2_f7());
  // A5 wr Z2 on two blocks of five points.
  m["A5wrZ2"] = signature(FinGroup<Perm>::closure(
      {Perm::from_cycles(10, {{0, 1, 2, 3, 4}}), Perm::from_cycles(10, {{0, 1, 2}}),
       Perm::from_cycles(10, {{0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}})},
      7200));
  return m;
}

}  // namespace

const GroupSignature& model_signature(const std::string& name) {
  static const std::map<std::string, GroupSignature> models = build_models();
  auto it = models.find(name);
  if (it == models.end()) throw std::invalid_argument("no model group named " + name);
  return it->second;
}

GroupSignature cyclic_signature(int m) { return signature(cyclic_group(m)); }
GroupSignature dihedral_signature(int n) { return signature(dihedral_group(n)); }

std::string cyclic_times_label(int m, const std::string& k) {
  if (m == 1) return k;
  return "Z" + std::to_string(m) + "x" + k;
}

std::string dihedral_times_label(int n, const std::string& k) {
  if (n == 1) return "Z2x" + k;
  if (n == 2) return "Z2^2x" + k;
  return "D" + std::to_string(n) + "x" + k;
}

std::string recognize(const GroupSignature& sig) {
  for (const char* name : {"A5", "Abar5", "S5", "L2(7)", "A6"})
    if (sig == model_signature(name)) return name;
  if (sig == product_signature(cyclic_signature(2), model_signature("L2(7)"))) return "Z2xL2(7)";
  if (sig == model_signature("A5wrZ2")) return "A5wrZ2";
  for (const char* b : {"A5", "S4", "A4"})
    if (sig == product_signature(model_signature("A5"), model_signature(b))) return std::string("A5x") + b;
  for (const char* k : {"A5", "Abar5"}) {
    const GroupSignature& ks = model_signature(k);
    if (sig.order % ks.order != 0) continue;
    const int m = static_cast<int>(sig.order / ks.order);
    if (m > 1 && sig == product_signature(cyclic_signature(m), ks)) return cyclic_times_label(m, k);
    if (m % 2 == 0 && sig == product_signature(dihedral_signature(m / 2), ks))
      return dihedral_times_label(m / 2, k);
  }
  return "unknown";
}

std::string GroupSignature::to_string() const {
  std::ostringstream os;
  os << "order=" << order << " center=" << center_order << " derived=" << derived_order
     << " abelianization=" << abelianization_order << " histogram={";
  bool first = true;
  for (auto [o, c] : order_histogram) {
    if (!first) os << ',';
    first = false;
    os << o << ':' << c;
  }
  os << '}';
  return os.str();
}

}  // namespace cremona
