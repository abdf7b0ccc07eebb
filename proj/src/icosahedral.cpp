#include "cremona/icosahedral.hpp"

#include <sstream>

namespace cremona {

std::array<Mat2Q, 3> paper_generators() {
  const CycNum e10 = root_of_unity(1, 10);
  const CycNum i = root_of_unity(1, 4);
  const CycNum e = root_of_unity(1, 5);
  const CycNum s = sqrt5().inverse();
  const CycNum a = (e - e.pow(4)) * s;
  const CycNum b = (e.pow(2) - e.pow(3)) * s;
  return {mat2<CycNum>(e10, 0, 0, e10.inverse()), mat2<CycNum>(0, i, i, 0), mat2<CycNum>(a, b, b, -a)};
}

Mat2Q fallback_g2() { return mat2<CycNum>(0, -1, 1, 0); }

Mat2Q fallback_g3() {
  const Mat2Q g3 = paper_generators()[2];
  return mat2<CycNum>(-g3(0, 0), g3(0, 1), g3(1, 0), -g3(1, 1));
}

std::vector<std::pair<std::string, std::array<Mat2Q, 3>>> candidate_generator_sets() {
  auto printed = paper_generators();
  auto alt2 = printed;
  alt2[1] = fallback_g2();
  auto alt23 = alt2;
  alt23[2] = fallback_g3();
  return {{"printed", printed},
          {"g2 replaced by [[0,-1],[1,0]]", alt2},
          {"g2 replaced by [[0,-1],[1,0]], g3 diagonal signs swapped", alt23}};
}

bool GeneratorCheck::fixes_all() const {
  for (const auto& row : fixes)
    for (bool b : row)
      if (!b) return false;
  return true;
}

std::string GeneratorCheck::summary() const {
  std::ostringstream os;
  os << name << ": fixes=";
  for (int g = 0; g < 3; ++g) {
    if (g) os << '/';
    for (int f = 0; f < 3; ++f) os << (fixes[g][f] ? '1' : '0');
  }
  if (order)
    os << " order=" << order << " involutions=" << involutions;
  else
    os << " order>" << probe_cap;
  os << (passed ? " passed" : " failed");
  return os.str();
}

namespace {

GeneratorCheck check_set(const std::string& name, const std::array<Mat2Q, 3>& gens, std::size_t cap,
                         BinaryGroup* out) {
  GeneratorCheck c;
  c.name = name;
  c.probe_cap = cap;
  for (int g = 0; g < 3; ++g)
    for (int f = 0; f < 3; ++f) {
      const BinForm phi = grundform(f + 1);
      c.fixes[g][f] = act(gens[g], phi) == phi;
    }
  try {
    BinaryGroup grp = BinaryGroup::closure({gens.begin(), gens.end()}, cap);
    c.order = grp.order();
    c.involutions = signature(grp).involutions();
    if (out) *out = std::move(grp);
  } catch (const ClosureOverflow&) {
    c.order = 0;
  }
  c.passed = c.fixes_all() && c.order == 120 && c.involutions == 1;
  return c;
}

}  // namespace

IcosahedralModel build_icosahedral_model() {
  IcosahedralModel m;
  BinaryGroup grp;
  bool found = false;
  for (const auto& [name, gens] : candidate_generator_sets()) {
    // A cap just above 120 suffices to reject a wrong set quickly.
    m.attempts.push_back(check_set(name, gens, 121, &grp));
    if (m.attempts.back().passed) {
      m.generators = gens;
      found = true;
      break;
    }
    m.discrepancies.push_back("rejected " + m.attempts.back().summary());
  }
  if (!found) {
    std::string why;
    for (const auto& a : m.attempts) why += (why.empty() ? "" : "; ") + a.summary();
    throw IntegrityError("no generator set validates: " + why);
  }
  m.used_fallback = m.attempts.size() > 1;
  if (m.used_fallback) m.discrepancies.push_back("accepted " + m.attempts.back().summary());
  m.binary = std::move(grp);
  m.projective = projectivize(m.binary);
  if (m.projective.order() * 2 != m.binary.order()) throw IntegrityError("projective image does not have order 60");
  m.to_projective.resize(m.binary.order());
  for (std::size_t i = 0; i < m.binary.order(); ++i) m.to_projective[i] = m.projective.index_of(ProjMat2Q(m.binary[i]));

  std::vector<Mat2<F61>> red, red_gens;
  for (const auto& g : m.binary.elements()) red.push_back(reduce_mod_p<kModelPrime>(g));
  for (const auto& g : m.generators) red_gens.push_back(reduce_mod_p<kModelPrime>(g));
  m.binary_f61 = FinGroup<Mat2<F61>>::from_elements(red, red_gens);
  for (std::size_t i = 0; i < red.size(); ++i)
    if (m.binary_f61.order() != red.size() || !(m.binary_f61[i] == red[i]))
      throw IntegrityError("reduction mod 61 is not faithful on the binary group");
  return m;
}

const IcosahedralModel& icosahedral() {
  static const IcosahedralModel model = build_icosahedral_model();
  return model;
}

bool is_invariant(const BinForm& f) {
  for (const auto& g : icosahedral().generators)
    if (act(g, f) != f) return false;
  return true;
}

}  // namespace cremona
