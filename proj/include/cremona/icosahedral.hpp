#pragma once

// The binary icosahedral group St(Abar5) in SL(2) over Q(zeta_20), its image
// St(A5) in PGL(2), and a validated choice of generators.

#include <array>
#include <string>
#include <vector>

#include "cremona/binform.hpp"
#include "cremona/group.hpp"
#include "cremona/linalg.hpp"

namespace cremona {

using Mat2Q = Mat2<CycNum>;
using ProjMat2Q = ProjMat2<CycNum>;
using BinaryGroup = FinGroup<Mat2Q>;
using ProjectiveGroup = FinGroup<ProjMat2Q>;

inline constexpr std::uint32_t kModelPrime = 61;
using F61 = Fp<kModelPrime>;

/// g1 = diag(eps10, eps10^-1), g2 = [[0, i], [i, 0]], and
/// g3 = (1/sqrt5) [[e - e^4, e^2 - e^3], [e^2 - e^3, -e + e^4]] with e = eps5.
std::array<Mat2Q, 3> paper_generators();
/// z -> -1/z, the replacement for g2 when the printed set fails validation.
Mat2Q fallback_g2();
/// (1/sqrt5) [[-(e - e^4), e^2 - e^3], [e^2 - e^3, e - e^4]]: the printed g3
/// with the diagonal signs swapped, as in Klein's normal form.
Mat2Q fallback_g3();

/// Candidate generator sets in the order they are tried.
std::vector<std::pair<std::string, std::array<Mat2Q, 3>>> candidate_generator_sets();

template <class S>
FinGroup<ProjMat2<S>> projectivize(const FinGroup<Mat2<S>>& g) {
  std::vector<ProjMat2<S>> gens;
  for (const auto& s : g.generators()) gens.emplace_back(s);
  if (gens.empty()) gens.emplace_back();
  return FinGroup<ProjMat2<S>>::closure(gens, g.order());
}

/// Outcome of validating one generator set.
struct GeneratorCheck {
  std::string name;
  /// Per generator, per form: whether act(g, Phi_i) = Phi_i.
  std::array<std::array<bool, 3>, 3> fixes{};
  /// Closure order, or 0 when the probe cap was exceeded.
  std::size_t order = 0;
  std::size_t probe_cap = 0;
  std::size_t involutions = 0;
  bool passed = false;

  bool fixes_all() const;
  std::string summary() const;
};

struct IcosahedralModel {
  BinaryGroup binary;
  ProjectiveGroup projective;
  /// Same elements as `binary`, reduced mod 61, index-aligned.
  FinGroup<Mat2<F61>> binary_f61;
  /// Index in `projective` of the class of each binary element.
  std::vector<std::size_t> to_projective;
  std::array<Mat2Q, 3> generators;
  bool used_fallback = false;
  /// Every set tried, the accepted one last.
  std::vector<GeneratorCheck> attempts;
  std::vector<std::string> discrepancies;
  /// The check of the printed set.
  const GeneratorCheck& literal() const { return attempts.front(); }
};

/// Validates the printed generators and falls back when they fail. Throws
/// IntegrityError when no candidate set yields an order-120 group fixing Phi_1..3.
IcosahedralModel build_icosahedral_model();

/// Process-wide model, built once on first use.
const IcosahedralModel& icosahedral();

inline const BinaryGroup& canonical_binary_icosahedral() { return icosahedral().binary; }
inline const ProjectiveGroup& projective_icosahedral() { return icosahedral().projective; }

/// True when every generator of the binary model fixes f.
bool is_invariant(const BinForm& f);

}  // namespace cremona
