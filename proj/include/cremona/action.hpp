#pragma once

// Finite action groups built from explicit maps: images of abstract groups
// under a representation, automorphisms of P^1 x P^1, and sign vectors.

#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include "cremona/group.hpp"
#include "cremona/icosahedral.hpp"
#include "cremona/linalg.hpp"
#include "cremona/recognize.hpp"

namespace cremona {

/// Element of Z2^k as a bit mask.
struct SignVec {
  std::uint32_t bits = 0;
  friend SignVec operator*(SignVec a, SignVec b) { return {a.bits ^ b.bits}; }
  friend bool operator==(SignVec, SignVec) = default;
  /// +1 or -1 in coordinate i.
  int sign(int i) const { return (bits >> i) & 1 ? -1 : 1; }
};
inline std::size_t hash_value(SignVec s) { return s.bits; }
inline SignVec identity_of(SignVec) { return {}; }

/// (x, t) -> (a x, b t) when swap = 0 and (x, t) -> (a t, b x) when swap = 1.
template <class S>
struct F0Aut {
  ProjMat2<S> a, b;
  std::uint8_t swap = 0;

  friend F0Aut operator*(const F0Aut& f, const F0Aut& g) {
    if (f.swap) return {f.a * g.b, f.b * g.a, static_cast<std::uint8_t>(1 ^ g.swap)};
    return {f.a * g.a, f.b * g.b, g.swap};
  }
  friend bool operator==(const F0Aut&, const F0Aut&) = default;
};
template <class S>
std::size_t hash_value(const F0Aut<S>& f) {
  return hash_value(f.a) * 1000003u ^ hash_value(f.b) * 31 ^ f.swap;
}
template <class S>
F0Aut<S> identity_of(const F0Aut<S>&) {
  return {};
}

/// The image rho(H) of a finite group, organized by the fibres of rho.
struct ImageGroup {
  std::size_t source_order = 0;
  std::size_t kernel_order = 0;
  std::size_t image_order = 0;
  /// All fibres have the size of the kernel.
  bool fibres_uniform = false;
  /// rho(s) rho(t) = rho(s t) on every pair of checked elements.
  bool homomorphism = false;
  std::size_t products_checked = 0;
  GroupSignature signature;
  std::string label;

  bool consistent() const { return fibres_uniform && homomorphism && source_order == kernel_order * image_order; }
  std::string evidence() const;
};

namespace detail {

struct Quotient {
  std::function<std::size_t(std::size_t, std::size_t)> mul;
  std::vector<std::uint32_t> class_of;
  std::vector<std::size_t> rep;
};

/// Element of rho(H), multiplied through representatives in H.
struct ImageElem {
  const Quotient* q = nullptr;
  std::uint32_t id = 0;
  friend ImageElem operator*(const ImageElem& x, const ImageElem& y) {
    return {x.q, x.q->class_of[x.q->mul(x.q->rep[x.id], x.q->rep[y.id])]};
  }
  friend bool operator==(const ImageElem& x, const ImageElem& y) { return x.id == y.id; }
};
inline std::size_t hash_value(const ImageElem& e) { return e.id; }
inline ImageElem identity_of(const ImageElem& e) { return {e.q, e.q->class_of[0]}; }

}  // namespace detail

/// Applies rho to every element of h, groups equal images, and recognizes the
/// quotient group. `product_budget` bounds the number of elements x for which
/// rho(x) rho(s) = rho(x s) is tested against every generator s; generator
/// pairs are always tested.
template <class E, class R>
ImageGroup image_of(const FinGroup<E>& h, const std::function<R(const E&)>& rho, std::size_t product_budget = 16) {
  ImageGroup out;
  out.source_order = h.order();
  detail::Quotient q;
  q.mul = [&h](std::size_t i, std::size_t j) { return h.mul(i, j); };
  std::unordered_map<R, std::uint32_t, ElementHash<R>> classes;
  std::vector<R> images;
  std::vector<std::size_t> fibre;
  q.class_of.resize(h.order());
  images.reserve(h.order());
  for (std::size_t i = 0; i < h.order(); ++i) {
    images.push_back(rho(h[i]));
    auto [it, fresh] = classes.emplace(images.back(), static_cast<std::uint32_t>(q.rep.size()));
    if (fresh) {
      q.rep.push_back(i);
      fibre.push_back(0);
    }
    q.class_of[i] = it->second;
    ++fibre[it->second];
  }
  out.image_order = q.rep.size();
  out.kernel_order = fibre[q.class_of[0]];
  out.fibres_uniform = true;
  for (std::size_t f : fibre)
    if (f != out.kernel_order) out.fibres_uniform = false;

  std::vector<std::size_t> gens;
  for (const E& s : h.generators()) gens.push_back(h.index_of(s));
  std::vector<std::size_t> probes = gens;
  for (std::size_t i = 0; i < h.order() && probes.size() < gens.size() + product_budget; i += 1 + h.order() / product_budget)
    probes.push_back(i);
  out.homomorphism = true;
  for (std::size_t x : probes)
    for (std::size_t s : gens) {
      ++out.products_checked;
      auto it = classes.find(images[x] * images[s]);
      if (it == classes.end() || it->second != q.class_of[h.mul(x, s)]) out.homomorphism = false;
    }

  std::vector<detail::ImageElem> igens;
  for (std::size_t s : gens) igens.push_back({&q, q.class_of[s]});
  if (igens.empty()) igens.push_back({&q, q.class_of[0]});
  const auto img = FinGroup<detail::ImageElem>::closure(igens, h.order() + 1);
  if (img.order() != out.image_order) throw IntegrityError("image closure differs from the fibre count");
  out.signature = signature(img);
  out.label = recognize(out.signature);
  return out;
}

/// Signature and recognized label of a directly enumerated group.
struct GroupReport {
  GroupSignature signature;
  std::string label;
  std::string evidence() const;
};

template <class E>
GroupReport report(const FinGroup<E>& g) {
  GroupReport r;
  r.signature = signature(g);
  r.label = recognize(r.signature);
  return r;
}

/// Generators of the binary icosahedral model reduced mod 61.
std::vector<Mat2<F61>> binary_generators_f61();

}  // namespace cremona
