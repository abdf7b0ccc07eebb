#include "cremona/binform.hpp"

#include <utility>

namespace cremona {

BinForm parse_binform(std::string_view text) {
  const auto semi = text.find(';');
  if (text.substr(0, 4) != "deg=" || semi == std::string_view::npos) throw ParseError("expected 'deg=n; ...'");
  int n = 0;
  try {
    n = std::stoi(std::string(text.substr(4, semi - 4)));
  } catch (const std::exception&) {
    throw ParseError("bad degree field");
  }
  if (n < 0) throw ParseError("negative degree");
  std::string_view body = text.substr(semi + 1);
  while (!body.empty() && body.front() == ' ') body.remove_prefix(1);
  std::vector<CycNum> c;
  std::size_t pos = 0;
  for (int k = 0; k <= n; ++k) {
    // Each entry spans eight comma-separated rationals.
    std::size_t end = pos;
    for (int f = 0; f < CycNum::kDegree; ++f) {
      end = body.find(',', end);
      if (f < CycNum::kDegree - 1) {
        if (end == std::string_view::npos) throw ParseError("truncated coefficient list");
        ++end;
      }
    }
    const bool last = k == n;
    if (last != (end == std::string_view::npos)) throw ParseError("coefficient count does not match degree");
    c.push_back(CycNum::parse(body.substr(pos, last ? body.npos : end - pos)));
    pos = end + 1;
  }
  return BinForm(std::move(c));
}

namespace {

template <std::uint32_t P>
bool squarefree_at(const BinForm& f) {
  try {
    return squarefree_direct(reduce_mod_p<P>(f));
  } catch (const BadPrime&) {
    return false;
  }
}

}  // namespace

std::optional<std::uint32_t> squarefree_mod_p(const BinForm& f) {
  return squarefree_mod_p(f, {kCertPrimes.begin(), kCertPrimes.end()});
}

std::optional<std::uint32_t> squarefree_mod_p(const BinForm& f, const std::vector<std::uint32_t>& primes) {
  static_assert(kCertPrimes.size() == 4);
  for (std::uint32_t p : primes) {
    bool ok = false;
    switch (p) {
      case kCertPrimes[0]: ok = squarefree_at<kCertPrimes[0]>(f); break;
      case kCertPrimes[1]: ok = squarefree_at<kCertPrimes[1]>(f); break;
      case kCertPrimes[2]: ok = squarefree_at<kCertPrimes[2]>(f); break;
      case kCertPrimes[3]: ok = squarefree_at<kCertPrimes[3]>(f); break;
      default: throw std::invalid_argument("unsupported certificate prime " + std::to_string(p));
    }
    if (ok) return p;
  }
  return std::nullopt;
}

SquarefreeResult is_squarefree(const BinForm& f) {
  if (auto p = squarefree_mod_p(f)) return {true, *p};
  return {squarefree_direct(f), 0};
}

SquarefreeResult is_squarefree(const BinForm& f, const std::vector<std::uint32_t>& primes) {
  if (auto p = squarefree_mod_p(f, primes)) return {true, *p};
  return {squarefree_direct(f), 0};
}

BinForm disc_conic(const BinForm& p0, const BinForm& p1, const BinForm& p2) {
  if (!p1.is_zero() && p0.degree() + p2.degree() != 2 * p1.degree())
    throw DegreeMismatch("conic discriminant needs deg p0 + deg p2 = 2 deg p1");
  BinForm prod = p0 * p2;
  if (p1.is_zero()) return prod;
  return prod - p1 * p1;
}

BinForm grundform(int i) {
  switch (i) {
    case 1: {
      BinForm f(30);
      f[30] = 1;
      f[0] = 1;
      f[25] = 522;
      f[5] = -522;
      f[20] = -10005;
      f[10] = -10005;
      return f;
    }
    case 2: {
      BinForm f(20);
      f[20] = -1;
      f[0] = -1;
      f[15] = 228;
      f[5] = -228;
      f[10] = -494;
      return f;
    }
    case 3: {
      BinForm f(12);
      f[11] = 1;
      f[6] = 11;
      f[1] = -1;
      return f;
    }
    default:
      throw std::invalid_argument("Gruendform index must be 1, 2 or 3");
  }
}

}  // namespace cremona
