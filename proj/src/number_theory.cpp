#include "rtl/number_theory.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "rtl/errors.hpp"

namespace rtl {

bool is_prime(std::uint64_t m) {
  if (m < 2) return false;
  if (m < 4) return true;
  if (m % 2 == 0) return false;
  for (std::uint64_t d = 3; d * d <= m; d += 2) {
    if (m % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t m) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= m; ++d) {
    if (m % d != 0) continue;
    out.push_back(d);
    while (m % d == 0) m /= d;
  }
  if (m > 1) out.push_back(m);
  return out;
}

namespace {

std::uint64_t checked_power(std::uint64_t base, int exp, std::uint64_t limit) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    r *= base;
    if (r > limit) {
      throw Error(ErrorKind::BoundExceeded, std::to_string(base) + "^" + std::to_string(exp) +
                                                " exceeds " + std::to_string(limit));
    }
  }
  return r;
}

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw Error(ErrorKind::InvalidParam, std::to_string(p) + " is not prime");
}

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of f modulo the monic polynomial g.
Poly poly_mod(Poly f, const Poly& g, std::uint32_t p) {
  const std::size_t dg = g.size() - 1;
  trim(f);
  while (f.size() > dg) {
    const std::uint64_t lead = f.back();
    const std::size_t shift = f.size() - 1 - dg;
    for (std::size_t i = 0; i < g.size(); ++i) {
      std::uint64_t sub = lead * g[i] % p;
      f[shift + i] = static_cast<std::uint32_t>((f[shift + i] + p - sub) % p);
    }
    trim(f);
  }
  return f;
}

// Monic polynomial of degree d whose lower coefficients are the base-p digits of `index`.
Poly monic_from_index(std::uint64_t index, std::uint32_t p, int d) {
  Poly f(static_cast<std::size_t>(d) + 1, 0);
  for (int i = 0; i < d; ++i) {
    f[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(index % p);
    index /= p;
  }
  f[static_cast<std::size_t>(d)] = 1;
  return f;
}

}  // namespace

bool is_irreducible(const Poly& f_in, std::uint32_t p) {
  Poly f = f_in;
  trim(f);
  const int deg = static_cast<int>(f.size()) - 1;
  if (deg < 1) return false;
  for (int d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      if (poly_mod(f, monic_from_index(idx, p, d), p).empty()) return false;
    }
  }
  return true;
}

Poly find_irreducible(std::uint32_t p, int k) {
  require_prime(p);
  if (k < 1) throw Error(ErrorKind::InvalidParam, "degree must be positive");
  const std::uint64_t count = checked_power(p, k, kFieldOrderLimit + 1);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    // Candidates with zero constant term are divisible by x.
    if (idx % p == 0 && k > 1) continue;
    Poly f = monic_from_index(idx, p, k);
    if (is_irreducible(f, p)) return f;
  }
  // Irreducible polynomials of every degree exist over every prime field.
  throw Error(ErrorKind::NoPrimitiveElement, "no irreducible polynomial found");
}

ExtField::ExtField(std::uint32_t p, int k)
    : p_(p), k_(k), order_(checked_power(p, k, kFieldOrderLimit + 1)), modulus_(find_irreducible(p, k)) {}

Poly ExtField::to_poly(std::uint64_t a) const {
  Poly f(static_cast<std::size_t>(k_), 0);
  for (int i = 0; i < k_; ++i) {
    f[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(a % p_);
    a /= p_;
  }
  return f;
}

std::uint64_t ExtField::from_poly(const Poly& coeffs) const {
  std::uint64_t a = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) a = a * p_ + coeffs[i] % p_;
  return a;
}

std::uint64_t ExtField::add(std::uint64_t a, std::uint64_t b) const {
  std::uint64_t out = 0, scale = 1;
  for (int i = 0; i < k_; ++i) {
    out += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return out;
}

std::uint64_t ExtField::mul(std::uint64_t a, std::uint64_t b) const {
  const Poly fa = to_poly(a), fb = to_poly(b);
  Poly prod(2 * static_cast<std::size_t>(k_), 0);
  for (std::size_t i = 0; i < fa.size(); ++i) {
    if (fa[i] == 0) continue;
    for (std::size_t j = 0; j < fb.size(); ++j) {
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{fa[i]} * fb[j]) % p_);
    }
  }
  return from_poly(poly_mod(std::move(prod), modulus_, p_));
}

std::uint64_t ExtField::pow(std::uint64_t a, std::uint64_t e) const {
  std::uint64_t result = 1;
  while (e > 0) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

bool ExtField::is_primitive(std::uint64_t a) const {
  if (a == 0 || a >= order_) return false;
  const std::uint64_t group = order_ - 1;
  if (pow(a, group) != 1) return false;
  for (std::uint64_t r : prime_factors(group)) {
    if (pow(a, group / r) == 1) return false;
  }
  return true;
}

std::uint64_t ExtField::primitive_element() const {
  if (is_primitive(generator())) return generator();
  for (std::uint64_t a = 2; a < order_; ++a) {
    if (is_primitive(a)) return a;
  }
  throw Error(ErrorKind::NoPrimitiveElement,
              "no primitive element in GF(" + std::to_string(p_) + "^" + std::to_string(k_) + ")");
}

BkSet bose_chowla(std::uint32_t q, int k) {
  require_prime(q);
  if (k < 2) throw Error(ErrorKind::InvalidParam, "k must be at least 2");
  const std::uint64_t order = checked_power(q, k, kFieldOrderLimit + 1);
  const ExtField field(q, k);
  const std::uint64_t theta = field.primitive_element();
  const std::uint64_t group = order - 1;

  constexpr std::uint64_t kUnset = ~std::uint64_t{0};
  std::vector<std::uint64_t> dlog(order, kUnset);
  std::uint64_t power = 1;
  for (std::uint64_t j = 0; j < group; ++j) {
    if (dlog[power] != kUnset) {
      throw Error(ErrorKind::NoPrimitiveElement, "chosen element is not primitive");
    }
    dlog[power] = j;
    power = field.mul(power, theta);
  }

  BkSet out;
  out.modulus = group;
  out.k = k;
  for (std::uint32_t a = 0; a < q; ++a) {
    const std::uint64_t shifted = field.add(theta, a);
    if (dlog[shifted] == kUnset) {
      throw Error(ErrorKind::NoPrimitiveElement, "theta + a has no discrete logarithm");
    }
    out.elements.push_back(dlog[shifted]);
  }
  std::sort(out.elements.begin(), out.elements.end());
  return out;
}

bool verify_bk(std::span<const std::uint64_t> elements, std::uint64_t modulus, int k) {
  if (modulus == 0 || k < 1) throw Error(ErrorKind::InvalidParam, "modulus and k must be positive");
  std::vector<std::uint64_t> a(elements.begin(), elements.end());
  std::sort(a.begin(), a.end());
  if (std::adjacent_find(a.begin(), a.end()) != a.end()) return false;
  for (std::uint64_t x : a) {
    if (x >= modulus) throw Error(ErrorKind::InvalidParam, "element outside [0, modulus)");
  }
  if (a.empty()) return true;

  // Walk all non-decreasing index tuples (i_1 <= ... <= i_k).
  std::vector<char> seen(modulus, 0);
  std::vector<std::size_t> idx(static_cast<std::size_t>(k), 0);
  while (true) {
    std::uint64_t sum = 0;
    for (std::size_t i : idx) sum = (sum + a[i]) % modulus;
    if (seen[sum]) return false;
    seen[sum] = 1;
    int pos = k - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == a.size() - 1) --pos;
    if (pos < 0) break;
    const std::size_t next = idx[static_cast<std::size_t>(pos)] + 1;
    for (int i = pos; i < k; ++i) idx[static_cast<std::size_t>(i)] = next;
  }
  return true;
}

IncidenceStructure projective_plane_incidence(std::uint32_t q) {
  require_prime(q);
  if (q > 31) throw Error(ErrorKind::BoundExceeded, "projective planes limited to q <= 31");

  // Normalised homogeneous coordinates: first non-zero coordinate equals 1.
  std::vector<std::array<std::uint32_t, 3>> pts;
  for (std::uint32_t a = 0; a < q; ++a)
    for (std::uint32_t b = 0; b < q; ++b) pts.push_back({1, a, b});
  for (std::uint32_t b = 0; b < q; ++b) pts.push_back({0, 1, b});
  pts.push_back({0, 0, 1});

  IncidenceStructure out;
  out.q = q;
  out.order = pts.size();
  // Lines use the same normalised triples; point P lies on line L iff P.L = 0.
  for (std::uint32_t i = 0; i < pts.size(); ++i) {
    for (std::uint32_t j = 0; j < pts.size(); ++j) {
      std::uint64_t dot = 0;
      for (int c = 0; c < 3; ++c) dot += std::uint64_t{pts[i][c]} * pts[j][c];
      if (dot % q == 0) out.incidences.emplace_back(i, j);
    }
  }
  return out;
}

}  // namespace rtl
