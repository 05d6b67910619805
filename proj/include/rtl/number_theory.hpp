#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace rtl {

// Largest field order / modulus handled by the table-based routines.
inline constexpr std::uint64_t kFieldOrderLimit = 10'000'000;

bool is_prime(std::uint64_t m);

// Distinct prime divisors in increasing order.
std::vector<std::uint64_t> prime_factors(std::uint64_t m);

// Polynomial over Z_p, coefficients from the constant term upwards.
using Poly = std::vector<std::uint32_t>;

// First monic irreducible polynomial of degree k over Z_p, in order of the
// base-p number formed by its lower coefficients (highest digit first).
// Irreducibility is certified by trial division by every monic polynomial of
// degree 1..k/2. Throws BoundExceeded when p^k > kFieldOrderLimit.
Poly find_irreducible(std::uint32_t p, int k);

// True iff `f` has no monic factor of degree 1..deg(f)/2 over Z_p.
bool is_irreducible(const Poly& f, std::uint32_t p);

// GF(p^k) as Z_p[x]/(modulus). Elements are encoded as integers
// sum c_i p^i in [0, p^k).
class ExtField {
 public:
  ExtField(std::uint32_t p, int k);

  std::uint32_t characteristic() const noexcept { return p_; }
  int degree() const noexcept { return k_; }
  std::uint64_t order() const noexcept { return order_; }
  const Poly& modulus() const noexcept { return modulus_; }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;

  // x itself, i.e. the class of the indeterminate.
  std::uint64_t generator() const noexcept { return p_; }

  bool is_primitive(std::uint64_t a) const;

  // x when it is primitive, otherwise the smallest primitive element by
  // integer encoding.
  std::uint64_t primitive_element() const;

  Poly to_poly(std::uint64_t a) const;
  std::uint64_t from_poly(const Poly& coeffs) const;

 private:
  std::uint32_t p_;
  int k_;
  std::uint64_t order_;
  Poly modulus_;
};

struct BkSet {
  std::vector<std::uint64_t> elements;  // sorted, in [0, modulus)
  std::uint64_t modulus = 0;
  int k = 0;
};

// Bose-Chowla: A = { log_theta(theta + a) : a in Z_q } inside Z_{q^k - 1},
// theta a primitive element of GF(q^k). |A| = q.
BkSet bose_chowla(std::uint32_t q, int k);

// True iff distinct k-element multisets of `elements` have distinct sums mod m.
bool verify_bk(std::span<const std::uint64_t> elements, std::uint64_t modulus, int k);

// Point-line incidences of PG(2, q): points and lines are both indexed
// 0 .. q^2+q, an incidence is (point, line).
struct IncidenceStructure {
  std::uint32_t q = 0;
  std::size_t order = 0;  // q^2 + q + 1
  std::vector<std::pair<std::uint32_t, std::uint32_t>> incidences;
};

// Throws InvalidParam unless q is prime, BoundExceeded for q > 31.
IncidenceStructure projective_plane_incidence(std::uint32_t q);

}  // namespace rtl
