#pragma once

// Exact arithmetic in GF(p^k), elements stored as coefficient vectors over
// Z_p (constant term first) reduced modulo a fixed monic irreducible.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "tfold/bigint.hpp"

namespace tfold {

/// Deterministic primality test for 64-bit integers.
bool is_prime(std::uint64_t n);

struct PrimePower {
  std::uint64_t p = 0;
  unsigned k = 0;

  BigInt value() const;
  /// Throws std::overflow_error when p^k does not fit in 64 bits.
  std::uint64_t value_u64() const;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Writes n as p^k with p prime and k >= 1, if possible.
std::optional<PrimePower> as_prime_power(std::uint64_t n);

class FieldElement {
 public:
  FieldElement() = default;
  explicit FieldElement(std::vector<std::uint64_t> coeffs) : coeffs_(std::move(coeffs)) {}

  std::span<const std::uint64_t> coeffs() const { return coeffs_; }
  bool is_zero() const;

  // Lexicographic, constant term first.
  friend bool operator==(const FieldElement&, const FieldElement&) = default;
  friend auto operator<=>(const FieldElement&, const FieldElement&) = default;

 private:
  std::vector<std::uint64_t> coeffs_;
};

/// Ben-Or irreducibility test for a monic polynomial over Z_p
/// (coefficients constant term first, leading coefficient 1).
bool is_irreducible(std::uint64_t p, std::span<const std::uint64_t> monic_poly);

inline constexpr unsigned kMaxFieldDegree = 16;
inline constexpr std::uint64_t kMaxFieldCharacteristic = std::uint64_t{1} << 31;

/// GF(p^k). Immutable after construction; every operation is a pure function.
class Field {
 public:
  const PrimePower& prime_power() const { return prime_power_; }
  std::uint64_t characteristic() const { return prime_power_.p; }
  unsigned degree() const { return prime_power_.k; }
  /// Monic modulus, length k+1, constant term first.
  std::span<const std::uint64_t> modulus() const { return modulus_; }
  BigInt order() const { return prime_power_.value(); }

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement constant(std::uint64_t c) const;
  /// Residue class of the polynomial variable x.
  FieldElement variable() const;
  /// Validates length and coefficient range; shorter vectors are zero-padded.
  FieldElement element(std::vector<std::uint64_t> coeffs) const;
  bool contains(const FieldElement& a) const;

  FieldElement add(const FieldElement& a, const FieldElement& b) const;
  FieldElement sub(const FieldElement& a, const FieldElement& b) const;
  FieldElement neg(const FieldElement& a) const;
  FieldElement mul(const FieldElement& a, const FieldElement& b) const;
  /// Throws std::domain_error for zero.
  FieldElement inv(const FieldElement& a) const;
  FieldElement pow(const FieldElement& a, std::uint64_t e) const;
  FieldElement pow(const FieldElement& a, const BigInt& e) const;

  /// a^(p^m).
  FieldElement frobenius(const FieldElement& a, std::uint64_t m) const;

  // The next two treat the field as GF(q^2) over GF(q), q = p^(k/2), and
  // throw std::domain_error when k is odd.

  /// a^(q+1), an element of the subfield GF(q).
  FieldElement relative_norm(const FieldElement& a) const;
  /// a^q == a.
  bool in_base_subfield(const FieldElement& a) const;

  // Enumeration helpers for small fields (order < 2^32).

  std::uint64_t size() const;
  /// Position of a in the lexicographic (constant-term-first) order.
  std::uint64_t rank(const FieldElement& a) const;
  FieldElement unrank(std::uint64_t r) const;
  /// All elements in lexicographic order.
  std::vector<FieldElement> elements() const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.prime_power_ == b.prime_power_ && a.modulus_ == b.modulus_;
  }

 private:
  Field(PrimePower pp, std::vector<std::uint64_t> modulus);
  friend Field make_field(std::uint64_t p, unsigned k);
  friend Field make_field_with_modulus(std::uint64_t p, std::vector<std::uint64_t> modulus);

  void check(const FieldElement& a) const;

  PrimePower prime_power_;
  std::vector<std::uint64_t> modulus_;
};

/// GF(p^k) with the lexicographically smallest monic irreducible modulus
/// (coefficients compared from the constant term upward).
/// Requires p prime, p < 2^31 and 1 <= k <= 16.
Field make_field(std::uint64_t p, unsigned k);

/// GF(p^k) over an explicit monic irreducible modulus of degree k.
Field make_field_with_modulus(std::uint64_t p, std::vector<std::uint64_t> modulus);

/// Dense addition/multiplication tables over element ranks for small fields
/// (order <= 1024). Rank 0 is zero; ranks follow Field::rank.
class FieldTables {
 public:
  explicit FieldTables(const Field& field);

  std::uint32_t size() const { return q_; }
  std::uint32_t zero() const { return 0; }
  std::uint32_t one() const { return one_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return add_[a * q_ + b]; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return mul_[a * q_ + b]; }
  std::uint32_t neg(std::uint32_t a) const { return neg_[a]; }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }
  /// inv(0) is undefined; callers must check.
  std::uint32_t inv(std::uint32_t a) const { return inv_[a]; }

 private:
  std::uint32_t q_ = 0;
  std::uint32_t one_ = 0;
  std::vector<std::uint32_t> add_;
  std::vector<std::uint32_t> mul_;
  std::vector<std::uint32_t> neg_;
  std::vector<std::uint32_t> inv_;
};

}  // namespace tfold
