#pragma once

// Exact evaluation of the upper bound on minimal t-fold blocking sets in a
// plane of order n,
//
//   |S| <= ( n·√D + (t-1)·n + 2t ) / 2,   D = 4tn - (3t+1)(t-1),
//
// the equality conditions on b = (√D + t - 1)/2 (lines meet an extremal set
// in t or b+1 points), and the case analysis that pins down which t can reach
// equality when n = q is a prime power.

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "tfold/bigint.hpp"
#include "tfold/families.hpp"
#include "tfold/gf.hpp"

namespace tfold {

struct BoundValue {
  BigInt n;
  BigInt t;
  BigInt discriminant;
  /// √D when D is a perfect square.
  std::optional<BigInt> root;
  /// D is a square, √D + t - 1 is even and the bound is a positive integer.
  bool attainable = false;
  /// Twice the bound is sqrt_coefficient·√D + rational_part, exact even when
  /// D is not a square.
  BigInt sqrt_coefficient;
  BigInt rational_part;
  /// Present iff attainable.
  std::optional<BigInt> bound;
  std::optional<BigInt> b;
};

/// Requires n >= 2 and 1 <= t <= n; throws std::invalid_argument otherwise.
BoundValue max_size_bound(std::uint64_t n, std::uint64_t t);

/// b^2 + b(1-t) - t + t^2 == tn.
bool check_dagger(const BigInt& n, const BigInt& t, const BigInt& b);
/// (b - t + 1) is nonzero and divides n.
bool check_star(const BigInt& n, const BigInt& t, const BigInt& b);

struct EqualityParams {
  BigInt n;
  BigInt t;
  BigInt b;
  BigInt bound;

  friend bool operator==(const EqualityParams&, const EqualityParams&) = default;
};

/// Every t in 1..n whose bound is attainable and whose b satisfies the
/// divisibility condition, sorted by t. Brute force over t; for orders that
/// are not prime powers these are necessary conditions only.
std::vector<EqualityParams> equality_candidates(std::uint64_t n);

struct ExtremalClass {
  BigInt t;
  BigInt b;
  BigInt bound;
  FamilyLabel family;

  friend bool operator==(const ExtremalClass&, const ExtremalClass&) = default;
};

/// Closed-form list of the t admitting extremal sets in a plane of prime power
/// order q: t = q always, plus t = 1 and t = q - √q when q is a square.
std::vector<ExtremalClass> classify_prime_power(const PrimePower& q);
/// Throws std::invalid_argument when q is not a prime power.
std::vector<ExtremalClass> classify_prime_power(std::uint64_t q);

enum class ProofCase { I, II, III, IV };
std::string_view to_string(ProofCase c);

/// Decomposition t = α·p^l (p ∤ α), b - t + 1 = p^h and the resulting case.
struct CaseTrace {
  PrimePower q;
  BigInt t;
  BigInt b;
  BigInt alpha;
  unsigned l = 0;
  unsigned h = 0;
  /// Cofactor from α + 1 = β·p^h (case II) or α = β·p^h + 1 (case III).
  std::optional<BigInt> beta;
  ProofCase proof_case = ProofCase::IV;
  FamilyLabel family = FamilyLabel::Unclassified;
  /// p^h(p^h + αp^l - 1) - αp^l + α²p^{2l} == αp^l·q.
  bool first_equation = false;
  /// (p^h + αp^h - 1) - α + α²p^h == αq; evaluated in case II only.
  std::optional<bool> second_equation;
  /// l <= h and α | p^h - 1; evaluated when h > 0.
  std::optional<bool> divisor_condition;
  /// The case's conclusion holds for (q, t, b); always false for case I.
  bool consistent = false;
};

/// Requires (q, t, b) to satisfy both equality conditions. h = 0 is assigned
/// case IV, otherwise l = 0 gives III, l = h gives II and 0 < l < h gives I.
CaseTrace case_trace(const PrimePower& q, const BigInt& t, const BigInt& b);

}  // namespace tfold
