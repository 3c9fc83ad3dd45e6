#include "tfold/extremal.hpp"

#include <stdexcept>
#include <string>

namespace tfold {
namespace {

using boost::multiprecision::pow;

// Exponent e with p^e == value, if value is a power of p.
std::optional<unsigned> log_exact(BigInt value, std::uint64_t p) {
  if (value <= 0) return std::nullopt;
  unsigned e = 0;
  while (value % p == 0) {
    value /= p;
    ++e;
  }
  if (value != 1) return std::nullopt;
  return e;
}

}  // namespace

BoundValue max_size_bound(std::uint64_t n, std::uint64_t t) {
  if (n < 2) throw std::invalid_argument("max_size_bound: order must be at least 2");
  if (t < 1 || t > n) {
    throw std::invalid_argument("max_size_bound: t = " + std::to_string(t) + " outside 1.." + std::to_string(n));
  }
  BoundValue v;
  v.n = n;
  v.t = t;
  v.discriminant = 4 * v.t * v.n - (3 * v.t + 1) * (v.t - 1);
  v.sqrt_coefficient = v.n;
  v.rational_part = (v.t - 1) * v.n + 2 * v.t;
  v.root = exact_sqrt(v.discriminant);
  if (v.root && (*v.root + v.t - 1) % 2 == 0) {
    const BigInt twice = v.n * *v.root + v.rational_part;
    if (twice % 2 == 0 && twice > 0) {
      v.attainable = true;
      v.bound = twice / 2;
      v.b = (*v.root + v.t - 1) / 2;
    }
  }
  return v;
}

bool check_dagger(const BigInt& n, const BigInt& t, const BigInt& b) {
  return b * b + b * (1 - t) - t + t * t == t * n;
}

bool check_star(const BigInt& n, const BigInt& t, const BigInt& b) {
  const BigInt d = b - t + 1;
  return d != 0 && n % d == 0;
}

std::vector<EqualityParams> equality_candidates(std::uint64_t n) {
  if (n < 2) throw std::invalid_argument("equality_candidates: order must be at least 2");
  std::vector<EqualityParams> out;
  for (std::uint64_t t = 1; t <= n; ++t) {
    const BoundValue v = max_size_bound(n, t);
    if (!v.attainable || !check_star(v.n, v.t, *v.b)) continue;
    out.push_back(EqualityParams{v.n, v.t, *v.b, *v.bound});
  }
  return out;
}

std::vector<ExtremalClass> classify_prime_power(const PrimePower& q) {
  if (!is_prime(q.p) || q.k < 1) throw std::invalid_argument("classify_prime_power: not a prime power");
  const BigInt n = q.value();
  std::vector<ExtremalClass> out;
  if (q.k % 2 == 0) {
    const BigInt r = pow(BigInt(q.p), q.k / 2);
    out.push_back({1, r, n * r + 1, FamilyLabel::Unital});
    out.push_back({n - r, n - 1, n * n - r, FamilyLabel::BaerComplement});
  }
  out.push_back({n, n, n * n + n, FamilyLabel::PlaneMinusPoint});
  return out;
}

std::vector<ExtremalClass> classify_prime_power(std::uint64_t q) {
  const auto pp = as_prime_power(q);
  if (!pp) {
    throw std::invalid_argument(std::to_string(q) +
                                " is not a prime power; use equality_candidates for general orders");
  }
  return classify_prime_power(*pp);
}

std::string_view to_string(ProofCase c) {
  switch (c) {
    case ProofCase::I: return "I";
    case ProofCase::II: return "II";
    case ProofCase::III: return "III";
    case ProofCase::IV: return "IV";
  }
  return "?";
}

CaseTrace case_trace(const PrimePower& q, const BigInt& t, const BigInt& b) {
  const BigInt n = q.value();
  if (t < 1 || b < 1) throw std::invalid_argument("case_trace: t and b must be positive");
  if (!check_dagger(n, t, b)) throw std::invalid_argument("case_trace: (q, t, b) violates the quadratic identity");
  if (!check_star(n, t, b)) throw std::invalid_argument("case_trace: b - t + 1 does not divide q");

  const std::uint64_t p = q.p;
  CaseTrace tr;
  tr.q = q;
  tr.t = t;
  tr.b = b;

  const auto h = log_exact(b - t + 1, p);
  if (!h) throw std::invalid_argument("case_trace: b - t + 1 is not a power of p");
  tr.h = *h;

  tr.alpha = t;
  while (tr.alpha % p == 0) {
    tr.alpha /= p;
    ++tr.l;
  }

  const BigInt& alpha = tr.alpha;
  const BigInt ph = pow(BigInt(p), tr.h);
  const BigInt pl = pow(BigInt(p), tr.l);
  tr.first_equation = ph * (ph + alpha * pl - 1) - alpha * pl + alpha * alpha * pl * pl == alpha * pl * n;

  if (tr.h == 0) {
    tr.proof_case = ProofCase::IV;
    tr.family = FamilyLabel::PlaneMinusPoint;
    tr.consistent = tr.first_equation && b == t && t == n;
    return tr;
  }

  tr.divisor_condition = tr.l <= tr.h && (ph - 1) % alpha == 0;
  if (tr.l > tr.h) {
    // t divides b(b+1) ≡ p^h(p^h - 1) (mod t), so p^l | p^h.
    throw std::logic_error("case_trace: l > h contradicts t | b(b+1)");
  }

  const bool square_order = n == ph * ph;
  if (tr.l == 0) {
    tr.proof_case = ProofCase::III;
    tr.family = FamilyLabel::Unital;
    if ((alpha - 1) % ph == 0) tr.beta = (alpha - 1) / ph;
    tr.consistent = tr.first_equation && *tr.divisor_condition && tr.beta == BigInt(0) && alpha == 1 &&
                    square_order && t == 1 && b == ph;
  } else if (tr.l == tr.h) {
    tr.proof_case = ProofCase::II;
    tr.family = FamilyLabel::BaerComplement;
    if ((alpha + 1) % ph == 0) tr.beta = (alpha + 1) / ph;
    tr.second_equation = (ph + alpha * ph - 1) - alpha + alpha * alpha * ph == alpha * n;
    tr.consistent = tr.first_equation && *tr.second_equation && *tr.divisor_condition && alpha == ph - 1 &&
                    square_order && t == n - ph && b == n - 1;
  } else {
    // 0 < l < h: dividing the first equation by p^l leaves p | α.
    tr.proof_case = ProofCase::I;
    tr.family = FamilyLabel::Unclassified;
    tr.consistent = false;
  }
  return tr;
}

}  // namespace tfold
