#include "tfold/gf.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace tfold {
namespace {

using u64 = std::uint64_t;
__extension__ typedef unsigned __int128 u128;
using Poly = std::vector<u64>;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

std::optional<u64> checked_pow(u64 base, unsigned e) {
  u64 r = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (base != 0 && r > UINT64_MAX / base) return std::nullopt;
    r *= base;
  }
  return r;
}

// --- polynomials over Z_p, constant term first --------------------------------

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& f, u64 p) {
  trim(a);
  const std::size_t df = f.size() - 1;
  const u64 lc_inv = powmod(f.back(), p - 2, p);
  while (a.size() >= f.size()) {
    const u64 c = mulmod(a.back(), lc_inv, p);
    const std::size_t shift = a.size() - 1 - df;
    for (std::size_t j = 0; j <= df; ++j) {
      a[shift + j] = (a[shift + j] + p - mulmod(c, f[j], p)) % p;
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, u64 p) {
  if (a.empty() || b.empty()) return {};
  Poly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = (prod[i + j] + mulmod(a[i], b[j], p)) % p;
    }
  }
  return poly_mod(std::move(prod), f, p);
}

Poly poly_powmod(Poly base, u64 e, const Poly& f, u64 p) {
  Poly r{1};
  base = poly_mod(std::move(base), f, p);
  while (e) {
    if (e & 1) r = poly_mulmod(r, base, f, p);
    base = poly_mulmod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 sp : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % sp == 0) return n == sp;
  }
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These bases are sufficient for every n < 3.3 * 10^24.
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

BigInt PrimePower::value() const { return boost::multiprecision::pow(BigInt(p), k); }

u64 PrimePower::value_u64() const {
  auto v = checked_pow(p, k);
  if (!v) throw std::overflow_error("prime power does not fit in 64 bits");
  return *v;
}

std::optional<PrimePower> as_prime_power(u64 n) {
  if (n < 2) return std::nullopt;
  for (unsigned k = 1; k < 64; ++k) {
    const auto guess = static_cast<u64>(std::llround(std::pow(static_cast<double>(n), 1.0 / k)));
    for (u64 r = guess > 0 ? guess - 1 : 0; r <= guess + 1; ++r) {
      if (r < 2) continue;
      auto v = checked_pow(r, k);
      if (v && *v == n && is_prime(r)) return PrimePower{r, k};
    }
    if ((u64{1} << std::min(k, 63u)) > n) break;
  }
  return std::nullopt;
}

bool FieldElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](u64 c) { return c == 0; });
}

bool is_irreducible(u64 p, std::span<const u64> monic_poly) {
  if (!is_prime(p) || p >= (u64{1} << 32)) {
    throw std::invalid_argument("is_irreducible: characteristic must be a prime below 2^32");
  }
  Poly f(monic_poly.begin(), monic_poly.end());
  if (f.size() < 2 || f.back() != 1) {
    throw std::invalid_argument("is_irreducible: polynomial must be monic of degree >= 1");
  }
  const std::size_t k = f.size() - 1;
  if (k == 1) return true;
  // x^(p^i) - x shares a factor with f iff f has an irreducible factor of
  // degree dividing i.
  Poly h{0, 1};
  for (std::size_t i = 1; i <= k / 2; ++i) {
    h = poly_powmod(h, p, f, p);
    Poly diff = h;
    diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
    diff[1] = (diff[1] + p - 1) % p;
    if (poly_gcd(f, diff, p).size() > 1) return false;
  }
  return true;
}

// --- Field --------------------------------------------------------------------

Field::Field(PrimePower pp, std::vector<u64> modulus) : prime_power_(pp), modulus_(std::move(modulus)) {}

Field make_field_with_modulus(u64 p, std::vector<u64> modulus) {
  if (!is_prime(p) || p >= kMaxFieldCharacteristic) {
    throw std::invalid_argument("make_field: characteristic " + std::to_string(p) +
                                " is not a prime below 2^31");
  }
  if (modulus.size() < 2 || modulus.size() - 1 > kMaxFieldDegree) {
    throw std::invalid_argument("make_field: degree must be in 1.." + std::to_string(kMaxFieldDegree));
  }
  for (u64 c : modulus) {
    if (c >= p) throw std::invalid_argument("make_field: modulus coefficient out of range");
  }
  if (!is_irreducible(p, modulus)) {
    throw std::invalid_argument("make_field: modulus is not a monic irreducible polynomial");
  }
  const auto k = static_cast<unsigned>(modulus.size() - 1);
  return Field(PrimePower{p, k}, std::move(modulus));
}

Field make_field(u64 p, unsigned k) {
  if (!is_prime(p) || p >= kMaxFieldCharacteristic) {
    throw std::invalid_argument("make_field: characteristic " + std::to_string(p) +
                                " is not a prime below 2^31");
  }
  if (k < 1 || k > kMaxFieldDegree) {
    throw std::invalid_argument("make_field: degree must be in 1.." + std::to_string(kMaxFieldDegree));
  }
  // Odometer over (a_0, ..., a_{k-1}) with a_0 most significant.
  std::vector<u64> f(k + 1, 0);
  f[k] = 1;
  // For k >= 2 a zero constant term means x divides f.
  if (k >= 2) f[0] = 1;
  while (true) {
    if (is_irreducible(p, f)) return Field(PrimePower{p, k}, std::move(f));
    std::size_t pos = k;
    do {
      --pos;
      if (++f[pos] < p) break;
      f[pos] = 0;
    } while (pos != 0);
    if (pos == 0 && f[0] == 0) {
      // Unreachable: irreducibles of every degree exist.
      throw std::logic_error("make_field: no irreducible polynomial found");
    }
  }
}

void Field::check(const FieldElement& a) const {
  if (a.coeffs().size() != degree()) {
    throw std::invalid_argument("field element does not belong to GF(" + to_decimal(order()) + ")");
  }
}

bool Field::contains(const FieldElement& a) const {
  if (a.coeffs().size() != degree()) return false;
  return std::all_of(a.coeffs().begin(), a.coeffs().end(), [&](u64 c) { return c < characteristic(); });
}

FieldElement Field::zero() const { return FieldElement(std::vector<u64>(degree(), 0)); }

FieldElement Field::constant(u64 c) const {
  std::vector<u64> v(degree(), 0);
  v[0] = c % characteristic();
  return FieldElement(std::move(v));
}

FieldElement Field::one() const { return constant(1); }

FieldElement Field::variable() const {
  if (degree() == 1) {
    // x reduced modulo x + m_0 is -m_0.
    return constant((characteristic() - modulus_[0]) % characteristic());
  }
  std::vector<u64> v(degree(), 0);
  v[1] = 1;
  return FieldElement(std::move(v));
}

FieldElement Field::element(std::vector<u64> coeffs) const {
  if (coeffs.size() > degree()) {
    throw std::invalid_argument("field element has more than k coefficients");
  }
  coeffs.resize(degree(), 0);
  for (u64 c : coeffs) {
    if (c >= characteristic()) throw std::invalid_argument("field element coefficient out of range");
  }
  return FieldElement(std::move(coeffs));
}

FieldElement Field::add(const FieldElement& a, const FieldElement& b) const {
  check(a);
  check(b);
  const u64 p = characteristic();
  std::vector<u64> r(degree());
  for (unsigned i = 0; i < degree(); ++i) r[i] = (a.coeffs()[i] + b.coeffs()[i]) % p;
  return FieldElement(std::move(r));
}

FieldElement Field::neg(const FieldElement& a) const {
  check(a);
  const u64 p = characteristic();
  std::vector<u64> r(degree());
  for (unsigned i = 0; i < degree(); ++i) r[i] = (p - a.coeffs()[i]) % p;
  return FieldElement(std::move(r));
}

FieldElement Field::sub(const FieldElement& a, const FieldElement& b) const { return add(a, neg(b)); }

FieldElement Field::mul(const FieldElement& a, const FieldElement& b) const {
  check(a);
  check(b);
  const u64 p = characteristic();
  const unsigned k = degree();
  std::vector<u64> prod(2 * k - 1, 0);
  for (unsigned i = 0; i < k; ++i) {
    const u64 ai = a.coeffs()[i];
    if (ai == 0) continue;
    for (unsigned j = 0; j < k; ++j) {
      prod[i + j] = (prod[i + j] + mulmod(ai, b.coeffs()[j], p)) % p;
    }
  }
  // x^k = -(m_0 + m_1 x + ... + m_{k-1} x^{k-1})
  for (unsigned i = 2 * k - 2; i >= k; --i) {
    const u64 c = prod[i];
    if (c == 0) continue;
    for (unsigned j = 0; j < k; ++j) {
      prod[i - k + j] = (prod[i - k + j] + p - mulmod(c, modulus_[j], p)) % p;
    }
    prod[i] = 0;
  }
  prod.resize(k);
  return FieldElement(std::move(prod));
}

FieldElement Field::pow(const FieldElement& a, u64 e) const {
  FieldElement r = one();
  FieldElement base = a;
  while (e) {
    if (e & 1) r = mul(r, base);
    e >>= 1;
    if (e) base = mul(base, base);
  }
  return r;
}

FieldElement Field::pow(const FieldElement& a, const BigInt& e) const {
  if (e < 0) throw std::domain_error("negative exponent");
  FieldElement r = one();
  if (e == 0) return r;
  const unsigned top = boost::multiprecision::msb(e);
  for (unsigned bit = top + 1; bit-- > 0;) {
    r = mul(r, r);
    if (boost::multiprecision::bit_test(e, bit)) r = mul(r, a);
  }
  return r;
}

FieldElement Field::inv(const FieldElement& a) const {
  check(a);
  if (a.is_zero()) throw std::domain_error("inverse of zero");
  return pow(a, order() - 2);
}

FieldElement Field::frobenius(const FieldElement& a, u64 m) const {
  FieldElement r = a;
  for (u64 i = 0; i < m % degree(); ++i) r = pow(r, characteristic());
  return r;
}

FieldElement Field::relative_norm(const FieldElement& a) const {
  if (degree() % 2 != 0) throw std::domain_error("relative norm requires a field of even degree");
  return mul(a, frobenius(a, degree() / 2));
}

bool Field::in_base_subfield(const FieldElement& a) const {
  if (degree() % 2 != 0) throw std::domain_error("base subfield test requires a field of even degree");
  return frobenius(a, degree() / 2) == a;
}

u64 Field::size() const {
  const u64 q = prime_power_.value_u64();
  if (q >= (u64{1} << 32)) throw std::overflow_error("field too large to enumerate");
  return q;
}

u64 Field::rank(const FieldElement& a) const {
  check(a);
  u64 r = 0;
  for (u64 c : a.coeffs()) r = r * characteristic() + c;
  return r;
}

FieldElement Field::unrank(u64 r) const {
  if (r >= size()) throw std::out_of_range("field element rank out of range");
  std::vector<u64> v(degree());
  for (unsigned i = degree(); i-- > 0;) {
    v[i] = r % characteristic();
    r /= characteristic();
  }
  return FieldElement(std::move(v));
}

std::vector<FieldElement> Field::elements() const {
  const u64 q = size();
  std::vector<FieldElement> out;
  out.reserve(q);
  for (u64 r = 0; r < q; ++r) out.push_back(unrank(r));
  return out;
}

// --- FieldTables --------------------------------------------------------------

FieldTables::FieldTables(const Field& field) {
  const u64 q = field.size();
  if (q > 1024) throw std::invalid_argument("FieldTables: field order exceeds 1024");
  q_ = static_cast<std::uint32_t>(q);
  one_ = static_cast<std::uint32_t>(field.rank(field.one()));
  const auto elems = field.elements();
  add_.resize(q * q);
  mul_.resize(q * q);
  neg_.resize(q);
  inv_.assign(q, 0);
  for (u64 a = 0; a < q; ++a) {
    neg_[a] = static_cast<std::uint32_t>(field.rank(field.neg(elems[a])));
    for (u64 b = 0; b < q; ++b) {
      add_[a * q + b] = static_cast<std::uint32_t>(field.rank(field.add(elems[a], elems[b])));
      mul_[a * q + b] = static_cast<std::uint32_t>(field.rank(field.mul(elems[a], elems[b])));
    }
  }
  for (u64 a = 1; a < q; ++a) {
    for (u64 b = 1; b < q; ++b) {
      if (mul_[a * q + b] == one_) {
        inv_[a] = static_cast<std::uint32_t>(b);
        break;
      }
    }
  }
}

}  // namespace tfold
