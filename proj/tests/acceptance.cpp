// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "tfold/bigint.hpp"
#include "tfold/blocking.hpp"
#include "tfold/extremal.hpp"
#include "tfold/families.hpp"
#include "tfold/gf.hpp"
#include "tfold/plane.hpp"
#include "tfold/search.hpp"

using namespace tfold;

namespace {

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) detail << "first failure: " << what << "; ";
    ok = ok && cond;
  }
};

struct Criterion {
  int id;
  const char* name;
  double seconds_limit;
  std::function<void(Check&)> body;
};

std::set<std::uint64_t> t_set(const std::vector<ExtremalClass>& v) {
  std::set<std::uint64_t> out;
  for (const auto& e : v) out.insert(static_cast<std::uint64_t>(e.t));
  return out;
}

void classification(Check& c) {
  std::size_t count = 0, primes = 0;
  for (std::uint64_t q = 2; q <= 1024; ++q) {
    const auto pp = as_prime_power(q);
    if (!pp) continue;
    ++count;
    if (pp->k == 1) ++primes;
    const auto cls = classify_prime_power(*pp);
    const auto cand = equality_candidates(q);
    const std::string at = "q=" + std::to_string(q);
    c.expect(cls.size() == cand.size(), at + " list lengths");
    for (std::size_t i = 0; i < std::min(cls.size(), cand.size()); ++i) {
      c.expect(cls[i].t == cand[i].t && cls[i].b == cand[i].b && cls[i].bound == cand[i].bound, at + " entry");
    }
    std::set<std::uint64_t> want{q};
    if (pp->k % 2 == 0) {
      const std::uint64_t r = to_int64(isqrt(BigInt(q)));
      want = {1, q - r, q};
    }
    c.expect(t_set(cls) == want, at + " t-set");
  }
  c.expect(count == oracle::prime_powers_up_to(1024).size(), "enumeration agrees with sieve");
  c.detail << count << " prime powers checked (" << primes << " primes)";
}

void specializations(Check& c) {
  std::size_t checks = 0;
  for (std::uint64_t n = 2; n <= 1024; ++n) {
    const BoundValue full = max_size_bound(n, n);
    c.expect(full.attainable && *full.bound == BigInt(n) * n + n, "t=n at n=" + std::to_string(n));
    ++checks;
    const BigInt r = isqrt(BigInt(n));
    if (r * r != n) continue;
    const std::uint64_t s = to_int64(r);
    const BoundValue one = max_size_bound(n, 1);
    c.expect(one.attainable && *one.bound == BigInt(n) * s + 1, "t=1 at n=" + std::to_string(n));
    const BoundValue baer = max_size_bound(n, n - s);
    c.expect(baer.attainable && *baer.bound == BigInt(n) * n - s, "t=n-sqrt(n) at n=" + std::to_string(n));
    checks += 2;
  }
  c.detail << checks << " exact equalities";
}

void identity(Check& c) {
  std::size_t attainable = 0;
  for (std::uint64_t n = 2; n <= 512; ++n) {
    for (std::uint64_t t = 1; t <= n; ++t) {
      const BoundValue v = max_size_bound(n, t);
      if (!v.attainable) continue;
      ++attainable;
      const BigInt b = *v.b, T(t), N(n);
      c.expect(b * b + b * (1 - T) - T + T * T == T * N, "n=" + std::to_string(n) + " t=" + std::to_string(t));
    }
  }
  c.detail << attainable << " attainable (n,t) pairs";
}

void constructions(Check& c) {
  for (std::uint64_t q : {2u, 3u}) {
    const PlanePtr plane = build_desarguesian_plane(make_field(q, 2));
    const std::uint64_t n = q * q;
    const std::vector<std::pair<std::uint64_t, PointSet>> cases{
        {1, hermitian_unital(plane)}, {n - q, baer_complement(plane)}, {n, plane_minus_point(plane, 0)}};
    for (const auto& [t, s] : cases) {
      const std::string at = "q=" + std::to_string(q) + " t=" + std::to_string(t);
      const BoundValue v = max_size_bound(n, t);
      c.expect(v.attainable, at + " attainable");
      if (!v.attainable) continue;
      c.expect(is_t_fold_blocking(*plane, s, t), at + " blocking");
      c.expect(is_minimal(*plane, s, t), at + " minimal");
      c.expect(BigInt(s.size()) == *v.bound, at + " size");
      const Spectrum sp = spectrum(*plane, s);
      const auto b = static_cast<std::uint64_t>(to_int64(*v.b));
      c.expect(is_two_valued(sp, t, b) && sp.support() == std::vector<std::size_t>{t, b + 1}, at + " spectrum");
    }
  }
  c.detail << "6 constructions";
}

void certification(Check& c) {
  for (auto [p, k] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}}) {
    const PlanePtr plane = build_desarguesian_plane(make_field(p, k));
    const std::uint64_t q = plane->order();
    const CertificationReport r = certify_no_other_t(plane, 1, q);
    c.expect(r.passed, "certify q=" + std::to_string(q));
    std::set<std::uint64_t> hit;
    for (const auto& e : r.entries) {
      c.expect(e.complete, "complete q=" + std::to_string(q) + " t=" + std::to_string(e.t));
      if (e.found > 0) hit.insert(e.t);
    }
    c.expect(hit == t_set(classify_prime_power(q)), "t-set q=" + std::to_string(q));
    c.detail << "PG(2," << q << ") t={";
    for (auto t : hit) c.detail << ' ' << t;
    c.detail << " }; ";
    if (q == 4) {
      const SearchResult baer = exhaustive_extremal_search(make_search_task(plane, 2));
      c.expect(baer.complete && !baer.sets.empty(), "q=4 t=2 search");
      for (const auto& s : baer.sets) {
        c.expect(has_baer_subplane_spectrum(*plane, s.complement()), "q=4 t=2 complement is Baer");
      }
      c.detail << baer.sets.size() << " Baer complements";
    }
  }
}

void prune_safety(Check& c) {
  const PlanePtr plane = build_desarguesian_plane(make_field(2, 1));
  SearchOptions off;
  off.pruning = false;
  for (std::uint64_t t : {1u, 2u}) {
    const SearchResult a = exhaustive_extremal_search(make_search_task(plane, t));
    const SearchResult b = exhaustive_extremal_search(make_search_task(plane, t, off));
    c.expect(a.complete && b.complete, "complete t=" + std::to_string(t));
    c.expect(a.sets == b.sets, "identical lists t=" + std::to_string(t));
    c.detail << "t=" << t << ": " << (a.vacuous ? "not attainable" : std::to_string(a.sets.size()) + " sets") << "; ";
  }
}

void field_and_plane(Check& c) {
  std::size_t fields = 0;
  for (const auto& pp : oracle::prime_powers_up_to(64)) {
    const Field F = make_field(pp.p, pp.k);
    const auto els = F.elements();
    const std::string at = "GF(" + std::to_string(pp.q) + ")";
    for (const auto& a : els) {
      c.expect(F.add(a, F.zero()) == a && F.mul(a, F.one()) == a, at + " identities");
      c.expect(F.add(a, F.neg(a)) == F.zero(), at + " additive inverse");
      if (a != F.zero()) c.expect(F.mul(a, F.inv(a)) == F.one(), at + " multiplicative inverse");
      for (const auto& b : els) {
        c.expect(F.add(a, b) == F.add(b, a) && F.mul(a, b) == F.mul(b, a), at + " commutativity");
        for (const auto& d : els) {
          c.expect(F.add(F.add(a, b), d) == F.add(a, F.add(b, d)), at + " additive associativity");
          c.expect(F.mul(F.mul(a, b), d) == F.mul(a, F.mul(b, d)), at + " multiplicative associativity");
          c.expect(F.mul(a, F.add(b, d)) == F.add(F.mul(a, b), F.mul(a, d)), at + " distributivity");
        }
      }
    }
    ++fields;
  }
  for (std::uint64_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    const auto pp = as_prime_power(q);
    const PlanePtr plane = build_desarguesian_plane(make_field(pp->p, pp->k));
    c.expect(verify_plane_axioms(*plane).passed(), "plane axioms q=" + std::to_string(q));
  }
  for (std::uint64_t q : {2u, 3u, 4u, 5u}) {
    const auto pp = as_prime_power(q);
    const Field F = make_field(pp->p, 2 * pp->k);
    std::size_t fixed = 0;
    for (const auto& a : F.elements()) fixed += F.pow(a, q) == a;
    c.expect(fixed == q, "fixed subfield q=" + std::to_string(q));
  }
  c.detail << fields << " fields exhaustively, 7 planes, 4 subfield counts";
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "classification reproduction", 10.0, classification},
      {2, "bound specializations", 1.0, specializations},
      {3, "equality identity", 5.0, identity},
      {4, "construction verification", 5.0, constructions},
      {5, "desk-scale certification", 1800.0, certification},
      {6, "prune safety", 1.0, prune_safety},
      {7, "field and plane properties", 10.0, field_and_plane},
  };
  int failures = 0;
  for (const auto& cr : criteria) {
    Check c;
    const auto start = std::chrono::steady_clock::now();
    try {
      cr.body(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < cr.seconds_limit;
    if (!in_time) c.detail << "over time limit " << cr.seconds_limit << " s; ";
    const bool pass = c.ok && in_time;
    failures += !pass;
    std::printf("%s AC%d %s (%.3f s) %s\n", pass ? "PASS" : "FAIL", cr.id, cr.name, secs, c.detail.str().c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
