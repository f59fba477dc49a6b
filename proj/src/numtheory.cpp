#include "gengraph/numtheory.hpp"

#include <algorithm>
#include <numeric>

#include "gengraph/degree.hpp"
#include "gengraph/errors.hpp"

namespace gengraph {

bool is_prime(long long q) {
  if (q < 2) return false;
  if (q < 4) return true;
  if (q % 2 == 0) return false;
  for (long long d = 3; d * d <= q; d += 2)
    if (q % d == 0) return false;
  return true;
}

bool is_prime_3mod4(long long q) {
  if (q < 2) throw input_error("is_prime_3mod4: q must be >= 2");
  return q % 4 == 3 && is_prime(q);
}

long long euler_phi(long long m) {
  if (m < 1) throw input_error("euler_phi: m must be >= 1");
  long long result = m;
  for (long long d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      result -= result / d;
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

long long radical(long long x) {
  if (x < 1) throw input_error("radical: x must be >= 1");
  long long r = 1;
  for (long long d = 2; d * d <= x; ++d) {
    if (x % d == 0) {
      r *= d;
      while (x % d == 0) x /= d;
    }
  }
  if (x > 1) r *= x;
  return r;
}

std::vector<int> unit_residues(long long m) {
  if (m < 1) throw input_error("unit_residues: m must be >= 1");
  std::vector<int> out;
  for (long long i = 1; i <= m; ++i)
    if (std::gcd(i, m) == 1) out.push_back(static_cast<int>(i % m));
  std::sort(out.begin(), out.end());
  return out;
}

std::string DecompositionCertificate::render() const {
  std::string out = std::to_string(n) + " =";
  bool first = true;
  for (int i = k; i >= 0; --i) {
    if (!coefficients[static_cast<size_t>(i)]) continue;
    out += first ? " " : " + ";
    out += std::to_string(p) + "^" + std::to_string(i);
    first = false;
  }
  return out;
}

std::vector<DecompositionCertificate> decompositions(long long n, Family family) {
  if (n < 3) throw input_error("decompositions: n must be >= 3");
  std::vector<DecompositionCertificate> out;
  // The n = 3 symmetric case sits outside the divisibility biconditional
  // (there every nontrivial cyclic subgroup has normalizer order 2 mod 4).
  if (family == Family::Sym && n == 3) return out;
  for (long long p = 3; p <= n; p += 4) {
    if (!is_prime(p)) continue;
    // powers p^0..p^k with p^k <= n
    std::vector<long long> pw{1};
    while (pw.back() <= n / p) pw.push_back(pw.back() * p);
    const int kmax = static_cast<int>(pw.size()) - 1;
    for (int k = 1; k <= kmax; ++k) {
      // subsets of {p^0..p^{k-1}} adjoined to the mandatory p^k
      for (unsigned mask = 0; mask < (1u << k); ++mask) {
        long long sum = pw[static_cast<size_t>(k)];
        int odd_terms = (k % 2 == 1) ? 1 : 0;
        for (int i = 0; i < k; ++i)
          if (mask & (1u << i)) {
            sum += pw[static_cast<size_t>(i)];
            if (i % 2 == 1) ++odd_terms;
          }
        if (sum != n) continue;
        DecompositionCertificate cert;
        cert.n = n;
        cert.p = p;
        cert.k = k;
        cert.coefficients.assign(static_cast<size_t>(k) + 1, 0);
        cert.coefficients[static_cast<size_t>(k)] = 1;
        for (int i = 0; i < k; ++i)
          if (mask & (1u << i)) cert.coefficients[static_cast<size_t>(i)] = 1;
        cert.alt_condition = (odd_terms % 2 == 1);
        for (int i = k; i >= 0; --i)
          if (cert.coefficients[static_cast<size_t>(i)])
            cert.shape.parts.push_back(static_cast<int>(pw[static_cast<size_t>(i)]));
        if (family == Family::Alt && !cert.alt_condition) continue;
        out.push_back(std::move(cert));
      }
    }
  }
  return out;
}

bool eulerian_predicate(long long n) {
  if (n < 3) throw input_error("eulerian_predicate: n must be >= 3");
  return !is_prime_3mod4(n) && !is_prime_3mod4(n - 1);
}

bool odd_degree_predicted(int n, long long order) {
  if (order < 2) return false;
  if (order != n && order != n - 1) return false;
  return is_prime_3mod4(order);
}

ProbabilityReport odd_degree_probability(const GroupSpec& spec, const Caps& caps) {
  if (spec.n == 6)
    throw input_error("odd_degree_probability: n = 6 unsupported (and Gamma is "
                      "Eulerian there anyway)");
  if (eulerian_predicate(spec.n))
    throw input_error("odd_degree_probability: " + spec.name() +
                      " has Eulerian generating graph; no odd vertices");
  const long long p = is_prime_3mod4(spec.n) ? spec.n : spec.n - 1;
  const int out_order = spec.family == Family::Sym ? 1 : 2;

  // out / (p (1 - out/n!)) = out * n! / (p (n! - out))
  const BigInt nf = factorial_big(spec.n);
  Rational prob(BigInt(out_order) * nf, BigInt(p) * (nf - out_order));

  ProbabilityReport rep{spec, p, out_order, numerator(prob), denominator(prob),
                        std::nullopt};

  if (spec.n <= caps.enumeration_cap) {
    const DegreeReport table = degree_table(spec, caps);
    uint64_t odd = 0;
    for (const auto& row : table.rows)
      if (row.parity_odd) odd += row.class_size;
    rep.odd_vertex_count = odd;
    const Rational direct(BigInt(odd), spec.order() - 1);
    if (direct != prob)
      throw std::logic_error("odd_degree_probability: direct count " +
                             std::to_string(odd) + " disagrees with formula for " +
                             spec.name());
  }
  return rep;
}

}  // namespace gengraph
