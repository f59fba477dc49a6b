#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gengraph/bigint.hpp"
#include "gengraph/config.hpp"
#include "gengraph/groupspec.hpp"
#include "gengraph/perm.hpp"

namespace gengraph {

bool is_prime(long long q);
// q >= 2 required. True iff q is prime and q = 3 (mod 4).
bool is_prime_3mod4(long long q);
long long euler_phi(long long m);  // m >= 1
// Product of the distinct prime divisors ("square-free part").
long long radical(long long x);
// Sorted residues of (Z/mZ)^*.
std::vector<int> unit_residues(long long m);

// Witness that n = sum a_i p^i with a_k = 1, a_i in {0,1}, p prime = 3 mod 4.
// For Alt the number of nonzero a_i at odd i must be odd. The shape lists
// {p^i : a_i = 1}, with p^0 terms as fixed points, so it is a partition of n.
struct DecompositionCertificate {
  long long n = 0;
  long long p = 0;
  int k = 0;
  std::vector<int> coefficients;  // a_0 .. a_k
  bool alt_condition = false;
  CycleShape shape;

  std::string render() const;  // "12 = 3^2 + 3^1"
};

// Exhaustive search over all admissible (p, k, subset). For Alt only
// certificates with alt_condition are returned. (Sym, 3) yields an empty
// list: the divisibility statement this feeds has a separate n = 3 case.
std::vector<DecompositionCertificate> decompositions(long long n, Family family);

// True iff neither n nor n-1 is a prime = 3 mod 4; exactly the n for which
// Gamma(Alt_n) and Gamma(Sym_n) are Eulerian.
bool eulerian_predicate(long long n);

// Parity classification of a vertex by its element order: the degree is odd
// iff the order is a prime p = 3 mod 4 with p in {n, n-1}.
bool odd_degree_predicted(int n, long long order);

// Exact probability that a random vertex of a non-Eulerian Gamma(G) has odd
// degree: |Out(G)| / (p (1 - |Out(G)|/n!)).
struct ProbabilityReport {
  GroupSpec spec;
  long long p = 0;
  int out_order = 0;
  BigInt numerator;    // reduced fraction
  BigInt denominator;
  std::optional<uint64_t> odd_vertex_count;  // filled when n is within caps
};

ProbabilityReport odd_degree_probability(const GroupSpec& spec, const Caps& caps);

}  // namespace gengraph
