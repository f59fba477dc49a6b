#pragma once

// Test-only brute-force oracles, kept independent of the library's own
// computation paths: closure by explicit multiplication instead of
// stabilizer chains, conjugation orbits instead of the partition formula.

#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "gengraph/group.hpp"
#include "gengraph/perm.hpp"

namespace oracle {

using gengraph::Permutation;

// |<gens>| by breadth-first closure under composition.
inline uint64_t closure_order(const std::vector<Permutation>& gens) {
  if (gens.empty()) return 1;
  const int n = gens.front().degree();
  std::set<std::vector<uint8_t>> seen;
  std::vector<Permutation> frontier{Permutation::identity(n)};
  seen.insert(frontier.front().images());
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& p : frontier)
      for (const auto& g : gens) {
        Permutation q = gengraph::compose(p, g);
        if (seen.insert(q.images()).second) next.push_back(std::move(q));
      }
    frontier = std::move(next);
  }
  return seen.size();
}

inline std::set<std::vector<uint8_t>> closure_elements(
    const std::vector<Permutation>& gens, int n) {
  std::set<std::vector<uint8_t>> seen;
  std::vector<Permutation> frontier{Permutation::identity(n)};
  seen.insert(frontier.front().images());
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& p : frontier)
      for (const auto& g : gens) {
        Permutation q = gengraph::compose(p, g);
        if (seen.insert(q.images()).second) next.push_back(std::move(q));
      }
    frontier = std::move(next);
  }
  return seen;
}

// Conjugation-orbit partition of the whole group; returns sorted class sizes.
inline std::vector<uint64_t> conjugacy_sizes(const gengraph::GroupSpec& spec,
                                             const gengraph::Caps& caps) {
  const auto elements = gengraph::enumerate_elements(spec, caps);
  std::set<std::vector<uint8_t>> remaining;
  for (const auto& p : elements) remaining.insert(p.images());
  std::vector<uint64_t> sizes;
  while (!remaining.empty()) {
    const Permutation rep = Permutation::from_images(*remaining.begin());
    std::set<std::vector<uint8_t>> orbit;
    for (const auto& s : elements)
      orbit.insert(gengraph::conjugate(rep, s).images());
    for (const auto& img : orbit) remaining.erase(img);
    sizes.push_back(orbit.size());
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

inline long long phi_by_count(long long m) {
  long long count = 0;
  for (long long i = 1; i <= m; ++i)
    if (std::gcd(i, m) == 1) ++count;
  return count;
}

}  // namespace oracle
