#pragma once

#include <optional>
#include <vector>

#include "gengraph/config.hpp"
#include "gengraph/degree.hpp"
#include "gengraph/groupspec.hpp"

namespace gengraph {

enum class EulerMode { PredicateOnly, Empirical, WithCircuit };

struct EmpiricalEuler {
  bool connected = false;
  bool all_even = false;
  std::optional<Permutation> odd_witness;
  int component_count = 0;
};

struct EulerVerdict {
  GroupSpec spec;
  bool predicted_eulerian = false;
  std::optional<EmpiricalEuler> empirical;
  std::optional<uint64_t> edge_count;
  // Closed trail as a vertex sequence (first == last), using every edge
  // exactly once; present only in WithCircuit mode on Eulerian graphs.
  std::optional<std::vector<Permutation>> circuit;
};

// PredicateOnly works for any n. Empirical needs n <= connectivity_cap;
// WithCircuit needs n <= circuit_cap. The circuit is deterministic:
// Hierholzer from the least vertex, always taking the least unused neighbor.
EulerVerdict euler_verdict(const GroupSpec& spec, EulerMode mode, const Caps& caps);

}  // namespace gengraph
