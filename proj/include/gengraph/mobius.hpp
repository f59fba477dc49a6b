#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gengraph/bigint.hpp"
#include "gengraph/config.hpp"
#include "gengraph/group.hpp"

namespace gengraph {

struct LatticeNode {
  std::vector<Permutation> generators;
  uint64_t order = 0;
  // FNV-1a over the sorted element indices; distinguishes equal-order
  // non-identical subgroups (Alt_7 has two order-168 overgroups of a 7-cycle).
  std::string fingerprint;
  std::vector<uint32_t> elements;  // sorted ElementTable indices
  long long mobius = 0;
  bool transitive = false;
  bool primitive = false;
  std::string structure_hint;
};

// All subgroups H with g in H <= G, nodes ascending by (order, fingerprint),
// so nodes.front() is <g> and nodes.back() is G.
struct SubgroupLattice {
  GroupSpec spec;
  Permutation base_generator;
  std::vector<LatticeNode> nodes;
  std::vector<std::pair<int, int>> hasse_edges;  // (subgroup, supergroup)
  bool saturated = false;
  bool mobius_filled = false;
  bool cap_warning = false;  // ran above the soft cap

  bool includes(int sub, int super) const;  // inclusion, not just Hasse
  int top_index() const { return static_cast<int>(nodes.size()) - 1; }

private:
  friend SubgroupLattice overgroup_lattice(const GroupSpec&, const Permutation&,
                                           const Caps&);
  std::vector<std::vector<bool>> leq_;
};

// Saturation from <g>: adjoin one element per unseen right coset, close via
// stabilizer chain, deduplicate by order plus generator membership.
SubgroupLattice overgroup_lattice(const GroupSpec& spec, const Permutation& g,
                                  const Caps& caps);

// Fills mobius top-down from the defining relation; requires saturation.
void mobius_values(SubgroupLattice& lattice);

// Sum of mobius * order over the lattice. When <g> = G (only Alt_3 here)
// the two non-partners 1 and g are subtracted to match the graph degree.
long long degree_via_mobius(const GroupSpec& spec, const Permutation& g,
                            const Caps& caps);

struct HioCheck {
  BigInt normalizer_order;   // |N_G(H)|
  BigInt normalizer_index;   // |N_G(H) : H|
  long long m_value = 0;     // square-free part of |G : G'H|
  long long mobius = 0;
  bool divides = false;
};

// |N_G(H):H| must divide m(H) * mu(H); mu = 0 passes trivially.
HioCheck hio_divisibility(const SubgroupLattice& lattice, int node_index,
                          const Caps& caps);

// The overgroup lattices printed for the large alternating groups, evaluated
// symbolically: orders and mobius values only, no independent enumeration.
struct SymbolicNode {
  std::string name;
  BigInt order;
  long long mobius = 0;
};

struct SymbolicLattice {
  GroupSpec spec;
  long long generator_order = 0;
  std::vector<SymbolicNode> nodes;

  // Parity of sum mobius * |H|: even-order nodes drop out mod 2.
  bool degree_parity_odd() const;
};

// Available for Alt_11, Alt_12, Alt_23, Alt_24.
std::optional<SymbolicLattice> printed_lattice(const GroupSpec& spec);

}  // namespace gengraph
