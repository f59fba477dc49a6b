#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "gengraph/bigint.hpp"
#include "gengraph/config.hpp"
#include "gengraph/groupspec.hpp"
#include "gengraph/perm.hpp"
#include "gengraph/stabilizer_chain.hpp"

namespace gengraph {

// All elements of Alt_n or Sym_n in lexicographic image order, packed in a
// flat buffer. Built once per spec and cached; immutable afterwards.
class ElementTable {
public:
  static const ElementTable& get(const GroupSpec& spec, const Caps& caps);

  const GroupSpec& spec() const { return spec_; }
  int degree() const { return spec_.n; }
  size_t size() const { return count_; }
  const uint8_t* at(size_t i) const {
    return flat_.data() + i * static_cast<size_t>(spec_.n);
  }
  Permutation perm_at(size_t i) const;
  // Index of p in this table (p must belong to the group).
  size_t index_of(const uint8_t* img) const;
  size_t index_of(const Permutation& p) const;

private:
  explicit ElementTable(const GroupSpec& spec);
  GroupSpec spec_;
  size_t count_ = 0;
  std::vector<uint8_t> flat_;
};

std::vector<Permutation> enumerate_elements(const GroupSpec& spec, const Caps& caps);
void for_each_element(const GroupSpec& spec, const Caps& caps,
                      const std::function<void(const Permutation&)>& fn);

// True iff g and x are distinct members of spec generating the whole group.
// Order test via stabilizer chain; throws input_error on non-members.
bool generates(const GroupSpec& spec, const Permutation& g, const Permutation& x);

// Edge test on packed image arrays; callers must have checked membership.
bool generates_raw(const GroupSpec& spec, const uint8_t* g, const uint8_t* x);

struct ConjugacyClass {
  Permutation representative;
  CycleShape shape;
  uint64_t size = 0;
  bool split_half = false;  // one of two Alt classes sharing a Sym shape
};

// Classes in deterministic order (shapes ascending; split Alt classes
// adjacent). Sizes come from the centralizer formula; Alt splitting happens
// exactly for shapes with pairwise distinct odd parts.
std::vector<ConjugacyClass> conjugacy_classes(const GroupSpec& spec, const Caps& caps);

// N_G(<g>) data. power_images are the residues i mod |g| realized by
// conjugation within G; they form a subgroup of (Z/mZ)^*. ratio_ell is
// |N_S:C_S| / |N_A:C_A| for Alt (1 or 2), always 1 for Sym.
struct NormalizerReport {
  Permutation generator;
  long long m = 0;
  BigInt centralizer_order;
  BigInt normalizer_order;
  std::vector<int> power_images;
  int ratio_ell = 1;
  std::string method;  // "scan" or "constructive"
};

// Scan route for n <= caps.scan_cap, constructive route beyond; the two are
// cross-validated on the overlap by the test suites.
NormalizerReport normalizer_of_cyclic(const GroupSpec& spec, const Permutation& g,
                                      const Caps& caps);
NormalizerReport normalizer_of_cyclic_scan(const GroupSpec& spec,
                                           const Permutation& g, const Caps& caps);
NormalizerReport normalizer_of_cyclic_constructive(const GroupSpec& spec,
                                                   const Permutation& g);

enum class Transitivity { Intransitive, Imprimitive, Primitive };

struct BlockSystem {
  Transitivity kind = Transitivity::Primitive;
  // For Imprimitive: a minimal nontrivial block system, blocks sorted.
  std::vector<std::vector<int>> blocks;
};

BlockSystem block_system(std::span<const Permutation> generators, int n);

// Generators of the derived subgroup G' (known for these families).
std::vector<Permutation> derived_subgroup_generators(const GroupSpec& spec);

}  // namespace gengraph
