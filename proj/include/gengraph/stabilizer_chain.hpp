#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "gengraph/bigint.hpp"
#include "gengraph/perm.hpp"

namespace gengraph {

// Base/strong-generating-set chain with the fixed base 1, 2, ..., n.
// Gives order, membership and element enumeration for a subgroup of Sym_n
// from its generators. Deterministic: the same generator list always
// produces the same chain. Reusable: build() resets in place so hot loops
// can keep one instance per thread.
class StabilizerChain {
public:
  StabilizerChain() = default;

  void build(int degree, std::span<const Permutation> generators);

  // Fast path for two-generator subgroups working on raw image arrays.
  // When target_order > 0, construction stops early as soon as the
  // transversal product reaches it (the product never overshoots the
  // subgroup order); returns true iff the target was reached.
  bool build_pair_with_target(int degree, const uint8_t* a, const uint8_t* b,
                              uint64_t target_order);

  int degree() const { return n_; }
  bool built() const { return n_ > 0; }

  uint64_t order_u64() const;  // degree <= 20
  BigInt order() const;

  bool contains(const Permutation& p) const;
  bool contains_raw(const uint8_t* img) const;

  // Visits every element exactly once (deterministic order).
  void for_each_element(const std::function<void(const uint8_t*)>& fn) const;
  std::vector<Permutation> elements() const;

  // Orbit of the first base point (the orbit of point 1 under the group).
  const std::vector<uint8_t>& top_orbit() const;

private:
  struct Level {
    std::vector<int16_t> where;     // point -> orbit position, -1 if absent
    std::vector<uint8_t> orbit;     // points in discovery order; orbit[0] = base
    std::vector<uint8_t> trans;     // stride n; trans[j] maps base -> orbit[j]
    std::vector<uint8_t> trans_inv; // stride n
    std::vector<uint16_t> gens;     // indices into pool_
    std::vector<uint32_t> pending;  // (orbit position << 16) | pool index
  };

  void reset(int degree);
  bool add_generator_raw(const uint8_t* img);  // false if identity/known
  void register_at_levels(uint16_t pid, int deepest);
  void extend_orbit(int level, uint16_t pid);
  // Runs the verification worklist; returns early when target reached.
  bool run(uint64_t target_order);
  uint64_t transversal_product() const;
  // Strips img through levels [from, n); returns stall level or n if identity.
  int strip(const uint8_t* img, int from, uint8_t* out) const;

  int n_ = 0;
  std::vector<Level> levels_;
  std::vector<uint8_t> pool_;  // stride n
  std::vector<uint8_t> buf_a_, buf_b_;
};

// |<generators>| via a stabilizer chain; empty list gives 1.
BigInt subgroup_order(std::span<const Permutation> generators);

}  // namespace gengraph
