#include "gengraph/stabilizer_chain.hpp"

#include <cstring>

#include "gengraph/config.hpp"
#include "gengraph/errors.hpp"

namespace gengraph {

namespace {

inline void compose_into(const uint8_t* a, const uint8_t* b, uint8_t* out, int n) {
  for (int i = 0; i < n; ++i) out[i] = b[a[i]];
}

inline void invert_into(const uint8_t* a, uint8_t* out, int n) {
  for (int i = 0; i < n; ++i) out[a[i]] = static_cast<uint8_t>(i);
}

inline bool is_id(const uint8_t* a, int n) {
  for (int i = 0; i < n; ++i)
    if (a[i] != i) return false;
  return true;
}

}  // namespace

void StabilizerChain::reset(int degree) {
  if (degree < 1 || degree > kMaxSupportedDegree)
    throw input_error("stabilizer chain: degree out of range");
  n_ = degree;
  levels_.resize(static_cast<size_t>(n_));
  pool_.clear();
  const size_t un = static_cast<size_t>(n_);
  for (int k = 0; k < n_; ++k) {
    Level& lv = levels_[static_cast<size_t>(k)];
    lv.where.assign(un, -1);
    lv.orbit.clear();
    lv.trans.clear();
    lv.trans_inv.clear();
    lv.gens.clear();
    lv.pending.clear();
    lv.orbit.push_back(static_cast<uint8_t>(k));
    lv.where[static_cast<size_t>(k)] = 0;
    lv.trans.resize(un);
    lv.trans_inv.resize(un);
    for (int i = 0; i < n_; ++i) {
      lv.trans[static_cast<size_t>(i)] = static_cast<uint8_t>(i);
      lv.trans_inv[static_cast<size_t>(i)] = static_cast<uint8_t>(i);
    }
  }
  buf_a_.assign(un, 0);
  buf_b_.assign(un, 0);
}

int StabilizerChain::strip(const uint8_t* img, int from, uint8_t* out) const {
  const size_t un = static_cast<size_t>(n_);
  std::memcpy(out, img, un);
  for (int k = from; k < n_; ++k) {
    const Level& lv = levels_[static_cast<size_t>(k)];
    const uint8_t beta = out[k];
    if (beta == k) continue;
    const int16_t pos = lv.where[beta];
    if (pos < 0) return k;
    // out <- compose(out, trans_inv[pos])
    const uint8_t* tinv = lv.trans_inv.data() + static_cast<size_t>(pos) * un;
    uint8_t tmp[kMaxSupportedDegree];
    compose_into(out, tinv, tmp, n_);
    std::memcpy(out, tmp, un);
  }
  return n_;
}

bool StabilizerChain::add_generator_raw(const uint8_t* img) {
  uint8_t residue[kMaxSupportedDegree];
  const int stall = strip(img, 0, residue);
  if (stall == n_) return false;  // already in the chain group
  const uint16_t pid = static_cast<uint16_t>(pool_.size() / static_cast<size_t>(n_));
  pool_.insert(pool_.end(), residue, residue + n_);
  register_at_levels(pid, stall);
  return true;
}

void StabilizerChain::register_at_levels(uint16_t pid, int deepest) {
  // The generator fixes base points 0..deepest-1, so it belongs to every
  // level up to and including its stall level.
  for (int k = 0; k <= deepest; ++k) {
    Level& lv = levels_[static_cast<size_t>(k)];
    lv.gens.push_back(pid);
    for (size_t pos = 0; pos < lv.orbit.size(); ++pos)
      lv.pending.push_back(static_cast<uint32_t>(pos) << 16 | pid);
    extend_orbit(k, pid);
  }
}

void StabilizerChain::extend_orbit(int level, uint16_t pid) {
  Level& lv = levels_[static_cast<size_t>(level)];
  const size_t un = static_cast<size_t>(n_);
  // Apply the new generator to the existing orbit, then close over all
  // generators from any point discovered.
  size_t scan_from = lv.orbit.size();
  {
    const uint8_t* s = pool_.data() + static_cast<size_t>(pid) * un;
    const size_t existing = lv.orbit.size();
    for (size_t j = 0; j < existing; ++j) {
      const uint8_t gamma = s[lv.orbit[j]];
      if (lv.where[gamma] >= 0) continue;
      lv.where[gamma] = static_cast<int16_t>(lv.orbit.size());
      lv.orbit.push_back(gamma);
      lv.trans.resize(lv.trans.size() + un);
      lv.trans_inv.resize(lv.trans_inv.size() + un);
      uint8_t* t = lv.trans.data() + lv.trans.size() - un;
      compose_into(lv.trans.data() + j * un, s, t, n_);
      invert_into(t, lv.trans_inv.data() + lv.trans_inv.size() - un, n_);
      for (uint16_t g : lv.gens)
        lv.pending.push_back(static_cast<uint32_t>(lv.orbit.size() - 1) << 16 | g);
    }
  }
  while (scan_from < lv.orbit.size()) {
    const uint8_t beta = lv.orbit[scan_from];
    for (uint16_t g : lv.gens) {
      const uint8_t* s = pool_.data() + static_cast<size_t>(g) * un;
      const uint8_t gamma = s[beta];
      if (lv.where[gamma] >= 0) continue;
      lv.where[gamma] = static_cast<int16_t>(lv.orbit.size());
      lv.orbit.push_back(gamma);
      lv.trans.resize(lv.trans.size() + un);
      lv.trans_inv.resize(lv.trans_inv.size() + un);
      uint8_t* t = lv.trans.data() + lv.trans.size() - un;
      compose_into(lv.trans.data() + scan_from * un, s, t, n_);
      invert_into(t, lv.trans_inv.data() + lv.trans_inv.size() - un, n_);
      for (uint16_t g2 : lv.gens)
        lv.pending.push_back(static_cast<uint32_t>(lv.orbit.size() - 1) << 16 | g2);
    }
    ++scan_from;
  }
}

uint64_t StabilizerChain::transversal_product() const {
  uint64_t prod = 1;
  for (const Level& lv : levels_) prod *= lv.orbit.size();
  return prod;
}

bool StabilizerChain::run(uint64_t target_order) {
  const size_t un = static_cast<size_t>(n_);
  if (target_order > 0 && transversal_product() == target_order) return true;
  while (true) {
    int k = -1;
    for (int j = n_ - 1; j >= 0; --j) {
      if (!levels_[static_cast<size_t>(j)].pending.empty()) {
        k = j;
        break;
      }
    }
    if (k < 0) break;
    Level& lv = levels_[static_cast<size_t>(k)];
    const uint32_t item = lv.pending.back();
    lv.pending.pop_back();
    const size_t pos = item >> 16;
    const uint16_t pid = static_cast<uint16_t>(item & 0xffff);
    const uint8_t* s = pool_.data() + static_cast<size_t>(pid) * un;
    const uint8_t beta = lv.orbit[pos];
    const uint8_t gamma = s[beta];
    const int16_t gpos = lv.where[gamma];
    // Schreier generator t_beta * s * t_gamma^-1, fixes base points 0..k.
    uint8_t* sg = buf_a_.data();
    uint8_t* tmp = buf_b_.data();
    compose_into(lv.trans.data() + pos * un, s, tmp, n_);
    compose_into(tmp, lv.trans_inv.data() + static_cast<size_t>(gpos) * un, sg, n_);
    if (is_id(sg, n_)) continue;
    uint8_t residue[kMaxSupportedDegree];
    const int stall = strip(sg, k + 1, residue);
    if (stall == n_) continue;
    const uint16_t npid = static_cast<uint16_t>(pool_.size() / un);
    pool_.insert(pool_.end(), residue, residue + n_);
    register_at_levels(npid, stall);
    if (target_order > 0 && transversal_product() == target_order) return true;
  }
  return target_order > 0 && transversal_product() == target_order;
}

void StabilizerChain::build(int degree, std::span<const Permutation> generators) {
  reset(degree);
  for (const Permutation& g : generators) {
    if (g.degree() != degree)
      throw input_error("stabilizer chain: generator degree mismatch");
    if (g.is_identity()) continue;
    add_generator_raw(g.data());
  }
  run(0);
}

bool StabilizerChain::build_pair_with_target(int degree, const uint8_t* a,
                                             const uint8_t* b,
                                             uint64_t target_order) {
  if (degree > 20)
    throw resource_error("pair order test: degree > 20 overflows the counter");
  reset(degree);
  if (!is_id(a, degree)) add_generator_raw(a);
  if (target_order > 0 && transversal_product() == target_order) return true;
  if (!is_id(b, degree)) add_generator_raw(b);
  return run(target_order);
}

uint64_t StabilizerChain::order_u64() const {
  if (!built()) throw std::logic_error("stabilizer chain not built");
  if (n_ > 20) throw resource_error("order_u64: degree > 20");
  return transversal_product();
}

BigInt StabilizerChain::order() const {
  if (!built()) throw std::logic_error("stabilizer chain not built");
  BigInt prod = 1;
  for (const Level& lv : levels_) prod *= static_cast<uint64_t>(lv.orbit.size());
  return prod;
}

bool StabilizerChain::contains_raw(const uint8_t* img) const {
  uint8_t residue[kMaxSupportedDegree];
  return strip(img, 0, residue) == n_;
}

bool StabilizerChain::contains(const Permutation& p) const {
  if (p.degree() != n_) return false;
  return contains_raw(p.data());
}

void StabilizerChain::for_each_element(
    const std::function<void(const uint8_t*)>& fn) const {
  // element = compose(t_{n-1}, t_{n-2}, ..., t_0) over all transversal picks;
  // row d of `partial` holds the product of the picks at levels n-1 .. d.
  const size_t un = static_cast<size_t>(n_);
  std::vector<uint8_t> partial(un * (static_cast<size_t>(n_) + 1));
  uint8_t* top = partial.data() + un * static_cast<size_t>(n_);
  for (int i = 0; i < n_; ++i) top[i] = static_cast<uint8_t>(i);
  std::vector<size_t> choice(static_cast<size_t>(n_), 0);

  auto refill = [&](int from) {
    for (int e = from; e >= 0; --e) {
      const Level& lv = levels_[static_cast<size_t>(e)];
      compose_into(partial.data() + un * (static_cast<size_t>(e) + 1),
                   lv.trans.data() + choice[static_cast<size_t>(e)] * un,
                   partial.data() + un * static_cast<size_t>(e), n_);
    }
  };
  refill(n_ - 1);
  while (true) {
    fn(partial.data());
    int d = 0;
    while (d < n_ && choice[static_cast<size_t>(d)] + 1 >=
                         levels_[static_cast<size_t>(d)].orbit.size()) {
      choice[static_cast<size_t>(d)] = 0;
      ++d;
    }
    if (d == n_) return;
    ++choice[static_cast<size_t>(d)];
    refill(d);
  }
}

std::vector<Permutation> StabilizerChain::elements() const {
  std::vector<Permutation> out;
  for_each_element([&](const uint8_t* img) {
    out.push_back(Permutation::from_images(
        std::vector<uint8_t>(img, img + n_)));
  });
  return out;
}

const std::vector<uint8_t>& StabilizerChain::top_orbit() const {
  return levels_.front().orbit;
}

BigInt subgroup_order(std::span<const Permutation> generators) {
  if (generators.empty()) return 1;
  StabilizerChain chain;
  chain.build(generators.front().degree(), generators);
  return chain.order();
}

}  // namespace gengraph
