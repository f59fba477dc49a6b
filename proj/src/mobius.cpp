#include "gengraph/mobius.hpp"

#include <algorithm>
#include <cstring>
#include <numeric>

#include "gengraph/errors.hpp"
#include "gengraph/numtheory.hpp"

namespace gengraph {

namespace {

std::string fnv_hex(const std::vector<uint32_t>& values) {
  uint64_t h = 1469598103934665603ull;
  for (uint32_t v : values)
    for (int b = 0; b < 4; ++b) {
      h ^= (v >> (8 * b)) & 0xff;
      h *= 1099511628211ull;
    }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::vector<uint32_t> chain_elements(const StabilizerChain& chain,
                                     const ElementTable& table) {
  std::vector<uint32_t> out;
  chain.for_each_element([&](const uint8_t* img) {
    out.push_back(static_cast<uint32_t>(table.index_of(img)));
  });
  std::sort(out.begin(), out.end());
  return out;
}

bool is_cyclic(const LatticeNode& node, const ElementTable& table) {
  for (uint32_t idx : node.elements)
    if (static_cast<uint64_t>(element_order(table.perm_at(idx))) == node.order)
      return true;
  return false;
}

std::string structure_hint(const LatticeNode& node, const GroupSpec& spec,
                           const ElementTable& table) {
  if (node.order == spec.order_u64()) return spec.name();
  if (spec.family == Family::Sym && node.order == spec.order_u64() / 2) {
    bool all_even = true;
    for (const auto& gen : node.generators)
      if (!gen.is_even()) {
        all_even = false;
        break;
      }
    if (all_even) return "Alt_" + std::to_string(spec.n);
  }
  if (is_cyclic(node, table)) return "C" + std::to_string(node.order);
  const long long n = spec.n;
  if (node.transitive && is_prime(n) && node.order % n == 0) {
    const uint64_t quotient = node.order / static_cast<uint64_t>(n);
    if (quotient >= 2 && (n - 1) % static_cast<long long>(quotient) == 0)
      return std::to_string(n) + ":" + std::to_string(quotient);
  }
  if (node.primitive) {
    // |PSL_2(q)| for small q; a label, not an isomorphism claim
    static const std::pair<uint64_t, int> psl_orders[] = {
        {60, 5}, {168, 7}, {360, 9}, {504, 8}, {660, 11}, {1092, 13}};
    for (const auto& [ord, q] : psl_orders)
      if (node.order == ord) return "PSL(2," + std::to_string(q) + ")-like";
    return "primitive";
  }
  if (node.transitive) return "imprimitive";
  return "intransitive";
}

}  // namespace

bool SubgroupLattice::includes(int sub, int super) const {
  return leq_[static_cast<size_t>(sub)][static_cast<size_t>(super)];
}

SubgroupLattice overgroup_lattice(const GroupSpec& spec, const Permutation& g,
                                  const Caps& caps) {
  if (!spec.contains(g))
    throw membership_error("overgroup_lattice: " + format_cycles(g) + " is not in " +
                      spec.name());
  if (g.is_identity())
    throw input_error("overgroup_lattice: the base generator must be nontrivial");
  const BigInt group_order = spec.order();
  if (group_order > caps.lattice_hard_cap)
    throw resource_error("lattice for " + spec.name() + " (order " +
                         group_order.str() + ") exceeds lattice_hard_cap = " +
                         std::to_string(caps.lattice_hard_cap));
  SubgroupLattice lattice{spec, g, {}, {}, false, false, false};
  if (group_order > caps.lattice_cap) lattice.cap_warning = true;

  const ElementTable& table = ElementTable::get(spec, caps);
  const int n = spec.n;
  const size_t gsize = table.size();

  struct Work {
    std::vector<Permutation> gens;
    StabilizerChain chain;
    uint64_t order;
    std::vector<uint32_t> elements;
  };
  std::vector<Work> found;
  {
    Work base;
    base.gens = {g};
    base.chain.build(n, std::span<const Permutation>(base.gens));
    base.order = base.chain.order_u64();
    base.elements = chain_elements(base.chain, table);
    found.push_back(std::move(base));
  }

  std::vector<uint8_t> visited(gsize);
  std::vector<uint8_t> product(static_cast<size_t>(n));
  for (size_t wi = 0; wi < found.size(); ++wi) {
    // found[] grows; take copies of what the loop needs
    const std::vector<uint32_t> helems = found[wi].elements;
    const std::vector<Permutation> hgens = found[wi].gens;
    const uint64_t horder = found[wi].order;
    if (horder == spec.order_u64()) continue;  // nothing above the top
    std::fill(visited.begin(), visited.end(), 0);
    for (uint32_t e : helems) visited[e] = 1;
    for (size_t idx = 0; idx < gsize; ++idx) {
      if (visited[idx]) continue;
      std::vector<Permutation> kgens = hgens;
      kgens.push_back(table.perm_at(idx));
      Work cand;
      cand.gens = std::move(kgens);
      cand.chain.build(n, std::span<const Permutation>(cand.gens));
      cand.order = cand.chain.order_u64();
      bool fresh = true;
      for (const Work& existing : found) {
        if (existing.order != cand.order) continue;
        bool contained = true;
        for (const auto& gen : existing.gens)
          if (!cand.chain.contains(gen)) {
            contained = false;
            break;
          }
        if (contained) {  // equal orders and one set of generators inside
          fresh = false;
          break;
        }
      }
      if (fresh) {
        cand.elements = chain_elements(cand.chain, table);
        found.push_back(std::move(cand));
      }
      // mark the whole right coset H * x: adjoining any member yields <H, x>
      const uint8_t* ximg = table.at(idx);
      for (uint32_t e : helems) {
        const uint8_t* himg = table.at(e);
        for (int i = 0; i < n; ++i) product[static_cast<size_t>(i)] = ximg[himg[i]];
        visited[table.index_of(product.data())] = 1;
      }
    }
  }

  // deterministic node order: ascending (order, fingerprint)
  std::vector<size_t> perm(found.size());
  std::iota(perm.begin(), perm.end(), size_t{0});
  std::vector<std::string> fps(found.size());
  for (size_t i = 0; i < found.size(); ++i) fps[i] = fnv_hex(found[i].elements);
  std::sort(perm.begin(), perm.end(), [&](size_t a, size_t b) {
    if (found[a].order != found[b].order) return found[a].order < found[b].order;
    return fps[a] < fps[b];
  });

  for (size_t pi = 0; pi < perm.size(); ++pi) {
    Work& w = found[perm[pi]];
    LatticeNode node;
    node.generators = std::move(w.gens);
    node.order = w.order;
    node.fingerprint = fps[perm[pi]];
    node.elements = std::move(w.elements);
    const BlockSystem bs = block_system(node.generators, n);
    node.transitive = bs.kind != Transitivity::Intransitive;
    node.primitive = bs.kind == Transitivity::Primitive;
    node.structure_hint = structure_hint(node, spec, table);
    lattice.nodes.push_back(std::move(node));
  }

  const size_t count = lattice.nodes.size();
  lattice.leq_.assign(count, std::vector<bool>(count, false));
  for (size_t i = 0; i < count; ++i) {
    for (size_t j = 0; j < count; ++j) {
      if (i == j) {
        lattice.leq_[i][j] = true;
        continue;
      }
      const LatticeNode& a = lattice.nodes[i];
      const LatticeNode& b = lattice.nodes[j];
      if (a.order >= b.order || b.order % a.order != 0) continue;
      bool inside = true;
      for (const auto& gen : a.generators) {
        const uint32_t gi = static_cast<uint32_t>(table.index_of(gen));
        if (!std::binary_search(b.elements.begin(), b.elements.end(), gi)) {
          inside = false;
          break;
        }
      }
      lattice.leq_[i][j] = inside;
    }
  }
  for (size_t i = 0; i < count; ++i)
    for (size_t j = 0; j < count; ++j) {
      if (i == j || !lattice.leq_[i][j]) continue;
      bool direct = true;
      for (size_t k = 0; k < count && direct; ++k)
        if (k != i && k != j && lattice.leq_[i][k] && lattice.leq_[k][j])
          direct = false;
      if (direct)
        lattice.hasse_edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }

  if (lattice.nodes.back().order != spec.order_u64())
    throw std::logic_error("lattice saturation did not reach the full group");
  lattice.saturated = true;
  return lattice;
}

void mobius_values(SubgroupLattice& lattice) {
  if (!lattice.saturated)
    throw input_error("mobius_values: lattice is not saturated");
  const int count = static_cast<int>(lattice.nodes.size());
  const int top = lattice.top_index();
  lattice.nodes[static_cast<size_t>(top)].mobius = 1;
  for (int i = count - 2; i >= 0; --i) {
    long long sum = 0;
    for (int j = i + 1; j < count; ++j)
      if (lattice.includes(i, j)) sum += lattice.nodes[static_cast<size_t>(j)].mobius;
    lattice.nodes[static_cast<size_t>(i)].mobius = -sum;
  }
  lattice.mobius_filled = true;
}

long long degree_via_mobius(const GroupSpec& spec, const Permutation& g,
                            const Caps& caps) {
  SubgroupLattice lattice = overgroup_lattice(spec, g, caps);
  mobius_values(lattice);
  long long sum = 0;
  for (const auto& node : lattice.nodes)
    sum += node.mobius * static_cast<long long>(node.order);
  // The sum counts all x with <g, x> = G. When <g> is the whole group
  // (Alt_3), x = 1 and x = g also qualify but are not graph partners.
  if (lattice.nodes.front().order == spec.order_u64()) sum -= 2;
  return sum;
}

HioCheck hio_divisibility(const SubgroupLattice& lattice, int node_index,
                          const Caps& caps) {
  if (!lattice.mobius_filled)
    throw input_error("hio_divisibility: mobius values not filled");
  const LatticeNode& node = lattice.nodes[static_cast<size_t>(node_index)];
  const GroupSpec& spec = lattice.spec;
  const ElementTable& table = ElementTable::get(spec, caps);
  const int n = spec.n;

  // |N_G(H)| by scan: s normalizes H iff every generator conjugates into H.
  uint64_t normalizer = 0;
  std::vector<uint8_t> conj(static_cast<size_t>(n));
  for (size_t idx = 0; idx < table.size(); ++idx) {
    const uint8_t* s = table.at(idx);
    bool ok = true;
    for (const auto& gen : node.generators) {
      const uint8_t* h = gen.data();
      for (int i = 0; i < n; ++i) conj[s[i]] = s[h[i]];
      const uint32_t ci = static_cast<uint32_t>(table.index_of(conj.data()));
      if (!std::binary_search(node.elements.begin(), node.elements.end(), ci)) {
        ok = false;
        break;
      }
    }
    if (ok) ++normalizer;
  }

  // m(H): square-free part of |G : G'H|
  std::vector<Permutation> dgens = derived_subgroup_generators(spec);
  for (const auto& gen : node.generators) dgens.push_back(gen);
  const BigInt dh_order = subgroup_order(dgens);
  const BigInt index = spec.order() / dh_order;
  const long long m = radical(index.convert_to<long long>());

  HioCheck check;
  check.normalizer_order = normalizer;
  check.normalizer_index = BigInt(normalizer) / node.order;
  check.m_value = m;
  check.mobius = node.mobius;
  const BigInt dividend = BigInt(m) * (node.mobius < 0 ? -node.mobius : node.mobius);
  check.divides = node.mobius == 0 || dividend % check.normalizer_index == 0;
  return check;
}

bool SymbolicLattice::degree_parity_odd() const {
  long long parity = 0;
  for (const auto& node : nodes)
    if (node.order % 2 == 1) parity += node.mobius;
  return (parity % 2 + 2) % 2 == 1;
}

std::optional<SymbolicLattice> printed_lattice(const GroupSpec& spec) {
  if (spec.family != Family::Alt) return std::nullopt;
  const BigInt half = factorial_big(spec.n) / 2;
  SymbolicLattice lat{spec, 0, {}};
  switch (spec.n) {
    case 11:
      lat.generator_order = 11;
      lat.nodes = {{"C11", 11, 0},
                   {"11:5", 55, 1},
                   {"M11_a", 7920, -1},
                   {"M11_b", 7920, -1},
                   {"Alt_11", half, 1}};
      return lat;
    case 12:
      lat.generator_order = 11;
      lat.nodes = {{"C11", 11, 0},
                   {"11:5", 55, 1},
                   {"PSL(2,11)", 660, 1},
                   {"M12_a", 95040, -1},
                   {"M12_b", 95040, -1},
                   {"Alt_11", factorial_big(11) / 2, -1},
                   {"Alt_12", half, 1}};
      return lat;
    case 23:
      lat.generator_order = 23;
      lat.nodes = {{"C23", 23, 0},
                   {"23:11", 253, 1},
                   {"M23_a", 10200960, -1},
                   {"M23_b", 10200960, -1},
                   {"Alt_23", half, 1}};
      return lat;
    case 24:
      lat.generator_order = 23;
      lat.nodes = {{"C23", 23, 0},
                   {"23:11", 253, 1},
                   {"PSL(2,23)", 6072, 1},
                   {"M24_a", 244823040, -1},
                   {"M24_b", 244823040, -1},
                   {"Alt_23", factorial_big(23) / 2, -1},
                   {"Alt_24", half, 1}};
      return lat;
    default:
      return std::nullopt;
  }
}

}  // namespace gengraph
