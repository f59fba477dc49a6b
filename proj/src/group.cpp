#include "gengraph/group.hpp"

#include <algorithm>
#include <cstring>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>

#include "gengraph/errors.hpp"
#include "gengraph/numtheory.hpp"

namespace gengraph {

namespace {

int raw_parity(const uint8_t* img, int n) {
  bool seen[kMaxSupportedDegree] = {};
  int cycles = 0;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    ++cycles;
    int j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = img[j];
    }
  }
  return (n - cycles) & 1;
}

bool raw_is_id(const uint8_t* img, int n) {
  for (int i = 0; i < n; ++i)
    if (img[i] != i) return false;
  return true;
}

// s^-1 g s on raw images
void raw_conjugate(const uint8_t* g, const uint8_t* s, uint8_t* out, int n) {
  for (int i = 0; i < n; ++i) out[s[i]] = s[g[i]];
}

struct TableKey {
  int family;
  int n;
  auto operator<=>(const TableKey&) const = default;
};

std::map<TableKey, std::unique_ptr<ElementTable>>& table_registry() {
  static std::map<TableKey, std::unique_ptr<ElementTable>> reg;
  return reg;
}
std::mutex table_mutex;

const ElementTable& table_unchecked(const GroupSpec& spec) {
  std::lock_guard<std::mutex> lock(table_mutex);
  const TableKey key{static_cast<int>(spec.family), spec.n};
  auto& reg = table_registry();
  auto it = reg.find(key);
  if (it == reg.end())
    it = reg.emplace(key, std::unique_ptr<ElementTable>(new ElementTable(spec)))
             .first;
  return *it->second;
}

}  // namespace

ElementTable::ElementTable(const GroupSpec& spec) : spec_(spec) {
  const int n = spec.n;
  std::vector<uint8_t> cur(static_cast<size_t>(n));
  std::iota(cur.begin(), cur.end(), uint8_t{0});
  do {
    if (spec.family == Family::Sym || raw_parity(cur.data(), n) == 0) {
      flat_.insert(flat_.end(), cur.begin(), cur.end());
      ++count_;
    }
  } while (std::next_permutation(cur.begin(), cur.end()));
}

const ElementTable& ElementTable::get(const GroupSpec& spec, const Caps& caps) {
  if (spec.n > caps.enumeration_cap)
    throw resource_error("enumeration of " + spec.name() +
                         " exceeds enumeration_cap = " +
                         std::to_string(caps.enumeration_cap));
  return table_unchecked(spec);
}

Permutation ElementTable::perm_at(size_t i) const {
  const uint8_t* img = at(i);
  return Permutation::from_images(
      std::vector<uint8_t>(img, img + spec_.n));
}

size_t ElementTable::index_of(const uint8_t* img) const {
  Permutation p = Permutation::from_images(
      std::vector<uint8_t>(img, img + spec_.n));
  return index_of(p);
}

size_t ElementTable::index_of(const Permutation& p) const {
  if (p.degree() != spec_.n)
    throw input_error("index_of: degree mismatch");
  const uint64_t rank = lehmer_rank(p);
  if (spec_.family == Family::Sym) return rank;
  if (!p.is_even())
    throw input_error("index_of: odd permutation is not in " + spec_.name());
  // consecutive lexicographic ranks 2k, 2k+1 differ by a swap of the last
  // two images, so each pair holds exactly one even permutation
  return rank / 2;
}

std::vector<Permutation> enumerate_elements(const GroupSpec& spec, const Caps& caps) {
  const ElementTable& table = ElementTable::get(spec, caps);
  std::vector<Permutation> out;
  out.reserve(table.size());
  for (size_t i = 0; i < table.size(); ++i) out.push_back(table.perm_at(i));
  return out;
}

void for_each_element(const GroupSpec& spec, const Caps& caps,
                      const std::function<void(const Permutation&)>& fn) {
  const ElementTable& table = ElementTable::get(spec, caps);
  for (size_t i = 0; i < table.size(); ++i) fn(table.perm_at(i));
}

bool generates_raw(const GroupSpec& spec, const uint8_t* g, const uint8_t* x) {
  const int n = spec.n;
  if (std::memcmp(g, x, static_cast<size_t>(n)) == 0) return false;
  if (raw_is_id(g, n) || raw_is_id(x, n)) return false;
  if (spec.family == Family::Sym && raw_parity(g, n) == 0 &&
      raw_parity(x, n) == 0)
    return false;  // both even: subgroup sits inside Alt_n
  // transitivity prefilter
  {
    int parent[kMaxSupportedDegree];
    std::iota(parent, parent + n, 0);
    auto find = [&](int a) {
      while (parent[a] != a) a = parent[a] = parent[parent[a]];
      return a;
    };
    for (int i = 0; i < n; ++i) {
      const int r = find(i);
      const int rg = find(g[i]);
      const int rx = find(x[i]);
      if (rg != r) parent[rg] = r;
      if (rx != find(r)) parent[rx] = find(r);
    }
    int roots = 0;
    for (int i = 0; i < n; ++i)
      if (find(i) == i) ++roots;
    if (roots > 1) return false;
  }
  thread_local StabilizerChain chain;
  return chain.build_pair_with_target(n, g, x, spec.order_u64());
}

bool generates(const GroupSpec& spec, const Permutation& g, const Permutation& x) {
  if (!spec.contains(g))
    throw membership_error("generates: " + format_cycles(g) + " is not in " + spec.name());
  if (!spec.contains(x))
    throw membership_error("generates: " + format_cycles(x) + " is not in " + spec.name());
  return generates_raw(spec, g.data(), x.data());
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur,
                    std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions_rec(remaining - part, part, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> partitions_of(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  partitions_rec(n, n, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

Permutation shape_representative(const std::vector<int>& parts_desc, int n) {
  std::vector<uint8_t> img(static_cast<size_t>(n));
  std::iota(img.begin(), img.end(), uint8_t{0});
  int start = 0;
  for (int part : parts_desc) {
    for (int j = 0; j < part; ++j)
      img[static_cast<size_t>(start + j)] =
          static_cast<uint8_t>(start + (j + 1) % part);
    start += part;
  }
  return Permutation::from_images(std::move(img));
}

}  // namespace

std::vector<ConjugacyClass> conjugacy_classes(const GroupSpec& spec, const Caps& caps) {
  if (spec.n > caps.enumeration_cap)
    throw resource_error("conjugacy classes of " + spec.name() +
                         " exceed enumeration_cap = " +
                         std::to_string(caps.enumeration_cap));
  const uint64_t group_order = spec.order_u64();
  std::vector<ConjugacyClass> out;
  for (const auto& parts : partitions_of(spec.n)) {
    std::vector<int> desc(parts);
    std::sort(desc.rbegin(), desc.rend());
    CycleShape shape{desc};
    if (spec.family == Family::Alt && shape.parity() != 0) continue;
    const uint64_t sym_class_size =
        (factorial_big(spec.n) / sym_centralizer_order(shape))
            .convert_to<uint64_t>();
    Permutation rep = shape_representative(desc, spec.n);
    if (spec.family == Family::Sym) {
      out.push_back({rep, shape, sym_class_size, false});
    } else if (shape.parts_odd_and_distinct()) {
      // centralizer lies in Alt, so the Sym class splits into two
      std::vector<uint8_t> t(static_cast<size_t>(spec.n));
      std::iota(t.begin(), t.end(), uint8_t{0});
      std::swap(t[0], t[1]);
      Permutation twin =
          conjugate(rep, Permutation::from_images(std::move(t)));
      out.push_back({rep, shape, sym_class_size / 2, true});
      out.push_back({twin, shape, sym_class_size / 2, true});
    } else {
      out.push_back({rep, shape, sym_class_size, false});
    }
  }
  // sanity: class sizes partition the group
  uint64_t total = 0;
  for (const auto& c : out) total += c.size;
  if (total != group_order)
    throw std::logic_error("conjugacy class sizes do not sum to the group order");
  return out;
}

namespace {

Permutation residue_conjugator(const Permutation& g, int residue) {
  const int n = g.degree();
  std::vector<uint8_t> img(static_cast<size_t>(n));
  for (const auto& cyc : cycles_of(g, true)) {
    const int len = static_cast<int>(cyc.size());
    for (int j = 0; j < len; ++j) {
      const int target = static_cast<int>(
          (static_cast<long long>(j) * residue) % len);
      img[static_cast<size_t>(cyc[static_cast<size_t>(j)])] =
          static_cast<uint8_t>(cyc[static_cast<size_t>(target)]);
    }
  }
  return Permutation::from_images(std::move(img));
}

void check_normalizer_preconditions(const GroupSpec& spec, const Permutation& g) {
  if (!spec.contains(g))
    throw membership_error("normalizer: " + format_cycles(g) + " is not in " +
                      spec.name());
  if (g.is_identity())
    throw input_error("normalizer: the identity has no cyclic subgroup of interest");
}

}  // namespace

NormalizerReport normalizer_of_cyclic_scan(const GroupSpec& spec,
                                           const Permutation& g, const Caps& caps) {
  check_normalizer_preconditions(spec, g);
  if (spec.n > caps.scan_cap)
    throw resource_error("normalizer scan of " + spec.name() +
                         " exceeds scan_cap = " + std::to_string(caps.scan_cap));
  const long long m = element_order(g);
  std::vector<Permutation> powers;
  powers.reserve(static_cast<size_t>(m));
  Permutation acc = Permutation::identity(spec.n);
  for (long long i = 0; i < m; ++i) {
    powers.push_back(acc);
    acc = compose(acc, g);
  }
  const ElementTable& table = table_unchecked(spec);
  const int n = spec.n;
  uint64_t cent = 0, norm = 0;
  std::set<int> images;
  std::vector<uint8_t> conj(static_cast<size_t>(n));
  for (size_t idx = 0; idx < table.size(); ++idx) {
    const uint8_t* s = table.at(idx);
    raw_conjugate(g.data(), s, conj.data(), n);
    for (long long i = 1; i < m; ++i) {
      if (std::memcmp(conj.data(), powers[static_cast<size_t>(i)].data(),
                      static_cast<size_t>(n)) == 0) {
        ++norm;
        images.insert(static_cast<int>(i));
        if (i == 1) ++cent;
        break;
      }
    }
  }
  NormalizerReport rep;
  rep.generator = g;
  rep.m = m;
  rep.centralizer_order = cent;
  rep.normalizer_order = norm;
  rep.power_images.assign(images.begin(), images.end());
  const long long phi = euler_phi(m);
  rep.ratio_ell = static_cast<int>(phi / static_cast<long long>(images.size()));
  rep.method = "scan";
  return rep;
}

NormalizerReport normalizer_of_cyclic_constructive(const GroupSpec& spec,
                                                   const Permutation& g) {
  check_normalizer_preconditions(spec, g);
  const long long m = element_order(g);
  const CycleShape shape = cycle_shape(g);
  const BigInt c_sym = sym_centralizer_order(shape);
  const std::vector<int> units = unit_residues(m);
  const long long phi = euler_phi(m);

  NormalizerReport rep;
  rep.generator = g;
  rep.m = m;
  rep.method = "constructive";

  if (spec.family == Family::Sym) {
    rep.centralizer_order = c_sym;
    rep.normalizer_order = c_sym * phi;
    rep.power_images = units;
    rep.ratio_ell = 1;
    return rep;
  }

  // Alt: split on whether C_Sym(g) lies inside Alt.
  if (!shape.parts_odd_and_distinct()) {
    // An odd element centralizes g, so every residue is realized by an even
    // conjugator and the centralizer halves.
    rep.centralizer_order = c_sym / 2;
    rep.normalizer_order = (c_sym / 2) * phi;
    rep.power_images = units;
    rep.ratio_ell = 1;
    return rep;
  }

  // C_Sym(g) is even-only; the conjugator parity map is a character on
  // (Z/mZ)^* and the realized residues are its kernel.
  std::vector<int> kernel;
  for (int i : units) {
    const Permutation s = residue_conjugator(g, i);
    if (conjugate(g, s) != power(g, i))
      throw std::logic_error("residue conjugator construction failed");
    if (s.is_even()) kernel.push_back(i);
  }
  rep.centralizer_order = c_sym;
  rep.normalizer_order = c_sym * static_cast<long long>(kernel.size());
  rep.power_images = kernel;
  rep.ratio_ell = static_cast<int>(phi / static_cast<long long>(kernel.size()));
  return rep;
}

NormalizerReport normalizer_of_cyclic(const GroupSpec& spec, const Permutation& g,
                                      const Caps& caps) {
  if (spec.n <= caps.scan_cap) return normalizer_of_cyclic_scan(spec, g, caps);
  return normalizer_of_cyclic_constructive(spec, g);
}

BlockSystem block_system(std::span<const Permutation> generators, int n) {
  for (const auto& s : generators)
    if (s.degree() != n)
      throw input_error("block_system: generator degree mismatch");

  std::vector<int> parent(static_cast<size_t>(n));
  auto find = [&](int a) {
    while (parent[static_cast<size_t>(a)] != a)
      a = parent[static_cast<size_t>(a)] =
          parent[static_cast<size_t>(parent[static_cast<size_t>(a)])];
    return a;
  };
  auto blocks_from_parent = [&]() {
    std::map<int, std::vector<int>> groups;
    for (int i = 0; i < n; ++i) groups[find(i)].push_back(i + 1);
    std::vector<std::vector<int>> blocks;
    for (auto& [root, pts] : groups) blocks.push_back(std::move(pts));
    std::sort(blocks.begin(), blocks.end());
    return blocks;
  };

  // orbits first
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& s : generators)
    for (int i = 0; i < n; ++i) {
      const int a = find(i), b = find(s[i]);
      if (a != b) parent[static_cast<size_t>(a)] = b;
    }
  {
    int roots = 0;
    for (int i = 0; i < n; ++i)
      if (find(i) == i) ++roots;
    if (roots > 1) return {Transitivity::Intransitive, blocks_from_parent()};
  }

  // transitive: minimal nontrivial block system via seed-pair closure
  std::optional<BlockSystem> best;
  for (int beta = 1; beta < n; ++beta) {
    std::iota(parent.begin(), parent.end(), 0);
    parent[static_cast<size_t>(beta)] = 0;
    std::vector<std::pair<int, int>> queue{{0, beta}};
    while (!queue.empty()) {
      const auto [a, b] = queue.back();
      queue.pop_back();
      for (const auto& s : generators) {
        const int sa = find(s[a]), sb = find(s[b]);
        if (sa != sb) {
          parent[static_cast<size_t>(sa)] = sb;
          queue.emplace_back(sa, sb);
        }
      }
    }
    auto blocks = blocks_from_parent();
    if (blocks.size() <= 1) continue;  // trivial for this seed
    if (!best || blocks.front().size() < best->blocks.front().size())
      best = BlockSystem{Transitivity::Imprimitive, std::move(blocks)};
  }
  if (best) return *best;
  return {Transitivity::Primitive, {}};
}

std::vector<Permutation> derived_subgroup_generators(const GroupSpec& spec) {
  const int n = spec.n;
  auto alt_gens = [&] {
    std::vector<Permutation> gens;
    for (int k = 2; k < n; ++k) {
      std::vector<uint8_t> img(static_cast<size_t>(n));
      std::iota(img.begin(), img.end(), uint8_t{0});
      img[0] = 1;
      img[1] = static_cast<uint8_t>(k);
      img[static_cast<size_t>(k)] = 0;
      gens.push_back(Permutation::from_images(std::move(img)));
    }
    return gens;
  };
  if (spec.family == Family::Sym) return alt_gens();
  if (n >= 5) return alt_gens();
  if (n == 4) {
    return {parse_cycles("(1 2)(3 4)", 4), parse_cycles("(1 3)(2 4)", 4)};
  }
  return {};  // Alt_3 is abelian
}

}  // namespace gengraph
