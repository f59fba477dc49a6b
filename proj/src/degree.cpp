#include "gengraph/degree.hpp"

#include <atomic>
#include <thread>

#include "gengraph/errors.hpp"
#include "gengraph/numtheory.hpp"

namespace gengraph {

namespace {

// Splits [0, total) into chunks and sums fn over each on a small pool.
uint64_t parallel_count(size_t total, int threads,
                        const std::function<uint64_t(size_t, size_t)>& fn) {
  if (threads <= 1 || total < 4096) return fn(0, total);
  const size_t nthreads = static_cast<size_t>(threads);
  std::vector<uint64_t> partial(nthreads, 0);
  std::vector<std::thread> pool;
  const size_t chunk = (total + nthreads - 1) / nthreads;
  for (size_t t = 0; t < nthreads; ++t) {
    const size_t lo = t * chunk;
    const size_t hi = std::min(total, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&partial, &fn, t, lo, hi] { partial[t] = fn(lo, hi); });
  }
  for (auto& th : pool) th.join();
  uint64_t sum = 0;
  for (uint64_t v : partial) sum += v;
  return sum;
}

void check_vertex(const GroupSpec& spec, const Permutation& g) {
  if (!spec.contains(g))
    throw membership_error(format_cycles(g) + " is not in " + spec.name());
  if (g.is_identity())
    throw input_error("the identity is not a vertex of the generating graph");
}

}  // namespace

uint64_t vertex_degree(const GroupSpec& spec, const Permutation& g, const Caps& caps) {
  check_vertex(spec, g);
  if (spec.n > caps.enumeration_cap)
    throw resource_error("degree scan of " + spec.name() +
                         " exceeds enumeration_cap = " +
                         std::to_string(caps.enumeration_cap) +
                         "; use the class-level table");
  const ElementTable& table = ElementTable::get(spec, caps);
  const uint8_t* gimg = g.data();
  return parallel_count(
      table.size(), caps.resolved_threads(), [&](size_t lo, size_t hi) {
        uint64_t count = 0;
        for (size_t i = lo; i < hi; ++i)
          if (generates_raw(spec, gimg, table.at(i))) ++count;
        return count;
      });
}

uint64_t DegreeReport::odd_vertex_count() const {
  uint64_t n = 0;
  for (const auto& row : rows)
    if (row.parity_odd) n += row.class_size;
  return n;
}

BigInt DegreeReport::degree_sum() const {
  BigInt s = 0;
  for (const auto& row : rows) s += BigInt(row.class_size) * row.degree;
  return s;
}

DegreeReport degree_table(const GroupSpec& spec, const Caps& caps) {
  DegreeReport report{spec, {}};
  for (const auto& cls : conjugacy_classes(spec, caps)) {
    DegreeRow row;
    row.representative = cls.representative;
    row.shape = cls.shape;
    row.class_size = cls.size;
    row.degree = vertex_degree(spec, cls.representative, caps);
    row.parity_odd = (row.degree % 2) == 1;
    const CriterionResult crit = even_degree_criterion(spec, cls.representative, caps);
    if (crit.certified) {
      row.predicted_odd = false;
      row.source = PredictionSource::NormalizerCriterion;
    } else {
      row.predicted_odd =
          odd_degree_predicted(spec.n, cls.shape.element_order());
      row.source = PredictionSource::ParityTheorem;
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

CriterionResult even_degree_criterion(const GroupSpec& spec, const Permutation& g,
                                      const Caps& caps) {
  check_vertex(spec, g);
  // Alt_n^ab is C_3 (n in {3,4}) or trivial, both of odd order; Sym_n^ab = C_2.
  const int epsilon = spec.family == Family::Alt ? 1 : 2;
  const NormalizerReport norm = normalizer_of_cyclic(spec, g, caps);
  const BigInt divisor = epsilon == 1 ? 2 : 4;
  return {norm.normalizer_order % divisor == 0, epsilon, norm.normalizer_order};
}

InvolutionParity involution_parity_check(const GroupSpec& spec,
                                         const Permutation& g, const Caps& caps) {
  check_vertex(spec, g);
  if (spec.n > caps.enumeration_cap)
    throw resource_error("involution scan of " + spec.name() +
                         " exceeds enumeration_cap = " +
                         std::to_string(caps.enumeration_cap));
  const ElementTable& table = ElementTable::get(spec, caps);
  const uint8_t* gimg = g.data();
  const int n = spec.n;
  uint64_t degree = 0, invol = 0;
  for (size_t i = 0; i < table.size(); ++i) {
    const uint8_t* x = table.at(i);
    if (!generates_raw(spec, gimg, x)) continue;
    ++degree;
    // x^2 = 1; the identity never passes the edge test, so x != 1 here
    bool involution = true;
    for (int j = 0; j < n; ++j)
      if (x[x[j]] != j) {
        involution = false;
        break;
      }
    if (involution) ++invol;
  }
  return {degree, invol, degree % 2 == 1, invol % 2 == 1};
}

std::string prediction_source_name(PredictionSource s) {
  switch (s) {
    case PredictionSource::ParityTheorem: return "parity_theorem";
    case PredictionSource::NormalizerCriterion: return "normalizer_criterion";
    case PredictionSource::None: return "none";
  }
  return "none";
}

}  // namespace gengraph
