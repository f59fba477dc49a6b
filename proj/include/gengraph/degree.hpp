#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gengraph/config.hpp"
#include "gengraph/group.hpp"
#include "gengraph/groupspec.hpp"

namespace gengraph {

// Degree of the vertex g in Gamma(spec): exact count of partners x != 1,
// x != g with <g, x> = spec. Brute force over the element table, chunked
// across caps.threads workers (a pure counting reduction, so any split is
// deterministic).
uint64_t vertex_degree(const GroupSpec& spec, const Permutation& g, const Caps& caps);

enum class PredictionSource { ParityTheorem, NormalizerCriterion, None };

struct DegreeRow {
  Permutation representative;
  CycleShape shape;
  uint64_t class_size = 0;
  uint64_t degree = 0;
  bool parity_odd = false;
  bool predicted_odd = false;
  PredictionSource source = PredictionSource::None;
};

struct DegreeReport {
  GroupSpec spec;
  std::vector<DegreeRow> rows;

  uint64_t odd_vertex_count() const;
  // Sum of class_size * degree; even by the handshake lemma.
  BigInt degree_sum() const;
};

// One row per conjugacy class, degree computed for the representative.
DegreeReport degree_table(const GroupSpec& spec, const Caps& caps);

// Even-degree certificate: 2^epsilon | |N_G(<g>)| forces even degree, where
// epsilon = 1 iff the abelianization has odd order (Alt), else 2 (Sym).
struct CriterionResult {
  bool certified = false;
  int epsilon = 0;
  BigInt normalizer_order;
};

CriterionResult even_degree_criterion(const GroupSpec& spec, const Permutation& g,
                                      const Caps& caps);

struct InvolutionParity {
  uint64_t degree = 0;
  uint64_t involution_neighbors = 0;
  bool degree_odd = false;
  bool involution_count_odd = false;
};

InvolutionParity involution_parity_check(const GroupSpec& spec,
                                         const Permutation& g, const Caps& caps);

std::string prediction_source_name(PredictionSource s);

}  // namespace gengraph
