#pragma once

#include <string>

#include <json.hpp>

#include "gengraph/degree.hpp"
#include "gengraph/euler.hpp"
#include "gengraph/groupspec.hpp"
#include "gengraph/mobius.hpp"
#include "gengraph/numtheory.hpp"

namespace gengraph {

// All JSON output uses ordered_json with a fixed insertion order, so two
// runs of the same computation are byte-identical.
using ojson = nlohmann::ordered_json;

ojson group_to_json(const GroupSpec& spec);

ojson perm_to_json(const Permutation& p);  // {"degree": n, "images": [1-based]}
Permutation perm_from_json(const ojson& j);

ojson degree_report_to_json(const DegreeReport& report);
// Columns: shape, class_size, degree, parity, predicted_parity, source.
std::string degree_report_to_csv(const DegreeReport& report);
std::string degree_report_to_text(const DegreeReport& report);

ojson euler_verdict_to_json(const EulerVerdict& verdict);
// The bare circuit: a JSON array of permutation strings.
ojson circuit_to_json(const std::vector<Permutation>& circuit);

ojson lattice_to_json(const SubgroupLattice& lattice);
std::string lattice_to_dot(const SubgroupLattice& lattice);
ojson symbolic_lattice_to_json(const SymbolicLattice& lattice);

ojson decompositions_to_json(long long n, Family family,
                             const std::vector<DecompositionCertificate>& certs);
ojson probability_to_json(const ProbabilityReport& report);
ojson normalizer_to_json(const GroupSpec& spec, const NormalizerReport& report);

}  // namespace gengraph
