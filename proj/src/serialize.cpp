#include "gengraph/serialize.hpp"

#include <sstream>

#include "gengraph/errors.hpp"

namespace gengraph {

ojson group_to_json(const GroupSpec& spec) {
  return ojson{{"family", family_name(spec.family)}, {"n", spec.n}};
}

ojson perm_to_json(const Permutation& p) {
  std::vector<int> images;
  images.reserve(static_cast<size_t>(p.degree()));
  for (int i = 0; i < p.degree(); ++i) images.push_back(p[i] + 1);
  return ojson{{"degree", p.degree()}, {"images", images}};
}

Permutation perm_from_json(const ojson& j) {
  if (!j.contains("degree") || !j.contains("images"))
    throw input_error("permutation JSON needs \"degree\" and \"images\"");
  const int degree = j.at("degree").get<int>();
  const auto images = j.at("images").get<std::vector<int>>();
  if (static_cast<int>(images.size()) != degree)
    throw input_error("permutation JSON: images length != degree");
  return Permutation::from_images_1based(images);
}

namespace {

const char* parity_name(bool odd) { return odd ? "odd" : "even"; }

}  // namespace

ojson degree_report_to_json(const DegreeReport& report) {
  ojson rows = ojson::array();
  for (const auto& row : report.rows) {
    rows.push_back(ojson{
        {"representative", format_cycles(row.representative)},
        {"shape", row.shape.to_string()},
        {"class_size", row.class_size},
        {"degree", row.degree},
        {"parity", parity_name(row.parity_odd)},
        {"predicted_parity", parity_name(row.predicted_odd)},
        {"source", prediction_source_name(row.source)},
    });
  }
  return ojson{{"group", group_to_json(report.spec)},
               {"order", report.spec.order_u64()},
               {"rows", rows}};
}

std::string degree_report_to_csv(const DegreeReport& report) {
  std::string out = "shape,class_size,degree,parity,predicted_parity,source\n";
  for (const auto& row : report.rows) {
    out += row.shape.to_string();
    out += ',' + std::to_string(row.class_size);
    out += ',' + std::to_string(row.degree);
    out += ',';
    out += parity_name(row.parity_odd);
    out += ',';
    out += parity_name(row.predicted_odd);
    out += ',';
    out += prediction_source_name(row.source);
    out += '\n';
  }
  return out;
}

std::string degree_report_to_text(const DegreeReport& report) {
  std::ostringstream out;
  out << "Degrees in Gamma(" << report.spec.name() << "), |G| = "
      << report.spec.order_u64() << "\n";
  out << "  class rep            shape      size     delta(g)  parity  predicted\n";
  for (const auto& row : report.rows) {
    char line[192];
    std::snprintf(line, sizeof line, "  %-20s %-10s %-8llu %-9llu %-7s %s\n",
                  format_cycles(row.representative).c_str(),
                  row.shape.to_string().c_str(),
                  static_cast<unsigned long long>(row.class_size),
                  static_cast<unsigned long long>(row.degree),
                  parity_name(row.parity_odd), parity_name(row.predicted_odd));
    out << line;
  }
  return out.str();
}

ojson euler_verdict_to_json(const EulerVerdict& verdict) {
  ojson j{{"group", group_to_json(verdict.spec)},
          {"predicted_eulerian", verdict.predicted_eulerian}};
  if (verdict.empirical) {
    const auto& emp = *verdict.empirical;
    j["empirical"] = ojson{
        {"connected", emp.connected},
        {"all_even", emp.all_even},
        {"odd_witness", emp.odd_witness ? ojson(format_cycles(*emp.odd_witness))
                                        : ojson(nullptr)},
        {"component_count", emp.component_count},
    };
  } else {
    j["empirical"] = nullptr;
  }
  j["edge_count"] = verdict.edge_count ? ojson(*verdict.edge_count) : ojson(nullptr);
  j["circuit"] = verdict.circuit ? circuit_to_json(*verdict.circuit) : ojson(nullptr);
  return j;
}

ojson circuit_to_json(const std::vector<Permutation>& circuit) {
  ojson arr = ojson::array();
  for (const auto& p : circuit) arr.push_back(format_cycles(p));
  return arr;
}

ojson lattice_to_json(const SubgroupLattice& lattice) {
  ojson nodes = ojson::array();
  for (const auto& node : lattice.nodes) {
    ojson gens = ojson::array();
    for (const auto& g : node.generators) gens.push_back(format_cycles(g));
    nodes.push_back(ojson{
        {"order", node.order},
        {"mobius", node.mobius},
        {"fingerprint", node.fingerprint},
        {"structure", node.structure_hint},
        {"transitive", node.transitive},
        {"primitive", node.primitive},
        {"generators", gens},
    });
  }
  ojson edges = ojson::array();
  for (const auto& [sub, super] : lattice.hasse_edges)
    edges.push_back(ojson::array({sub, super}));
  return ojson{{"group", group_to_json(lattice.spec)},
               {"generator", format_cycles(lattice.base_generator)},
               {"mode", "enumerated"},
               {"cap_warning", lattice.cap_warning},
               {"nodes", nodes},
               {"edges", edges}};
}

std::string lattice_to_dot(const SubgroupLattice& lattice) {
  std::ostringstream out;
  out << "digraph lattice {\n  rankdir=BT;\n  node [shape=box];\n";
  for (size_t i = 0; i < lattice.nodes.size(); ++i) {
    const auto& node = lattice.nodes[i];
    out << "  n" << i << " [label=\"" << node.structure_hint << "\\n|H| = "
        << node.order << ", mu = " << node.mobius << "\"];\n";
  }
  for (const auto& [sub, super] : lattice.hasse_edges)
    out << "  n" << sub << " -> n" << super << ";\n";
  out << "}\n";
  return out.str();
}

ojson symbolic_lattice_to_json(const SymbolicLattice& lattice) {
  ojson nodes = ojson::array();
  for (const auto& node : lattice.nodes)
    nodes.push_back(ojson{{"name", node.name},
                          {"order", node.order.str()},
                          {"mobius", node.mobius}});
  return ojson{{"group", group_to_json(lattice.spec)},
               {"mode", "symbolic-printed-lattice"},
               {"generator_order", lattice.generator_order},
               {"nodes", nodes},
               {"degree_parity", lattice.degree_parity_odd() ? "odd" : "even"}};
}

ojson decompositions_to_json(long long n, Family family,
                             const std::vector<DecompositionCertificate>& certs) {
  ojson arr = ojson::array();
  for (const auto& cert : certs) {
    arr.push_back(ojson{{"p", cert.p},
                        {"k", cert.k},
                        {"coefficients", cert.coefficients},
                        {"alt_condition", cert.alt_condition},
                        {"shape", cert.shape.to_string()},
                        {"sum", cert.render()}});
  }
  return ojson{{"n", n}, {"family", family_name(family)}, {"certificates", arr}};
}

ojson probability_to_json(const ProbabilityReport& report) {
  ojson j{{"group", group_to_json(report.spec)},
          {"p", report.p},
          {"out_order", report.out_order},
          {"numerator", report.numerator.str()},
          {"denominator", report.denominator.str()}};
  j["odd_vertex_count"] =
      report.odd_vertex_count ? ojson(*report.odd_vertex_count) : ojson(nullptr);
  return j;
}

ojson normalizer_to_json(const GroupSpec& spec, const NormalizerReport& report) {
  return ojson{{"group", group_to_json(spec)},
               {"generator", format_cycles(report.generator)},
               {"order_of_g", report.m},
               {"centralizer_order", report.centralizer_order.str()},
               {"normalizer_order", report.normalizer_order.str()},
               {"power_images", report.power_images},
               {"ratio_ell", report.ratio_ell},
               {"method", report.method}};
}

}  // namespace gengraph
