#include "gengraph/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "gengraph/degree.hpp"
#include "gengraph/errors.hpp"
#include "gengraph/euler.hpp"
#include "gengraph/group.hpp"
#include "gengraph/mobius.hpp"
#include "gengraph/numtheory.hpp"

namespace gengraph {

std::vector<SuiteId> all_suites() {
  return {SuiteId::SmallCases,     SuiteId::TheoremParity,
          SuiteId::MobiusAgreement, SuiteId::NormalizerLaws,
          SuiteId::Criterion,       SuiteId::DecompositionBiconditional,
          SuiteId::Probability,     SuiteId::EulerCertificates,
          SuiteId::Hio};
}

std::string suite_name(SuiteId id) {
  switch (id) {
    case SuiteId::SmallCases: return "small_cases";
    case SuiteId::TheoremParity: return "theorem_parity";
    case SuiteId::MobiusAgreement: return "mobius_agreement";
    case SuiteId::NormalizerLaws: return "normalizer_laws";
    case SuiteId::Criterion: return "criterion";
    case SuiteId::DecompositionBiconditional: return "decomposition_biconditional";
    case SuiteId::Probability: return "probability";
    case SuiteId::EulerCertificates: return "euler_certificates";
    case SuiteId::Hio: return "hio";
  }
  return "?";
}

SuiteId parse_suite(const std::string& name) {
  for (SuiteId id : all_suites())
    if (suite_name(id) == name) return id;
  throw input_error("unknown suite \"" + name + "\"");
}

bool FactLedger::all_passed() const { return failed_count() == 0; }

size_t FactLedger::failed_count() const {
  size_t n = 0;
  for (const auto& e : entries)
    if (e.status == FactStatus::Fail) ++n;
  return n;
}

namespace {

using Clock = std::chrono::steady_clock;

struct Recorder {
  FactLedger& ledger;

  // fn fills observed; pass iff observed == expected afterwards.
  void check(const std::string& fact_id, const std::string& claim,
             const std::string& scope, const std::string& expected,
             const std::function<std::string()>& fn) {
    FactEntry entry{fact_id, claim, scope, FactStatus::Skipped, "", expected, 0};
    const auto start = Clock::now();
    try {
      entry.observed = fn();
      entry.status =
          entry.observed == expected ? FactStatus::Pass : FactStatus::Fail;
    } catch (const std::exception& e) {
      entry.observed = std::string("exception: ") + e.what();
      entry.status = FactStatus::Fail;
    }
    entry.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                           Clock::now() - start)
                           .count();
    ledger.entries.push_back(std::move(entry));
  }

  void skip(const std::string& fact_id, const std::string& claim,
            const std::string& scope, const std::string& reason) {
    ledger.entries.push_back(
        {fact_id, claim, scope, FactStatus::Skipped, reason, "", 0});
  }
};

std::string shape_set_string(const std::set<std::string>& shapes) {
  if (shapes.empty()) return "none";
  std::string out;
  for (const auto& s : shapes) {
    if (!out.empty()) out += ' ';
    out += s;
  }
  return out;
}

std::vector<GroupSpec> both_families(int n) {
  return {GroupSpec(Family::Alt, n), GroupSpec(Family::Sym, n)};
}

// ---- small_cases ---------------------------------------------------------

void suite_small_cases(Recorder& rec, const Caps& caps) {
  rec.check("sym4-isolated-vertices",
            "Gamma(Sym_4) has exactly 3 isolated vertices, the even involutions",
            "Sym_4", "shape 2+2 size 3 degree 0; no other isolated class", [&] {
              const DegreeReport table =
                  degree_table(GroupSpec(Family::Sym, 4), caps);
              std::string iso;
              for (const auto& row : table.rows)
                if (row.degree == 0)
                  iso += "shape " + row.shape.to_string() + " size " +
                         std::to_string(row.class_size) + " degree 0; ";
              size_t isolated_classes = 0;
              for (const auto& row : table.rows)
                if (row.degree == 0) ++isolated_classes;
              if (isolated_classes == 1 && iso == "shape 2+2 size 3 degree 0; ")
                return std::string("shape 2+2 size 3 degree 0; no other isolated class");
              return iso.empty() ? std::string("no isolated vertices") : iso;
            });
  rec.check("alt4-order3-degree", "delta(g) = 9 for every order-3 element of Alt_4",
            "Alt_4", "9 9", [&] {
              const DegreeReport table =
                  degree_table(GroupSpec(Family::Alt, 4), caps);
              std::string out;
              for (const auto& row : table.rows)
                if (row.shape.element_order() == 3) {
                  if (!out.empty()) out += ' ';
                  out += std::to_string(row.degree);
                }
              return out;
            });
  rec.check("alt4-involution-adjacency",
            "involutions of Alt_4 are adjacent exactly to the 8 order-3 elements",
            "Alt_4", "degree 8, involution neighbors 0", [&] {
              const GroupSpec spec(Family::Alt, 4);
              const Permutation g = parse_cycles("(1 2)(3 4)", 4);
              const InvolutionParity ip = involution_parity_check(spec, g, caps);
              return "degree " + std::to_string(ip.degree) +
                     ", involution neighbors " +
                     std::to_string(ip.involution_neighbors);
            });
  rec.check("sym3-involution-degree", "delta(g) = 4 for the involutions of Sym_3",
            "Sym_3", "4", [&] {
              return std::to_string(vertex_degree(
                  GroupSpec(Family::Sym, 3), parse_cycles("(1 2)", 3), caps));
            });
  rec.check("sym3-3cycle-degree", "delta(g) = 3 for the 3-cycles of Sym_3",
            "Sym_3", "3", [&] {
              return std::to_string(vertex_degree(
                  GroupSpec(Family::Sym, 3), parse_cycles("(1 2 3)", 3), caps));
            });
}

// ---- theorem_parity ------------------------------------------------------

void suite_theorem_parity(Recorder& rec, const Caps& caps) {
  for (int n = 3; n <= 9; ++n) {
    for (const GroupSpec& spec : both_families(n)) {
      const std::string fact = "parity-" + spec.name();
      const std::string claim =
          "odd-degree classes are exactly the elements of prime order p = 3 "
          "mod 4 with p in {n, n-1}";
      if (n > caps.enumeration_cap) {
        rec.skip(fact, claim, spec.name(),
                 "n exceeds enumeration_cap = " +
                     std::to_string(caps.enumeration_cap));
        continue;
      }
      rec.check(fact, claim, spec.name(), "odd set matches prediction", [&] {
        const DegreeReport table = degree_table(spec, caps);
        std::set<std::string> observed, predicted;
        for (const auto& row : table.rows) {
          if (row.parity_odd) observed.insert(row.shape.to_string());
          if (odd_degree_predicted(spec.n, row.shape.element_order()))
            predicted.insert(row.shape.to_string());
        }
        if (observed == predicted) return std::string("odd set matches prediction");
        return "observed {" + shape_set_string(observed) + "} predicted {" +
               shape_set_string(predicted) + "}";
      });
    }
  }
}

// ---- mobius_agreement ----------------------------------------------------

void suite_mobius_agreement(Recorder& rec, const Caps& caps) {
  rec.check("sym7-7cycle-degree",
            "delta(7-cycle) in Sym_7 = 2499 two ways, matching p!/2 - p(p-1)/2",
            "Sym_7", "brute 2499 mobius 2499 closed-form 2499", [&] {
              const GroupSpec spec(Family::Sym, 7);
              const Permutation g = parse_cycles("(1 2 3 4 5 6 7)", 7);
              const uint64_t brute = vertex_degree(spec, g, caps);
              const long long mob = degree_via_mobius(spec, g, caps);
              const long long closed = factorial_u64(7) / 2 - 7 * 6 / 2;
              return "brute " + std::to_string(brute) + " mobius " +
                     std::to_string(mob) + " closed-form " + std::to_string(closed);
            });
  rec.check("alt7-7cycle-degree", "delta(7-cycle) in Alt_7 = 2205 two ways",
            "Alt_7", "brute 2205 mobius 2205", [&] {
              const GroupSpec spec(Family::Alt, 7);
              const Permutation g = parse_cycles("(1 2 3 4 5 6 7)", 7);
              const uint64_t brute = vertex_degree(spec, g, caps);
              const long long mob = degree_via_mobius(spec, g, caps);
              return "brute " + std::to_string(brute) + " mobius " +
                     std::to_string(mob);
            });
  const auto agree = [&](const GroupSpec& spec) {
    const std::string fact = "mobius-agreement-" + spec.name();
    const std::string claim =
        "sum of mobius * order over the overgroup lattice equals the "
        "brute-force degree for every class representative";
    rec.check(fact, claim, spec.name(), "all classes agree", [&] {
      for (const auto& cls : conjugacy_classes(spec, caps)) {
        const uint64_t brute = vertex_degree(spec, cls.representative, caps);
        const long long mob = degree_via_mobius(spec, cls.representative, caps);
        if (mob < 0 || static_cast<uint64_t>(mob) != brute)
          return "shape " + cls.shape.to_string() + ": mobius " +
                 std::to_string(mob) + " != brute " + std::to_string(brute);
      }
      return std::string("all classes agree");
    });
  };
  for (int n = 3; n <= 6; ++n) agree(GroupSpec(Family::Sym, n));
  for (int n = 3; n <= 7; ++n) agree(GroupSpec(Family::Alt, n));
  for (int n : {11, 12, 23, 24}) {
    const GroupSpec spec(Family::Alt, n);
    const auto symbolic = printed_lattice(spec);
    rec.skip("lattice-" + spec.name(),
             "overgroup lattice of the order-" +
                 std::to_string(symbolic->generator_order) + " elements",
             spec.name(),
             "independent enumeration exceeds desk scale; symbolic evaluation "
             "of the printed lattice gives parity " +
                 std::string(symbolic->degree_parity_odd() ? "odd" : "even"));
  }
}

// ---- normalizer_laws -----------------------------------------------------

void suite_normalizer_laws(Recorder& rec, const Caps& caps) {
  for (int n = 3; n <= caps.scan_cap; ++n) {
    const GroupSpec spec(Family::Sym, n);
    rec.check("normalizer-totient-" + spec.name(),
              "|N_Sym(<g>)| = |C_Sym(g)| * phi(|g|) for every class representative",
              spec.name(), "law holds", [&] {
                for (const auto& cls : conjugacy_classes(spec, caps)) {
                  const NormalizerReport rep =
                      normalizer_of_cyclic_scan(spec, cls.representative, caps);
                  const BigInt expected =
                      rep.centralizer_order * euler_phi(rep.m);
                  if (rep.normalizer_order != expected)
                    return "shape " + cls.shape.to_string() + ": |N| = " +
                           rep.normalizer_order.str() + " != " + expected.str();
                }
                return std::string("law holds");
              });
  }
  for (int n = 3; n <= caps.scan_cap; ++n) {
    for (const GroupSpec& spec : both_families(n)) {
      rec.check("normalizer-routes-" + spec.name(),
                "scan and constructive normalizer computations agree",
                spec.name(), "routes agree", [&] {
                  for (const auto& cls : conjugacy_classes(spec, caps)) {
                    const NormalizerReport scan =
                        normalizer_of_cyclic_scan(spec, cls.representative, caps);
                    const NormalizerReport cons =
                        normalizer_of_cyclic_constructive(spec, cls.representative);
                    if (scan.normalizer_order != cons.normalizer_order ||
                        scan.centralizer_order != cons.centralizer_order ||
                        scan.power_images != cons.power_images)
                      return "shape " + cls.shape.to_string() + ": scan |N| = " +
                             scan.normalizer_order.str() + " constructive |N| = " +
                             cons.normalizer_order.str();
                  }
                  return std::string("routes agree");
                });
    }
  }
}

// ---- criterion -----------------------------------------------------------

void suite_criterion(Recorder& rec, const Caps& caps) {
  for (int n = 3; n <= std::min(8, caps.enumeration_cap); ++n) {
    for (const GroupSpec& spec : both_families(n)) {
      rec.check("criterion-sound-" + spec.name(),
                "2^epsilon | |N_G(<g>)| implies even degree, all class reps",
                spec.name(), "no counterexample", [&] {
                  const DegreeReport table = degree_table(spec, caps);
                  for (const auto& row : table.rows) {
                    const CriterionResult crit =
                        even_degree_criterion(spec, row.representative, caps);
                    if (crit.certified && row.parity_odd)
                      return "shape " + row.shape.to_string() +
                             " certified even but degree " +
                             std::to_string(row.degree);
                  }
                  return std::string("no counterexample");
                });
    }
  }
}

// ---- decomposition_biconditional ------------------------------------------

void suite_decomposition(Recorder& rec, const Caps& caps) {
  rec.check("sym3-special-case",
            "in Sym_3 every nontrivial cyclic normalizer has order 2 mod 4",
            "Sym_3", "all normalizer orders = 2 mod 4", [&] {
              const GroupSpec spec(Family::Sym, 3);
              for (const auto& cls : conjugacy_classes(spec, caps)) {
                const NormalizerReport rep =
                    normalizer_of_cyclic_scan(spec, cls.representative, caps);
                if (rep.normalizer_order % 4 == 0 ||
                    rep.normalizer_order % 2 == 1)
                  return "shape " + cls.shape.to_string() + ": |N| = " +
                         rep.normalizer_order.str();
              }
              return std::string("all normalizer orders = 2 mod 4");
            });
  for (int n = 4; n <= std::min(8, caps.scan_cap); ++n) {
    for (const GroupSpec& spec : both_families(n)) {
      rec.check(
          "decomposition-" + spec.name(),
          "certificate shapes = shapes whose normalizer fails the 2^epsilon "
          "divisibility",
          spec.name(), "shape sets match", [&] {
            const BigInt divisor = spec.family == Family::Alt ? 2 : 4;
            std::set<std::string> failing;
            for (const auto& cls : conjugacy_classes(spec, caps)) {
              const NormalizerReport rep =
                  normalizer_of_cyclic_scan(spec, cls.representative, caps);
              if (rep.normalizer_order % divisor != 0)
                failing.insert(cls.shape.to_string());
            }
            std::set<std::string> certified;
            for (const auto& cert : decompositions(spec.n, spec.family))
              certified.insert(cert.shape.to_string());
            if (failing == certified) return std::string("shape sets match");
            return "failing {" + shape_set_string(failing) + "} certificates {" +
                   shape_set_string(certified) + "}";
          });
    }
  }
}

// ---- probability -----------------------------------------------------------

void suite_probability(Recorder& rec, const Caps& caps) {
  const auto named = [&](Family family, int n, const std::string& expected) {
    const GroupSpec spec(family, n);
    rec.check("probability-" + spec.name(),
              "P(odd degree) = |Out| / (p (1 - |Out|/n!)) matches the direct count",
              spec.name(), expected, [&] {
                const ProbabilityReport rep = odd_degree_probability(spec, caps);
                std::string out = rep.numerator.str() + "/" + rep.denominator.str();
                if (rep.odd_vertex_count)
                  out += " count " + std::to_string(*rep.odd_vertex_count);
                return out;
              });
  };
  named(Family::Sym, 7, "720/5039 count 720");
  named(Family::Alt, 7, "720/2519 count 720");
  named(Family::Alt, 8, "5760/20159 count 5760");
  rec.check("probability-monotone",
            "P decreases along Sym_p for the primes 7, 11, 19, 23",
            "Sym_7..Sym_23", "strictly decreasing", [&] {
              Caps no_count = caps;
              no_count.enumeration_cap = 0;  // ratios only
              Rational prev;
              bool first = true;
              for (int p : {7, 11, 19, 23}) {
                const ProbabilityReport rep =
                    odd_degree_probability(GroupSpec(Family::Sym, p), no_count);
                const Rational cur(rep.numerator, rep.denominator);
                if (!first && cur >= prev) return std::string("not decreasing at p = ") + std::to_string(p);
                prev = cur;
                first = false;
              }
              return std::string("strictly decreasing");
            });
}

// ---- euler_certificates ----------------------------------------------------

// Independent circuit validation: recompute the edge set pairwise and
// compare multisets with the circuit's steps.
std::string validate_circuit(const GroupSpec& spec, const EulerVerdict& verdict,
                             const Caps& caps) {
  if (!verdict.circuit) return "no circuit emitted";
  const auto& circuit = *verdict.circuit;
  if (circuit.size() < 2) return "circuit too short";
  if (!(circuit.front() == circuit.back())) return "circuit not closed";
  std::multiset<std::pair<std::string, std::string>> expected_edges, walked;
  const std::vector<Permutation> elements = enumerate_elements(spec, caps);
  for (size_t i = 1; i < elements.size(); ++i)
    for (size_t j = i + 1; j < elements.size(); ++j)
      if (generates(spec, elements[i], elements[j]))
        expected_edges.insert({format_cycles(elements[i]),
                               format_cycles(elements[j])});
  for (size_t i = 0; i + 1 < circuit.size(); ++i) {
    if (!generates(spec, circuit[i], circuit[i + 1]))
      return "step " + std::to_string(i) + " is not an edge";
    std::string a = format_cycles(circuit[i]);
    std::string b = format_cycles(circuit[i + 1]);
    if (b < a) std::swap(a, b);
    walked.insert({a, b});
  }
  if (walked != expected_edges) return "edge multiset mismatch";
  return "circuit uses every edge exactly once (" +
         std::to_string(expected_edges.size()) + " edges)";
}

void suite_euler(Recorder& rec, const Caps& caps) {
  for (Family family : {Family::Alt, Family::Sym}) {
    const GroupSpec spec(family, 5);
    rec.check("euler-circuit-" + spec.name(),
              "Gamma is Eulerian with an explicit circuit covering every edge once",
              spec.name(), "valid", [&] {
                const EulerVerdict verdict =
                    euler_verdict(spec, EulerMode::WithCircuit, caps);
                if (!verdict.predicted_eulerian) return std::string("predicted non-Eulerian");
                const std::string check = validate_circuit(spec, verdict, caps);
                if (check.rfind("circuit uses", 0) == 0) return std::string("valid");
                return check;
              });
  }
  rec.check("euler-sym4-disconnected",
            "Gamma(Sym_4) is not Eulerian: the graph is disconnected",
            "Sym_4", "not eulerian, disconnected, 4 components", [&] {
              const EulerVerdict verdict = euler_verdict(
                  GroupSpec(Family::Sym, 4), EulerMode::Empirical, caps);
              if (verdict.predicted_eulerian) return std::string("predicted eulerian");
              const auto& emp = *verdict.empirical;
              if (emp.connected) return std::string("reported connected");
              return "not eulerian, disconnected, " +
                     std::to_string(emp.component_count) + " components";
            });
  rec.check("euler-sym7-odd-vertices",
            "Gamma(Sym_7) is not Eulerian: the 7-cycles have odd degree",
            "Sym_7", "odd witness of order 7", [&] {
              if (7 > caps.connectivity_cap)
                throw resource_error("connectivity_cap too small");
              const EulerVerdict verdict = euler_verdict(
                  GroupSpec(Family::Sym, 7), EulerMode::Empirical, caps);
              const auto& emp = *verdict.empirical;
              if (verdict.predicted_eulerian || emp.all_even || !emp.odd_witness)
                return std::string("no odd witness found");
              return "odd witness of order " +
                     std::to_string(element_order(*emp.odd_witness));
            });
  rec.skip("euler-connectivity-large",
           "Gamma(Alt_n) is connected for all n and Gamma(Sym_n) for n != 4",
           "n > connectivity_cap",
           "connectivity beyond n = " + std::to_string(caps.connectivity_cap) +
               " is taken from the literature, not recomputed");
}

// ---- hio --------------------------------------------------------------------

void suite_hio(Recorder& rec, const Caps& caps) {
  const auto run = [&](const GroupSpec& spec) {
    rec.check("hio-" + spec.name(),
              "|N_G(H):H| divides m(H) * mu(H) at every node of every class "
              "representative's lattice",
              spec.name(), "divisibility holds everywhere", [&] {
                for (const auto& cls : conjugacy_classes(spec, caps)) {
                  SubgroupLattice lattice =
                      overgroup_lattice(spec, cls.representative, caps);
                  mobius_values(lattice);
                  for (int i = 0; i < static_cast<int>(lattice.nodes.size()); ++i) {
                    const HioCheck check = hio_divisibility(lattice, i, caps);
                    if (!check.divides)
                      return "shape " + cls.shape.to_string() + " node " +
                             std::to_string(i) + ": |N:H| = " +
                             check.normalizer_index.str() + " does not divide " +
                             std::to_string(check.m_value) + " * " +
                             std::to_string(check.mobius);
                  }
                }
                return std::string("divisibility holds everywhere");
              });
  };
  for (int n = 3; n <= 6; ++n) run(GroupSpec(Family::Sym, n));
  for (int n = 3; n <= 7; ++n) run(GroupSpec(Family::Alt, n));
}

}  // namespace

FactLedger run_suite(SuiteId id, const Caps& caps) {
  FactLedger ledger{suite_name(id), {}};
  Recorder rec{ledger};
  switch (id) {
    case SuiteId::SmallCases: suite_small_cases(rec, caps); break;
    case SuiteId::TheoremParity: suite_theorem_parity(rec, caps); break;
    case SuiteId::MobiusAgreement: suite_mobius_agreement(rec, caps); break;
    case SuiteId::NormalizerLaws: suite_normalizer_laws(rec, caps); break;
    case SuiteId::Criterion: suite_criterion(rec, caps); break;
    case SuiteId::DecompositionBiconditional: suite_decomposition(rec, caps); break;
    case SuiteId::Probability: suite_probability(rec, caps); break;
    case SuiteId::EulerCertificates: suite_euler(rec, caps); break;
    case SuiteId::Hio: suite_hio(rec, caps); break;
  }
  return ledger;
}

namespace {

const char* status_name(FactStatus s) {
  switch (s) {
    case FactStatus::Pass: return "pass";
    case FactStatus::Fail: return "fail";
    case FactStatus::Skipped: return "skipped";
  }
  return "?";
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string export_ledger(const FactLedger& ledger, LedgerFormat format) {
  if (format == LedgerFormat::Json) {
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    for (const auto& e : ledger.entries)
      entries.push_back({{"fact_id", e.fact_id},
                         {"claim", e.claim},
                         {"scope", e.scope},
                         {"status", status_name(e.status)},
                         {"observed", e.observed},
                         {"expected", e.expected},
                         {"runtime_ms", e.runtime_ms}});
    nlohmann::ordered_json j{{"suite", ledger.suite}, {"entries", entries}};
    return j.dump(2) + "\n";
  }
  if (format == LedgerFormat::Csv) {
    std::string out = "fact_id,claim,scope,status,observed,expected,runtime_ms\n";
    for (const auto& e : ledger.entries) {
      out += csv_escape(e.fact_id) + ',' + csv_escape(e.claim) + ',' +
             csv_escape(e.scope) + ',' + status_name(e.status) + ',' +
             csv_escape(e.observed) + ',' + csv_escape(e.expected) + ',' +
             std::to_string(e.runtime_ms) + '\n';
    }
    return out;
  }
  std::ostringstream out;
  out << "## Suite `" << ledger.suite << "`\n\n";
  out << "| fact | claim | scope | status | observed | expected |\n";
  out << "|------|-------|-------|--------|----------|----------|\n";
  for (const auto& e : ledger.entries)
    out << "| " << e.fact_id << " | " << e.claim << " | " << e.scope << " | "
        << status_name(e.status) << " | " << e.observed << " | " << e.expected
        << " |\n";
  return out.str();
}

}  // namespace gengraph
