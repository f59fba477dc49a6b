#include "gengraph/cli.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "gengraph/cache.hpp"
#include "gengraph/degree.hpp"
#include "gengraph/errors.hpp"
#include "gengraph/euler.hpp"
#include "gengraph/mobius.hpp"
#include "gengraph/numtheory.hpp"
#include "gengraph/serialize.hpp"
#include "gengraph/verify.hpp"

namespace gengraph {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitInput = 2;
constexpr int kExitMembership = 3;
constexpr int kExitResource = 4;
constexpr int kExitIo = 5;

// Everything that determines a cacheable result, encodable as a stable key.
struct OpRequest {
  std::string op;
  std::string group;
  int n = 0;
  std::string element;
  std::string format = "text";
  std::string mode;
};

std::string request_key(const OpRequest& r) {
  std::string key = "v=" + std::string(kVersion) + "|op=" + r.op +
                    "|group=" + r.group + "|n=" + std::to_string(r.n) +
                    "|element=" + r.element + "|format=" + r.format;
  if (!r.mode.empty()) key += "|mode=" + r.mode;
  return key;
}

OpRequest parse_key(const std::string& key) {
  OpRequest r;
  std::stringstream ss(key);
  std::string field;
  while (std::getline(ss, field, '|')) {
    const size_t eq = field.find('=');
    if (eq == std::string::npos) throw input_error("malformed cache key");
    const std::string k = field.substr(0, eq);
    const std::string v = field.substr(eq + 1);
    if (k == "v") {
      if (v != kVersion) throw input_error("cache key from version " + v);
    } else if (k == "op") r.op = v;
    else if (k == "group") r.group = v;
    else if (k == "n") r.n = std::stoi(v);
    else if (k == "element") r.element = v;
    else if (k == "format") r.format = v;
    else if (k == "mode") r.mode = v;
    else throw input_error("malformed cache key field " + k);
  }
  return r;
}

std::string render_euler_text(const EulerVerdict& v) {
  std::ostringstream out;
  out << "Gamma(" << v.spec.name() << "): predicted "
      << (v.predicted_eulerian ? "Eulerian" : "not Eulerian") << "\n";
  if (v.empirical) {
    out << "  connected: " << (v.empirical->connected ? "yes" : "no")
        << " (components: " << v.empirical->component_count << ")\n";
    out << "  all degrees even: " << (v.empirical->all_even ? "yes" : "no") << "\n";
    if (v.empirical->odd_witness)
      out << "  odd-degree witness: " << format_cycles(*v.empirical->odd_witness)
          << "\n";
  }
  if (v.edge_count) out << "  edges: " << *v.edge_count << "\n";
  if (v.circuit)
    out << "  circuit: " << v.circuit->size() - 1 << " edges, starts at "
        << format_cycles(v.circuit->front()) << "\n";
  return out.str();
}

std::string render_lattice_text(const SubgroupLattice& lat) {
  std::ostringstream out;
  out << "Overgroup lattice of " << format_cycles(lat.base_generator) << " in "
      << lat.spec.name() << " (" << lat.nodes.size() << " subgroups)\n";
  if (lat.cap_warning)
    out << "  note: group order above the soft lattice cap\n";
  for (size_t i = 0; i < lat.nodes.size(); ++i) {
    const auto& node = lat.nodes[i];
    out << "  [" << i << "] |H| = " << node.order << ", mu = " << node.mobius
        << ", " << node.structure_hint << "\n";
  }
  out << "  cover relations:";
  for (const auto& [sub, super] : lat.hasse_edges)
    out << " " << sub << "<" << super;
  out << "\n";
  return out.str();
}

std::string render_symbolic_text(const SymbolicLattice& lat) {
  std::ostringstream out;
  out << "Printed lattice for " << lat.spec.name() << ", elements of order "
      << lat.generator_order << " (symbolic re-evaluation, not enumerated)\n";
  for (const auto& node : lat.nodes)
    out << "  " << node.name << ": |H| = " << node.order.str()
        << ", mu = " << node.mobius << "\n";
  out << "  degree parity from the printed values: "
      << (lat.degree_parity_odd() ? "odd" : "even") << "\n";
  return out.str();
}

Permutation element_for(const OpRequest& r) {
  if (r.element.empty())
    throw input_error("this operation needs --element \"<cycle string>\"");
  return parse_cycles(r.element, r.n);
}

GroupSpec spec_for(const OpRequest& r) {
  return GroupSpec(parse_family(r.group), r.n);
}

// Single computation entry point: both the subcommands and the cache audit
// produce payloads through here, so audits recompute byte-identically.
std::string compute_payload(const OpRequest& r, const Caps& caps) {
  if (r.op == "degrees") {
    const DegreeReport report = degree_table(spec_for(r), caps);
    if (r.format == "json") return degree_report_to_json(report).dump(2) + "\n";
    if (r.format == "csv") return degree_report_to_csv(report);
    return degree_report_to_text(report);
  }
  if (r.op == "degree") {
    const GroupSpec spec = spec_for(r);
    const Permutation g = element_for(r);
    const uint64_t d = vertex_degree(spec, g, caps);
    if (r.format == "json") {
      ojson j{{"group", group_to_json(spec)},
              {"element", format_cycles(g)},
              {"degree", d}};
      return j.dump(2) + "\n";
    }
    return "delta(" + format_cycles(g) + ") in Gamma(" + spec.name() + ") = " +
           std::to_string(d) + "\n";
  }
  if (r.op == "euler") {
    EulerMode mode = EulerMode::PredicateOnly;
    if (r.mode == "empirical") mode = EulerMode::Empirical;
    else if (r.mode == "circuit") mode = EulerMode::WithCircuit;
    else if (r.mode != "predicate") throw input_error("unknown euler mode " + r.mode);
    const EulerVerdict verdict = euler_verdict(spec_for(r), mode, caps);
    if (r.format == "json") return euler_verdict_to_json(verdict).dump(2) + "\n";
    return render_euler_text(verdict);
  }
  if (r.op == "lattice" || r.op == "mobius") {
    const GroupSpec spec = spec_for(r);
    if (spec.order() > caps.lattice_hard_cap) {
      const auto symbolic = printed_lattice(spec);
      if (symbolic) {
        if (r.format == "json")
          return symbolic_lattice_to_json(*symbolic).dump(2) + "\n";
        if (r.format == "dot")
          throw input_error("no DOT output for symbolic lattices");
        return render_symbolic_text(*symbolic);
      }
      throw resource_error("lattice for " + spec.name() +
                           " exceeds lattice_hard_cap and no printed lattice "
                           "is available");
    }
    const Permutation g = element_for(r);
    SubgroupLattice lattice = overgroup_lattice(spec, g, caps);
    mobius_values(lattice);
    if (r.op == "mobius") {
      long long sum = 0;
      for (const auto& node : lattice.nodes)
        sum += node.mobius * static_cast<long long>(node.order);
      if (lattice.nodes.front().order == spec.order_u64()) sum -= 2;
      if (r.format == "json") {
        ojson j{{"group", group_to_json(spec)},
                {"element", format_cycles(g)},
                {"degree_via_mobius", sum},
                {"lattice", lattice_to_json(lattice)}};
        return j.dump(2) + "\n";
      }
      return render_lattice_text(lattice) + "degree via Mobius sum: " +
             std::to_string(sum) + "\n";
    }
    if (r.format == "json") return lattice_to_json(lattice).dump(2) + "\n";
    if (r.format == "dot") return lattice_to_dot(lattice);
    return render_lattice_text(lattice);
  }
  if (r.op == "normalizer") {
    const GroupSpec spec = spec_for(r);
    const NormalizerReport report =
        normalizer_of_cyclic(spec, element_for(r), caps);
    if (r.format == "json") return normalizer_to_json(spec, report).dump(2) + "\n";
    std::ostringstream out;
    out << "N_" << spec.name() << "(<" << format_cycles(report.generator)
        << ">): order " << report.normalizer_order.str() << ", centralizer "
        << report.centralizer_order.str() << ", |g| = " << report.m
        << ", realized residues:";
    for (int i : report.power_images) out << " " << i;
    out << " (" << report.method << ")\n";
    return out.str();
  }
  if (r.op == "decompose") {
    const Family family = parse_family(r.group);
    const auto certs = decompositions(r.n, family);
    if (r.format == "json")
      return decompositions_to_json(r.n, family, certs).dump(2) + "\n";
    if (certs.empty())
      return "no decomposition of " + std::to_string(r.n) + " for " + r.group +
             "\n";
    std::string out;
    for (const auto& cert : certs)
      out += cert.render() + "  shape {" + cert.shape.to_string() + "}\n";
    return out;
  }
  if (r.op == "prob") {
    const ProbabilityReport report = odd_degree_probability(spec_for(r), caps);
    if (r.format == "json") return probability_to_json(report).dump(2) + "\n";
    std::string out = "P(odd degree in Gamma(" + report.spec.name() + ")) = " +
                      report.numerator.str() + "/" + report.denominator.str();
    if (report.odd_vertex_count)
      out += "  (odd vertices: " + std::to_string(*report.odd_vertex_count) + ")";
    return out + "\n";
  }
  throw input_error("unknown operation " + r.op);
}

bool op_is_cacheable(const std::string& op) {
  return op == "degrees" || op == "euler" || op == "lattice" || op == "mobius" ||
         op == "normalizer";
}

struct CliState {
  Caps caps;
  std::string config_path;
  std::string cache_dir;
  bool no_cache = false;
};

std::string payload_via_cache(const OpRequest& r, const CliState& state) {
  if (state.no_cache || !op_is_cacheable(r.op))
    return compute_payload(r, state.caps);
  const ResultCache cache(state.cache_dir);
  const std::string key = request_key(r);
  if (auto hit = cache.get(key)) return *hit;
  std::string payload = compute_payload(r, state.caps);
  cache.put(key, payload);
  return payload;
}

void add_caps_flags(CLI::App* cmd, CliState& state) {
  cmd->add_option("--threads", state.caps.threads, "worker threads (0 = auto)");
  cmd->add_option("--enumeration-cap", state.caps.enumeration_cap,
                  "largest n for element enumeration");
  cmd->add_option("--scan-cap", state.caps.scan_cap,
                  "largest n for normalizer scans");
  cmd->add_option("--lattice-cap", state.caps.lattice_cap,
                  "largest group order for lattices");
  cmd->add_option("--connectivity-cap", state.caps.connectivity_cap,
                  "largest n for connectivity BFS");
  cmd->add_option("--circuit-cap", state.caps.circuit_cap,
                  "largest n for Euler circuits");
  cmd->add_option("--config", state.config_path, "caps config file (JSON)");
  cmd->add_option("--cache-dir", state.cache_dir, "result cache directory");
  cmd->add_flag("--no-cache", state.no_cache, "bypass the result cache");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"generating-graph computations for alternating and symmetric groups"};
  app.footer(
      "exit codes: 0 ok, 1 verification failure, 2 bad input, 3 element not in "
      "group, 4 cap exceeded, 5 I/O error");
  app.require_subcommand(1);

  CliState state;
  state.cache_dir = default_cache_dir();

  OpRequest req;
  std::string certificate_path, dot_path, suite_arg = "all", cache_action;
  std::string ledger_format = "markdown";

  const auto add_group_n = [&](CLI::App* cmd, bool need_element) {
    cmd->add_option("--group", req.group, "alt or sym")->required();
    cmd->add_option("--n", req.n, "degree n")->required();
    if (need_element)
      cmd->add_option("--element", req.element, "cycle string, e.g. \"(1 2 3)\"");
    cmd->add_option("--format", req.format, "json, csv or text");
    add_caps_flags(cmd, state);
  };

  CLI::App* degrees = app.add_subcommand("degrees", "class-level degree table");
  add_group_n(degrees, false);
  CLI::App* degree_cmd = app.add_subcommand("degree", "degree of one vertex");
  add_group_n(degree_cmd, true);
  CLI::App* euler = app.add_subcommand("euler", "Eulerian verdict / circuit");
  add_group_n(euler, false);
  euler->add_option("--mode", req.mode, "predicate, empirical or circuit");
  euler->add_option("--certificate", certificate_path,
                    "write the circuit as a JSON array to this file");
  CLI::App* mobius_cmd =
      app.add_subcommand("mobius", "degree via the Mobius-function sum");
  add_group_n(mobius_cmd, true);
  CLI::App* lattice_cmd =
      app.add_subcommand("lattice", "overgroup lattice of a cyclic subgroup");
  add_group_n(lattice_cmd, true);
  lattice_cmd->add_option("--dot", dot_path, "also write a DOT rendering here");
  CLI::App* decompose = app.add_subcommand("decompose", "prime-power sum witnesses");
  decompose->add_option("--n", req.n, "the integer to decompose")->required();
  decompose->add_option("--group", req.group, "alt or sym");
  decompose->add_option("--format", req.format, "json or text");
  CLI::App* prob = app.add_subcommand("prob", "odd-degree probability");
  add_group_n(prob, false);
  CLI::App* normalizer_cmd =
      app.add_subcommand("normalizer", "normalizer of a cyclic subgroup");
  add_group_n(normalizer_cmd, true);
  CLI::App* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--suite", suite_arg,
                     "suite name or \"all\" (see README for the list)");
  verify->add_option("--format", ledger_format, "json, csv or markdown");
  add_caps_flags(verify, state);
  CLI::App* cache_cmd = app.add_subcommand("cache", "result cache administration");
  cache_cmd->add_option("action", cache_action, "stats, clear or audit")
      ->required();
  cache_cmd->add_option("--cache-dir", state.cache_dir, "cache directory");

  // Config file loads before CLI11 writes flag values, so explicit flags
  // override file entries.
  try {
    for (size_t i = 0; i < args.size(); ++i) {
      if (args[i] == "--config" && i + 1 < args.size())
        state.caps = load_caps_file(args[i + 1]);
      else if (args[i].rfind("--config=", 0) == 0)
        state.caps = load_caps_file(args[i].substr(9));
    }
  } catch (const io_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const input_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitInput;
  }

  try {
    if (degrees->parsed()) req.op = "degrees";
    else if (degree_cmd->parsed()) req.op = "degree";
    else if (euler->parsed()) {
      req.op = "euler";
      if (req.mode.empty()) {
        if (req.n <= state.caps.circuit_cap) req.mode = "circuit";
        else if (req.n <= state.caps.connectivity_cap) req.mode = "empirical";
        else req.mode = "predicate";
      }
    } else if (mobius_cmd->parsed()) req.op = "mobius";
    else if (lattice_cmd->parsed()) req.op = "lattice";
    else if (decompose->parsed()) {
      req.op = "decompose";
      if (req.group.empty()) req.group = "sym";
    } else if (prob->parsed()) req.op = "prob";
    else if (normalizer_cmd->parsed()) req.op = "normalizer";

    if (verify->parsed()) {
      std::vector<SuiteId> suites;
      if (suite_arg == "all") suites = all_suites();
      else suites.push_back(parse_suite(suite_arg));
      LedgerFormat format = LedgerFormat::Markdown;
      if (ledger_format == "json") format = LedgerFormat::Json;
      else if (ledger_format == "csv") format = LedgerFormat::Csv;
      else if (ledger_format != "markdown")
        throw input_error("unknown ledger format " + ledger_format);
      size_t failures = 0;
      for (SuiteId id : suites) {
        const FactLedger ledger = run_suite(id, state.caps);
        failures += ledger.failed_count();
        out << export_ledger(ledger, format);
        if (format == LedgerFormat::Markdown) out << "\n";
      }
      return failures == 0 ? kExitOk : kExitFailure;
    }

    if (cache_cmd->parsed()) {
      const ResultCache cache(state.cache_dir);
      if (cache_action == "stats") {
        const auto s = cache.stats();
        out << "cache " << cache.dir() << ": " << s.entries << " entries, "
            << s.bytes << " bytes\n";
        return kExitOk;
      }
      if (cache_action == "clear") {
        out << "removed " << cache.clear() << " entries\n";
        return kExitOk;
      }
      if (cache_action == "audit") {
        size_t checked = 0, mismatches = 0;
        for (const auto& entry : cache.entries()) {
          OpRequest stored;
          try {
            stored = parse_key(entry.key);
          } catch (const input_error&) {
            continue;  // other version; not auditable
          }
          const std::string fresh = compute_payload(stored, state.caps);
          ++checked;
          if (fresh != entry.payload) {
            ++mismatches;
            err << "MISMATCH " << entry.key << "\n";
          }
        }
        out << "audited " << checked << " entries, " << mismatches
            << " mismatches\n";
        return mismatches == 0 ? kExitOk : kExitFailure;
      }
      throw input_error("unknown cache action " + cache_action);
    }

    if (req.op.empty()) throw input_error("no subcommand given");

    const std::string payload = payload_via_cache(req, state);
    out << payload;

    if (req.op == "euler" && !certificate_path.empty()) {
      OpRequest jreq = req;
      jreq.format = "json";
      const std::string jpayload = payload_via_cache(jreq, state);
      const ojson verdict = ojson::parse(jpayload);
      if (!verdict.contains("circuit") || verdict["circuit"].is_null())
        throw input_error("no circuit available to write (graph not Eulerian "
                          "or mode without circuit)");
      std::ofstream cert(certificate_path, std::ios::trunc);
      if (!cert) throw io_error("cannot write " + certificate_path);
      cert << verdict["circuit"].dump(2) << "\n";
      out << "circuit written to " << certificate_path << "\n";
    }
    if (req.op == "lattice" && !dot_path.empty()) {
      OpRequest dreq = req;
      dreq.format = "dot";
      const std::string dot = payload_via_cache(dreq, state);
      std::ofstream dotf(dot_path, std::ios::trunc);
      if (!dotf) throw io_error("cannot write " + dot_path);
      dotf << dot;
      out << "DOT written to " << dot_path << "\n";
    }
    return kExitOk;
  } catch (const membership_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitMembership;
  } catch (const resource_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const io_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const input_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace gengraph
