#include "gengraph/euler.hpp"

#include <algorithm>
#include <deque>

#include "gengraph/errors.hpp"
#include "gengraph/numtheory.hpp"

namespace gengraph {

namespace {

// Connectivity over the identity-free vertex set with on-demand adjacency.
// Expansion stops as soon as every vertex has been seen, so connected dense
// graphs finish after a handful of neighbor scans.
std::pair<bool, int> connectivity(const GroupSpec& spec, const ElementTable& table) {
  const size_t total = table.size() - 1;  // identity (index 0) is not a vertex
  std::vector<bool> visited(table.size(), false);
  size_t seen = 0;
  int components = 0;
  std::deque<size_t> queue;
  for (size_t start = 1; start < table.size() && seen < total; ++start) {
    if (visited[start]) continue;
    ++components;
    visited[start] = true;
    ++seen;
    queue.clear();
    queue.push_back(start);
    while (!queue.empty() && seen < total) {
      const size_t v = queue.front();
      queue.pop_front();
      const uint8_t* vimg = table.at(v);
      for (size_t w = 1; w < table.size(); ++w) {
        if (visited[w]) continue;
        if (!generates_raw(spec, vimg, table.at(w))) continue;
        visited[w] = true;
        ++seen;
        queue.push_back(w);
        if (seen == total) break;
      }
    }
  }
  return {components == 1, components};
}

struct EdgeList {
  // adjacency[v] lists (neighbor, edge id), neighbors ascending
  std::vector<std::vector<std::pair<uint32_t, uint32_t>>> adjacency;
  uint64_t edges = 0;
};

EdgeList build_edges(const GroupSpec& spec, const ElementTable& table) {
  EdgeList el;
  el.adjacency.resize(table.size());
  for (size_t i = 1; i < table.size(); ++i) {
    const uint8_t* a = table.at(i);
    for (size_t j = i + 1; j < table.size(); ++j) {
      if (!generates_raw(spec, a, table.at(j))) continue;
      const uint32_t id = static_cast<uint32_t>(el.edges++);
      el.adjacency[i].emplace_back(static_cast<uint32_t>(j), id);
      el.adjacency[j].emplace_back(static_cast<uint32_t>(i), id);
    }
  }
  return el;
}

std::vector<size_t> hierholzer(const EdgeList& el, size_t start) {
  std::vector<bool> used(el.edges, false);
  std::vector<size_t> cursor(el.adjacency.size(), 0);
  std::vector<size_t> stack{start};
  std::vector<size_t> circuit;
  while (!stack.empty()) {
    const size_t v = stack.back();
    auto& adj = el.adjacency[v];
    size_t& cur = cursor[v];
    while (cur < adj.size() && used[adj[cur].second]) ++cur;
    if (cur == adj.size()) {
      circuit.push_back(v);
      stack.pop_back();
    } else {
      used[adj[cur].second] = true;
      stack.push_back(adj[cur].first);
    }
  }
  std::reverse(circuit.begin(), circuit.end());
  return circuit;
}

}  // namespace

EulerVerdict euler_verdict(const GroupSpec& spec, EulerMode mode, const Caps& caps) {
  EulerVerdict verdict{spec, eulerian_predicate(spec.n), std::nullopt,
                       std::nullopt, std::nullopt};
  if (mode == EulerMode::PredicateOnly) return verdict;

  if (mode == EulerMode::Empirical && spec.n > caps.connectivity_cap)
    throw resource_error("empirical Euler verdict for " + spec.name() +
                         " exceeds connectivity_cap = " +
                         std::to_string(caps.connectivity_cap));
  if (mode == EulerMode::WithCircuit && spec.n > caps.circuit_cap)
    throw resource_error("Euler circuit for " + spec.name() +
                         " exceeds circuit_cap = " +
                         std::to_string(caps.circuit_cap));

  const DegreeReport table = degree_table(spec, caps);
  EmpiricalEuler emp;
  emp.all_even = true;
  for (const auto& row : table.rows) {
    if (row.parity_odd && !emp.odd_witness) {
      emp.all_even = false;
      emp.odd_witness = row.representative;
    }
  }
  const ElementTable& elements = ElementTable::get(spec, caps);
  const auto [connected, components] = connectivity(spec, elements);
  emp.connected = connected;
  emp.component_count = components;
  verdict.empirical = emp;

  if (mode == EulerMode::WithCircuit && verdict.predicted_eulerian &&
      emp.connected && emp.all_even) {
    const EdgeList el = build_edges(spec, elements);
    verdict.edge_count = el.edges;
    const std::vector<size_t> path = hierholzer(el, 1);
    std::vector<Permutation> circuit;
    circuit.reserve(path.size());
    for (size_t idx : path) circuit.push_back(elements.perm_at(idx));
    verdict.circuit = std::move(circuit);
  } else if (mode == EulerMode::WithCircuit) {
    const EdgeList el = build_edges(spec, elements);
    verdict.edge_count = el.edges;
  }
  return verdict;
}

}  // namespace gengraph
