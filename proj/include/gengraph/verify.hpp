#pragma once

#include <string>
#include <vector>

#include "gengraph/config.hpp"

namespace gengraph {

enum class SuiteId {
  SmallCases,
  TheoremParity,
  MobiusAgreement,
  NormalizerLaws,
  Criterion,
  DecompositionBiconditional,
  Probability,
  EulerCertificates,
  Hio,
};

std::vector<SuiteId> all_suites();
std::string suite_name(SuiteId id);
SuiteId parse_suite(const std::string& name);

enum class FactStatus { Pass, Fail, Skipped };

struct FactEntry {
  std::string fact_id;
  std::string claim;  // the mathematical statement under test
  std::string scope;  // group / range the check ran over
  FactStatus status = FactStatus::Skipped;
  std::string observed;
  std::string expected;
  long long runtime_ms = 0;
};

struct FactLedger {
  std::string suite;
  std::vector<FactEntry> entries;

  bool all_passed() const;  // no Fail entries (Skipped is fine)
  size_t failed_count() const;
};

// Deterministic modulo runtime_ms. Facts beyond the caps appear as Skipped
// entries with the reason, never silently dropped.
FactLedger run_suite(SuiteId id, const Caps& caps);

enum class LedgerFormat { Json, Csv, Markdown };
std::string export_ledger(const FactLedger& ledger, LedgerFormat format);

}  // namespace gengraph
