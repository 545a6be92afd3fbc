#pragma once

// Batch comparison of computed dimensions against every closed form over a
// grid of (d, defect, t) and seeds. Cases run on a worker pool; the report
// is assembled in case order, so identical options give identical output.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gha/analysis.hpp"
#include "gha/fixtures.hpp"

namespace gha {

struct SweepOptions {
  std::size_t d_min = 3;
  std::size_t d_max = 6;
  std::vector<std::size_t> defects = {1, 2, 3};
  std::size_t t_min = 0;
  std::size_t t_max = 2;
  std::size_t seeds = 5;
  std::uint64_t base_seed = 1;
  bool include_printed_j2 = true;
  bool oracle = true;
  std::size_t max_cases = 10000;
  std::size_t threads = 0;  // 0: GHA_THREADS, else the hardware count
};

// Canonical fixtures (both defect-3 variants) plus `seeds` seeded instances
// per (d, defect), each extended by A(t). Throws PreconditionError on an
// empty or inverted range, or when the case count exceeds max_cases.
std::vector<Fixture> sweep_cases(const SweepOptions& options);

struct SweepRow {
  std::string name;
  FamilyParams family;
  std::optional<std::uint64_t> seed;
  Dimensions dims;
  std::vector<Comparison> comparisons;
  std::optional<OracleComparison> oracle;
};

struct SweepSummary {
  std::size_t rows = 0;
  std::size_t comparisons = 0;
  std::size_t matches = 0;
  std::size_t expected_mismatches = 0;
  std::size_t unexpected_mismatches = 0;
  std::size_t oracle_disagreements = 0;
  std::vector<std::string> observed_expected;    // ledger formulas seen failing
  std::vector<std::string> unobserved_expected;  // ledger formulas never seen failing
};

struct SweepReport {
  SweepOptions options;
  std::vector<SweepRow> rows;
  SweepSummary summary;

  bool ok() const { return summary.unexpected_mismatches == 0 && summary.oracle_disagreements == 0; }
};

SweepRow run_case(const Fixture& f, const SweepOptions& options);
SweepReport run_sweep(const SweepOptions& options);

// requested > 0 wins; then a positive GHA_THREADS; then the hardware count.
std::size_t worker_count(std::size_t requested = 0);

Json to_json(const SweepOptions& o);
Json to_json(const SweepRow& r);
Json to_json(const SweepReport& r);

}  // namespace gha
