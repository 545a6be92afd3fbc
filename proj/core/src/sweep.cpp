#include "gha/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <set>
#include <thread>

#include "gha/errors.hpp"
#include "gha/hopf.hpp"

namespace gha {

std::vector<Fixture> sweep_cases(const SweepOptions& o) {
  if (o.d_min < 3 || o.d_min > o.d_max) throw PreconditionError("d range must satisfy 3 <= min <= max");
  if (o.t_min > o.t_max) throw PreconditionError("t range must satisfy min <= max");
  if (o.defects.empty()) throw PreconditionError("no defects selected");
  for (std::size_t k : o.defects) {
    if (k < 1 || k > 3) throw PreconditionError("defects must lie in 1..3");
  }

  std::vector<Fixture> base;
  for (std::size_t d = o.d_min; d <= o.d_max; ++d) {
    for (std::size_t k : o.defects) {
      if (k >= wedge_dim(d)) continue;
      base.push_back(canonical_fixture(d, k));
      if (k == 3) base.push_back(canonical_fixture(d, k, Variant::deficient));
      for (std::size_t s = 0; s < o.seeds; ++s) base.push_back(seeded_fixture(d, k, o.base_seed + s));
    }
  }
  const std::size_t total = base.size() * (o.t_max - o.t_min + 1);
  if (total > o.max_cases) {
    throw PreconditionError("sweep has " + std::to_string(total) + " cases, above the cap of " +
                            std::to_string(o.max_cases));
  }
  std::vector<Fixture> cases;
  cases.reserve(total);
  for (const auto& f : base) {
    for (std::size_t t = o.t_min; t <= o.t_max; ++t) cases.push_back(with_abelian(f, t));
  }
  return cases;
}

SweepRow run_case(const Fixture& f, const SweepOptions& options) {
  SweepRow row;
  row.name = f.name;
  row.seed = f.seed;
  row.dims = compute_dimensions(f.algebra);
  row.family = {f.d, f.t, f.defect, f.defect == 3 ? realized_variant(row.dims, f.d, f.t) : Variant::generic};
  row.comparisons = compare(row.dims, row.family, options.include_printed_j2);
  if (options.oracle) row.oracle = oracle_compare(f.algebra);
  return row;
}

std::size_t worker_count(std::size_t requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("GHA_THREADS")) {
    char* end = nullptr;
    const unsigned long n = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && n > 0) return n;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

SweepReport run_sweep(const SweepOptions& options) {
  const std::vector<Fixture> cases = sweep_cases(options);
  SweepReport report;
  report.options = options;
  report.rows.resize(cases.size());

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (std::size_t i = next++; i < cases.size(); i = next++) {
      try {
        report.rows[i] = run_case(cases[i], options);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = cases.size();
      }
    }
  };
  const std::size_t workers = std::min(worker_count(options.threads), std::max<std::size_t>(cases.size(), 1));
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  SweepSummary& s = report.summary;
  std::set<std::string> observed;
  for (const auto& row : report.rows) {
    ++s.rows;
    for (const auto& c : row.comparisons) {
      ++s.comparisons;
      switch (c.status) {
        case Status::match:
          ++s.matches;
          break;
        case Status::expected_mismatch:
          ++s.expected_mismatches;
          observed.insert(c.formula);
          break;
        default:
          ++s.unexpected_mismatches;
      }
    }
    if (row.oracle && !row.oracle->agrees()) ++s.oracle_disagreements;
  }
  for (const auto& e : expected_mismatches()) {
    if (!options.include_printed_j2 && e.formula.find(".j2.") != std::string::npos) continue;
    (observed.count(e.formula) ? s.observed_expected : s.unobserved_expected).push_back(e.formula);
  }
  return report;
}

Json to_json(const SweepOptions& o) {
  return {{"d_min", o.d_min},
          {"d_max", o.d_max},
          {"defects", o.defects},
          {"t_min", o.t_min},
          {"t_max", o.t_max},
          {"seeds", o.seeds},
          {"base_seed", o.base_seed},
          {"include_printed_j2", o.include_printed_j2},
          {"oracle", o.oracle}};
}

Json to_json(const SweepRow& r) {
  Json j = {{"name", r.name}, {"family", to_json(r.family)}};
  j["seed"] = r.seed ? Json(*r.seed) : Json(nullptr);
  j["dims"] = to_json(r.dims);
  Json comparisons = Json::array();
  for (const auto& c : r.comparisons) comparisons.push_back(to_json(c));
  j["comparisons"] = std::move(comparisons);
  if (r.oracle) j["oracle"] = to_json(*r.oracle);
  return j;
}

Json to_json(const SweepReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) rows.push_back(to_json(row));
  const SweepSummary& s = r.summary;
  Json summary = {{"rows", s.rows},
                  {"comparisons", s.comparisons},
                  {"matches", s.matches},
                  {"expected_mismatches", s.expected_mismatches},
                  {"unexpected_mismatches", s.unexpected_mismatches},
                  {"oracle_disagreements", s.oracle_disagreements},
                  {"observed_expected", s.observed_expected},
                  {"unobserved_expected", s.unobserved_expected},
                  {"ok", r.ok()}};
  return {{"options", to_json(r.options)}, {"summary", std::move(summary)}, {"rows", std::move(rows)}};
}

}  // namespace gha
