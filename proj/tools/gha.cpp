#include <algorithm>
#include <charconv>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include <CLI11.hpp>

#include "gha/analysis.hpp"
#include "gha/document.hpp"
#include "gha/errors.hpp"
#include "gha/fixtures.hpp"
#include "gha/hopf.hpp"
#include "gha/sweep.hpp"

namespace {

using namespace gha;

enum Exit { kOk = 0, kUsage = 2, kConstruction = 3, kInvariant = 4, kMismatch = 5 };

struct Globals {
  std::optional<std::uint64_t> seed;
  std::string out = "-";
  bool oracle = false;
  bool json = false;
};

struct JacobiViolation : Error {
  using Error::Error;
};

// "a..b" or "a"
std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
  auto number = [&](std::string_view s) {
    std::size_t v = 0;
    auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || end != s.data() + s.size()) throw ParseError("bad range \"" + text + "\"");
    return v;
  };
  const std::string_view view(text);
  const auto dots = view.find("..");
  if (dots == std::string_view::npos) return {number(view), number(view)};
  return {number(view.substr(0, dots)), number(view.substr(dots + 2))};
}

std::vector<std::size_t> parse_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    auto [lo, hi] = parse_range(item);
    for (std::size_t v = lo; v <= hi; ++v) out.push_back(v);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

// "1-2" or "1^2": the wedge x1 ^ x2.
Subspace parse_relations(std::size_t d, const std::vector<std::string>& relations) {
  std::vector<SparseVector> rows;
  for (const auto& r : relations) {
    const auto sep = r.find_first_of("-^");
    if (sep == std::string::npos) throw ParseError("relation \"" + r + "\" is not of the form i-j");
    auto [i, i2] = parse_range(r.substr(0, sep));
    auto [j, j2] = parse_range(r.substr(sep + 1));
    if (i != i2 || j != j2 || i < 1 || j < 1 || i > d || j > d || i == j) {
      throw ParseError("relation \"" + r + "\" needs two distinct generators in 1.." + std::to_string(d));
    }
    rows.push_back(SparseVector::unit(wedge_index(d, std::min(i, j) - 1, std::max(i, j) - 1)));
  }
  return Subspace::span(wedge_dim(d), rows);
}

void check_jacobi(const LieAlgebra& a) {
  const auto bad = jacobi_check(a);
  if (!bad.empty()) {
    const auto& t = bad.front();
    throw JacobiViolation("Jacobi identity fails on basis triple (" + std::to_string(t[0]) + ", " +
                          std::to_string(t[1]) + ", " + std::to_string(t[2]) + ")");
  }
}

LieAlgebra load(const std::string& path) {
  AlgebraDocument doc = read_document(path);
  check_jacobi(doc.algebra);
  return std::move(doc.algebra);
}

// Document to `out`; human-readable or JSON notes to whichever stream is
// not carrying the document.
std::ostream& notes(const Globals& g) { return g.out == "-" ? std::cerr : std::cout; }

void emit(const Globals& g, const Json& j) { write_text(g.out, j.dump(2) + "\n"); }

struct GenArgs {
  std::string family = "gh";
  std::size_t d = 0;
  std::optional<std::size_t> rank;
  bool canonical = false;
  std::string variant = "generic";
  std::vector<std::string> relations;
  std::size_t n = 0;
  std::size_t m = 1;
  std::size_t t = 0;
};

Json summary_json(const LieAlgebra& a) {
  const auto cls = nilpotency_class(a);
  return {{"dim", a.dim()},
          {"class", cls ? Json(*cls) : Json(nullptr)},
          {"derived_dim", derived_subalgebra(a).dim()},
          {"center_equals_derived", is_generalized_heisenberg(a)}};
}

int cmd_gen(const Globals& g, const GenArgs& args) {
  AlgebraDocument doc;
  Json meta = {{"family", args.family}};
  if (args.family == "abelian") {
    doc.algebra = abelian(args.n);
    meta["n"] = args.n;
  } else if (args.family == "heisenberg") {
    if (args.m < 1) throw PreconditionError("--m must be at least 1");
    doc.algebra = heisenberg(args.m);
    meta["m"] = args.m;
  } else if (args.family == "gh" || args.family == "sum") {
    if (args.d < 3) throw PreconditionError("--d must be at least 3");
    if (args.variant != "generic" && args.variant != "deficient") throw PreconditionError("--variant is generic or deficient");
    const Variant variant = args.variant == "deficient" ? Variant::deficient : Variant::generic;
    Fixture f;
    if (args.canonical || variant == Variant::deficient) {
      if (!args.rank) throw PreconditionError("--canonical needs --rank");
      if (*args.rank < 1 || *args.rank > wedge_dim(args.d)) throw PreconditionError("--rank out of range");
      const std::size_t defect = wedge_dim(args.d) - *args.rank;
      if (defect > 3) throw PreconditionError("canonical instances exist for defects 0..3 only");
      if (variant == Variant::deficient && defect != 3) throw PreconditionError("the deficient variant needs defect 3");
      f = canonical_fixture(args.d, defect, variant);
      meta["variant"] = args.variant;
    } else if (!args.relations.empty()) {
      GhSpec spec;
      spec.d = args.d;
      spec.relation_subspace = parse_relations(args.d, args.relations);
      spec.rank = args.rank.value_or(wedge_dim(args.d) - spec.relation_subspace->dim());
      f.algebra = gh_construct(spec);
      f.name = "gh-d" + std::to_string(args.d) + "-relations";
      meta["relations"] = args.relations;
    } else {
      if (!args.rank) throw PreconditionError("--rank is required");
      GhSpec spec;
      spec.d = args.d;
      spec.rank = *args.rank;
      spec.seed = g.seed.value_or(1);
      f.algebra = gh_construct(spec);
      f.name = "gh-d" + std::to_string(args.d) + "-r" + std::to_string(spec.rank) + "-s" + std::to_string(*spec.seed);
      meta["seed"] = *spec.seed;
    }
    meta["d"] = args.d;
    meta["rank"] = derived_subalgebra(f.algebra).dim();
    if (args.family == "sum") {
      f = with_abelian(f, args.t);
      meta["t"] = args.t;
    }
    meta["name"] = f.name;
    doc.algebra = std::move(f.algebra);
  } else {
    throw PreconditionError("unknown family \"" + args.family + "\"");
  }
  doc.meta = std::move(meta);
  write_document(g.out, doc);

  const Json s = summary_json(doc.algebra);
  if (g.json) {
    notes(g) << s.dump() << "\n";
  } else {
    notes(g) << "dim " << s["dim"] << "\nclass " << s["class"] << "\ndim L^2 " << s["derived_dim"]
             << "\nZ = L^2 " << (s["center_equals_derived"].get<bool>() ? "yes" : "no") << "\n";
  }
  return kOk;
}

int cmd_analyze(const Globals& g, const std::string& input, bool exclude_j2) {
  const LieAlgebra a = load(input);
  AnalysisOptions options;
  options.oracle = g.oracle;
  options.include_printed_j2 = !exclude_j2;
  if (g.seed) options.capability_options.seed = *g.seed;
  const Analysis result = analyze(a, options);
  emit(g, to_json(result));
  return result.ok() ? kOk : kMismatch;
}

Json to_json(const CoverReport& r) {
  const ExtensionWitness& w = r.witness;
  return {{"class", r.nilpotency_class},
          {"class_three", r.class_three},
          {"center_in_derived", r.center_in_derived},
          {"dim_matches", r.dim_matches},
          {"quotient_matches", r.quotient_matches},
          {"cube_in_ideal", r.cube_in_ideal},
          {"ideal_dim", r.ideal_dim},
          {"cube_dim", r.cube_dim},
          {"s", r.s},
          {"defect", r.defect},
          {"branch_ok", r.branch_ok},
          {"witness",
           {{"dim", w.dim}, {"jacobi_ok", w.jacobi_ok}, {"m_L", w.multiplier}, {"cube_dim", w.cube_dim}, {"s", w.s}}},
          {"witness_agrees", r.witness_agrees},
          {"ok", r.ok()}};
}

int cmd_cover(const Globals& g, const std::string& input) {
  const LieAlgebra a = load(input);
  const FreePresentation p = presentation_from_class2(a);
  Cover cover = cover_construct(p);
  check_jacobi(cover.algebra);
  const CoverReport report = verify_cover(a, cover.algebra, cover.central_ideal);

  Json b = Json::array();
  for (std::size_t r = 0; r < cover.central_ideal.dim(); ++r) {
    Json row = Json::object();
    for (const auto& e : cover.central_ideal.basis().row(r).entries()) row[std::to_string(e.index)] = to_string(e.value);
    b.push_back(std::move(row));
  }
  AlgebraDocument doc{std::move(cover.algebra), {{"family", "cover"}, {"B", std::move(b)}}};
  write_document(g.out, doc);

  const Json j = to_json(report);
  if (g.json) {
    notes(g) << j.dump() << "\n";
  } else {
    notes(g) << "cover dim " << doc.algebra.dim() << ", class " << report.nilpotency_class << ", dim B "
             << report.ideal_dim << ", dim cover^3 " << report.cube_dim << ", s " << report.s << "\n"
             << (report.consistent() ? "verified" : "verification FAILED") << "\n";
  }
  return report.consistent() ? kOk : kMismatch;
}

int cmd_capable(const Globals& g, const std::string& input) {
  const LieAlgebra a = load(input);
  CapabilityOptions options;
  if (g.seed) options.seed = *g.seed;
  const CapabilityReport report = capability_by_quotients(a, options);
  if (g.json) {
    emit(g, to_json(report));
  } else {
    std::ostringstream s;
    s << (report.capable ? "capable" : "not capable") << " (exterior center dim " << report.exterior_center_dim
      << ", m_L " << report.multiplier << ", every sampled central quotient drops: "
      << (report.all_quotients_drop ? "yes" : "no") << ")\n";
    write_text(g.out, s.str());
  }
  return kOk;
}

int cmd_oracle_compare(const Globals& g, const std::string& input) {
  const LieAlgebra a = load(input);
  const OracleComparison o = oracle_compare(a);
  if (g.json) {
    emit(g, to_json(o));
  } else {
    std::ostringstream s;
    s << "m_L " << o.multiplier << " / hopf " << o.hopf_multiplier << "\nwedge " << o.wedge << " / hopf "
      << o.exterior_oracle << "\nK dim " << o.k_dim << ", ker beta dim " << o.ker_beta_dim
      << ", equal: " << (o.ker_beta_equals_k ? "yes" : "no") << "\nexterior center dim " << o.exterior_center_dim
      << "\n" << (o.agrees() ? "agree" : "DISAGREE") << "\n";
    write_text(g.out, s.str());
  }
  return o.agrees() ? kOk : kMismatch;
}

struct SweepArgs {
  std::string d = "3..6";
  std::string defects = "1,2,3";
  std::string t = "0..2";
  std::size_t seeds = 5;
  bool include_j2 = false;
  bool exclude_j2 = false;
  bool no_oracle = false;
  std::size_t max_cases = 10000;
  std::size_t threads = 0;
};

int cmd_sweep(const Globals& g, const SweepArgs& args) {
  SweepOptions o;
  std::tie(o.d_min, o.d_max) = parse_range(args.d);
  std::tie(o.t_min, o.t_max) = parse_range(args.t);
  o.defects = parse_list(args.defects);
  o.seeds = args.seeds;
  o.base_seed = g.seed.value_or(1);
  o.include_printed_j2 = !args.exclude_j2;
  o.oracle = !args.no_oracle;
  o.max_cases = args.max_cases;
  o.threads = args.threads;
  const SweepReport report = run_sweep(o);
  emit(g, to_json(report));

  const SweepSummary& s = report.summary;
  std::ostream& log = notes(g);
  log << s.rows << " cases, " << s.comparisons << " comparisons: " << s.matches << " match, "
      << s.expected_mismatches << " expected mismatch, " << s.unexpected_mismatches << " unexpected mismatch, "
      << s.oracle_disagreements << " oracle disagreement\n";
  for (const auto& row : report.rows) {
    for (const auto& c : row.comparisons) {
      if (c.status == Status::unexpected_mismatch) {
        log << "UNEXPECTED " << row.name << " " << c.formula << ": predicted " << to_string(c.predicted)
            << ", computed " << c.computed << "\n";
      }
    }
    if (row.oracle && !row.oracle->agrees()) log << "ORACLE " << row.name << "\n";
  }
  return report.ok() ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multipliers, tensor squares and covers of class-2 nilpotent Lie algebras"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--seed", g.seed, "Seed for random constructions and sampling");
  app.add_option("--out", g.out, "Output path, - for standard output");
  app.add_flag("--oracle", g.oracle, "Cross-check against the Hopf formula");
  app.add_flag("--json", g.json, "Machine-readable output");

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "Construct an algebra and write it as JSON");
  gen->add_option("--family", gen_args.family, "gh, abelian, heisenberg or sum")
      ->check(CLI::IsMember({"gh", "abelian", "heisenberg", "sum"}));
  gen->add_option("--d", gen_args.d, "Number of generators");
  gen->add_option("--rank", gen_args.rank, "dim L^2");
  gen->add_flag("--canonical", gen_args.canonical, "Use the named instance for (d, rank)");
  gen->add_option("--variant", gen_args.variant, "generic or deficient (defect 3)")
      ->check(CLI::IsMember({"generic", "deficient"}));
  gen->add_option("--relations", gen_args.relations, "Killed wedges, e.g. 1-2,3-4")->delimiter(',');
  gen->add_option("--n", gen_args.n, "Dimension of the abelian algebra");
  gen->add_option("--m", gen_args.m, "Heisenberg parameter, dim 2m+1");
  gen->add_option("--t", gen_args.t, "Abelian summand for --family sum");

  std::string input;
  bool exclude_j2 = false;
  auto* analyze_cmd = app.add_subcommand("analyze", "Dimensions, closed-form comparison and capability");
  analyze_cmd->add_option("input", input, "Algebra document, - for standard input")->required();
  analyze_cmd->add_flag("--exclude-printed-j2", exclude_j2, "Skip the printed J2 polynomials");

  auto* cover_cmd = app.add_subcommand("cover", "Build and verify the cover");
  cover_cmd->add_option("input", input)->required();
  auto* capable_cmd = app.add_subcommand("capable", "Capability verdict with quotient evidence");
  capable_cmd->add_option("input", input)->required();
  auto* oracle_cmd = app.add_subcommand("oracle-compare", "Exact-sequence route against the Hopf formula");
  oracle_cmd->add_option("input", input)->required();

  SweepArgs sweep_args;
  auto* sweep = app.add_subcommand("sweep", "Compare every closed form over a grid of instances");
  sweep->add_option("--d", sweep_args.d, "Generator range, e.g. 3..6");
  sweep->add_option("--defect", sweep_args.defects, "Defects, e.g. 1,2,3");
  sweep->add_option("--t", sweep_args.t, "Abelian summand range, e.g. 0..2");
  sweep->add_option("--seeds", sweep_args.seeds, "Random instances per (d, defect)");
  auto* inc = sweep->add_flag("--include-printed-j2", sweep_args.include_j2, "Compare the printed J2 polynomials (default)");
  sweep->add_flag("--exclude-printed-j2", sweep_args.exclude_j2, "Skip the printed J2 polynomials")->excludes(inc);
  sweep->add_flag("--no-oracle", sweep_args.no_oracle, "Skip the Hopf-formula cross-check");
  sweep->add_option("--max-cases", sweep_args.max_cases, "Refuse sweeps larger than this");
  sweep->add_option("--threads", sweep_args.threads, "Worker count (default GHA_THREADS or all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (*gen) return cmd_gen(g, gen_args);
    if (*analyze_cmd) return cmd_analyze(g, input, exclude_j2);
    if (*cover_cmd) return cmd_cover(g, input);
    if (*capable_cmd) return cmd_capable(g, input);
    if (*oracle_cmd) return cmd_oracle_compare(g, input);
    if (*sweep) return cmd_sweep(g, sweep_args);
  } catch (const JacobiViolation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvariant;
  } catch (const CenterViolation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConstruction;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ClassTooHigh& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConstruction;
  }
  return kUsage;
}
