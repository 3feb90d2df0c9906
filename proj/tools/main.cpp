// latfix: order structure of fixed spaces of positive operators.
//
// Exit codes: 0 success (including Inapplicable verdicts), 1 verification
// failure or defect, 2 invalid input.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "gallery.hpp"
#include "json_io.hpp"

#ifndef LATFIX_FIXTURE_DIR
#define LATFIX_FIXTURE_DIR "fixtures/gallery"
#endif

namespace {

using latfix::io::Json;
namespace io = latfix::io;
namespace gallery = latfix::gallery;

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kInvalid = 2;

bool g_json = false;

void emit(const Json& j) {
  if (g_json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << io::render_text(j);
  }
}

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) return {};
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

int gallery_run(const std::string& id, const std::string& dir) {
  const Json report = gallery::run_case(id);
  emit(report);
  const std::string expected = read_text(gallery::fixture_path(dir, id));
  if (expected.empty()) {
    std::cerr << "no stored report for " << id << " in " << dir << "\n";
    return kFailure;
  }
  if (expected != gallery::canonical_text(report)) {
    std::cerr << id << ": report differs from the stored fixture\n";
    return kFailure;
  }
  return kOk;
}

int gallery_all(const std::string& dir) {
  int status = kOk;
  for (const auto& id : gallery::case_ids()) {
    const std::string actual = gallery::canonical_text(gallery::run_case(id));
    const std::string expected = read_text(gallery::fixture_path(dir, id));
    const bool match = !expected.empty() && expected == actual;
    std::cout << (match ? "match    " : "MISMATCH ") << id << "\n";
    if (!match) status = kFailure;
  }
  return status;
}

int gallery_regen(const std::string& dir) {
  for (const auto& id : gallery::case_ids()) {
    const std::string path = gallery::fixture_path(dir, id);
    std::ofstream out(path);
    if (!out) throw latfix::InvalidInput("cannot write " + path);
    out << gallery::canonical_text(gallery::run_case(id));
    std::cout << "wrote " << path << "\n";
  }
  return kOk;
}

int classify_cmd(const std::string& path) {
  const latfix::Subspace f = io::subspace_from_json(io::read_file(path));
  if (f.is_zero()) throw latfix::InvalidInput("classification needs a nonzero subspace");
  Json out{{"subspace", io::to_json(f)}, {"classification", io::to_json(latfix::classify_subspace(f))}};
  if (f.ambient_dim() <= latfix::kSignPatternMaxDim) {
    out["sign_pattern_sublattice"] = latfix::sign_pattern_sublattice_oracle(f);
  }
  emit(out);
  return kOk;
}

int fixspace_cmd(const std::string& path) {
  const latfix::OperatorFamily family = io::family_from_json(io::read_file(path));
  const latfix::FixedSpaceReport r = latfix::fixed_space_report(family);
  emit(io::to_json(r));
  return r.theorem_conformant() ? kOk : kFailure;
}

int sup_cmd(const std::string& family_path, const std::string& vectors_path) {
  const latfix::OperatorFamily family = io::family_from_json(io::read_file(family_path));
  const auto g = io::vectors_from_json(io::read_file(vectors_path));
  emit(io::to_json(latfix::sup_in_fixspace(family, g)));
  return kOk;
}

int cyclicity_cmd(const std::string& path) {
  const latfix::PositiveMatrixOperator t = io::operator_from_json(io::read_file(path));
  const latfix::CyclicityReport r = latfix::verify_dimension_cyclicity(t);
  Json out = io::to_json(r);
  const auto pb = latfix::power_bounded_verdict(t);
  out["power_bounded"] = latfix::to_string(pb.verdict);
  emit(out);
  return r.verdict == latfix::Verdict::Fail ? kFailure : kOk;
}

int semigroup_cmd(const std::string& path) {
  const latfix::SemigroupReport r = latfix::semigroup_imaginary_check(io::generator_from_json(io::read_file(path)));
  emit(io::to_json(r));
  return r.verdict == latfix::Verdict::Fail ? kFailure : kOk;
}

int probe_cmd(std::size_t trials, std::size_t dim_max, std::uint64_t seed, const std::string& out_path,
              bool serial) {
  const auto summary = latfix::probe_random_contractions(
      trials, dim_max, seed, serial ? latfix::Execution::Serial : latfix::Execution::Parallel);
  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::app);
    if (!out) throw latfix::InvalidInput("cannot open " + out_path);
    out << Json{{"header", latfix::probe_header()},
                {"trials", trials},
                {"dim_max", dim_max},
                {"seed", seed}}
               .dump()
        << "\n";
    for (const auto& r : summary.records) out << io::to_json(r).dump() << "\n";
  }
  emit(Json{{"trials", trials},
            {"dim_max", dim_max},
            {"seed", seed},
            {"violations", summary.violations},
            {"note", latfix::probe_header()}});
  return summary.violations == 0 ? kOk : kFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Order structure of fixed spaces of positive operators"};
  app.require_subcommand(1);
  app.add_flag("--json", g_json, "Machine-readable JSON output");

  std::string fixtures = LATFIX_FIXTURE_DIR;
  std::string id;
  auto* gal = app.add_subcommand("gallery", "Worked examples with stored reports");
  gal->add_option("--fixtures", fixtures, "Directory of stored gallery reports");
  gal->require_subcommand(1);
  auto* gal_run = gal->add_subcommand("run", "Run one case and compare with its stored report");
  gal_run->add_option("id", id, "Case id")->required();
  auto* gal_all = gal->add_subcommand("all", "Run every case and compare with the stored reports");
  auto* gal_regen = gal->add_subcommand("regen", "Rewrite the stored reports (maintenance)");

  std::string input;
  std::string vectors;
  auto* classify = app.add_subcommand("classify", "Classify a subspace of Q^n");
  classify->add_option("-i,--input", input, "Subspace JSON")->required();
  auto* fixspace = app.add_subcommand("fixspace", "Fixed space report of a commuting family");
  fixspace->add_option("-i,--input", input, "Family JSON")->required();
  auto* sup = app.add_subcommand("sup-in-fix", "Supremum of vectors inside the fixed space");
  sup->add_option("-i,--input", input, "Family JSON")->required();
  sup->add_option("-g,--vectors", vectors, "Vectors JSON")->required();
  auto* cyc = app.add_subcommand("cyclicity", "Root-of-unity spectrum and dimension estimate");
  cyc->add_option("-i,--input", input, "Operator JSON")->required();
  auto* semi = app.add_subcommand("semigroup", "Imaginary eigenvalues of a Metzler generator");
  semi->add_option("-i,--input", input, "Matrix JSON")->required();

  std::size_t trials = 0;
  std::size_t dim_max = 0;
  std::uint64_t seed = 0;
  std::string out_path;
  bool serial = false;
  auto* probe = app.add_subcommand("probe", "Randomized consistency probe over positive contractions");
  probe->add_option("--trials", trials, "Number of trials")->required()->check(CLI::PositiveNumber);
  probe->add_option("--dim-max", dim_max, "Largest matrix size")->required()->check(CLI::PositiveNumber);
  probe->add_option("--seed", seed, "Run seed")->required();
  probe->add_option("--out", out_path, "JSON-lines file to append records to");
  probe->add_flag("--serial", serial, "Run trials on one thread");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }

  try {
    if (gal->parsed()) {
      if (gal_run->parsed()) return gallery_run(id, fixtures);
      if (gal_all->parsed()) return gallery_all(fixtures);
      if (gal_regen->parsed()) return gallery_regen(fixtures);
    }
    if (classify->parsed()) return classify_cmd(input);
    if (fixspace->parsed()) return fixspace_cmd(input);
    if (sup->parsed()) return sup_cmd(input, vectors);
    if (cyc->parsed()) return cyclicity_cmd(input);
    if (semi->parsed()) return semigroup_cmd(input);
    if (probe->parsed()) return probe_cmd(trials, dim_max, seed, out_path, serial);
  } catch (const latfix::TheoremViolation& e) {
    std::cerr << "defect: " << e.what() << "\n";
    return kFailure;
  } catch (const std::logic_error& e) {
    // Includes InvalidInput and DomainError (via invalid_argument / domain_error).
    const bool input_error = dynamic_cast<const std::invalid_argument*>(&e) != nullptr ||
                             dynamic_cast<const std::domain_error*>(&e) != nullptr;
    std::cerr << (input_error ? "invalid input: " : "internal error: ") << e.what() << "\n";
    return input_error ? kInvalid : kFailure;
  } catch (const latfix::Unsupported& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kInvalid;
}
