// centra: exact centralizer computations for matrices over F_p and Q.
//
// Subcommands map onto the library's main entry points: jordan bases,
// explicit centralizer bases with dimension bounds, centralizer
// containment certificates, generalized eigenspace decompositions,
// standard-identity fuzzing, and the full property suite (verify-all).
//
// Exit codes: 0 success, 1 I/O or parse errors, 2 domain errors
// (NotNilpotent, NotSplit, NotInCentralizer, ...) and failed verification.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "centra/centralizer.hpp"
#include "centra/json_io.hpp"
#include "centra/pi_check.hpp"
#include "centra/spectral.hpp"
#include "centra/verify.hpp"

namespace {

using nlohmann::json;
using namespace centra;

struct GlobalOptions {
  std::string format = "json";
  std::optional<std::string> field_override;
};

FieldSpec parse_field_flag(const std::string& text) {
  if (text == "rational" || text == "Q" || text == "q")
    return FieldSpec::rationals();
  const std::string prefix = "prime:";
  if (text.rfind(prefix, 0) == 0)
    return FieldSpec::prime(std::stoull(text.substr(prefix.size())));
  throw std::invalid_argument("bad --field value (use rational or prime:P): " +
                              text);
}

MatrixDocument load_input(const std::string& path, const GlobalOptions& opts) {
  if (opts.field_override)
    return load_matrix_document(path, parse_field_flag(*opts.field_override));
  return load_matrix_document(path);
}

json make_report(const std::string& command,
                 const std::vector<std::string>& input_paths, json results) {
  return json{{"command", command},
              {"inputs_digest", digest_files(input_paths)},
              {"results", std::move(results)},
              {"version", kVersion}};
}

void emit(const json& report, const GlobalOptions& opts,
          const std::string& text_rendering) {
  if (opts.format == "text")
    std::cout << text_rendering << "\n";
  else
    std::cout << report.dump(2) << "\n";
}

json profile_json(const BlockProfile& profile) {
  json out = json::array();
  for (std::size_t s : profile.sizes()) out.push_back(s);
  return out;
}

int cmd_jordan(const std::string& input, const GlobalOptions& opts) {
  const MatrixDocument doc = load_input(input, opts);
  const JordanBase base = jordan_base(doc.matrix);
  const BlockProfile profile = block_profile(base);

  json chains = json::array();
  for (const auto& chain : base.chains()) {
    json chain_json = json::array();
    for (const auto& v : chain) chain_json.push_back(vector_to_json(v));
    chains.push_back(std::move(chain_json));
  }
  json results{{"field", field_to_json(doc.field)},
               {"dimension", base.dimension()},
               {"nilpotency_index", nilpotency_index(doc.matrix)},
               {"block_profile", profile_json(profile)},
               {"chains", std::move(chains)}};

  std::string text = "block profile:";
  for (std::size_t s : profile.sizes()) text += " " + std::to_string(s);
  text += "\nchain basis (columns):\n" + base.chain_matrix().to_string();
  emit(make_report("jordan", {input}, std::move(results)), opts, text);
  return 0;
}

int cmd_centralizer(const std::string& input, bool striped,
                    const GlobalOptions& opts) {
  const MatrixDocument doc = load_input(input, opts);
  const JordanBase base = jordan_base(doc.matrix);
  const CentralizerBasis basis = centralizer_basis(base);
  const BoundCheck bounds = bound_check(base);

  json elements = json::array();
  std::string text = "centralizer dimension " + std::to_string(basis.dimension()) +
                     " (bound " + std::to_string(bounds.bound) + ")\n";
  for (const auto& e : basis.elements()) {
    json entry{{"delta", e.delta},
               {"gamma", e.gamma},
               {"power", e.power},
               {"matrix", matrix_to_json(e.matrix)}};
    const Matrix shown =
        striped ? base.to_chain_coordinates(e.matrix) : e.matrix;
    if (striped) entry["striped"] = matrix_to_json(shown);
    text += "psi(t^" + std::to_string(e.power) + " E_" +
            std::to_string(e.delta) + "," + std::to_string(e.gamma) + "):\n" +
            shown.to_string() + "\n";
    elements.push_back(std::move(entry));
  }
  json results{{"field", field_to_json(doc.field)},
               {"block_profile", profile_json(block_profile(base))},
               {"dimension", basis.dimension()},
               {"bound", bounds.bound},
               {"view", striped ? "striped" : "standard"},
               {"elements", std::move(elements)}};
  emit(make_report("centralizer", {input}, std::move(results)), opts, text);
  return 0;
}

int cmd_dim(const std::string& input, const GlobalOptions& opts) {
  const MatrixDocument doc = load_input(input, opts);
  const JordanBase base = jordan_base(doc.matrix);
  const BoundCheck bounds = bound_check(base);
  json results{{"field", field_to_json(doc.field)},
               {"block_profile", profile_json(block_profile(base))},
               {"dimension", bounds.dim},
               {"formula_dimension", dim_formula(block_profile(base))},
               {"bound", bounds.bound}};
  const std::string text = "dimension " + std::to_string(bounds.dim) +
                           ", bound " + std::to_string(bounds.bound);
  emit(make_report("dim", {input}, std::move(results)), opts, text);
  return 0;
}

int cmd_contains(const std::string& a_path, const std::string& b_path,
                 const GlobalOptions& opts) {
  const MatrixDocument a = load_input(a_path, opts);
  const MatrixDocument b = load_input(b_path, opts);
  const Containment result = containment(a.matrix, b.matrix);
  json results{{"contained", result.contained}};
  results["certificate"] =
      result.certificate ? poly_to_json(*result.certificate) : json(nullptr);
  const std::string text =
      result.contained
          ? "contained: yes, certificate h = " + result.certificate->to_string()
          : "contained: no";
  emit(make_report("contains", {a_path, b_path}, std::move(results)), opts, text);
  return 0;
}

int cmd_decompose(const std::string& input, const GlobalOptions& opts) {
  const MatrixDocument doc = load_input(input, opts);
  const SpectralDecomposition dec = decompose(doc.matrix);

  json components = json::array();
  std::string text;
  for (const auto& comp : dec.components()) {
    const BlockProfile profile =
        block_profile(jordan_base(comp.restricted_nilpotent));
    components.push_back(
        {{"eigenvalue", scalar_to_json(comp.eigenvalue)},
         {"fitting_exponent", comp.fitting_exponent},
         {"geometric_multiplicity", comp.geometric_mult},
         {"algebraic_multiplicity", comp.space.cols()},
         {"space", matrix_to_json(comp.space)},
         {"restricted_nilpotent", matrix_to_json(comp.restricted_nilpotent)},
         {"block_profile", profile_json(profile)}});
    text += "eigenvalue " + comp.eigenvalue.to_string() + ": algebraic " +
            std::to_string(comp.space.cols()) + ", geometric " +
            std::to_string(comp.geometric_mult) + "\n";
  }
  json results{{"field", field_to_json(doc.field)},
               {"components", std::move(components)},
               {"centralizer_dimension", centralizer_dim_total(dec)},
               {"pi_degree_bound", pi_degree_bound(dec)}};
  json eigenvalues = json::array();
  for (const auto& lambda : dec.eigenvalues())
    eigenvalues.push_back(scalar_to_json(lambda));
  results["eigenvalues"] = std::move(eigenvalues);
  text += "centralizer dimension " +
          std::to_string(centralizer_dim_total(dec)) + ", PI degree bound " +
          std::to_string(pi_degree_bound(dec));
  emit(make_report("decompose", {input}, std::move(results)), opts, text);
  return 0;
}

int cmd_pi_check(const std::string& input, std::uint64_t seed,
                 std::size_t trials, std::size_t max_degree,
                 const GlobalOptions& opts) {
  const MatrixDocument doc = load_input(input, opts);
  const std::size_t degree = pi_degree_bound(decompose(doc.matrix));
  if (degree > max_degree)
    throw DegreeCapExceeded("required degree " + std::to_string(degree) +
                            " exceeds --max-degree " +
                            std::to_string(max_degree));
  const std::vector<Matrix> basis = commutant_oracle(doc.matrix);

  // one report per even degree up to the bound, recording where the
  // standard identity is first observed to hold
  json reports = json::array();
  std::string text;
  bool bound_ok = false;
  for (std::size_t n = 2; n <= degree; n += 2) {
    const IdentityReport report = fuzz_identity(basis, n, trials, seed, max_degree);
    json entry{{"degree", report.degree},
               {"trials", report.trials},
               {"violations", report.violations},
               {"seed", report.seed}};
    if (report.first_witness) {
      json witness = json::array();
      for (const Matrix& m : *report.first_witness)
        witness.push_back(matrix_to_json(m));
      entry["first_witness"] = std::move(witness);
    }
    reports.push_back(std::move(entry));
    text += "S_" + std::to_string(n) + ": " +
            std::to_string(report.violations) + "/" +
            std::to_string(report.trials) + " violations\n";
    if (n == degree) bound_ok = report.violations == 0;
  }
  json results{{"field", field_to_json(doc.field)},
               {"basis_dimension", basis.size()},
               {"degree_bound", degree},
               {"bound_holds", bound_ok},
               {"reports", std::move(reports)}};
  text += "degree bound 2m = " + std::to_string(degree) +
          (bound_ok ? " holds" : " VIOLATED");
  emit(make_report("pi-check", {input}, std::move(results)), opts, text);
  return bound_ok ? 0 : 2;
}

int cmd_verify_all(std::uint64_t seed, std::size_t count,
                   const GlobalOptions& opts) {
  const std::vector<CheckResult> checks = verify_all(seed, count);
  json check_json = json::array();
  std::string text;
  bool all_passed = true;
  for (const auto& c : checks) {
    all_passed = all_passed && c.passed();
    json entry{{"name", c.name},
               {"instances", c.instances},
               {"failures", c.failures}};
    if (!c.detail.empty()) entry["detail"] = c.detail;
    check_json.push_back(std::move(entry));
    text += (c.passed() ? "[pass] " : "[FAIL] ") + c.name + " (" +
            std::to_string(c.instances - c.failures) + "/" +
            std::to_string(c.instances) + ")\n";
  }
  json results{{"seed", seed},
               {"count", count},
               {"passed", all_passed},
               {"checks", std::move(check_json)}};
  text += all_passed ? "all checks passed" : "verification FAILED";
  emit(make_report("verify-all", {}, std::move(results)), opts, text);
  return all_passed ? 0 : 2;
}

int emit_domain_error(const std::string& command, const DomainError& e,
                      const GlobalOptions& opts) {
  json payload{{"command", command},
               {"error", {{"kind", e.kind()}, {"message", e.what()}}},
               {"version", kVersion}};
  if (const auto* not_split = dynamic_cast<const NotSplit*>(&e))
    payload["error"]["factor"] = poly_to_json(not_split->factor());
  if (opts.format == "text")
    std::cout << e.kind() << ": " << e.what() << "\n";
  else
    std::cout << payload.dump(2) << "\n";
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact centralizer computations over F_p and Q"};
  app.require_subcommand(1);

  GlobalOptions opts;
  std::string input, a_path, b_path;
  std::uint64_t seed = 0;
  std::size_t trials = 100;
  std::size_t max_degree = kDefaultDegreeCap;
  std::size_t count = 20;
  bool striped = false;
  std::string view = "standard";

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", opts.format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--field", opts.field_override,
                    "override the document field (rational or prime:P)");
  };

  CLI::App* jordan_cmd = app.add_subcommand("jordan", "nilpotent Jordan base");
  jordan_cmd->add_option("--input", input, "matrix document")->required();
  add_common(jordan_cmd);

  CLI::App* centralizer_cmd =
      app.add_subcommand("centralizer", "explicit centralizer basis");
  centralizer_cmd->add_option("--input", input, "matrix document")->required();
  centralizer_cmd->add_option("--view", view, "standard or striped")
      ->check(CLI::IsMember({"standard", "striped"}));
  add_common(centralizer_cmd);

  CLI::App* dim_cmd =
      app.add_subcommand("dim", "centralizer dimension and bound");
  dim_cmd->add_option("--input", input, "matrix document")->required();
  add_common(dim_cmd);

  CLI::App* contains_cmd =
      app.add_subcommand("contains", "containment C_A <= C_B with certificate");
  contains_cmd->add_option("--a", a_path, "nilpotent matrix document")->required();
  contains_cmd->add_option("--b", b_path, "matrix document")->required();
  add_common(contains_cmd);

  CLI::App* decompose_cmd =
      app.add_subcommand("decompose", "generalized eigenspace decomposition");
  decompose_cmd->add_option("--input", input, "matrix document")->required();
  add_common(decompose_cmd);

  CLI::App* pi_cmd =
      app.add_subcommand("pi-check", "standard identity fuzzing on the commutant");
  pi_cmd->add_option("--input", input, "matrix document")->required();
  pi_cmd->add_option("--seed", seed, "RNG seed");
  pi_cmd->add_option("--trials", trials, "trials per degree");
  pi_cmd->add_option("--max-degree", max_degree, "standard polynomial cap");
  add_common(pi_cmd);

  CLI::App* verify_cmd =
      app.add_subcommand("verify-all", "run the full property suite");
  verify_cmd->add_option("--seed", seed, "RNG seed");
  verify_cmd->add_option("--count", count, "instances per check");
  add_common(verify_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    if (jordan_cmd->parsed()) return cmd_jordan(input, opts);
    if (centralizer_cmd->parsed())
      return cmd_centralizer(input, striped || view == "striped", opts);
    if (dim_cmd->parsed()) return cmd_dim(input, opts);
    if (contains_cmd->parsed()) return cmd_contains(a_path, b_path, opts);
    if (decompose_cmd->parsed()) return cmd_decompose(input, opts);
    if (pi_cmd->parsed())
      return cmd_pi_check(input, seed, trials, max_degree, opts);
    if (verify_cmd->parsed()) return cmd_verify_all(seed, count, opts);
  } catch (const DomainError& e) {
    return emit_domain_error(command, e, opts);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
