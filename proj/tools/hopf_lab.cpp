// hopf-lab command-line tool. Exit status: 0 pass, 1 failed check or internal
// cross-check, 2 invalid input.

#include <filesystem>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "hopflab/cofrob.hpp"
#include "hopflab/corpus_io.hpp"
#include "hopflab/nichols.hpp"

using namespace hopflab;

namespace {

constexpr int exit_pass = 0, exit_fail = 1, exit_invalid = 2;

std::string stem(const std::string& path) { return std::filesystem::path(path).stem().string(); }

int emit(const Json& j, bool ok) {
  std::cout << dump(j);
  return ok ? exit_pass : exit_fail;
}

int cmd_validate(const std::string& file) {
  const BuiltStructure s = structure_from_json(read_json_file(file));
  std::vector<Violation> bad;
  if (s.hopf) {
    bad = validate(*s.hopf);
  } else {
    bad = validate(*s.coalgebra);
    if (s.s)
      for (auto& v : validate_anti_coalgebra(*s.coalgebra, *s.s)) bad.push_back(std::move(v));
  }
  Json j;
  j["file"] = file;
  j["structure"] = s.hopf ? "hopf" : "coalgebra";
  j["valid"] = bad.empty();
  Json vs = Json::array();
  for (const auto& v : bad) vs.push_back({{"axiom", v.axiom}, {"detail", v.detail}});
  j["violations"] = std::move(vs);
  return emit(j, bad.empty());
}

int cmd_invariants(const std::string& file, bool as_json) {
  const HopfAlgebra h = hopf_from_json(read_json_file(file));
  const Filtration corad = coradical_filtration(h.coalgebra());
  const HopfCoradicalResult hc = hopf_coradical(h);
  const Filtration standard = standard_filtration(h);
  const GradedHopf g = associated_graded(h, standard);
  Json j;
  j["dim"] = h.dim();
  j["coradical_dim"] = corad.terms.front().dim();
  j["coradical_filtration"] = corad.dims();
  j["hopf_coradical_dim"] = hc.subspace.dim();
  j["m"] = hc.generation_degree;
  j["standard_filtration"] = standard.dims();
  j["layer_dims"] = g.layer_dims;
  if (as_json) return emit(j, true);
  for (const auto& [k, v] : j.items()) std::cout << k << ": " << v.dump() << "\n";
  return exit_pass;
}

int cmd_integrals(const std::string& file) {
  const HopfAlgebra h = hopf_from_json(read_json_file(file));
  Json j;
  for (const auto& [side, data] : {std::pair{"left", left_integrals(h)}, std::pair{"right", right_integrals(h)}}) {
    j[side] = {{"dim", data.space.dim()},
               {"integral", format_vector(h.names(), data.integral)},
               {"distinguished_grouplike", format_vector(h.names(), data.distinguished_grouplike)}};
  }
  j["cosemisimple"] = is_cosemisimple_by_integral(h);
  return emit(j, true);
}

int cmd_report(const ReportDocument& r) { return emit(r.to_json(), r.passed()); }

int cmd_exactseq(const std::string& fa, const std::string& fb, const std::string& fe) {
  const HopfAlgebra a = hopf_from_json(read_json_file(fa));
  const HopfAlgebra b = hopf_from_json(read_json_file(fb));
  const Mat iota = embedding_from_json(read_json_file(fe), a, b);
  return cmd_report(run_exact_sequence(stem(fa) + "_in_" + stem(fb), a, b, iota));
}

int cmd_nichols(const std::string& file, std::size_t max_degree) {
  const YDModule yd = yd_from_json(read_json_file(file));
  Json j;
  j["v"] = yd.v;
  j["dims"] = nichols_dims(yd, max_degree).dims;
  return emit(j, true);
}

int cmd_build(const std::string& name, const std::vector<std::string>& params, const std::string& out) {
  std::map<std::string, std::string> kv;
  for (const auto& p : params) {
    const auto eq = p.find('=');
    if (eq == std::string::npos || eq == 0) throw InvalidInput("--param expects key=value, got '" + p + "'");
    kv[p.substr(0, eq)] = p.substr(eq + 1);
  }
  const std::string text = dump(to_json(build_named(name, kv)));
  if (out.empty() || out == "-")
    std::cout << text;
  else
    write_text_file(out, text);
  return exit_pass;
}

int cmd_run_all(const std::string& out) {
  const Json j = run_all();
  bool ok = true;
  for (const auto& r : j.at("reports")) ok = ok && r.at("status") == "pass";
  if (out.empty() || out == "-") return emit(j, ok);
  write_text_file(out, dump(j));
  return ok ? exit_pass : exit_fail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hopf-lab: exact computations with finite-dimensional Hopf algebras"};
  app.require_subcommand(1);

  std::string file, file_b, embedding, name, out, suite = "all";
  std::vector<std::string> params;
  bool as_json = false;
  std::size_t max_degree = 4;

  auto* validate_cmd = app.add_subcommand("validate", "check the axioms of a structure file");
  validate_cmd->add_option("file", file)->required();
  auto* invariants_cmd = app.add_subcommand("invariants", "coradical and standard filtrations, m, layer dims");
  invariants_cmd->add_option("file", file)->required();
  invariants_cmd->add_flag("--json", as_json);
  auto* integrals_cmd = app.add_subcommand("integrals", "left and right integrals, distinguished group-likes");
  integrals_cmd->add_option("file", file)->required();
  auto* grcheck_cmd = app.add_subcommand("grcheck", "graded standard filtration and bosonization checks");
  grcheck_cmd->add_option("file", file)->required();
  auto* exactseq_cmd = app.add_subcommand("exactseq", "build B -> B/B A+ and check the exact-sequence statements");
  exactseq_cmd->add_option("a", file)->required();
  exactseq_cmd->add_option("b", file_b)->required();
  exactseq_cmd->add_option("--embedding", embedding)->required();
  auto* nichols_cmd = app.add_subcommand("nichols", "graded dimensions of the Nichols algebra of a YD module");
  nichols_cmd->add_option("file", file)->required();
  nichols_cmd->add_option("--max-degree", max_degree)->check(CLI::Range(0, 12));
  auto* check_cmd = app.add_subcommand("check-theorems", "run a check suite and print the report");
  check_cmd->add_option("file", file)->required();
  check_cmd->add_option("--suite", suite)->check(CLI::IsMember({"standard", "graded", "cofrob", "nichols", "all"}));
  auto* corpus_cmd = app.add_subcommand("corpus", "bundled examples");
  corpus_cmd->require_subcommand(1);
  auto* build_cmd = corpus_cmd->add_subcommand("build", "write a bundled or parametrised structure");
  build_cmd->add_option("name", name)->required();
  build_cmd->add_option("--param", params, "key=value, repeatable");
  build_cmd->add_option("-o,--output", out);
  auto* run_all_cmd = corpus_cmd->add_subcommand("run-all", "every check on the default corpus");
  run_all_cmd->add_option("-o,--output", out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_pass : exit_invalid;
  }

  try {
    if (*validate_cmd) return cmd_validate(file);
    if (*invariants_cmd) return cmd_invariants(file, as_json);
    if (*integrals_cmd) return cmd_integrals(file);
    if (*grcheck_cmd) return cmd_report(run_suite(stem(file), hopf_from_json(read_json_file(file)), Suite::Graded));
    if (*exactseq_cmd) return cmd_exactseq(file, file_b, embedding);
    if (*nichols_cmd) return cmd_nichols(file, max_degree);
    if (*check_cmd) return cmd_report(run_suite(stem(file), hopf_from_json(read_json_file(file)), parse_suite(suite)));
    if (*build_cmd) return cmd_build(name, params, out);
    if (*run_all_cmd) return cmd_run_all(out);
  } catch (const InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return exit_invalid;
  } catch (const Unsupported& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return exit_invalid;
  } catch (const HardFailure& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return exit_fail;
  }
  return exit_invalid;
}
