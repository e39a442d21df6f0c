// Acceptance run: one PASS/FAIL line per criterion. Usage: acceptance <hopf_lab binary>.
// The corpus reports come from two runs of `hopf_lab corpus run-all`; the
// second run is only compared byte for byte with the first.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "hopflab/cofrob.hpp"
#include "hopflab/corpus_io.hpp"
#include "hopflab/nichols.hpp"

using namespace hopflab;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

class Reports {
 public:
  explicit Reports(const Json& doc) {
    for (const auto& r : doc.at("reports")) by_subject_[r.at("subject").get<std::string>()] = r;
  }
  const Json& check(const std::string& subject, const std::string& name) const {
    for (const auto& c : by_subject_.at(subject).at("checks"))
      if (c.at("name") == name) return c;
    throw HardFailure("report of " + subject + " has no check " + name);
  }
  bool passes(const std::string& subject, const std::string& name) const {
    return check(subject, name).at("status") == "pass";
  }
  bool all_pass(const std::string& name) const {
    for (const auto& s : default_corpus_names())
      if (!passes(s, name)) return false;
    return true;
  }

 private:
  std::map<std::string, Json> by_subject_;
};

bool axioms_and_mutations() {
  for (const auto& name : default_corpus_names()) {
    const HopfAlgebra h = corpus_entry(name).hopf;
    if (!validate(h).empty()) return false;
    const Json good = to_json(h);
    for (const char* key : {"mult", "comult"}) {
      const std::size_t n = good[key].size();
      for (std::size_t e : {std::size_t{0}, n / 2, n - 1}) {
        Json j = good;
        const Scalar old = Scalar::parse(h.field(), j[key][e][3].get<std::string>());
        j[key][e][3] = (old + Scalar::one(h.field())).to_string();
        if (validate(hopf_from_json(j)).empty()) return false;
      }
    }
  }
  return true;
}

bool sweedler_integral_fixture(const Reports& r) {
  // Frozen from a direct linear solve of int(h_2) h_1 = int(h) 1 on the basis 1, g, x, gx.
  const HopfAlgebra h = sweedler4();
  const IntegralData left = left_integrals(h);
  const Vec gx = h.element("gx"), g = h.element("g");
  const Json& d = r.check("sweedler4", "integrals").at("data");
  return left.integral == gx && left.distinguished_grouplike == g && d.at("left_integral") == "gx" &&
         d.at("left_grouplike").at("vector") == "g" && r.all_pass("integrals");
}

bool perfect_pairings(const std::string& name) {
  const GrDualReport g = gr_dual_compat(corpus_entry(name).hopf);
  return g.ok && g.ideal_layers == g.dual_layers && g.pairing_ranks == g.ideal_layers;
}

bool nichols_roots_of_unity() {
  for (std::size_t n : {2, 3, 4}) {
    const Field f = n == 2 ? Field::rational() : Field::cyclotomic(static_cast<int>(n));
    Mat q(f, 1, 1);
    q(0, 0) = n == 2 ? Scalar(f, -1L) : Scalar::zeta(f);
    std::vector<std::size_t> expect(n + 1, 1);
    expect[n] = 0;
    if (nichols_dims(diagonal_braiding(q), n).dims != expect) return false;
    const DiagramNicholsReport d = compare_with_diagram(taft(n));
    if (d.layer_dims != expect || !d.equal) return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: acceptance <hopf_lab binary>\n";
    return 2;
  }
  const auto dir = std::filesystem::temp_directory_path() / "hopflab_acceptance";
  std::filesystem::create_directories(dir);
  const std::string first = (dir / "run1.json").string(), second = (dir / "run2.json").string();
  const std::string bin = argv[1];
  const int rc1 = std::system((bin + " corpus run-all -o " + first).c_str());
  const int rc2 = std::system((bin + " corpus run-all -o " + second).c_str());
  const std::string text1 = slurp(first), text2 = slurp(second);
  std::filesystem::remove_all(dir);
  const Reports r(Json::parse(text1));

  const std::vector<std::pair<std::string, std::function<bool()>>> criteria{
      {"axiom suite and mutation detection", [] { return axioms_and_mutations(); }},
      {"Hopf filtration: H_[0] Hopf subalgebra with coradical H_0, H_n in H_[n], S-stable",
       [&] { return r.all_pass("hopf_filtration"); }},
      {"standard filtration of gr H is given by its layers", [&] { return r.all_pass("graded_standard_filtration"); }},
      {"gr H is the bosonization R # H_[0]", [&] { return r.all_pass("bosonization"); }},
      {"integrals are one-dimensional; Sweedler integral at gx with group-like g",
       [&] { return sweedler_integral_fixture(r); }},
      {"H = H_0 E_H(k)", [&] { return r.all_pass("radford"); }},
      {"unique maximal subcomodule, quotient on the group-like, integral vanishing",
       [&] { return r.all_pass("integral_vanishing"); }},
      {"H_[0] = H_0^(m), dim gr H = dim R dim H_[0], hull dimensions",
       [&] { return r.all_pass("generation_degree") && r.all_pass("diagram_dimension") && r.all_pass("hull_dimension"); }},
      {"bundled exact sequences",
       [&] {
         for (const auto& s : bundled_sequences())
           for (const char* c : {"kernel_and_coinvariants", "integral_criterion", "cosemisimple_extension"})
             if (!r.passes(s.name, c)) return false;
         return true;
       }},
      {"injective comodules are projective", [&] { return r.all_pass("injective_implies_projective"); }},
      {"J_omega computations agree; perfect layer pairings on H4 and T3",
       [&] { return r.all_pass("j_omega") && r.all_pass("gr_dual_compat") && perfect_pairings("sweedler4") &&
                    perfect_pairings("taft3"); }},
      {"Nichols dims at q = zeta_n match the layers of taft(n)", [] { return nichols_roots_of_unity(); }},
      {"corpus run-all is byte-for-byte deterministic",
       [&] { return rc1 == 0 && rc2 == 0 && !text1.empty() && text1 == text2; }},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    bool ok = false;
    try {
      ok = criteria[i].second();
    } catch (const std::exception& e) {
      std::cout << "  exception: " << e.what() << "\n";
    }
    failed += !ok;
    std::cout << (ok ? "PASS " : "FAIL ") << (i + 1) << ". " << criteria[i].first << "\n";
  }
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria failed") << "\n";
  return failed == 0 ? 0 : 1;
}
