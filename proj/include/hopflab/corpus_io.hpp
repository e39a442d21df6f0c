#pragma once

// Structure-constant files, Yetter-Drinfeld and embedding files, check
// reports and the suite runner behind the command-line tool.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "hopflab/corpus.hpp"
#include "hopflab/graded.hpp"

namespace hopflab {

/// Key order is insertion order, so serialized documents are canonical.
using Json = nlohmann::ordered_json;

inline constexpr const char* hopf_format = "hopf-sc v1";
inline constexpr const char* yd_format = "hopf-yd v1";
inline constexpr const char* embedding_format = "hopf-embedding v1";
inline constexpr const char* report_format = "hopf-report v1";

Json field_to_json(const Field& f);
Field field_from_json(const Json& j);

/// Sparse triples in lexicographic index order, antipode as dense rows.
Json to_json(const HopfAlgebra& h);
/// Coalgebra document ("structure": "coalgebra"), with S when given.
Json to_json(const Coalgebra& c, const Mat* s = nullptr);
Json to_json(const BuiltStructure& b);
/// Parses either kind of structure document. Throws InvalidInput on malformed
/// input; the axioms are not checked here.
BuiltStructure structure_from_json(const Json& j);
/// As above, requiring a Hopf algebra.
HopfAlgebra hopf_from_json(const Json& j);

/// action[a](i, j) and coaction[a](i, j) as [a, i, j, scalar] entries, with
/// the Hopf algebra embedded under "hopf".
Json to_json(const YDModule& yd);
YDModule yd_from_json(const Json& j);

/// iota(i, j) as [i, j, scalar] entries; rows index B, columns index A.
Json embedding_to_json(const Mat& iota);
Mat embedding_from_json(const Json& j, const HopfAlgebra& a, const HopfAlgebra& b);

/// Two-space indentation and a trailing newline.
std::string dump(const Json& j);
Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

std::uint64_t fnv1a64(const std::string& bytes);
/// 16 lowercase hex digits.
std::string hex64(std::uint64_t h);

enum class CheckStatus { Pass, Fail, Degenerate };
std::string to_string(CheckStatus s);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Fail;
  Json data = Json::object();
};

struct ReportDocument {
  std::string subject;
  std::string subject_hash;
  std::string suite;
  std::vector<CheckResult> checks;

  /// No check failed.
  bool passed() const;
  Json to_json() const;
};

enum class Suite { Standard, Graded, Cofrob, Nichols, All };
/// "standard", "graded", "cofrob", "nichols" or "all"; InvalidInput otherwise.
Suite parse_suite(const std::string& name);
std::string to_string(Suite s);

/// Runs the checks of the suite in dependency order. A HardFailure inside a
/// check propagates.
ReportDocument run_suite(const std::string& subject, const HopfAlgebra& h, Suite suite);
/// Builds B -> C = B / B iota(A+) and evaluates the exact-sequence checks.
ReportDocument run_exact_sequence(const std::string& subject, const HopfAlgebra& a, const HopfAlgebra& b,
                                  const Mat& iota);
/// Every default corpus member under the full suite, then the bundled exact sequences.
Json run_all();

}  // namespace hopflab
