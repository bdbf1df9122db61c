#pragma once

// Problem-file schema "gitstab/1" and the command-line front end.

#include "gitstab/sheafcalc.hpp"
#include "gitstab/tensor.hpp"

#include <json.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace gitstab {

inline constexpr const char* kFormatVersion = "gitstab/1";

struct ProblemFile {
  std::string version = kFormatVersion;
  std::optional<AmbientSpace> ambient;
  std::optional<SparseTensor> tensor;
  std::vector<OnePS> lambdas;
  std::optional<SheafData> sheaf;
  std::vector<Candidate> filtrations;
  std::vector<WeightedFlag> flags;
  std::optional<Polynomial> epsilon;
};

/// Throws InputError on any schema violation.
ProblemFile parse_problem(const nlohmann::json& doc);
nlohmann::ordered_json problem_to_json(const ProblemFile& problem);

nlohmann::ordered_json tensor_terms_to_json(const SparseTensor& w);

/// Runs one CLI invocation. args excludes the program name. Returns the exit
/// code: 0 success, 2 malformed input, 3 internal certificate failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gitstab
