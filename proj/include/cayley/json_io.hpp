#pragma once

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "cayley/discriminant.hpp"
#include "cayley/resultant.hpp"
#include "cayley/torsion.hpp"
#include "cayley/variety.hpp"

namespace cayley {

using Json = nlohmann::ordered_json;

/// Reads and parses a JSON file; InputError on a missing file or bad syntax.
Json read_json_file(const std::filesystem::path& path);

/// {"name", "n", "N", "d", "dual_degree"?, "params": [...], "param_map": [...], "ideal": [...]}
VarietySpec variety_spec_from_json(const Json& j);
Json variety_spec_to_json(const VarietySpec& spec);

/// {"rows": [["1", "0", "2"], ...]}
ResultantPencil pencil_from_json(const Json& j);
Json pencil_to_json(const ResultantPencil& f);

/// {"f": ["1", "-2", "1/3"]}
DualCovector covector_from_json(const Json& j);
Json covector_to_json(const DualCovector& f);

/// {"dims": [...], "boundaries": [[row-major entries of boundary i], ...]}
BasedComplex complex_from_json(const Json& j);
Json complex_to_json(const BasedComplex& c);

/// Entries may be JSON strings ("3/4") or integers.
Rational rational_from_json(const Json& j);

struct OracleComparison {
  std::string oracle;
  std::string oracle_value;
  std::string ratio;  // torsion / oracle
};

struct RunReport {
  std::string command;
  std::string inputs_hash;
  std::string variety;
  int m = 0;
  TwistSpec twist;
  std::vector<std::size_t> dims;
  bool exact = false;
  std::vector<std::size_t> rank_profile;
  std::optional<std::string> result;
  long degree = 0;
  std::optional<long> expected_degree;
  std::string basis_fingerprint;
  std::optional<std::string> failure;
  std::optional<OracleComparison> oracle;
  std::optional<std::string> chow_form;
  std::optional<double> seconds;
};

Json report_to_json(const RunReport& r);

}  // namespace cayley
