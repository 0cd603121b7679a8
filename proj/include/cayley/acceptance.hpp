#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace cayley {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
  double budget_seconds = 0;
};

/// Directory holding the shipped variety files.
std::filesystem::path default_data_dir();

/// Suite names: torsion, resultant, discriminant, combinatorics, all.
/// Unknown names raise InputError.
std::vector<CriterionResult> run_suite(const std::string& suite, const std::filesystem::path& data_dir = default_data_dir());

/// Single criterion by number (1..10).
CriterionResult run_criterion(int id, const std::filesystem::path& data_dir = default_data_dir());

/// "PASS  3  conic resultant ratios  (0.41 s / 30 s)  detail"
std::string format_result(const CriterionResult& r);

}  // namespace cayley
