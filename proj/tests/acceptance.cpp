#include <iostream>

#include "cayley/acceptance.hpp"

int main() {
  bool all = true;
  for (const auto& r : cayley::run_suite("all")) {
    std::cout << cayley::format_result(r) << std::endl;
    all = all && r.passed;
  }
  return all ? 0 : 1;
}
