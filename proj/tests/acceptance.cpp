#include "orbitlab/verify.hpp"

#include <iostream>

int main() {
  const auto results = orbitlab::run_acceptance(&std::cout);
  std::size_t failed = 0;
  for (const auto& r : results)
    if (!r.passed) ++failed;
  std::cout << (results.size() - failed) << "/" << results.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
