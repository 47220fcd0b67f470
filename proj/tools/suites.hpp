#pragma once

#include <functional>
#include <string>
#include <vector>

#include "schurext/exactlin.hpp"
#include "schurext/report.hpp"

namespace schurext::cli {

using Progress = std::function<void(const std::string&)>;

struct SuiteOptions {
  int max_degree = 5;
  // Integral suites run over every ring listed; dimension suites use the fields among them.
  std::vector<lin::Ring> rings = {lin::Ring::integers(), lin::Ring::prime_field(2)};
  Progress progress;
};

CheckReport suite_invariance(const SuiteOptions& opt);
CheckReport suite_duality(const SuiteOptions& opt);
CheckReport suite_periodicity(const SuiteOptions& opt);
CheckReport suite_twisted(const SuiteOptions& opt);
CheckReport suite_blocks(const SuiteOptions& opt);
CheckReport suite_simplicial(const SuiteOptions& opt);

// Simplicial identities among generization and specialization maps on weight spaces.
CheckReport check_simplicial_identities(int max_degree, int max_length = 5);
// d^2 = 0 for full and graded complexes of the test functors.
CheckReport check_boundary_squared(int max_degree);

// Names accepted by run_suite, "all" excluded.
const std::vector<std::string>& suite_names();
std::vector<CheckReport> run_suite(const std::string& name, const SuiteOptions& opt);

}  // namespace schurext::cli
