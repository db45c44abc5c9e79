#pragma once

// The acceptance checks, shared by the acceptance binary and `indec verify`.

#include <functional>
#include <string>
#include <vector>

#include "indec/parallel.hpp"

namespace indec::criteria {

struct Result {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

// Parameter sets used when the caller does not override them.
const std::vector<long>& default_simplest_set();  // -1 0 1 2 4 7 8
const std::vector<long>& default_count_set();     // 7 8
const std::vector<long>& default_quadratic_set(); // 2 3 5 6 7 10 13

// Pinned tolerances.
constexpr double kScalingBandRatio = 10.0;
constexpr int kRandomPairs = 10000;

Result sq_rows(Exec exec);
Result inventory_equivalence(const std::vector<long>& as, Exec exec);
Result trace_certificates(const std::vector<long>& as, Exec exec);
Result other_families(Exec exec);
Result norm_counts(const std::vector<long>& as, Exec exec);
Result scaling(Exec exec);
Result rank_formulas();
Result quadratic_suite(const std::vector<long>& Ds, Exec exec);
Result identities(Exec exec);
Result universality(Exec exec);

std::vector<Result> run_all(Exec exec);

// Runs f and stamps the elapsed time; library errors become failures.
Result timed(int id, const std::string& name, const std::function<Result()>& f);

}  // namespace indec::criteria
