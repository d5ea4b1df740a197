#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace eulerop::selftest {

struct Check {
  std::string name;
  bool ok = true;
  long cases = 0;
  std::string detail;  // first failure, or notes when ok
  double seconds = 0;
};

struct Options {
  std::uint64_t seed = 20240601;
  long random_cases = 1000;
  long fuzz_inputs = 100000;
  int max_depth = 64;
};

// Randomized operator algebra laws.
Check grading_law(const Options& opt);
Check normal_ordering(const Options& opt);
Check jacobi(const Options& opt);
Check homomorphism(const Options& opt);

// Parser totality on random token strings and parse(print(e)) == e.
Check parser_fuzz(const Options& opt);
// to_string(op) parses back to op.
Check operator_round_trip(const Options& opt);

Check family_equations(const Options& opt);
Check family_parity(const Options& opt);
Check ladders(const Options& opt);
Check harmonic(const Options& opt);
Check qes(const Options& opt);
Check anharmonic(const Options& opt);
Check jack(const Options& opt);
Check calogero(const Options& opt);
Check symmetry_closure(const Options& opt);

struct Entry {
  std::string name;
  std::function<Check(const Options&)> run;
};
const std::vector<Entry>& registry();

/// Runs every check; `progress` is called after each one.
std::vector<Check> run_all(const Options& opt,
                           const std::function<void(const Check&)>& progress = {});

}  // namespace eulerop::selftest
