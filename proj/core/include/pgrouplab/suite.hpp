#ifndef PGROUPLAB_SUITE_HPP
#define PGROUPLAB_SUITE_HPP

#include <string>
#include <vector>

#include "pgrouplab/common.hpp"
#include "pgrouplab/group.hpp"

namespace pgrouplab {

/// Groups the corpus-sweeping checks run over: for each p in {2, 3}, the
/// rank-2 and rank-3 mixed shapes [1,2], [1,3] and [1,1,2].
std::vector<GroupShape> default_corpus();

struct SuiteOptions {
  u64 seed = 0;
  std::vector<GroupShape> corpus = default_corpus();
  int only = 0;               // 0 runs everything; otherwise one check id
  bool corrupt_oracle = false;  // self-test: flip one frozen expected value
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  u64 checks = 0;      // elementary comparisons performed
  std::string detail;  // first failure, empty when passed
  double seconds = 0;  // wall time; never serialized (outputs stay replayable)
};

struct SuiteReport {
  u64 seed = 0;
  std::vector<GroupShape> corpus;
  std::vector<CriterionResult> results;
  bool all_passed = false;
};

/// Runs the property checks (all, or the one selected by options.only):
///   1 classify-mixed-2group-witness     frozen characteristic-only witness
///   2 four-automorphism-sum-on-squares  seeded endos of three square groups
///   3 sum-bound-inequality              seeded probes per corpus group
///   4 two-automorphism-completeness     exhaustive p in {3,5} order <= p^4
///   5 height-threshold-fixed-points     fully invariant == threshold sets
///   6 odd-p-characteristic-collapse     p = 3 lists coincide; p = 2 gap
///   7 swap-family-inertia-growth        quotient order p^k for k <= 6
///   8 shear-inverse-and-inertia         seeded shears against brute cosets
///   9 square-hull-bound                 seeded subgroups of two squares
///  10 height-split-chain                seeded splits + brute pair oracle
///  11 generator-soundness               generated sets equal enumerations
///  12 deterministic-replay              two in-process runs render equal
/// Deterministic for a fixed options value, including record order.
SuiteReport run_suite(const SuiteOptions& options);

/// The report exactly as `run_suite` computed it, rendered to the canonical
/// JSON text (2-space indent, trailing newline). Timing is omitted so equal
/// configurations produce byte-identical text.
std::string suite_report_text(const SuiteReport& report);

}  // namespace pgrouplab

#endif
