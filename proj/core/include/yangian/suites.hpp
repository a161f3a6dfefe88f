#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "yangian/algebra.hpp"

namespace yangian {

struct CheckResult {
  std::string id;
  std::string indices;
  bool pass = false;
  // Total number of terms in all nonzero residue coefficients.
  std::size_t residualTerms = 0;
  // Number of coefficients tested.
  std::size_t coefficients = 0;
  // Number of constants routed through the perturbation hook.
  int constants = 0;
  double millis = 0;
  // First nonzero coefficient or error message; empty on pass.
  std::string detail;
};

struct Report {
  std::string suite;
  int m = 0;
  int order = 0;
  std::vector<CheckResult> checks;
  double millis = 0;

  std::size_t passed() const;
  std::size_t failed() const;
  bool allPass() const { return failed() == 0 && !checks.empty(); }
};

struct SuiteInfo {
  std::string id;
  int minM = 1;
  int maxM = 3;
  // Excluded from "all".
  bool negative = false;
  std::string summary;
};

struct RunOptions {
  // 0 chooses the hardware concurrency.
  int jobs = 0;
  // Relation table cache file; empty disables caching.
  std::string cachePath;
  std::uint64_t seed = 1;
  // Run only the check at this position of the suite's list.
  std::optional<std::size_t> only;
  // Add 1 to the constant with this ordinal in every check that is run.
  std::optional<int> perturb;
};

inline constexpr int kMinOrder = 1;
inline constexpr int kMaxOrder = 8;

const std::vector<SuiteInfo>& suiteCatalog();
const SuiteInfo* findSuite(const std::string& id);
// Comma-separated list of valid ids, including "all".
std::string suiteIdList();

// Throws std::invalid_argument for an unknown id or an out-of-range m or order.
Report runSuite(const std::string& id, int m, int order, const RunOptions& options = {});
// Every non-negative suite applicable at m; check ids become "suite/check".
Report runAll(int m, int order, const RunOptions& options = {});

// Normal-word counts against the generating function.
struct PbwRow {
  int degree = 0;
  std::size_t count = 0;
  std::string series;
  bool match = false;
};

struct PbwOptions {
  // Test fixture: drop the central letters from the enumeration.
  bool dropCentral = false;
};

std::vector<PbwRow> pbwTable(int m, int dmax, const PbwOptions& options = {});

struct IndependenceRow {
  int degree = 0;
  std::size_t monomials = 0;
  std::size_t rank = 0;
  std::string series;
};

// Ordered monomials in the Gaussian generators h1, h2, e, f, e13, f31 at m = 1.
std::vector<IndependenceRow> gaussianIndependence(int dmax);

}  // namespace yangian
