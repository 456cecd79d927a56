#pragma once

#include <functional>
#include <vector>

#include "ordermap/report.hpp"

namespace ordermap::suite {

struct SuiteOptions {
  int K = 16;
  int M = 12;
  int j_max = 4;
  int N = 200;
  std::vector<double> probes = {0.5, 1.0, 2.0};
  int jobs = 1;
};

using Check = std::function<IdentityReport()>;

/// The full battery of identity checks for the given settings.
std::vector<Check> battery(const SuiteOptions& options);

/// Runs every check (concurrently when jobs > 1) and returns the reports
/// sorted by report_less. A check that throws yields a failed report.
std::vector<IdentityReport> run(const std::vector<Check>& checks, int jobs = 1);

bool all_passed(const std::vector<IdentityReport>& reports);

}  // namespace ordermap::suite
