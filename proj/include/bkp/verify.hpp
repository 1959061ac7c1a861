#pragma once

#include <string>
#include <vector>

#include "bkp/scan.hpp"

namespace bkp {

struct VerifyOptions {
  int max_size = 6;          // cap for census sweeps
  int threads = 1;
  long long degree_cap = -1;  // -1: default cap
};

struct VerifyItem {
  std::string id;
  std::string detail;
  bool pass = false;
  double seconds = 0.0;
};

struct VerifyReport {
  std::vector<VerifyItem> items;
  bool all_pass() const;
  double total_seconds() const;
};

// Runs the full verification battery (one item per acceptance criterion).
// Failures are reported in the items, never thrown.
VerifyReport verify_paper_suite(const VerifyOptions& options = {});

}  // namespace bkp
