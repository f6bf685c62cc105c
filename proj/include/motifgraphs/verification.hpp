#pragma once

#include <string>
#include <vector>

// Self-check suites comparing the recursion engine and the degree model
// against the exhaustive-enumeration oracles.
namespace motifgraphs {

struct VerificationLine {
  std::string suite;
  bool pass = false;
  std::string detail;  // worst deviation or counterexample description
};

// Runs every suite; deterministic (fixed parameter draws).
std::vector<VerificationLine> run_verification();

}  // namespace motifgraphs
