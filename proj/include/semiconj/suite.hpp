#ifndef SEMICONJ_SUITE_HPP_
#define SEMICONJ_SUITE_HPP_

#include <string>
#include <vector>

#include "semiconj/conjugacy.hpp"
#include "semiconj/semigroup.hpp"

namespace semiconj {

struct SuiteOptions {
  // transitivity/minimality brute force over all partitions is bounded
  int o_comm_minimality_max_n = 5;
  // the definitional ~tr / ~so double-checks run up to this size
  int quartic_max_n = 96;
};

struct CheckResult {
  std::string name;
  bool applicable;
  bool pass;
  std::string detail;  // witness or reason, empty when passing
};

struct SuiteReport {
  std::vector<CheckResult> checks;
  bool all_pass() const {
    for (auto const& c : checks) {
      if (c.applicable && !c.pass) return false;
    }
    return true;
  }
};

//! Evaluates the comparison and structure theorems on one finite semigroup:
//! inclusion diagram, identity/universality characterizations, coincidence
//! results for completely simple / completely regular / W members,
//! zero-direct-union equivalences, power and pseudo-inverse closure laws.
SuiteReport theorem_suite(Semigroup const& s, SuiteOptions const& opts = {});

}  // namespace semiconj

#endif  // SEMICONJ_SUITE_HPP_
