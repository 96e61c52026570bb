#ifndef SEMICONJ_ENUMERATE_HPP_
#define SEMICONJ_ENUMERATE_HPP_

#include <functional>
#include <string>
#include <vector>

#include "semiconj/semigroup.hpp"

namespace semiconj {

struct EnumConstraints {
  int order = 1;
  bool require_monoid = false;
  bool require_zero = false;
  bool require_zero_divisors = false;  // implies require_zero
  enum class Dedupe { labeled, iso, equivalence };
  Dedupe dedupe = Dedupe::equivalence;
  bool allow_order6 = false;  // order 6 is long-running
  // When > 0, the search is split into independent subtrees keyed by the
  // first free cells and the per-subtree results merged; used to check that
  // partitioned search agrees with the sequential one.
  int split_depth = 0;
};

//! Backtracking fill of the Cayley table with incremental associativity
//! pruning. The visitor runs once per emitted table (canonical
//! representative unless dedupe is labeled) in a deterministic order, and
//! the count of emitted tables is returned.
long enumerate(EnumConstraints const& c,
               std::function<void(Semigroup const&)> const& visitor = {});

struct Table1Row {
  int n;
  // counts up to equivalence (isomorphism or anti-isomorphism)
  long monoids_0div, c_identity, c_universal;
  // counts up to isomorphism only
  long iso_monoids_0div, iso_c_identity, iso_c_universal;
};

std::vector<Table1Row> table1(int n_max, bool include_order6 = false);

struct SweepReport {
  long total = 0;
  struct Failure {
    std::string check;
    std::string table;  // serialized offender
  };
  std::vector<Failure> failures;
  bool ok() const { return failures.empty(); }
};

//! Runs the named theorem-suite checks over every enumerated semigroup.
//! An empty check list means all of them.
SweepReport sweep(EnumConstraints const& c, std::vector<std::string> const& checks);

}  // namespace semiconj

#endif  // SEMICONJ_ENUMERATE_HPP_
