#ifndef SEMICONJ_GREEN_HPP_
#define SEMICONJ_GREEN_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "semiconj/semigroup.hpp"

namespace semiconj {

struct GreenData {
  EqPartition L, R, H, D, J;
  // Principal ideals per element, as sorted element lists.
  std::vector<std::vector<int>> left_ideals;       // S^1 a
  std::vector<std::vector<int>> right_ideals;      // a S^1
  std::vector<std::vector<int>> two_sided_ideals;  // S^1 a S^1
};

GreenData green(Semigroup const& s);

std::vector<int> idempotents(Semigroup const& s);

// Pairs (e, f) with e != f and ef = fe = e (that is, e < f in the natural
// order on idempotents).
std::vector<std::pair<int, int>> natural_order(Semigroup const& s);

bool is_antichain(Semigroup const& s, bool exclude_zero);

struct Regularity {
  std::vector<int> regular_elements;
  bool is_regular;
  bool is_inverse;
  std::vector<std::vector<int>> inverses;  // per element
};

Regularity regularity(Semigroup const& s);

struct IdealStructure {
  bool is_simple;
  bool is_zero_simple;
  bool is_completely_simple;
  bool is_completely_zero_simple;
};

IdealStructure ideal_structure(Semigroup const& s);

//! The finest decomposition of S \ {0} into blocks whose pairwise products
//! are 0 and where each block together with 0 is a completely 0-simple
//! subsemigroup. Absent when some block fails that test.
std::optional<std::vector<std::vector<int>>> zero_direct_union(Semigroup const& s);

}  // namespace semiconj

#endif  // SEMICONJ_GREEN_HPP_
