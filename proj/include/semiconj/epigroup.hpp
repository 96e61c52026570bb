#ifndef SEMICONJ_EPIGROUP_HPP_
#define SEMICONJ_EPIGROUP_HPP_

#include <string>
#include <vector>

#include "semiconj/semigroup.hpp"

namespace semiconj {

//! Monogenic profile of one element: the power sequence a, a^2, ... is
//! eventually periodic; index is the least i with a^i in the cycle part and
//! period its length. pinv is the pseudo-inverse a', double_pinv is a''.
struct MonogenicData {
  int index;
  int period;
  int omega_exp;    // least k >= index with k ≡ 0 (mod period)
  int omega;        // a^omega_exp, the idempotent power
  int pinv;         // a'
  int double_pinv;  // a'' = a a' a
};

MonogenicData monogenic(Semigroup const& s, int a);

struct EpiClassification {
  std::vector<int> index_of;  // per element epigroup index
  bool is_epigroup;           // always true for finite S
  bool is_completely_regular;
  int min_n_with_S_eq_Epi_n;  // max index over elements
};

EpiClassification epi_classification(Semigroup const& s);

struct VarietyMembership {
  int max_index;
  bool in_W;
  bool in_V;
  bool in_E(int n) const { return max_index <= n; }
};

VarietyMembership variety_membership(Semigroup const& s);

//! Checks the pseudo-inverse identities x'xx' = x', xx' = x'x, xx'x = x'',
//! x''' = x' and (xy)'x = x(yx)' over all elements/pairs.
struct IdentityReport {
  struct Violation {
    std::string identity;
    int x, y;  // y = -1 for one-variable identities
  };
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

IdentityReport pinv_identity_suite(Semigroup const& s);

}  // namespace semiconj

#endif  // SEMICONJ_EPIGROUP_HPP_
