#ifndef SEMICONJ_CANONICAL_HPP_
#define SEMICONJ_CANONICAL_HPP_

#include <vector>

#include "semiconj/semigroup.hpp"

namespace semiconj {

//! Lexicographically least flattened table over all n! relabelings of S and
//! of its anti-isomorphic (transposed) copy. Two semigroups are equivalent
//! (isomorphic or anti-isomorphic) iff their canonical forms are equal.
std::vector<int> canonical_form(Semigroup const& s);

//! Same minimization over relabelings of S only (isomorphism classes).
std::vector<int> canonical_form_iso(Semigroup const& s);

Semigroup relabel(Semigroup const& s, std::vector<int> const& perm);
Semigroup transpose(Semigroup const& s);

}  // namespace semiconj

#endif  // SEMICONJ_CANONICAL_HPP_
