#ifndef SEMICONJ_CONSTRUCTORS_HPP_
#define SEMICONJ_CONSTRUCTORS_HPP_

#include <map>
#include <string>
#include <vector>

#include "semiconj/semigroup.hpp"

namespace semiconj {

//! Rees matrix data M(G; I, Lambda; P): G must be a group, P is a
//! lambda_count x i_count matrix of G-elements; the entry -1 denotes the
//! zero of the 0-variant (only allowed there, and no row or column of P
//! may consist entirely of zeros).
struct ReesSpec {
  Semigroup G;
  int i_count;
  int lambda_count;
  std::vector<std::vector<int>> P;
};

//! Elements are triples (i, g, lambda) in lexicographic order, encoded as
//! i*|G|*|Lambda| + g*|Lambda| + lambda. In the 0-variant the zero is the
//! last element.
Semigroup rees(ReesSpec const& spec);
Semigroup rees_zero(ReesSpec const& spec);

struct ReesElement {
  int i, g, lambda;
  bool is_zero;
};
ReesElement rees_decode(ReesSpec const& spec, int index);

Semigroup null_semigroup(int n);
Semigroup rectangular_band(int p, int q);
Semigroup cyclic_group(int n);
Semigroup chain_semilattice(int n);
//! The semilattice of Figure-2 shape: a zero, n pairwise-incomparable
//! interior elements (xy = 0 for distinct x, y), and an identity on top.
Semigroup antichain_with_0_1(int n);
Semigroup symmetric_group(int n);  // n <= 4
Semigroup direct_product(Semigroup const& s, Semigroup const& t);

//! The variant (S, o) with x o y = xay.
Semigroup variant(Semigroup const& s, int a);

//! For completely regular S: checks that x* = (xa)'x(ax)' computed in S is
//! the pseudo-inverse of x in the variant at a, and reports whether the
//! variant lies in the variety W.
struct UnaryVariantReport {
  bool applicable;      // S completely regular
  bool star_matches;    // x* equals the variant's pseudo-inverse for all x
  bool variant_in_W;
  std::vector<int> star;  // the computed x* per element
};

UnaryVariantReport unary_variant_check(Semigroup const& s, int a);

//! Tables transcribed from the source material, keyed by fixture ID.
std::map<std::string, Semigroup> const& fixtures();
Semigroup fixture(std::string const& id);

}  // namespace semiconj

#endif  // SEMICONJ_CONSTRUCTORS_HPP_
