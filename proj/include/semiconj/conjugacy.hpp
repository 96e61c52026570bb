#ifndef SEMICONJ_CONJUGACY_HPP_
#define SEMICONJ_CONJUGACY_HPP_

#include <string>
#include <vector>

#include "semiconj/semigroup.hpp"

namespace semiconj {

//! ~p: a and b are primarily related when a = uv and b = vu for some
//! u, v in S^1. Reflexive and symmetric but not transitive in general.
PairRelation p_relation(Semigroup const& s);

//! Transitive closure of ~p.
EqPartition p_star(Semigroup const& s);

//! ~o: ag = gb and bh = ha for some g, h in S^1. Universal when S has a zero.
EqPartition o_conjugacy(Semigroup const& s);

//! P(a): the conjugators g with (ma)g != 0 for every nonzero ma, m in S^1.
//! P(a) = S when S has no zero and P(0) = {0}. P^1(a) adds the identity of
//! S^1 (the flag; when S is a monoid the identity is an ordinary element).
struct ConjugatorSet {
  std::vector<int> base;
  bool includes_adjoined_identity;
  bool contains(int g) const;  // g an element of S
};

ConjugatorSet conjugator_set(Semigroup const& s, int a);

//! ~c: like ~o but with g restricted to P^1(a) and h to P^1(b).
EqPartition c_conjugacy(Semigroup const& s);

enum class TrMethod { definitional, via_pp };

//! ~tr on a finite semigroup: the definitional method searches g, h in S^1
//! with ghg = g, hgh = h, ga''h = b'', gh = a^omega, hg = b^omega; via_pp
//! tests a'' ~p b''. The two agree on every finite semigroup.
EqPartition tr_conjugacy(Semigroup const& s, TrMethod method);

//! ~so / ~sc: the conjugators must in addition be mutually inverse
//! (ghg = g and hgh = h), jointly for the same pair (g, h).
struct StrongRelations {
  PairRelation so;
  PairRelation sc;
};

StrongRelations strong_relations(Semigroup const& s);

//! Witness construction h = da(cda)', g = chc from a pair (c, d) of
//! o-conjugators (ac = cb, bd = da; c and d given as S^1 indices).
//! o_valid records whether ghg = g, hgh = h, ag = gb, bh = ha all hold;
//! c_valid whether additionally g lies in P^1(a) and h in P^1(b). The
//! formula is inapplicable for strong c-conjugacy when c_valid is false.
struct StrongOWitness {
  int g, h;  // S^1 indices
  bool o_valid;
  bool c_valid;
};

StrongOWitness strong_o_witness(Semigroup const& s, int a, int b, int c, int d);

enum class Relation { p, p_star, o, c, tr };

struct RelationCharacter {
  bool is_identity;
  bool is_universal;
  bool universal_on_nonzero;
};

RelationCharacter relation_character(Semigroup const& s, Relation which);

//! Everything at once, with the Figure-1 style inclusion flags and the
//! intersections of ~c with ~p, ~p*, ~tr.
struct ConjugacyReport {
  PairRelation p;
  EqPartition p_star, o, c, tr;
  PairRelation so, sc;
  PairRelation c_and_p;
  EqPartition c_and_p_star, c_and_tr;
  bool p_transitive;
  bool inclusion_diagram_ok;
  RelationCharacter char_p, char_p_star, char_o, char_c, char_tr;
};

//! tr is computed via a''~p b''; on small semigroups (n <= 96) the
//! definitional search runs too and the two results are checked equal.
ConjugacyReport conjugacy_report(Semigroup const& s);

}  // namespace semiconj

#endif  // SEMICONJ_CONJUGACY_HPP_
