#include <doctest.h>

#include "semiconj/conjugacy.hpp"
#include "semiconj/green.hpp"
#include "semiconj/pinj.hpp"

using namespace semiconj;

TEST_CASE("compose and inverse") {
  PartialInjection f(2, {1, PartialInjection::kAbsent});  // the chain [0 1]
  PartialInjection idd = f.compose(f.inverse());
  CHECK(idd.apply(0) == 0);
  CHECK_FALSE(idd.in_domain(1));

  PartialInjection zero = PartialInjection::empty(3);
  PartialInjection g(3, {1, 2, 0});
  CHECK(zero.compose(g) == zero);
  CHECK(g.compose(zero) == zero);

  CHECK(g.inverse().inverse() == g);
  CHECK(f.inverse().inverse() == f);

  PartialInjection other(3, {1, 2, 0});
  CHECK_THROWS_AS(f.compose(other), DimensionMismatch);
}

TEST_CASE("the nine-point example decomposes as one cycle and two chains") {
  // 0-based translation of the map 1->3, 2->6, 4->5, 5->9, 6->8, 8->2 on
  // nine points.
  int const A = PartialInjection::kAbsent;
  PartialInjection alpha(9, {2, 5, A, 4, 8, 7, A, 1, A});
  CycleChainType t = cc_type(alpha);
  CHECK(t.cycles == std::map<int, int>{{3, 1}});
  CHECK(t.chains == std::map<int, int>{{1, 1}, {2, 1}});

  // composing alpha with itself, evaluated by hand
  PartialInjection sq = alpha.compose(alpha);
  std::vector<int> expect = {A, 7, A, 8, A, 1, A, 5, A};
  CHECK(sq.raw() == expect);

  CHECK(cc_type(alpha.inverse()) == t);
}

TEST_CASE("decompose edge cases") {
  CycleChainType idt = cc_type(PartialInjection::identity(4));
  CHECK(idt.cycles == std::map<int, int>{{1, 4}});
  CHECK(idt.chains.empty());

  CycleChainType empty = cc_type(PartialInjection::empty(3));
  CHECK(empty.cycles.empty());
  CHECK(empty.chains.empty());

  // pieces reassemble the map exactly
  int const A = PartialInjection::kAbsent;
  PartialInjection alpha(9, {2, 5, A, 4, 8, 7, A, 1, A});
  std::vector<int> rebuilt(9, A);
  for (auto const& piece : decompose(alpha)) {
    int np = static_cast<int>(piece.points.size());
    for (int i = 0; i + 1 < np; ++i) rebuilt[piece.points[i]] = piece.points[i + 1];
    if (piece.is_cycle) rebuilt[piece.points.back()] = piece.points.front();
  }
  CHECK(rebuilt == alpha.raw());
}

TEST_CASE("symmetric inverse monoid sizes") {
  CHECK(symmetric_inverse_monoid(1).table.size() == 2);
  CHECK(symmetric_inverse_monoid(2).table.size() == 7);
  CHECK(symmetric_inverse_monoid(3).table.size() == 34);
  CHECK(symmetric_inverse_monoid(4).table.size() == 209);
  CHECK_THROWS_AS(symmetric_inverse_monoid(6), SizeLimit);
  CHECK_THROWS_AS(symmetric_inverse_monoid(0), SizeLimit);

  SymmetricInverseMonoid m = symmetric_inverse_monoid(2);
  CHECK(m.table.zero() == 0);  // empty map first
  CHECK(m.table.is_monoid());
  CHECK(m.index_of(PartialInjection::identity(2)) == *m.table.identity());
}

TEST_CASE("text form") {
  PartialInjection f = PartialInjection::parse("5; 1 2 - 0 -");
  CHECK(f.apply(0) == 1);
  CHECK_FALSE(f.in_domain(2));
  CHECK(PartialInjection::parse(f.to_string()) == f);
  CHECK_THROWS_AS(PartialInjection::parse("3; 0 0 1"), RangeError);
  CHECK_THROWS_AS(PartialInjection::parse("3; 0 1"), ParseError);
  CHECK_THROWS_AS(PartialInjection::parse("0 1 2"), ParseError);
}

TEST_CASE("r-homomorphisms") {
  int const A = PartialInjection::kAbsent;
  PartialInjection alpha(4, {1, A, 3, A});  // chains [0 1] and [2 3]
  CHECK(is_r_homomorphism(PartialInjection::identity(4), alpha, alpha));

  // a chain cannot land in an empty graph
  PartialInjection zero = PartialInjection::empty(4);
  PartialInjection chain(4, {1, A, A, A});
  CHECK_FALSE(is_r_homomorphism(PartialInjection::identity(4), chain, zero));
  CHECK_FALSE(c_oracle(chain, zero));
  CHECK(c_oracle(zero, zero));

  // a short chain embeds into a longer one only tail-aligned
  PartialInjection longer(4, {1, 2, 3, A});
  // [0 1] -> [2 3]: 0 maps to 2, 1 maps to 3
  PartialInjection tail(4, {2, 3, A, A});
  CHECK(is_r_homomorphism(tail, chain, longer));
  PartialInjection head(4, {0, 1, A, A});
  CHECK_FALSE(is_r_homomorphism(head, chain, longer));
  // one-way embedding exists, the reverse does not
  CHECK(!c_oracle(chain, longer));
}

TEST_CASE("a permutation witness is an r-homomorphism both ways") {
  int const A = PartialInjection::kAbsent;
  PartialInjection alpha(6, {1, 2, 0, 4, A, A});  // cycle (0 1 2), chain [3 4]
  PartialInjection rho(6, {3, 4, 5, 0, 1, 2});
  PartialInjection beta = rho.inverse().compose(alpha).compose(rho);
  REQUIRE(cc_type(alpha) == cc_type(beta));
  auto sigma = permutation_witness(alpha, beta);
  REQUIRE(sigma.has_value());
  CHECK(is_r_homomorphism(*sigma, beta, alpha));
  CHECK(is_r_homomorphism(sigma->inverse(), alpha, beta));
}

TEST_CASE("permutation witness") {
  int const A = PartialInjection::kAbsent;
  PartialInjection alpha(5, {1, 0, 3, A, A});  // cycle (0 1), chain [2 3]
  PartialInjection beta(5, {A, 2, 1, A, 0});   // cycle (1 2), chain [4 0]
  REQUIRE(cc_type(alpha) == cc_type(beta));
  auto sigma = permutation_witness(alpha, beta);
  REQUIRE(sigma.has_value());
  CHECK(sigma->inverse().compose(beta).compose(*sigma) == alpha);

  auto none = permutation_witness(alpha, PartialInjection::empty(5));
  CHECK_FALSE(none.has_value());

  auto self = permutation_witness(alpha, alpha);
  REQUIRE(self.has_value());
  CHECK(self->inverse().compose(alpha).compose(*self) == alpha);
}

TEST_CASE("I_n: the four c routes and the p*/tr/cycle-type routes agree") {
  for (int n = 1; n <= 3; ++n) {
    SymmetricInverseMonoid m = symmetric_inverse_monoid(n);
    int count = m.table.size();
    EqPartition c = c_conjugacy(m.table);
    EqPartition pstar = p_star(m.table);
    EqPartition tr = tr_conjugacy(m.table, TrMethod::via_pp);
    GreenData g = green(m.table);
    for (int i = 0; i < count; ++i) {
      for (int j = i + 1; j < count; ++j) {
        bool type_eq = cc_type(m.elements[i]) == cc_type(m.elements[j]);
        bool cyc_eq = cycle_type(m.elements[i]) == cycle_type(m.elements[j]);
        CHECK(c.same(i, j) == type_eq);
        CHECK(c_oracle(m.elements[i], m.elements[j]) == type_eq);
        CHECK(permutation_witness(m.elements[i], m.elements[j]).has_value()
              == type_eq);
        CHECK(pstar.same(i, j) == cyc_eq);
        CHECK(tr.same(i, j) == cyc_eq);
        if (c.same(i, j)) CHECK(g.J.same(i, j));
      }
    }
  }
}

TEST_CASE("I_2: c strictly below p with the chain-zero witness") {
  SymmetricInverseMonoid m = symmetric_inverse_monoid(2);
  int const A = PartialInjection::kAbsent;
  int chain = m.index_of(PartialInjection(2, {1, A}));
  int zero = m.index_of(PartialInjection::empty(2));
  PairRelation p = p_relation(m.table);
  EqPartition c = c_conjugacy(m.table);
  CHECK(partition_subset_of(c, p));
  CHECK(p.contains(chain, zero));
  CHECK_FALSE(c.same(chain, zero));
}
