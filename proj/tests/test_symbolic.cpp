#include <doctest.h>

#include "semiconj/conjugacy.hpp"
#include "semiconj/symbolic.hpp"

using namespace semiconj;

namespace {

CCRType T(std::string const& text) { return parse_type(text); }

}  // namespace

TEST_CASE("cardinal arithmetic") {
  CHECK(Cardinal::fin(2) + Cardinal::fin(3) == Cardinal::fin(5));
  CHECK(Cardinal::fin(7) + Cardinal::aleph0() == Cardinal::aleph0());
  CHECK(Cardinal::aleph0() + Cardinal::aleph0() == Cardinal::aleph0());
  CHECK(Cardinal::fin(9) < Cardinal::aleph0());
  CHECK_FALSE(Cardinal::aleph0() < Cardinal::fin(9));
}

TEST_CASE("kappa and mu") {
  CCRType a = T("chains{2:1;0}");
  CHECK(kappa(a) == Cardinal::fin(2));
  CHECK(mu(a) == 0);

  CCRType b = T("chains{;w}");
  CHECK(kappa(b) == Cardinal::aleph0());

  CCRType c = T("cycles{3:2;0}");
  CHECK(kappa(c) == Cardinal::fin(0));
  CHECK(mu(c) == 0);

  CCRType d = T("chains{1:w,3:2,5:w;0}");
  CHECK(kappa(d) == Cardinal::fin(5));
  CHECK(mu(d) == 5);

  CCRType e = T("chains{1:w,3:2;0}");
  CHECK(mu(e) == 1);
}

TEST_CASE("type c-conjugacy: the two countable witnesses") {
  // one chain of length 2 plus infinitely many left rays vs the rays alone
  CCRType t1 = T("chains{2:1;0} lambda=w");
  CCRType t2 = T("lambda=w");
  CHECK(c_conjugate(t1, t2));
  CHECK(c_conjugate(t2, t1));

  // a chain of length 2 vs one of length 1, no rays: kappa differs
  CCRType u1 = T("chains{2:1;0}");
  CCRType u2 = T("chains{1:1;0}");
  CHECK_FALSE(c_conjugate(u1, u2));

  CHECK(c_conjugate(t1, t1));
  CHECK(c_conjugate(u2, u2));
}

TEST_CASE("type c-conjugacy exercises every clause") {
  CHECK_FALSE(c_conjugate(T("cycles{2:1;0}"), T("cycles{2:2;0}")));
  CHECK_FALSE(c_conjugate(T("omega=1"), T("omega=2")));
  CHECK_FALSE(c_conjugate(T("lambda=1"), T("lambda=w")));
  // omega infinite frees upsilon
  CHECK(c_conjugate(T("omega=w upsilon=1"), T("omega=w upsilon=0")));
  CHECK_FALSE(c_conjugate(T("omega=2 upsilon=1"), T("omega=2 upsilon=0")));
  // lambda infinite frees the whole chain structure
  CHECK(c_conjugate(T("chains{5:3;0} lambda=w"), T("chains{1:w;0} lambda=w")));
  // mu cutoff: below mu the chain counts are free, above they bind
  CHECK(c_conjugate(T("chains{1:2,2:w,3:1;0}"), T("chains{1:5,2:w,3:1;0}")));
  CHECK_FALSE(c_conjugate(T("chains{1:2,2:w,3:1;0}"), T("chains{1:2,2:w,3:2;0}")));
}

TEST_CASE("gamma relations") {
  GammaRelations a = gamma_relations(T("omega=w upsilon=1"), T("omega=w upsilon=0"));
  CHECK(a.c);
  CHECK_FALSE(a.p);
  CHECK_FALSE(a.j);

  GammaRelations b = gamma_relations(T("cycles{2:1;0} upsilon=1"),
                                     T("cycles{1:2;0} upsilon=1"));
  CHECK(b.j);
  CHECK_FALSE(b.p);
  CHECK_FALSE(b.c);

  GammaRelations c = gamma_relations(T("cycles{2:3;0} omega=1 upsilon=2"),
                                     T("cycles{2:3;0} omega=1 upsilon=2"));
  CHECK(c.p);
  CHECK(c.c);
  CHECK(c.j);

  CHECK_THROWS_AS(gamma_relations(T("chains{1:1;0}"), T("omega=1")), NotFullInjection);
  CHECK_THROWS_AS(gamma_relations(T("lambda=1"), T("omega=1")), NotFullInjection);
}

TEST_CASE("epigroup elements of I(X) and their trace conjugacy") {
  CHECK(is_epi_element(T("cycles{3:w,1:1;0}")));
  CHECK_FALSE(is_epi_element(T("upsilon=1")));
  CHECK_FALSE(is_epi_element(T("chains{;w}")));
  CHECK(is_epi_element(T("chains{1:w;0}")));

  CHECK(tr_conjugate(T("cycles{2:1;0} chains{1:5;0}"),
                     T("cycles{2:1;0} chains{4:1;0}")));
  CHECK_FALSE(tr_conjugate(T("cycles{2:1;0}"), T("cycles{1:2;0}")));
  CHECK_THROWS_AS(tr_conjugate(T("upsilon=1"), T("cycles{1:1;0}")), NotEpiElement);
}

TEST_CASE("domain cardinality and the J relation") {
  CHECK(dom_cardinality(T("cycles{3:1;0}")) == Cardinal::fin(3));
  CHECK(dom_cardinality(T("cycles{1:3;0}")) == Cardinal::fin(3));
  CHECK(dom_cardinality(T("chains{2:2;0}")) == Cardinal::fin(4));
  CHECK(dom_cardinality(T("upsilon=1")) == Cardinal::aleph0());
  CHECK(i_j_related(T("omega=1"), T("lambda=5")));
  CHECK(i_j_related(T("cycles{3:1;0}"), T("cycles{1:3;0}")));
  CHECK_FALSE(i_j_related(T("cycles{1:1;0}"), T("cycles{1:2;0}")));
}

TEST_CASE("type literals round-trip") {
  for (std::string lit : {"cycles{2:1;0} chains{;0} omega=w upsilon=1 lambda=0",
                          "cycles{;w} chains{1:w,4:2;0} omega=0 upsilon=0 lambda=3"}) {
    CCRType t = parse_type(lit);
    CHECK(format_type(t) == lit);
  }
  CHECK_THROWS_AS(parse_type("cycles{1;0}"), ParseError);
  CHECK_THROWS_AS(parse_type("bogus=3"), ParseError);
  CHECK_THROWS_AS(parse_type("cycles{1:2}"), ParseError);
}

TEST_CASE("random types: deterministic per seed, equivalence sanity") {
  TypeBounds bounds;
  CCRType a = random_type(42, bounds);
  CCRType b = random_type(42, bounds);
  CHECK(format_type(a) == format_type(b));

  // reflexive, symmetric; transitivity spot-check on sampled triples
  for (uint64_t s = 0; s < 400; ++s) {
    CCRType x = random_type(3 * s, bounds);
    CCRType y = random_type(3 * s + 1, bounds);
    CCRType z = random_type(3 * s + 2, bounds);
    CHECK(c_conjugate(x, x));
    CHECK(c_conjugate(x, y) == c_conjugate(y, x));
    if (c_conjugate(x, y) && c_conjugate(y, z)) CHECK(c_conjugate(x, z));
    if (c_conjugate(x, y)) CHECK(i_j_related(x, y));
  }
}

TEST_CASE("full-injection property: p holds iff c and j both hold") {
  TypeBounds bounds;
  bounds.full_injection = true;
  for (uint64_t s = 0; s < 1000; ++s) {
    CCRType x = random_type(7000 + 2 * s, bounds);
    CCRType y = random_type(7001 + 2 * s, bounds);
    GammaRelations g = gamma_relations(x, y);
    CHECK(g.p == (g.c && g.j));
    // finite double-ray count plus c forces j
    if (x.omega.finite && g.c) CHECK(g.j);
  }
}

TEST_CASE("finite types realized in I_n agree with the table relation") {
  std::vector<std::string> lits = {
      "cycles{1:1;0}", "cycles{2:1;0}", "cycles{1:2;0}", "cycles{3:1;0}",
      "chains{1:1;0}", "chains{2:1;0}", "chains{3:1;0}", "chains{1:2;0}",
      "cycles{1:1;0} chains{1:1;0}", "cycles{2:1;0} chains{1:1;0}",
      "cycles{1:2;0} chains{1:1;0}", ""};
  int n = 4;
  SymmetricInverseMonoid m = symmetric_inverse_monoid(n);
  EqPartition c = c_conjugacy(m.table);
  auto as_int_map = [](Spectrum const& sp) {
    std::map<int, int> out;
    for (auto const& [k, card] : sp.exceptions) {
      if (card.finite && card.value > 0) out[k] = static_cast<int>(card.value);
    }
    return out;
  };
  for (auto const& la : lits) {
    for (auto const& lb : lits) {
      CCRType ta = parse_type(la), tb = parse_type(lb);
      auto ra = realize(ta, n);
      auto rb = realize(tb, n);
      REQUIRE(ra.has_value());
      REQUIRE(rb.has_value());
      CHECK(cc_type(*ra).cycles == as_int_map(ta.cycles));
      CHECK(cc_type(*ra).chains == as_int_map(ta.chains));
      int ia = m.index_of(*ra);
      int ib = m.index_of(*rb);
      CHECK(c.same(ia, ib) == c_conjugate(ta, tb));
    }
  }
}
