#include <doctest.h>

#include <random>

#include "semiconj/conjugacy.hpp"
#include "semiconj/constructors.hpp"
#include "semiconj/enumerate.hpp"
#include "semiconj/epigroup.hpp"

using namespace semiconj;

namespace {

bool rel_eq(PairRelation const& p, EqPartition const& q) {
  return p.subset_of(q) && partition_subset_of(q, p);
}

}  // namespace

TEST_CASE("p relation on the 7-element fixture") {
  Semigroup s = fixture("F7_542155");
  PairRelation p = p_relation(s);
  CHECK(p.to_string() == "(0,2) (0,3) (4,5)");
  CHECK_FALSE(p.is_transitive());
  CHECK(p_star(s).to_string() == "{0,2,3} {1} {4,5} {6}");
}

TEST_CASE("p relation: commutative semigroups have identity p") {
  CHECK(p_relation(cyclic_group(5)).is_identity());
  CHECK(p_relation(chain_semilattice(4)).is_identity());
  CHECK(p_relation(fixture("F6_STRONGC")).is_identity());
}

TEST_CASE("o conjugacy") {
  // universal whenever a zero exists
  CHECK(o_conjugacy(fixture("F7_542155")).is_universal());
  CHECK(o_conjugacy(fixture("F4_113")).is_universal());
  CHECK(o_conjugacy(null_semigroup(3)).is_universal());
  // two-element left zero semigroup
  CHECK(o_conjugacy(fixture("F2_LZ")).is_universal());
  // commutative cancellative: identity
  CHECK(o_conjugacy(cyclic_group(5)).is_identity());
}

TEST_CASE("conjugator sets of the 7-element fixture") {
  Semigroup s = fixture("F7_542155");
  std::vector<int> big = {0, 1, 2, 3, 6};
  for (int a : {0, 1, 2, 3, 6}) {
    CHECK(conjugator_set(s, a).base == big);
  }
  CHECK(conjugator_set(s, 4).base == std::vector<int>{4});
  CHECK(conjugator_set(s, 5).base.empty());
}

TEST_CASE("conjugator sets without zero cover S") {
  Semigroup rb = rectangular_band(2, 2);
  for (int a = 0; a < rb.size(); ++a) {
    CHECK(conjugator_set(rb, a).base.size() == static_cast<size_t>(rb.size()));
  }
}

TEST_CASE("c conjugacy fixtures") {
  CHECK(c_conjugacy(fixture("F7_542155")).to_string() == "{0,1,2,3,6} {4} {5}");
  CHECK(c_conjugacy(fixture("F4_113")).to_string() == "{0} {1,2,3}");
  CHECK(c_conjugacy(fixture("F4_22")).to_string() == "{0} {1,2} {3}");
  CHECK(c_conjugacy(fixture("F4_56")).to_string() == "{0} {1} {2,3}");
  CHECK(c_conjugacy(fixture("F7_E2B")).to_string() == "{0} {1} {2} {3,4} {5,6}");
}

TEST_CASE("c equals o without zero") {
  for (Semigroup s : {fixture("F6_E2A"), fixture("F2_LZ"), rectangular_band(2, 3)}) {
    CHECK(c_conjugacy(s) == o_conjugacy(s));
  }
  CHECK(c_conjugacy(fixture("F6_E2A")).to_string() == "{0,1,2} {3,4,5}");
}

TEST_CASE("tr conjugacy fixtures, both methods") {
  struct Row {
    char const* id;
    char const* expect;
  };
  // F7_542155: {0,1,2,3} share a'' = 0, elements 4 and 5 share a'' = 4,
  // and 6 is alone; forced by p* within tr.
  for (Row row : {Row{"F7_542155", "{0,1,2,3} {4,5} {6}"},
                  Row{"F4_22", "{0,1,2} {3}"},
                  Row{"F4_113", "{0} {1,3} {2}"},
                  Row{"F4_56", "{0,1} {2} {3}"}}) {
    Semigroup s = fixture(row.id);
    EqPartition def = tr_conjugacy(s, TrMethod::definitional);
    EqPartition via = tr_conjugacy(s, TrMethod::via_pp);
    CHECK(def == via);
    CHECK(def.to_string() == row.expect);
  }
}

TEST_CASE("tr on a group is group conjugacy") {
  Semigroup s3 = symmetric_group(3);
  // oracle: brute-force group conjugation from the table
  int e = *s3.identity();
  std::vector<int> inv(s3.size());
  for (int g = 0; g < s3.size(); ++g) {
    for (int h = 0; h < s3.size(); ++h) {
      if (s3.at(g, h) == e) inv[g] = h;
    }
  }
  EqPartition tr = tr_conjugacy(s3, TrMethod::definitional);
  for (int a = 0; a < s3.size(); ++a) {
    for (int b = 0; b < s3.size(); ++b) {
      bool conj = false;
      for (int g = 0; g < s3.size(); ++g) {
        if (s3.at(s3.at(inv[g], a), g) == b) conj = true;
      }
      CHECK(tr.same(a, b) == conj);
    }
  }
  // S3: identity, three transpositions, two 3-cycles
  CHECK(tr.num_classes() == 3);
}

TEST_CASE("strong relations") {
  Semigroup s = fixture("F6_STRONGC");
  StrongRelations sr = strong_relations(s);
  CHECK(sr.sc.contains(2, 3));  // witnessed by g = h = 5
  CHECK(rel_eq(sr.so, o_conjugacy(s)));

  Semigroup lz = fixture("F2_LZ");
  StrongRelations sl = strong_relations(lz);
  CHECK(sl.so.is_universal());
}

TEST_CASE("strong o witness formula") {
  // reflexive case: c = d = identity of S^1
  Semigroup z4 = cyclic_group(4);
  StrongOWitness w = strong_o_witness(z4, 1, 1, *z4.identity(), *z4.identity());
  CHECK(w.o_valid);
  CHECK(w.c_valid);

  // the F6_STRONGC caveat: formula produces g = h = 0, conjugation equations
  // hold but the conjugators escape the P^1 sets
  Semigroup s = fixture("F6_STRONGC");
  StrongOWitness bad = strong_o_witness(s, 2, 3, 4, 4);
  CHECK(bad.g == 0);
  CHECK(bad.h == 0);
  CHECK(bad.o_valid);
  CHECK_FALSE(bad.c_valid);

  CHECK_THROWS_AS(strong_o_witness(s, 2, 3, 1, 4), PreconditionError);
}

TEST_CASE("strong o witness on random Rees pairs") {
  std::mt19937 rng(23);
  for (int rep = 0; rep < 20; ++rep) {
    int gsize = 1 + static_cast<int>(rng() % 3);
    ReesSpec spec{cyclic_group(gsize), 1 + static_cast<int>(rng() % 2),
                  1 + static_cast<int>(rng() % 2), {}};
    spec.P.assign(spec.lambda_count, std::vector<int>(spec.i_count));
    for (auto& row : spec.P) {
      for (int& v : row) v = static_cast<int>(rng() % gsize);
    }
    Semigroup s = rees(spec);
    // pick an o-conjugate pair, then search its (c, d) conjugators
    EqPartition o = o_conjugacy(s);
    int a = static_cast<int>(rng() % s.size());
    auto const& cls = o.classes()[o.class_id(a)];
    int b = cls[rng() % cls.size()];
    int m = s.s1_size();
    int cc = -1, dd = -1;
    for (int c = 0; c < m && cc < 0; ++c) {
      if (s.mul1(a, c) != s.mul1(c, b)) continue;
      for (int d = 0; d < m; ++d) {
        if (s.mul1(b, d) == s.mul1(d, a)) {
          cc = c;
          dd = d;
          break;
        }
      }
    }
    REQUIRE(cc >= 0);
    StrongOWitness w = strong_o_witness(s, a, b, cc, dd);
    CHECK(w.o_valid);
  }
}

TEST_CASE("adjoined zero: p, p*, tr stay trivial while o turns universal") {
  Semigroup s = adjoin_zero(cyclic_group(3));
  CHECK(p_relation(s).is_identity());
  CHECK(p_star(s).is_identity());
  CHECK(tr_conjugacy(s, TrMethod::definitional).is_identity());
  CHECK(o_conjugacy(s).is_universal());
  CHECK_FALSE(c_conjugacy(s).is_universal());
}

TEST_CASE("relation characters") {
  Semigroup f5 = fixture("F5_110");
  CHECK(relation_character(f5, Relation::c).is_identity);
  CHECK_FALSE(basic_predicates(f5).commutative);

  Semigroup ac = antichain_with_0_1(3);
  CHECK(relation_character(ac, Relation::o).is_universal);
  CHECK(relation_character(ac, Relation::c).is_identity);

  CHECK(relation_character(rectangular_band(2, 3), Relation::p).is_universal);
}

TEST_CASE("incomparability fixture F5_CMP") {
  Semigroup s = fixture("F5_CMP");
  CHECK(c_conjugacy(s).to_string() == "{0} {1,3} {2} {4}");
  CHECK(p_relation(s).to_string() == "(2,4)");
}

TEST_CASE("full report wiring") {
  ConjugacyReport r = conjugacy_report(fixture("F7_542155"));
  CHECK(r.inclusion_diagram_ok);
  CHECK_FALSE(r.p_transitive);
  CHECK(r.c_and_p.to_string() == "(0,2) (0,3)");
  CHECK(r.c_and_p_star.to_string() == "{0,2,3} {1} {4} {5} {6}");
  CHECK(r.c_and_tr.to_string() == "{0,1,2,3} {4} {5} {6}");
  CHECK(r.char_o.is_universal);
  CHECK(r.char_c.universal_on_nonzero == false);
}

TEST_CASE("E2A example chain") {
  Semigroup s = fixture("F6_E2A");
  PairRelation p = p_relation(s);
  CHECK(p.to_string() == "(1,2) (3,4) (3,5)");
  CHECK_FALSE(p.is_transitive());
  EqPartition star = p_star(s);
  CHECK(star.to_string() == "{0} {1,2} {3,4,5}");
  CHECK(tr_conjugacy(s, TrMethod::definitional) == star);
}

TEST_CASE("E2B example: transitive p equal to tr") {
  Semigroup s = fixture("F7_E2B");
  PairRelation p = p_relation(s);
  CHECK(p.is_transitive());
  EqPartition star = p_star(s);
  CHECK(star.to_string() == "{0} {1} {2,3,4} {5,6}");
  CHECK(tr_conjugacy(s, TrMethod::via_pp) == star);
}

TEST_CASE("tr is the equivalence generated by a ~ a'' and xy ~ yx") {
  // independent third route: close {(a, a''), (xy, yx)} under
  // union-find and compare with both computed methods
  auto generated = [](Semigroup const& s) {
    PairRelation gen(s.size());
    for (int a = 0; a < s.size(); ++a) {
      gen.add(a, monogenic(s, a).double_pinv);
    }
    for (int x = 0; x < s.size(); ++x) {
      for (int y = 0; y < s.size(); ++y) gen.add(s.at(x, y), s.at(y, x));
    }
    return gen.transitive_closure();
  };
  for (std::string id : {"F7_542155", "F6_414_S", "F6_E2A", "F7_E2B",
                         "F6_STRONGC", "F4_22", "F4_113", "F4_56", "F5_CMP",
                         "F5_110", "F2_LZ"}) {
    Semigroup s = fixture(id);
    CHECK(generated(s) == tr_conjugacy(s, TrMethod::definitional));
  }
  for (int n = 1; n <= 4; ++n) {
    EnumConstraints c;
    c.order = n;
    enumerate(c, [&](Semigroup const& s) {
      CHECK(generated(s) == tr_conjugacy(s, TrMethod::via_pp));
    });
  }
}

TEST_CASE("on W members with zero, strong c-conjugacy equals c-conjugacy") {
  std::vector<Semigroup> members = {null_semigroup(2), null_semigroup(4),
                                    adjoin_zero(rectangular_band(2, 2)),
                                    variant(chain_semilattice(3), 0)};
  for (auto const& s : members) {
    REQUIRE(variety_membership(s).in_W);
    REQUIRE(s.zero().has_value());
    StrongRelations sr = strong_relations(s);
    EqPartition c = c_conjugacy(s);
    CHECK(sr.sc.subset_of(c));
    CHECK(partition_subset_of(c, sr.sc));
  }
}

TEST_CASE("xy ~ yx for p and o") {
  for (std::string id : {"F7_542155", "F6_E2A", "F5_CMP"}) {
    Semigroup s = fixture(id);
    PairRelation p = p_relation(s);
    EqPartition o = o_conjugacy(s);
    for (int x = 0; x < s.size(); ++x) {
      for (int y = 0; y < s.size(); ++y) {
        CHECK(p.contains(s.at(x, y), s.at(y, x)));
        CHECK(o.same(s.at(x, y), s.at(y, x)));
      }
    }
  }
}
