#include "semiconj/conjugacy.hpp"

#include <algorithm>

#include "semiconj/epigroup.hpp"
#include "semiconj/error.hpp"

namespace semiconj {

PairRelation p_relation(Semigroup const& s) {
  int n = s.size();
  int m = s.s1_size();
  std::vector<char> seen(static_cast<size_t>(n) * n, 0);
  for (int u = 0; u < m; ++u) {
    for (int v = 0; v < m; ++v) {
      int uv = s.mul1(u, v);
      int vu = s.mul1(v, u);
      if (uv < n && vu < n) seen[static_cast<size_t>(uv) * n + vu] = 1;
    }
  }
  PairRelation rel(n);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (seen[static_cast<size_t>(a) * n + b]) rel.add(a, b);
    }
  }
  return rel;
}

EqPartition p_star(Semigroup const& s) {
  return p_relation(s).transitive_closure();
}

namespace {

// arrow[a][b] = exists g in S^1 with ag = gb.
std::vector<char> o_arrows(Semigroup const& s) {
  int n = s.size();
  int m = s.s1_size();
  std::vector<char> arrow(static_cast<size_t>(n) * n, 0);
  for (int g = 0; g < m; ++g) {
    for (int a = 0; a < n; ++a) {
      int ag = s.mul1(a, g);
      for (int b = 0; b < n; ++b) {
        if (ag == s.mul1(g, b)) arrow[static_cast<size_t>(a) * n + b] = 1;
      }
    }
  }
  return arrow;
}

EqPartition partition_from_mutual(std::vector<char> const& arrow, int n,
                                  char const* what) {
  PairRelation rel(n);
  for (int a = 0; a < n; ++a) {
    if (!arrow[static_cast<size_t>(a) * n + a]) {
      throw InternalError(std::string(what) + " is not reflexive");
    }
    for (int b = a + 1; b < n; ++b) {
      if (arrow[static_cast<size_t>(a) * n + b]
          && arrow[static_cast<size_t>(b) * n + a]) {
        rel.add(a, b);
      }
    }
  }
  if (!rel.is_transitive()) {
    throw InternalError(std::string(what) + " is not transitive");
  }
  return rel.transitive_closure();
}

}  // namespace

EqPartition o_conjugacy(Semigroup const& s) {
  return partition_from_mutual(o_arrows(s), s.size(), "~o");
}

bool ConjugatorSet::contains(int g) const {
  return std::binary_search(base.begin(), base.end(), g);
}

ConjugatorSet conjugator_set(Semigroup const& s, int a) {
  int n = s.size();
  ConjugatorSet cs;
  cs.includes_adjoined_identity = true;
  auto z = s.zero();
  if (!z) {
    cs.base.resize(n);
    for (int g = 0; g < n; ++g) cs.base[g] = g;
    return cs;
  }
  if (a == *z) {
    cs.base = {*z};
    return cs;
  }
  // M = S^1 a \ {0}
  std::vector<char> in_m(n, 0);
  for (int m = 0; m < s.s1_size(); ++m) in_m[s.mul1(m, a)] = 1;
  in_m[*z] = 0;
  for (int g = 0; g < n; ++g) {
    bool ok = true;
    for (int x = 0; x < n; ++x) {
      if (in_m[x] && s.at(x, g) == *z) {
        ok = false;
        break;
      }
    }
    if (ok) cs.base.push_back(g);
  }
  return cs;
}

namespace {

// arrow[a][b] = exists g in P^1(a) with ag = gb.
std::vector<char> c_arrows(Semigroup const& s) {
  int n = s.size();
  std::vector<char> arrow(static_cast<size_t>(n) * n, 0);
  int one = s.one();
  for (int a = 0; a < n; ++a) {
    ConjugatorSet ps = conjugator_set(s, a);
    for (int b = 0; b < n; ++b) {
      bool found = s.mul1(a, one) == s.mul1(one, b);  // g = 1
      for (size_t i = 0; i < ps.base.size() && !found; ++i) {
        int g = ps.base[i];
        found = s.at(a, g) == s.at(g, b);
      }
      if (found) arrow[static_cast<size_t>(a) * n + b] = 1;
    }
  }
  return arrow;
}

}  // namespace

EqPartition c_conjugacy(Semigroup const& s) {
  EqPartition c = partition_from_mutual(c_arrows(s), s.size(), "~c");
  auto z = s.zero();
  if (z) {
    if (c.classes()[c.class_id(*z)].size() != 1) {
      throw InternalError("~c class of zero is not {0}");
    }
  } else if (!(c == o_conjugacy(s))) {
    throw InternalError("~c != ~o on a semigroup without zero");
  }
  return c;
}

namespace {

struct PinvTables {
  std::vector<int> omega, dpinv;
};

PinvTables pinv_tables(Semigroup const& s) {
  PinvTables t;
  t.omega.resize(s.size());
  t.dpinv.resize(s.size());
  for (int a = 0; a < s.size(); ++a) {
    MonogenicData d = monogenic(s, a);
    t.omega[a] = d.omega;
    t.dpinv[a] = d.double_pinv;
  }
  return t;
}

// ghg = g, hgh = h, ha''g = b'', gh = a^omega, hg = b^omega.
bool tr_pair_definitional(Semigroup const& s, PinvTables const& t, int a, int b) {
  int m = s.s1_size();
  int aw = t.omega[a], bw = t.omega[b];
  int app = t.dpinv[a], bpp = t.dpinv[b];
  for (int g = 0; g < m; ++g) {
    for (int h = 0; h < m; ++h) {
      if (s.mul1(g, h) != aw || s.mul1(h, g) != bw) continue;
      if (s.mul1(s.mul1(g, h), g) != g || s.mul1(s.mul1(h, g), h) != h) continue;
      if (s.mul1(s.mul1(h, app), g) == bpp) return true;
    }
  }
  return false;
}

}  // namespace

EqPartition tr_conjugacy(Semigroup const& s, TrMethod method) {
  int n = s.size();
  PinvTables t = pinv_tables(s);
  if (method == TrMethod::via_pp) {
    PairRelation p = p_relation(s);
    std::vector<char> arrow(static_cast<size_t>(n) * n, 0);
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        arrow[static_cast<size_t>(a) * n + b] = p.contains(t.dpinv[a], t.dpinv[b]);
      }
    }
    return partition_from_mutual(arrow, n, "~tr");
  }
  std::vector<char> arrow(static_cast<size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a) {
    for (int b = a; b < n; ++b) {
      // the defining conditions are symmetric in (a, g) vs (b, h)
      bool r = tr_pair_definitional(s, t, a, b);
      arrow[static_cast<size_t>(a) * n + b] = r;
      arrow[static_cast<size_t>(b) * n + a] = r;
    }
  }
  return partition_from_mutual(arrow, n, "~tr");
}

namespace {

std::vector<std::pair<int, int>> mutually_inverse_pairs(Semigroup const& s) {
  int m = s.s1_size();
  std::vector<std::pair<int, int>> mi;
  for (int g = 0; g < m; ++g) {
    for (int h = 0; h < m; ++h) {
      if (s.mul1(s.mul1(g, h), g) == g && s.mul1(s.mul1(h, g), h) == h) {
        mi.emplace_back(g, h);
      }
    }
  }
  return mi;
}

}  // namespace

StrongRelations strong_relations(Semigroup const& s) {
  int n = s.size();
  auto mi = mutually_inverse_pairs(s);
  std::vector<ConjugatorSet> ps;
  ps.reserve(n);
  for (int a = 0; a < n; ++a) ps.push_back(conjugator_set(s, a));
  int one = s.one();
  auto in_p1 = [&](int a, int g) {
    return g == one || (g < n && ps[a].contains(g));
  };

  StrongRelations out{PairRelation(n), PairRelation(n)};
  for (int a = 0; a < n; ++a) {
    for (int b = a; b < n; ++b) {
      bool so = false, sc = false;
      for (auto const& [g, h] : mi) {
        if (s.mul1(a, g) != s.mul1(g, b) || s.mul1(b, h) != s.mul1(h, a)) continue;
        so = true;
        if (in_p1(a, g) && in_p1(b, h)) {
          sc = true;
          break;
        }
      }
      if (so) out.so.add(a, b);
      if (sc) out.sc.add(a, b);
      if (a == b && !so) throw InternalError("~so is not reflexive");
    }
  }
  if (!out.so.subset_of(o_conjugacy(s))) throw InternalError("~so not within ~o");
  if (!out.sc.subset_of(c_conjugacy(s))) throw InternalError("~sc not within ~c");
  return out;
}

StrongOWitness strong_o_witness(Semigroup const& s, int a, int b, int c, int d) {
  int n = s.size();
  int m = s.s1_size();
  if (a < 0 || a >= n || b < 0 || b >= n || c < 0 || c >= m || d < 0 || d >= m) {
    throw RangeError("element out of range");
  }
  if (s.mul1(a, c) != s.mul1(c, b) || s.mul1(b, d) != s.mul1(d, a)) {
    throw PreconditionError("(c, d) are not o-conjugators of (a, b)");
  }
  int da = s.mul1(d, a);
  int cda = s.mul1(c, da);
  int h = s.at(da, monogenic(s, cda).pinv);
  int g = s.mul1(s.mul1(c, h), c);

  StrongOWitness w;
  w.g = g;
  w.h = h;
  w.o_valid = s.mul1(s.mul1(g, h), g) == g && s.mul1(s.mul1(h, g), h) == h
              && s.mul1(a, g) == s.mul1(g, b) && s.mul1(b, h) == s.mul1(h, a);
  int one = s.one();
  auto in_p1 = [&](int x, int y) {
    return y == one || (y < n && conjugator_set(s, x).contains(y));
  };
  w.c_valid = w.o_valid && in_p1(a, g) && in_p1(b, h);
  return w;
}

namespace {

RelationCharacter character_of_partition(Semigroup const& s, EqPartition const& part) {
  RelationCharacter rc{};
  rc.is_identity = part.is_identity();
  rc.is_universal = part.is_universal();
  auto z = s.zero();
  if (!z) {
    rc.universal_on_nonzero = rc.is_universal;
  } else {
    int nonzero_class = -1;
    bool ok = true;
    for (int x = 0; x < s.size(); ++x) {
      if (x == *z) continue;
      if (nonzero_class < 0) {
        nonzero_class = part.class_id(x);
      } else if (part.class_id(x) != nonzero_class) {
        ok = false;
        break;
      }
    }
    rc.universal_on_nonzero = ok;
  }
  return rc;
}

RelationCharacter character_of_pairs(Semigroup const& s, PairRelation const& rel) {
  RelationCharacter rc{};
  rc.is_identity = rel.is_identity();
  rc.is_universal = rel.is_universal();
  auto z = s.zero();
  if (!z) {
    rc.universal_on_nonzero = rc.is_universal;
  } else {
    bool ok = true;
    for (int a = 0; a < s.size() && ok; ++a) {
      if (a == *z) continue;
      for (int b = a + 1; b < s.size(); ++b) {
        if (b == *z) continue;
        if (!rel.contains(a, b)) {
          ok = false;
          break;
        }
      }
    }
    rc.universal_on_nonzero = ok;
  }
  return rc;
}

}  // namespace

RelationCharacter relation_character(Semigroup const& s, Relation which) {
  switch (which) {
    case Relation::p:
      return character_of_pairs(s, p_relation(s));
    case Relation::p_star:
      return character_of_partition(s, p_star(s));
    case Relation::o:
      return character_of_partition(s, o_conjugacy(s));
    case Relation::c:
      return character_of_partition(s, c_conjugacy(s));
    case Relation::tr:
      return character_of_partition(s, tr_conjugacy(s, TrMethod::via_pp));
  }
  throw RangeError("unknown relation");
}

ConjugacyReport conjugacy_report(Semigroup const& s) {
  ConjugacyReport r;
  r.p = p_relation(s);
  r.p_star = r.p.transitive_closure();
  r.p_transitive = r.p.is_transitive();
  r.o = o_conjugacy(s);
  r.c = c_conjugacy(s);
  r.tr = tr_conjugacy(s, TrMethod::via_pp);
  if (s.size() <= 96
      && !(tr_conjugacy(s, TrMethod::definitional) == r.tr)) {
    throw InternalError("~tr methods disagree");
  }
  StrongRelations sr = strong_relations(s);
  r.so = sr.so;
  r.sc = sr.sc;
  r.c_and_p = intersect(r.c, r.p);
  r.c_and_p_star = intersect(r.c, r.p_star);
  r.c_and_tr = intersect(r.c, r.tr);
  r.inclusion_diagram_ok = r.p.subset_of(r.p_star) && r.p_star.refines(r.tr)
                           && r.tr.refines(r.o) && r.c.refines(r.o);
  r.char_p = character_of_pairs(s, r.p);
  r.char_p_star = character_of_partition(s, r.p_star);
  r.char_o = character_of_partition(s, r.o);
  r.char_c = character_of_partition(s, r.c);
  r.char_tr = character_of_partition(s, r.tr);
  return r;
}

}  // namespace semiconj
