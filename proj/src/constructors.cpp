#include "semiconj/constructors.hpp"

#include <algorithm>
#include <numeric>

#include "semiconj/epigroup.hpp"
#include "semiconj/error.hpp"

namespace semiconj {

namespace {

void check_group(Semigroup const& g) {
  if (!g.is_monoid()) throw NotAGroup("G has no identity");
  int e = *g.identity();
  for (int x = 0; x < g.size(); ++x) {
    bool has_inverse = false;
    for (int y = 0; y < g.size(); ++y) {
      if (g.at(x, y) == e && g.at(y, x) == e) {
        has_inverse = true;
        break;
      }
    }
    if (!has_inverse) {
      throw NotAGroup("element " + std::to_string(x) + " has no inverse");
    }
  }
}

void check_spec(ReesSpec const& spec, bool zero_variant) {
  check_group(spec.G);
  if (spec.i_count < 1 || spec.lambda_count < 1) {
    throw RangeError("I and Lambda must be nonempty");
  }
  if (spec.P.size() != static_cast<size_t>(spec.lambda_count)) {
    throw RangeError("P must have lambda_count rows");
  }
  for (auto const& row : spec.P) {
    if (row.size() != static_cast<size_t>(spec.i_count)) {
      throw RangeError("P rows must have i_count entries");
    }
    for (int v : row) {
      if (v == -1 && !zero_variant) {
        throw BadSandwich("zero sandwich entry outside the 0-variant");
      }
      if (v < -1 || v >= spec.G.size()) throw RangeError("bad sandwich entry");
    }
  }
  if (zero_variant) {
    for (int l = 0; l < spec.lambda_count; ++l) {
      if (std::all_of(spec.P[l].begin(), spec.P[l].end(),
                      [](int v) { return v == -1; })) {
        throw BadSandwich("row " + std::to_string(l) + " of P is all zeros");
      }
    }
    for (int i = 0; i < spec.i_count; ++i) {
      bool all_zero = true;
      for (int l = 0; l < spec.lambda_count; ++l) all_zero &= spec.P[l][i] == -1;
      if (all_zero) {
        throw BadSandwich("column " + std::to_string(i) + " of P is all zeros");
      }
    }
  }
}

}  // namespace

ReesElement rees_decode(ReesSpec const& spec, int index) {
  int ng = spec.G.size();
  int nl = spec.lambda_count;
  if (index == spec.i_count * ng * nl) return ReesElement{-1, -1, -1, true};
  ReesElement e;
  e.is_zero = false;
  e.lambda = index % nl;
  e.g = (index / nl) % ng;
  e.i = index / (nl * ng);
  return e;
}

Semigroup rees(ReesSpec const& spec) {
  check_spec(spec, false);
  int ng = spec.G.size();
  int ni = spec.i_count, nl = spec.lambda_count;
  int n = ni * ng * nl;
  auto enc = [&](int i, int g, int l) { return i * ng * nl + g * nl + l; };
  std::vector<int> t(static_cast<size_t>(n) * n);
  for (int i = 0; i < ni; ++i) {
    for (int a = 0; a < ng; ++a) {
      for (int l = 0; l < nl; ++l) {
        for (int j = 0; j < ni; ++j) {
          for (int b = 0; b < ng; ++b) {
            for (int m = 0; m < nl; ++m) {
              int prod = spec.G.at(spec.G.at(a, spec.P[l][j]), b);
              t[static_cast<size_t>(enc(i, a, l)) * n + enc(j, b, m)] =
                  enc(i, prod, m);
            }
          }
        }
      }
    }
  }
  return Semigroup::build(n, std::move(t));
}

Semigroup rees_zero(ReesSpec const& spec) {
  check_spec(spec, true);
  int ng = spec.G.size();
  int ni = spec.i_count, nl = spec.lambda_count;
  int nz = ni * ng * nl;  // index of the adjoined zero
  int n = nz + 1;
  auto enc = [&](int i, int g, int l) { return i * ng * nl + g * nl + l; };
  std::vector<int> t(static_cast<size_t>(n) * n, nz);
  for (int i = 0; i < ni; ++i) {
    for (int a = 0; a < ng; ++a) {
      for (int l = 0; l < nl; ++l) {
        for (int j = 0; j < ni; ++j) {
          for (int b = 0; b < ng; ++b) {
            for (int m = 0; m < nl; ++m) {
              if (spec.P[l][j] == -1) continue;
              int prod = spec.G.at(spec.G.at(a, spec.P[l][j]), b);
              t[static_cast<size_t>(enc(i, a, l)) * n + enc(j, b, m)] =
                  enc(i, prod, m);
            }
          }
        }
      }
    }
  }
  return Semigroup::build(n, std::move(t));
}

Semigroup null_semigroup(int n) {
  if (n < 1) throw RangeError("size must be >= 1");
  return Semigroup::build(n, std::vector<int>(static_cast<size_t>(n) * n, 0));
}

Semigroup rectangular_band(int p, int q) {
  if (p < 1 || q < 1) throw RangeError("sizes must be >= 1");
  int n = p * q;
  std::vector<int> t(static_cast<size_t>(n) * n);
  for (int i1 = 0; i1 < p; ++i1) {
    for (int j1 = 0; j1 < q; ++j1) {
      for (int i2 = 0; i2 < p; ++i2) {
        for (int j2 = 0; j2 < q; ++j2) {
          t[static_cast<size_t>(i1 * q + j1) * n + (i2 * q + j2)] = i1 * q + j2;
        }
      }
    }
  }
  return Semigroup::build(n, std::move(t));
}

Semigroup cyclic_group(int n) {
  if (n < 1) throw RangeError("size must be >= 1");
  std::vector<int> t(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) t[static_cast<size_t>(i) * n + j] = (i + j) % n;
  }
  return Semigroup::build(n, std::move(t));
}

Semigroup chain_semilattice(int n) {
  if (n < 1) throw RangeError("size must be >= 1");
  std::vector<int> t(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) t[static_cast<size_t>(i) * n + j] = std::min(i, j);
  }
  return Semigroup::build(n, std::move(t));
}

Semigroup antichain_with_0_1(int n) {
  if (n < 1) throw RangeError("need at least one interior element");
  int m = n + 2;  // 0, interior 1..n, identity n+1
  int e = n + 1;
  std::vector<int> t(static_cast<size_t>(m) * m, 0);
  for (int x = 0; x < m; ++x) {
    t[static_cast<size_t>(e) * m + x] = x;
    t[static_cast<size_t>(x) * m + e] = x;
  }
  for (int x = 1; x <= n; ++x) t[static_cast<size_t>(x) * m + x] = x;
  return Semigroup::build(m, std::move(t));
}

Semigroup symmetric_group(int n) {
  if (n < 1 || n > 4) throw SizeLimit("symmetric_group supports 1 <= n <= 4");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  int m = static_cast<int>(perms.size());
  auto index_of = [&](std::vector<int> const& q) {
    return static_cast<int>(std::lower_bound(perms.begin(), perms.end(), q)
                            - perms.begin());
  };
  std::vector<int> t(static_cast<size_t>(m) * m);
  std::vector<int> comp(n);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      // left-to-right: apply perms[i], then perms[j]
      for (int x = 0; x < n; ++x) comp[x] = perms[j][perms[i][x]];
      t[static_cast<size_t>(i) * m + j] = index_of(comp);
    }
  }
  return Semigroup::build(m, std::move(t));
}

Semigroup direct_product(Semigroup const& s, Semigroup const& t) {
  int ns = s.size(), nt = t.size();
  int n = ns * nt;
  std::vector<int> tab(static_cast<size_t>(n) * n);
  for (int a = 0; a < ns; ++a) {
    for (int b = 0; b < nt; ++b) {
      for (int c = 0; c < ns; ++c) {
        for (int d = 0; d < nt; ++d) {
          tab[static_cast<size_t>(a * nt + b) * n + (c * nt + d)] =
              s.at(a, c) * nt + t.at(b, d);
        }
      }
    }
  }
  return Semigroup::build(n, std::move(tab));
}

Semigroup variant(Semigroup const& s, int a) {
  int n = s.size();
  if (a < 0 || a >= n) throw RangeError("variant point out of range");
  std::vector<int> t(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      t[static_cast<size_t>(x) * n + y] = s.at(s.at(x, a), y);
    }
  }
  return Semigroup::build(n, std::move(t));
}

UnaryVariantReport unary_variant_check(Semigroup const& s, int a) {
  UnaryVariantReport rep{};
  rep.applicable = epi_classification(s).is_completely_regular;
  if (!rep.applicable) return rep;
  Semigroup v = variant(s, a);
  int n = s.size();
  rep.star.resize(n);
  rep.star_matches = true;
  for (int x = 0; x < n; ++x) {
    int xa_p = monogenic(s, s.at(x, a)).pinv;
    int ax_p = monogenic(s, s.at(a, x)).pinv;
    rep.star[x] = s.at(s.at(xa_p, x), ax_p);
    if (rep.star[x] != monogenic(v, x).pinv) rep.star_matches = false;
  }
  rep.variant_in_W = variety_membership(v).in_W;
  return rep;
}

namespace {

Semigroup from_rows(std::vector<std::vector<int>> const& rows) {
  int n = static_cast<int>(rows.size());
  std::vector<int> flat;
  flat.reserve(static_cast<size_t>(n) * n);
  for (auto const& r : rows) flat.insert(flat.end(), r.begin(), r.end());
  return Semigroup::build(n, std::move(flat));
}

std::map<std::string, Semigroup> make_fixtures() {
  std::map<std::string, Semigroup> f;
  // 7-element semigroup with zero 4 whose conjugacies separate all the
  // inclusion-diagram nodes.
  f.emplace("F7_542155", from_rows({{0, 0, 0, 0, 4, 4, 0},
                                    {0, 0, 0, 0, 4, 4, 0},
                                    {0, 0, 0, 0, 4, 4, 0},
                                    {0, 0, 0, 0, 4, 4, 0},
                                    {4, 4, 4, 4, 4, 4, 4},
                                    {4, 4, 4, 4, 4, 4, 4},
                                    {0, 0, 2, 3, 4, 5, 6}}));
  // Regular member of E_2 whose variant at 1 loses transitivity of ~p.
  f.emplace("F6_414_S", from_rows({{0, 0, 0, 0, 0},
                                   {0, 0, 0, 1, 2},
                                   {0, 1, 2, 1, 2},
                                   {0, 0, 0, 3, 4},
                                   {0, 3, 4, 3, 4}}));
  // E-unitary inverse semigroup in E_2 with non-transitive ~p.
  f.emplace("F6_E2A", from_rows({{0, 0, 0, 3, 3, 3},
                                 {0, 1, 0, 3, 4, 3},
                                 {0, 0, 2, 3, 3, 5},
                                 {3, 3, 3, 0, 0, 0},
                                 {3, 3, 4, 0, 0, 1},
                                 {3, 5, 3, 0, 2, 0}}));
  // E*-unitary inverse monoid, ideal extension of {1, a} by a Brandt
  // semigroup. Printed labels 1 a 0 b c e f map to indices 0..6.
  f.emplace("F7_E2B", from_rows({{0, 1, 2, 3, 4, 5, 6},
                                 {1, 0, 2, 5, 6, 3, 4},
                                 {2, 2, 2, 2, 2, 2, 2},
                                 {3, 6, 2, 2, 6, 3, 2},
                                 {4, 5, 2, 5, 2, 2, 4},
                                 {5, 4, 2, 2, 4, 5, 2},
                                 {6, 3, 2, 3, 2, 2, 6}}));
  // Commutative monoid with zero where the mutually-inverse witness formula
  // yields conjugators outside the P^1 sets.
  f.emplace("F6_STRONGC", from_rows({{0, 0, 0, 0, 0, 0},
                                     {0, 1, 2, 3, 4, 5},
                                     {0, 2, 0, 0, 2, 2},
                                     {0, 3, 0, 0, 2, 2},
                                     {0, 4, 2, 2, 5, 5},
                                     {0, 5, 2, 2, 5, 5}}));
  f.emplace("F4_22", from_rows({{0, 0, 0, 0},
                                {0, 0, 0, 1},
                                {0, 0, 0, 1},
                                {0, 1, 1, 3}}));
  f.emplace("F4_113", from_rows({{0, 0, 0, 0},
                                 {0, 1, 1, 1},
                                 {0, 1, 2, 1},
                                 {0, 3, 3, 3}}));
  f.emplace("F4_56", from_rows({{0, 0, 0, 0},
                                {0, 0, 0, 0},
                                {0, 0, 2, 2},
                                {0, 0, 2, 3}}));
  // 5-element monoid where ~c and ~p have incomparable nontrivial classes.
  f.emplace("F5_CMP", from_rows({{0, 0, 0, 0, 0},
                                 {0, 1, 2, 3, 4},
                                 {0, 2, 0, 2, 0},
                                 {0, 3, 4, 3, 4},
                                 {0, 4, 0, 4, 0}}));
  // Noncommutative monoid with zero divisors where ~c is the identity.
  f.emplace("F5_110", from_rows({{0, 0, 0, 0, 0},
                                 {0, 0, 0, 0, 1},
                                 {0, 0, 0, 0, 2},
                                 {0, 0, 1, 0, 3},
                                 {0, 1, 2, 3, 4}}));
  f.emplace("F2_LZ", from_rows({{0, 0}, {1, 1}}));
  return f;
}

}  // namespace

std::map<std::string, Semigroup> const& fixtures() {
  static std::map<std::string, Semigroup> const f = make_fixtures();
  return f;
}

Semigroup fixture(std::string const& id) {
  auto const& f = fixtures();
  auto it = f.find(id);
  if (it == f.end()) throw RangeError("unknown fixture " + id);
  return it->second;
}

}  // namespace semiconj
