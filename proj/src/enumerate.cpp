#include "semiconj/enumerate.hpp"

#include <algorithm>
#include <set>

#include "semiconj/canonical.hpp"
#include "semiconj/conjugacy.hpp"
#include "semiconj/error.hpp"
#include "semiconj/io.hpp"
#include "semiconj/suite.hpp"

namespace semiconj {

namespace {

// Backtracking state for one fixed order. The table is filled cell by cell
// in row-major order over the free cells; after each assignment every
// associativity triple that just became fully determined is checked.
struct Search {
  int n;
  std::vector<int> t;         // n*n, -1 undetermined
  std::vector<int> free_cells;
  std::vector<std::vector<int>> cells_with_value;  // value -> flat cell list

  explicit Search(int n_) : n(n_), t(static_cast<size_t>(n_) * n_, -1),
                            cells_with_value(n_) {}

  int get(int i, int j) const { return t[static_cast<size_t>(i) * n + j]; }

  // Checks triple (x, y, z) when fully determined; true if no conflict yet.
  bool triple_ok(int x, int y, int z) const {
    int xy = get(x, y);
    if (xy < 0) return true;
    int yz = get(y, z);
    if (yz < 0) return true;
    int a = get(xy, z);
    if (a < 0) return true;
    int b = get(x, yz);
    if (b < 0) return true;
    return a == b;
  }

  bool assign_ok(int cell, int v) {
    int a = cell / n, b = cell % n;
    t[cell] = v;
    bool ok = true;
    for (int k = 0; k < n && ok; ++k) {
      ok = triple_ok(a, b, k) && triple_ok(k, a, b) && triple_ok(a, k, b);
    }
    // Triples whose intermediate product just became this cell.
    if (ok) {
      for (int cxy : cells_with_value[a]) {
        if (!triple_ok(cxy / n, cxy % n, b)) {
          ok = false;
          break;
        }
      }
    }
    if (ok) {
      for (int cyz : cells_with_value[b]) {
        if (!triple_ok(a, cyz / n, cyz % n)) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) {
      t[cell] = -1;
      return false;
    }
    cells_with_value[v].push_back(cell);
    return true;
  }

  void unassign(int cell) {
    int v = t[cell];
    cells_with_value[v].pop_back();
    t[cell] = -1;
  }
};

struct Emitter {
  EnumConstraints const& c;
  std::function<void(Semigroup const&)> const& visitor;
  long count = 0;
  std::set<std::vector<int>> seen;

  void emit_complete(std::vector<int> const& flat) {
    Semigroup s = Semigroup::build(c.order, flat);  // full re-validation
    if (c.require_zero && !s.zero()) return;
    if (c.require_monoid && !s.is_monoid()) return;
    if (c.require_zero_divisors) {
      int z = *s.zero();
      bool found = false;
      for (int a = 0; a < s.size() && !found; ++a) {
        if (a == z) continue;
        for (int b = 0; b < s.size(); ++b) {
          if (b != z && s.at(a, b) == z) {
            found = true;
            break;
          }
        }
      }
      if (!found) return;
    }
    if (c.dedupe == EnumConstraints::Dedupe::labeled) {
      ++count;
      if (visitor) visitor(s);
      return;
    }
    std::vector<int> canon = c.dedupe == EnumConstraints::Dedupe::iso
                                 ? canonical_form_iso(s)
                                 : canonical_form(s);
    if (!seen.insert(canon).second) return;
    ++count;
    if (visitor) visitor(Semigroup::build(c.order, canon));
  }
};

void dfs(Search& st, std::vector<int> const& cells, size_t pos, Emitter& em) {
  if (pos == cells.size()) {
    em.emit_complete(st.t);
    return;
  }
  int cell = cells[pos];
  for (int v = 0; v < st.n; ++v) {
    if (st.assign_ok(cell, v)) {
      dfs(st, cells, pos + 1, em);
      st.unassign(cell);
    }
  }
}

// Prefills implied by the fixed identity (last element) / zero (element 0)
// positions; returns false if the prefill is internally inconsistent.
bool prefill(Search& st, EnumConstraints const& c, bool fix_positions) {
  int n = st.n;
  auto force = [&st](int i, int j, int v) {
    int cell = i * st.n + j;
    if (st.t[cell] >= 0) return st.t[cell] == v;
    return st.assign_ok(cell, v);
  };
  if (!fix_positions) return true;
  if (c.require_monoid) {
    int e = n - 1;
    for (int x = 0; x < n; ++x) {
      if (!force(e, x, x) || !force(x, e, x)) return false;
    }
  }
  if (c.require_zero) {
    for (int x = 0; x < n; ++x) {
      if (!force(0, x, 0) || !force(x, 0, 0)) return false;
    }
  }
  return true;
}

}  // namespace

long enumerate(EnumConstraints const& c,
               std::function<void(Semigroup const&)> const& visitor) {
  if (c.order < 1) throw RangeError("order must be >= 1");
  if (c.order > 6 || (c.order == 6 && !c.allow_order6)) {
    throw SizeLimit("enumeration supports order <= 5 (6 behind allow_order6)");
  }
  if (c.require_zero_divisors && !c.require_zero) {
    throw RangeError("require_zero_divisors implies require_zero");
  }
  int n = c.order;

  // Fixing the identity at n-1 and the zero at 0 loses nothing when the
  // output is deduplicated by canonical form; labeled mode must search all
  // positions.
  bool fix_positions = c.dedupe != EnumConstraints::Dedupe::labeled
                       && !(c.require_monoid && c.require_zero && n < 2);

  Search st(n);
  if (!prefill(st, c, fix_positions)) return 0;
  std::vector<int> cells;
  for (int cell = 0; cell < n * n; ++cell) {
    if (st.t[cell] < 0) cells.push_back(cell);
  }

  Emitter em{c, visitor, 0, {}};
  if (c.split_depth <= 0 || cells.empty()) {
    dfs(st, cells, 0, em);
    return em.count;
  }

  // Partitioned search: enumerate every assignment of the first split_depth
  // cells, then run each subtree independently. Results merge through the
  // shared emitter; the visit order equals the sequential one.
  size_t depth = std::min(static_cast<size_t>(c.split_depth), cells.size());
  std::vector<int> choice(depth, -1);
  std::function<void(size_t)> split = [&](size_t d) {
    if (d == depth) {
      dfs(st, cells, depth, em);
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (st.assign_ok(cells[d], v)) {
        split(d + 1);
        st.unassign(cells[d]);
      }
    }
  };
  split(0);
  return em.count;
}

std::vector<Table1Row> table1(int n_max, bool include_order6) {
  if (n_max > 6) throw SizeLimit("table1 supports n <= 6");
  std::vector<Table1Row> rows;
  for (int n = 3; n <= n_max; ++n) {
    if (n == 6 && !include_order6) break;
    EnumConstraints c;
    c.order = n;
    c.require_monoid = true;
    c.require_zero = true;
    c.require_zero_divisors = true;
    c.allow_order6 = true;
    Table1Row row{n, 0, 0, 0, 0, 0, 0};
    c.dedupe = EnumConstraints::Dedupe::equivalence;
    enumerate(c, [&row](Semigroup const& s) {
      ++row.monoids_0div;
      RelationCharacter rc = relation_character(s, Relation::c);
      if (rc.is_identity) ++row.c_identity;
      if (rc.universal_on_nonzero) ++row.c_universal;
    });
    c.dedupe = EnumConstraints::Dedupe::iso;
    enumerate(c, [&row](Semigroup const& s) {
      ++row.iso_monoids_0div;
      RelationCharacter rc = relation_character(s, Relation::c);
      if (rc.is_identity) ++row.iso_c_identity;
      if (rc.universal_on_nonzero) ++row.iso_c_universal;
    });
    rows.push_back(row);
  }
  return rows;
}

SweepReport sweep(EnumConstraints const& c, std::vector<std::string> const& checks) {
  SweepReport rep;
  enumerate(c, [&](Semigroup const& s) {
    ++rep.total;
    SuiteReport sr = theorem_suite(s);
    for (auto const& chk : sr.checks) {
      if (!checks.empty()
          && std::find(checks.begin(), checks.end(), chk.name) == checks.end()) {
        continue;
      }
      if (chk.applicable && !chk.pass) {
        rep.failures.push_back({chk.name + ": " + chk.detail, serialize(s)});
      }
    }
  });
  return rep;
}

}  // namespace semiconj
