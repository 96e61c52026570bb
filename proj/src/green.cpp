#include "semiconj/green.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>

#include "semiconj/error.hpp"

namespace semiconj {

namespace {

using Bits = std::vector<uint64_t>;

Bits make_bits(int n) { return Bits((n + 63) / 64, 0); }
void bit_set(Bits& b, int i) { b[i >> 6] |= uint64_t{1} << (i & 63); }
bool bit_test(Bits const& b, int i) {
  return (b[i >> 6] >> (i & 63)) & 1;
}
void bit_or(Bits& a, Bits const& b) {
  for (size_t i = 0; i < a.size(); ++i) a[i] |= b[i];
}

std::vector<int> bits_to_list(Bits const& b, int n) {
  std::vector<int> out;
  for (int i = 0; i < n; ++i) {
    if (bit_test(b, i)) out.push_back(i);
  }
  return out;
}

EqPartition partition_by_sets(std::vector<Bits> const& sets) {
  std::map<Bits, int> ids;
  std::vector<int> class_of(sets.size());
  for (size_t a = 0; a < sets.size(); ++a) {
    auto [it, _] = ids.emplace(sets[a], static_cast<int>(ids.size()));
    class_of[a] = it->second;
  }
  return EqPartition::from_class_ids(class_of);
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void merge(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

GreenData green(Semigroup const& s) {
  int n = s.size();
  std::vector<Bits> lsets(n, make_bits(n)), rsets(n, make_bits(n)),
      jsets(n, make_bits(n));
  for (int a = 0; a < n; ++a) {
    bit_set(lsets[a], a);
    bit_set(rsets[a], a);
    for (int x = 0; x < n; ++x) {
      bit_set(lsets[a], s.at(x, a));
      bit_set(rsets[a], s.at(a, x));
    }
  }
  // S^1 a S^1 = union of S^1 b over b in a S^1.
  for (int a = 0; a < n; ++a) {
    jsets[a] = lsets[a];
    for (int x = 0; x < n; ++x) bit_or(jsets[a], lsets[s.at(a, x)]);
  }

  GreenData g;
  g.L = partition_by_sets(lsets);
  g.R = partition_by_sets(rsets);
  g.J = partition_by_sets(jsets);
  g.H = intersect(g.L, g.R);

  UnionFind uf(n);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (g.L.same(a, b) || g.R.same(a, b)) uf.merge(a, b);
    }
  }
  std::vector<int> dids(n);
  for (int x = 0; x < n; ++x) dids[x] = uf.find(x);
  g.D = EqPartition::from_class_ids(dids);

  // D is the join of L and R; check that it agrees with both relational
  // compositions L∘R and R∘L.
  std::set<std::pair<int, int>> lr_pairs;
  for (int c = 0; c < n; ++c) lr_pairs.emplace(g.L.class_id(c), g.R.class_id(c));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      bool lr = lr_pairs.count({g.L.class_id(a), g.R.class_id(b)}) > 0;
      bool rl = lr_pairs.count({g.L.class_id(b), g.R.class_id(a)}) > 0;
      if (lr != rl || lr != g.D.same(a, b)) {
        throw InternalError("L∘R, R∘L and L∨R disagree");
      }
    }
  }

  g.left_ideals.reserve(n);
  g.right_ideals.reserve(n);
  g.two_sided_ideals.reserve(n);
  for (int a = 0; a < n; ++a) {
    g.left_ideals.push_back(bits_to_list(lsets[a], n));
    g.right_ideals.push_back(bits_to_list(rsets[a], n));
    g.two_sided_ideals.push_back(bits_to_list(jsets[a], n));
  }
  return g;
}

std::vector<int> idempotents(Semigroup const& s) {
  std::vector<int> out;
  for (int e = 0; e < s.size(); ++e) {
    if (s.at(e, e) == e) out.push_back(e);
  }
  return out;
}

std::vector<std::pair<int, int>> natural_order(Semigroup const& s) {
  std::vector<int> es = idempotents(s);
  std::vector<std::pair<int, int>> out;
  for (int e : es) {
    for (int f : es) {
      if (e != f && s.at(e, f) == e && s.at(f, e) == e) out.emplace_back(e, f);
    }
  }
  return out;
}

bool is_antichain(Semigroup const& s, bool exclude_zero) {
  auto z = s.zero();
  for (auto const& [e, f] : natural_order(s)) {
    if (exclude_zero && z && (e == *z || f == *z)) continue;
    return false;
  }
  return true;
}

Regularity regularity(Semigroup const& s) {
  int n = s.size();
  Regularity r;
  r.inverses.resize(n);
  for (int a = 0; a < n; ++a) {
    bool reg = false;
    for (int b = 0; b < n; ++b) {
      if (s.at(s.at(a, b), a) == a) {
        reg = true;
        if (s.at(s.at(b, a), b) == b) r.inverses[a].push_back(b);
      }
    }
    if (reg) r.regular_elements.push_back(a);
  }
  r.is_regular = r.regular_elements.size() == static_cast<size_t>(n);
  r.is_inverse = true;
  for (int a = 0; a < n; ++a) {
    if (r.inverses[a].size() != 1) {
      r.is_inverse = false;
      break;
    }
  }
  return r;
}

namespace {

// e is primitive if it is minimal among the relevant idempotents: all of
// E(S) in the simple case, the nonzero ones in the 0-simple case.
bool has_primitive_idempotent(Semigroup const& s, bool exclude_zero) {
  auto z = s.zero();
  std::vector<int> es;
  for (int e : idempotents(s)) {
    if (!exclude_zero || !z || e != *z) es.push_back(e);
  }
  for (int e : es) {
    bool primitive = true;
    for (int f : es) {
      if (f != e && s.at(e, f) == f && s.at(f, e) == f) {  // f <= e
        primitive = false;
        break;
      }
    }
    if (primitive) return true;
  }
  return false;
}

}  // namespace

IdealStructure ideal_structure(Semigroup const& s) {
  int n = s.size();
  GreenData g = green(s);
  IdealStructure out{};

  out.is_simple = g.J.is_universal();

  auto z = s.zero();
  if (z) {
    bool sq_nonzero = false;
    for (int a = 0; a < n && !sq_nonzero; ++a) {
      for (int b = 0; b < n; ++b) {
        if (s.at(a, b) != *z) {
          sq_nonzero = true;
          break;
        }
      }
    }
    bool nonzero_full = true;
    for (int a = 0; a < n; ++a) {
      if (a == *z) continue;
      if (g.two_sided_ideals[a].size() != static_cast<size_t>(n)) {
        nonzero_full = false;
        break;
      }
    }
    out.is_zero_simple = sq_nonzero && nonzero_full;
    out.is_completely_zero_simple =
        out.is_zero_simple && has_primitive_idempotent(s, true);
  }
  out.is_completely_simple = out.is_simple && has_primitive_idempotent(s, false);
  return out;
}

std::optional<std::vector<std::vector<int>>> zero_direct_union(Semigroup const& s) {
  auto z = s.zero();
  if (!z) throw NoZeroError();
  int n = s.size();

  UnionFind uf(n);
  for (int a = 0; a < n; ++a) {
    if (a == *z) continue;
    for (int b = a + 1; b < n; ++b) {
      if (b == *z) continue;
      if (s.at(a, b) != *z || s.at(b, a) != *z) uf.merge(a, b);
    }
  }
  std::map<int, std::vector<int>> comps;
  for (int a = 0; a < n; ++a) {
    if (a != *z) comps[uf.find(a)].push_back(a);
  }

  std::vector<std::vector<int>> out;
  for (auto& [root, members] : comps) {
    // Closure: products inside a block stay in the block (or hit 0).
    std::vector<int> with_zero = members;
    with_zero.push_back(*z);
    std::sort(with_zero.begin(), with_zero.end());
    std::vector<int> pos(n, -1);
    for (size_t i = 0; i < with_zero.size(); ++i) pos[with_zero[i]] = static_cast<int>(i);
    int m = static_cast<int>(with_zero.size());
    std::vector<int> sub(static_cast<size_t>(m) * m);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        int prod = s.at(with_zero[i], with_zero[j]);
        if (pos[prod] < 0) return std::nullopt;
        sub[static_cast<size_t>(i) * m + j] = pos[prod];
      }
    }
    Semigroup block = Semigroup::build(m, std::move(sub));
    if (!ideal_structure(block).is_completely_zero_simple) return std::nullopt;
    out.push_back(members);
  }
  return out;
}

}  // namespace semiconj
