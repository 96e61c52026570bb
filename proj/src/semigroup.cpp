#include "semiconj/semigroup.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace semiconj {

Semigroup Semigroup::build(int n, std::vector<int> table) {
  if (n < 1) {
    throw RangeError("element count must be >= 1, got " + std::to_string(n));
  }
  if (table.size() != static_cast<size_t>(n) * n) {
    throw RangeError("table has " + std::to_string(table.size())
                     + " entries, expected " + std::to_string(n * n));
  }
  for (size_t idx = 0; idx < table.size(); ++idx) {
    if (table[idx] < 0 || table[idx] >= n) {
      throw RangeError("entry at (" + std::to_string(idx / n) + ", "
                       + std::to_string(idx % n) + ") is "
                       + std::to_string(table[idx]) + ", out of [0, "
                       + std::to_string(n) + ")");
    }
  }
  int const* t = table.data();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      int ij = t[i * n + j];
      for (int k = 0; k < n; ++k) {
        if (t[ij * n + k] != t[i * n + t[j * n + k]]) {
          throw ValidationError(i, j, k);
        }
      }
    }
  }
  return Semigroup(n, std::move(table));
}

Semigroup::Semigroup(int n, std::vector<int> table)
    : n_(n), table_(std::move(table)) {
  for (int z = 0; z < n_; ++z) {
    bool ok = true;
    for (int x = 0; x < n_ && ok; ++x) {
      ok = at(z, x) == z && at(x, z) == z;
    }
    if (ok) {
      zero_ = z;  // a zero is unique
      break;
    }
  }
  for (int e = 0; e < n_; ++e) {
    bool ok = true;
    for (int x = 0; x < n_ && ok; ++x) {
      ok = at(e, x) == x && at(x, e) == x;
    }
    if (ok) {
      identity_ = e;
      break;
    }
  }
}

int Semigroup::power(int x, int k) const {
  int r = x;
  for (int i = 1; i < k; ++i) r = at(r, x);
  return r;
}

BasicPredicates basic_predicates(Semigroup const& s) {
  int n = s.size();
  BasicPredicates p{};
  p.has_zero = s.zero().has_value();
  p.is_monoid = s.is_monoid();

  p.commutative = true;
  for (int i = 0; i < n && p.commutative; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (s.at(i, j) != s.at(j, i)) {
        p.commutative = false;
        break;
      }
    }
  }

  p.cancellative = true;
  for (int a = 0; a < n && p.cancellative; ++a) {
    for (int b = 0; b < n && p.cancellative; ++b) {
      for (int c = b + 1; c < n; ++c) {
        if (s.at(a, b) == s.at(a, c) || s.at(b, a) == s.at(c, a)) {
          p.cancellative = false;
          break;
        }
      }
    }
  }

  p.is_band = true;
  for (int x = 0; x < n; ++x) {
    if (s.at(x, x) != x) {
      p.is_band = false;
      break;
    }
  }

  p.is_null = true;
  int first = s.at(0, 0);
  for (int i = 0; i < n && p.is_null; ++i) {
    for (int j = 0; j < n; ++j) {
      if (s.at(i, j) != first) {
        p.is_null = false;
        break;
      }
    }
  }

  p.is_semilattice = p.is_band && p.commutative;

  p.is_rectangular_band = p.is_band;
  for (int x = 0; x < n && p.is_rectangular_band; ++x) {
    for (int y = 0; y < n; ++y) {
      if (s.at(s.at(x, y), x) != x) {
        p.is_rectangular_band = false;
        break;
      }
    }
  }
  return p;
}

Semigroup adjoin_zero(Semigroup const& s) {
  int n = s.size();
  int m = n + 1;
  std::vector<int> t(static_cast<size_t>(m) * m, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) t[static_cast<size_t>(i) * m + j] = s.at(i, j);
  }
  return Semigroup::build(m, std::move(t));
}

Semigroup adjoin_identity(Semigroup const& s, bool force) {
  if (s.is_monoid() && !force) return s;
  int n = s.size();
  int m = n + 1;
  std::vector<int> t(static_cast<size_t>(m) * m);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) t[static_cast<size_t>(i) * m + j] = s.at(i, j);
  }
  for (int x = 0; x < m; ++x) {
    t[static_cast<size_t>(n) * m + x] = x;
    t[static_cast<size_t>(x) * m + n] = x;
  }
  return Semigroup::build(m, std::move(t));
}

EqPartition EqPartition::from_class_ids(std::vector<int> const& ids) {
  int n = static_cast<int>(ids.size());
  std::map<int, std::vector<int>> buckets;
  for (int x = 0; x < n; ++x) buckets[ids[x]].push_back(x);
  std::vector<std::vector<int>> classes;
  classes.reserve(buckets.size());
  for (auto& [id, members] : buckets) classes.push_back(std::move(members));
  return from_classes(n, std::move(classes));
}

EqPartition EqPartition::from_classes(int n, std::vector<std::vector<int>> classes) {
  for (auto& c : classes) std::sort(c.begin(), c.end());
  std::sort(classes.begin(), classes.end(),
            [](auto const& a, auto const& b) { return a.front() < b.front(); });
  EqPartition p;
  p.n_ = n;
  p.classes_ = std::move(classes);
  p.ids_.assign(n, -1);
  for (size_t i = 0; i < p.classes_.size(); ++i) {
    for (int x : p.classes_[i]) p.ids_[x] = static_cast<int>(i);
  }
  return p;
}

EqPartition EqPartition::identity(int n) {
  std::vector<int> ids(n);
  std::iota(ids.begin(), ids.end(), 0);
  return from_class_ids(ids);
}

EqPartition EqPartition::universal(int n) {
  return from_class_ids(std::vector<int>(n, 0));
}

bool EqPartition::refines(EqPartition const& coarser) const {
  for (auto const& c : classes_) {
    for (size_t i = 1; i < c.size(); ++i) {
      if (!coarser.same(c[0], c[i])) return false;
    }
  }
  return true;
}

std::string EqPartition::to_string() const {
  std::ostringstream os;
  for (size_t i = 0; i < classes_.size(); ++i) {
    if (i) os << ' ';
    os << '{';
    for (size_t j = 0; j < classes_[i].size(); ++j) {
      if (j) os << ',';
      os << classes_[i][j];
    }
    os << '}';
  }
  return os.str();
}

void PairRelation::add(int a, int b) {
  if (a == b) return;
  if (a > b) std::swap(a, b);
  pairs_.emplace(a, b);
}

bool PairRelation::contains(int a, int b) const {
  if (a == b) return true;
  if (a > b) std::swap(a, b);
  return pairs_.count({a, b}) > 0;
}

bool PairRelation::is_universal() const {
  return pairs_.size() == static_cast<size_t>(n_) * (n_ - 1) / 2;
}

bool PairRelation::subset_of(PairRelation const& other) const {
  for (auto const& pr : pairs_) {
    if (!other.contains(pr.first, pr.second)) return false;
  }
  return true;
}

bool PairRelation::subset_of(EqPartition const& part) const {
  for (auto const& pr : pairs_) {
    if (!part.same(pr.first, pr.second)) return false;
  }
  return true;
}

namespace {
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

EqPartition PairRelation::transitive_closure() const {
  UnionFind uf(n_);
  for (auto const& pr : pairs_) uf.merge(pr.first, pr.second);
  std::vector<int> ids(n_);
  for (int x = 0; x < n_; ++x) ids[x] = uf.find(x);
  return EqPartition::from_class_ids(ids);
}

bool PairRelation::is_transitive() const {
  EqPartition closure = transitive_closure();
  for (auto const& c : closure.classes()) {
    for (size_t i = 0; i < c.size(); ++i) {
      for (size_t j = i + 1; j < c.size(); ++j) {
        if (!contains(c[i], c[j])) return false;
      }
    }
  }
  return true;
}

std::string PairRelation::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (auto const& pr : pairs_) {
    if (!first) os << ' ';
    first = false;
    os << '(' << pr.first << ',' << pr.second << ')';
  }
  return os.str();
}

bool partition_subset_of(EqPartition const& part, PairRelation const& rel) {
  for (auto const& c : part.classes()) {
    for (size_t i = 0; i < c.size(); ++i) {
      for (size_t j = i + 1; j < c.size(); ++j) {
        if (!rel.contains(c[i], c[j])) return false;
      }
    }
  }
  return true;
}

bool partition_subset_of(EqPartition const& part, EqPartition const& coarser) {
  return part.refines(coarser);
}

PairRelation intersect(EqPartition const& a, PairRelation const& b) {
  PairRelation r(a.size());
  for (auto const& pr : b.pairs()) {
    if (a.same(pr.first, pr.second)) r.add(pr.first, pr.second);
  }
  return r;
}

EqPartition intersect(EqPartition const& a, EqPartition const& b) {
  int n = a.size();
  std::vector<int> ids(n);
  for (int x = 0; x < n; ++x) {
    ids[x] = a.class_id(x) * (static_cast<int>(b.num_classes()) + 1) + b.class_id(x);
  }
  return EqPartition::from_class_ids(ids);
}

}  // namespace semiconj
