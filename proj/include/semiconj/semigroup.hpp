#ifndef SEMICONJ_SEMIGROUP_HPP_
#define SEMICONJ_SEMIGROUP_HPP_

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "semiconj/error.hpp"

namespace semiconj {

//! A finite semigroup given by its Cayley table. Immutable after
//! construction; build() checks all n^3 associativity triples and caches
//! the zero and identity elements if they exist.
//!
//! Elements are the indices 0..n-1 and table(i, j) is the product i*j with
//! the row element on the left.
class Semigroup {
 public:
  static Semigroup build(int n, std::vector<int> table);

  int size() const { return n_; }

  int at(int i, int j) const { return table_[static_cast<size_t>(i) * n_ + j]; }

  std::optional<int> zero() const { return zero_; }
  std::optional<int> identity() const { return identity_; }
  bool is_monoid() const { return identity_.has_value(); }

  // S^1 = S when S is a monoid, otherwise S with a formal identity adjoined.
  // Elements of S^1 are 0..s1_size()-1; when S is not a monoid the value
  // s1_size()-1 == size() denotes the adjoined identity.
  int s1_size() const { return is_monoid() ? n_ : n_ + 1; }
  bool is_adjoined(int x) const { return !is_monoid() && x == n_; }
  int mul1(int x, int y) const {
    if (is_adjoined(x)) return y;
    if (is_adjoined(y)) return x;
    return at(x, y);
  }
  // The identity of S^1 as an S^1 index.
  int one() const { return is_monoid() ? *identity_ : n_; }

  std::vector<int> const& flat_table() const { return table_; }

  // x^k for k >= 1.
  int power(int x, int k) const;

  bool operator==(Semigroup const& other) const {
    return n_ == other.n_ && table_ == other.table_;
  }

 private:
  Semigroup(int n, std::vector<int> table);

  int n_;
  std::vector<int> table_;
  std::optional<int> zero_;
  std::optional<int> identity_;
};

struct BasicPredicates {
  bool commutative;
  bool cancellative;
  bool is_band;
  bool is_semilattice;
  bool is_null;
  bool is_rectangular_band;
  bool has_zero;
  bool is_monoid;
};

BasicPredicates basic_predicates(Semigroup const& s);

Semigroup adjoin_zero(Semigroup const& s);
Semigroup adjoin_identity(Semigroup const& s, bool force = false);

//! A partition of {0..n-1} into equivalence classes, kept in canonical form:
//! classes sorted by their minimum element, elements ascending.
class EqPartition {
 public:
  EqPartition() : n_(0) {}
  static EqPartition from_class_ids(std::vector<int> const& ids);
  static EqPartition from_classes(int n, std::vector<std::vector<int>> classes);
  static EqPartition identity(int n);
  static EqPartition universal(int n);

  int size() const { return n_; }
  std::vector<std::vector<int>> const& classes() const { return classes_; }
  size_t num_classes() const { return classes_.size(); }
  int class_id(int x) const { return ids_[x]; }
  bool same(int a, int b) const { return ids_[a] == ids_[b]; }

  bool is_identity() const { return classes_.size() == static_cast<size_t>(n_); }
  bool is_universal() const { return n_ > 0 && classes_.size() == 1; }

  // As a set of pairs, every class of *this lies inside a class of coarser.
  bool refines(EqPartition const& coarser) const;

  bool operator==(EqPartition const& other) const {
    return classes_ == other.classes_;
  }

  std::string to_string() const;

 private:
  int n_;
  std::vector<std::vector<int>> classes_;
  std::vector<int> ids_;
};

//! A reflexive symmetric relation on {0..n-1}: loops are implicit, only
//! off-diagonal pairs are stored (as (a, b) with a < b).
class PairRelation {
 public:
  PairRelation() : n_(0) {}
  explicit PairRelation(int n) : n_(n) {}

  int size() const { return n_; }
  void add(int a, int b);
  bool contains(int a, int b) const;
  std::set<std::pair<int, int>> const& pairs() const { return pairs_; }

  bool is_identity() const { return pairs_.empty(); }
  bool is_universal() const;

  bool subset_of(PairRelation const& other) const;
  bool subset_of(EqPartition const& part) const;

  EqPartition transitive_closure() const;
  bool is_transitive() const;

  bool operator==(PairRelation const& other) const {
    return n_ == other.n_ && pairs_ == other.pairs_;
  }

  std::string to_string() const;

 private:
  int n_;
  std::set<std::pair<int, int>> pairs_;
};

// Partition-as-pair-set inclusion: a~b in part implies a~b in rel / coarser.
bool partition_subset_of(EqPartition const& part, PairRelation const& rel);
bool partition_subset_of(EqPartition const& part, EqPartition const& coarser);

// Pairwise intersections used by the inclusion-diagram checks.
PairRelation intersect(EqPartition const& a, PairRelation const& b);
EqPartition intersect(EqPartition const& a, EqPartition const& b);

}  // namespace semiconj

#endif  // SEMICONJ_SEMIGROUP_HPP_
