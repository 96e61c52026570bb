#ifndef SEMICONJ_PINJ_HPP_
#define SEMICONJ_PINJ_HPP_

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "semiconj/semigroup.hpp"

namespace semiconj {

//! A partial injection of {0..n-1}; map[x] is the image of x or -1 when x
//! is outside the domain. Functions act on the right and compose left to
//! right: x(fg) = (xf)g.
class PartialInjection {
 public:
  static constexpr int kAbsent = -1;

  PartialInjection(int n, std::vector<int> map);
  static PartialInjection empty(int n);
  static PartialInjection identity(int n);

  int n() const { return n_; }
  int apply(int x) const { return map_[x]; }
  bool in_domain(int x) const { return map_[x] != kAbsent; }
  bool in_image(int x) const;

  std::vector<int> domain() const;
  std::vector<int> image() const;
  std::vector<int> span() const;

  PartialInjection compose(PartialInjection const& g) const;  // this, then g
  PartialInjection inverse() const;

  bool operator==(PartialInjection const& o) const {
    return n_ == o.n_ && map_ == o.map_;
  }
  std::vector<int> const& raw() const { return map_; }

  // "n; x0 x1 ... x(n-1)" with '-' for an undefined point.
  static PartialInjection parse(std::string const& text);
  std::string to_string() const;

 private:
  int n_;
  std::vector<int> map_;
};

//! One basic piece of the cycle-chain decomposition. A cycle of length k is
//! written on k points; a chain of length k on k+1 points (the last point
//! is outside the domain).
struct Piece {
  bool is_cycle;
  std::vector<int> points;
  int length() const {
    return is_cycle ? static_cast<int>(points.size())
                    : static_cast<int>(points.size()) - 1;
  }
};

std::vector<Piece> decompose(PartialInjection const& f);

struct CycleChainType {
  std::map<int, int> cycles;  // length -> count
  std::map<int, int> chains;
  bool operator==(CycleChainType const& o) const = default;
  std::string to_string() const;
};

CycleChainType cc_type(PartialInjection const& f);
std::map<int, int> cycle_type(PartialInjection const& f);

//! I_n as a Cayley table plus the index <-> element codec. Elements are
//! enumerated by domain subset (bitmask order) and then by image tuple in
//! lexicographic order; the empty map gets index 0.
struct SymmetricInverseMonoid {
  Semigroup table;
  std::vector<PartialInjection> elements;
  int index_of(PartialInjection const& f) const;

  std::unordered_map<std::string, int> index_map;
};

SymmetricInverseMonoid symmetric_inverse_monoid(int n);  // 1 <= n <= 5

//! phi is an r-homomorphism of the functional digraphs: injective, total on
//! span(alpha), maps arcs of Gamma(alpha) to arcs of Gamma(beta), and sends
//! every terminal vertex (one with no outgoing arc) to a terminal vertex.
bool is_r_homomorphism(PartialInjection const& phi, PartialInjection const& alpha,
                       PartialInjection const& beta);

//! Searches r-homomorphisms both ways; equivalent to table ~c on I_n.
bool c_oracle(PartialInjection const& alpha, PartialInjection const& beta);

//! When the cycle-chain types match, a permutation sigma of {0..n-1} with
//! alpha = sigma^-1 beta sigma, built by aligning the decompositions.
std::optional<PartialInjection> permutation_witness(PartialInjection const& alpha,
                                                    PartialInjection const& beta);

}  // namespace semiconj

#endif  // SEMICONJ_PINJ_HPP_
