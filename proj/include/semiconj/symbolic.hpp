#ifndef SEMICONJ_SYMBOLIC_HPP_
#define SEMICONJ_SYMBOLIC_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "semiconj/pinj.hpp"

namespace semiconj {

//! An element of N ∪ {ℵ₀} with saturating addition and total order.
struct Cardinal {
  bool finite;
  uint64_t value;  // meaningful only when finite

  static Cardinal fin(uint64_t v) { return {true, v}; }
  static Cardinal aleph0() { return {false, 0}; }
  static Cardinal zero() { return {true, 0}; }

  bool is_zero() const { return finite && value == 0; }
  bool operator==(Cardinal const& o) const {
    return finite == o.finite && (!finite || value == o.value);
  }
  bool operator<(Cardinal const& o) const {
    if (finite && !o.finite) return true;
    if (!finite) return false;
    return value < o.value;
  }
  Cardinal operator+(Cardinal const& o) const {
    if (!finite || !o.finite) return aleph0();
    return fin(value + o.value);
  }
  std::string to_string() const { return finite ? std::to_string(value) : "w"; }
};

//! Cardinalities per length: finitely many exceptional lengths plus one
//! default value (0 or ℵ₀) for all unlisted lengths >= 1. Exceptions equal
//! to the default are dropped on normalization, so spectra compare by
//! representation.
struct Spectrum {
  bool default_aleph0 = false;
  std::map<int, Cardinal> exceptions;

  Cardinal at(int k) const {
    auto it = exceptions.find(k);
    if (it != exceptions.end()) return it->second;
    return default_aleph0 ? Cardinal::aleph0() : Cardinal::zero();
  }
  void normalize();
  bool all_zero() const;
  // pointwise equality as functions on lengths (normalization-independent)
  bool operator==(Spectrum const& o) const;
};

//! The cycle-chain-ray type: cycle and chain spectra plus the numbers of
//! double rays (omega), right rays (upsilon) and left rays (lambda).
struct CCRType {
  Spectrum cycles;
  Spectrum chains;
  Cardinal omega = Cardinal::zero();
  Cardinal upsilon = Cardinal::zero();
  Cardinal lambda = Cardinal::zero();
};

//! sup of the chain lengths present (0 when there are none).
Cardinal kappa(CCRType const& t);
//! Largest m <= kappa with |Theta^m| = ℵ₀, or 0; only meaningful when
//! kappa is a positive integer.
uint64_t mu(CCRType const& t);

bool c_conjugate(CCRType const& t1, CCRType const& t2);

struct GammaRelations {
  bool p, c, j;
};

//! The relations in the semigroup of full injections (dom = X): requires
//! chain-free, left-ray-free types.
GammaRelations gamma_relations(CCRType const& t1, CCRType const& t2);

bool is_epi_element(CCRType const& t);
bool tr_conjugate(CCRType const& t1, CCRType const& t2);  // both epi

Cardinal dom_cardinality(CCRType const& t);
bool i_j_related(CCRType const& t1, CCRType const& t2);

struct TypeBounds {
  int max_length = 5;        // largest exceptional length
  int max_exceptions = 3;    // per spectrum
  uint64_t max_finite = 4;   // largest finite cardinality
  bool full_injection = false;
};

CCRType random_type(uint64_t seed, TypeBounds const& bounds);

// "cycles{k:c,...;default} chains{...} omega=C upsilon=C lambda=C", 'w' = ℵ₀.
CCRType parse_type(std::string const& text);
std::string format_type(CCRType const& t);

//! A concrete element of I_n realizing an all-finite ray-free type, when
//! its span fits in n.
std::optional<PartialInjection> realize(CCRType const& t, int n);

}  // namespace semiconj

#endif  // SEMICONJ_SYMBOLIC_HPP_
