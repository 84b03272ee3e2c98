#pragma once
// The whole quantum superalgebra in triangular normal form: monomials
// b-word x K-part x a-word over pivot words, straightening through the defining
// relations, the coproduct, omega, bar and the two antipodes.

#include "bozec/pairing.hpp"

#include <map>
#include <string>

namespace bozec {

struct UMono {
  Word minus;                    // letters acting as lowering generators
  std::map<size_t, long> kexp;   // K_i^{e_i} factors, zero exponents omitted
  Word plus;                     // letters acting as raising generators
  bool operator==(const UMono&) const = default;
};

struct UMonoLess {
  bool operator()(const UMono& a, const UMono& b) const {
    WordLess less;
    if (less(a.minus, b.minus)) return true;
    if (less(b.minus, a.minus)) return false;
    if (a.kexp != b.kexp) return a.kexp < b.kexp;
    return less(a.plus, b.plus);
  }
};

int umono_parity(const CartanDatum& dat, const UMono& m);
// weight as a signed vector over the index set: |plus| - |minus|
std::vector<long> umono_weight(const CartanDatum& dat, const UMono& m);

class UElement {
public:
  UElement() = default;
  static UElement one() { return monomial(UMono{}, QScalar(1)); }
  static UElement monomial(UMono m, const QScalar& c);

  bool zero() const { return t_.empty(); }
  bool truncated() const { return truncated_; }
  void mark_truncated() { truncated_ = true; }
  const std::map<UMono, QScalar, UMonoLess>& terms() const { return t_; }
  void add(const UMono& m, const QScalar& c);

  UElement operator+(const UElement& o) const;
  UElement operator-(const UElement& o) const;
  UElement scaled(const QScalar& c) const;
  // term equality; truncation flags are reported separately
  bool operator==(const UElement& o) const { return t_ == o.t_; }
  bool operator!=(const UElement& o) const { return !(*this == o); }

  std::string str(const CartanDatum& dat) const;

private:
  std::map<UMono, QScalar, UMonoLess> t_;
  bool truncated_ = false;
};

// prod_i K_i^{e_i}; K_i^l = q^{l d_i h_i}
UElement k_element(size_t i, long l);
UElement k_element(const std::map<size_t, long>& e);

// x^+ : a-word image; x^- : b-word image (letterwise a_{il} -> b_{il}).
// Inputs are reduced to normal form over pivot words first.
UElement embed_plus(BlockTower& tower, const FreeElt& x);
UElement embed_minus(BlockTower& tower, const FreeElt& x);

// Product in normal form; terms whose halves leave the height window are
// dropped and the result is marked truncated.
UElement straighten_product(BlockTower& tower, const UElement& u, const UElement& v);

// Automorphism a_{il} -> (-1)^{p(li)} b_{il}, b_{il} -> a_{il}, q^h -> q^{-h}.
UElement omega_u(BlockTower& tower, const UElement& u);

// Ring involution: coefficients q -> -q^{-1}, K_i^l -> K_i^{-l}, a_{il} fixed,
// b_{il} -> (-1)^{p(li)} q_i^{2l} b_{il}. The scale on the lowering generators
// is forced: with it the cross relation is preserved and bar is multiplicative
// on every consistent datum.
UElement bar_u(BlockTower& tower, const UElement& u);

// S(a_{il}) = -K_i^{-l} a_{il}, S(b_{il}) = -b_{il} K_i^l, S(q^h) = q^{-h},
// S(xy) = (-1)^{p(x)p(y)} S(y) S(x).
UElement antipode_S(BlockTower& tower, const UElement& u);
// S'(a_{il}) = -a_{il} K_i^{-l}, S'(b_{il}) = -K_i^l b_{il}, S'(q^h) = q^{-h}.
UElement antipode_Sprime(BlockTower& tower, const UElement& u);

// x^+ b_{il} - (-1)^{p(li)p(x)} b_{il} x^+ as a normal form, through the
// derivation formula rather than straightening.
UElement commutator_plus(BlockTower& tower, const FreeElt& x, Letter c);

class UTensor {
public:
  using Key = std::pair<UMono, UMono>;
  struct KeyLess {
    bool operator()(const Key& a, const Key& b) const {
      UMonoLess less;
      if (less(a.first, b.first)) return true;
      if (less(b.first, a.first)) return false;
      return less(a.second, b.second);
    }
  };

  UTensor() = default;
  static UTensor one();
  bool zero() const { return t_.empty(); }
  bool truncated() const { return truncated_; }
  void mark_truncated() { truncated_ = true; }
  const std::map<Key, QScalar, KeyLess>& terms() const { return t_; }
  void add(const UMono& a, const UMono& b, const QScalar& c);
  UTensor operator+(const UTensor& o) const;
  UTensor operator-(const UTensor& o) const;
  UTensor scaled(const QScalar& c) const;
  bool operator==(const UTensor& o) const { return t_ == o.t_; }

  std::string str(const CartanDatum& dat) const;

private:
  std::map<Key, QScalar, KeyLess> t_;
  bool truncated_ = false;
};

// Super tensor square: (x1 @ x2)(x3 @ x4) = (-1)^{p(x2)p(x3)} x1x3 @ x2x4.
UTensor tensor_mul_u(BlockTower& tower, const UTensor& a, const UTensor& b);

// Algebra map with D(a_{il}) = a_{il} @ 1 + K_i^l @ a_{il},
// D(b_{il}) = b_{il} @ K_i^{-l} + 1 @ b_{il}, D(q^h) = q^h @ q^h.
UTensor coproduct_u(BlockTower& tower, const UElement& u);

} // namespace bozec
