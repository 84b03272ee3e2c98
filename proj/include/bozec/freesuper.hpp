#pragma once
// The free superalgebra on Bozec letters (i,l), its twisted tensor square, the
// coproduct, the two families of q-derivations, and the sigma/bar involutions.

#include "bozec/cartan.hpp"
#include "bozec/qscalar.hpp"

#include <map>
#include <utility>
#include <vector>

namespace bozec {

struct Letter {
  size_t i = 0;
  long l = 1;
  auto operator<=>(const Letter&) const = default;
};

using Word = std::vector<Letter>;

struct WordLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

RootWeight letter_weight(const CartanDatum& dat, Letter c);
RootWeight word_weight(const CartanDatum& dat, const Word& w);
int word_parity(const CartanDatum& dat, const Word& w);
std::string word_str(const CartanDatum& dat, const Word& w, char symbol);

// Multiset of letters: the fine degree of a monomial.
class ExDegree {
public:
  ExDegree() = default;
  explicit ExDegree(const Word& w);
  const std::map<Letter, int>& mult() const { return m_; }
  bool zero() const { return m_.empty(); }
  long parts() const;                       // number of letters with multiplicity
  RootWeight weight(const CartanDatum& dat) const;
  int parity(const CartanDatum& dat) const; // parity of any word in the block
  long odd_pairs(const CartanDatum& dat) const; // e(nu): pairs of odd parts
  long cross_pairing(const CartanDatum& dat) const; // c(nu): sum over part pairs
  long level_square_pairing(const CartanDatum& dat) const; // sum l^2 (a_i,a_i)
  ExDegree plus(Letter c) const;
  bool contains(Letter c) const;
  ExDegree minus(Letter c) const; // requires contains(c)
  Word sorted_word() const;
  auto operator<=>(const ExDegree&) const = default;

private:
  std::map<Letter, int> m_;
};

// Letters available under a height bound (levels capped by the bound and the
// per-index caps); sorted by (index, level).
std::vector<Letter> alphabet(const CartanDatum& dat, long bound);
bool letter_allowed(const CartanDatum& dat, long bound, Letter c);

// All ExDegrees of weight-height <= bound, sorted by (height, ExDegree order).
std::vector<ExDegree> exdegrees_up_to(const CartanDatum& dat, long bound);
// Those of one exact weight.
std::vector<ExDegree> exdegrees_of_weight(const CartanDatum& dat, const RootWeight& b,
                                          long bound);
// Monomial basis of the block: distinct arrangements in lexicographic order.
std::vector<Word> block_words(const ExDegree& nu);

class FreeElt {
public:
  FreeElt() = default;
  static FreeElt one() { return unit(Word{}, QScalar(1)); }
  static FreeElt unit(const Word& w, const QScalar& c);
  static FreeElt generator(Letter c);

  bool zero() const { return t_.empty(); }
  const std::map<Word, QScalar, WordLess>& terms() const { return t_; }
  void add(const Word& w, const QScalar& c);

  FreeElt operator+(const FreeElt& o) const;
  FreeElt operator-(const FreeElt& o) const;
  FreeElt operator*(const FreeElt& o) const; // concatenation product
  FreeElt scaled(const QScalar& c) const;
  bool operator==(const FreeElt& o) const { return t_ == o.t_; }
  bool operator!=(const FreeElt& o) const { return !(*this == o); }

  std::string str(const CartanDatum& dat) const;

private:
  std::map<Word, QScalar, WordLess> t_;
};

using TensorKey = std::pair<Word, Word>;

struct TensorKeyLess {
  bool operator()(const TensorKey& a, const TensorKey& b) const {
    WordLess less;
    if (less(a.first, b.first)) return true;
    if (less(b.first, a.first)) return false;
    return less(a.second, b.second);
  }
};

class TensorElt {
public:
  TensorElt() = default;
  static TensorElt one();
  bool zero() const { return t_.empty(); }
  const std::map<TensorKey, QScalar, TensorKeyLess>& terms() const { return t_; }
  void add(const Word& u, const Word& v, const QScalar& c);
  TensorElt operator+(const TensorElt& o) const;
  TensorElt operator-(const TensorElt& o) const;
  bool operator==(const TensorElt& o) const { return t_ == o.t_; }
  TensorElt scaled(const QScalar& c) const;

private:
  std::map<TensorKey, QScalar, TensorKeyLess> t_;
};

// Twisted product: (x1@x2)(x3@x4) = (-1)^{p(x2)p(x3)} q^{(|x2|,|x3|)} x1x3 @ x2x4.
TensorElt tensor_mul(const CartanDatum& dat, const TensorElt& a, const TensorElt& b);

// Algebra map with a_{il} -> a_{il}@1 + 1@a_{il}.
TensorElt coproduct(const CartanDatum& dat, const FreeElt& x);

// Right and left q-derivations peeling (i,l) letters.
FreeElt derive_right(const CartanDatum& dat, Letter c, const FreeElt& x);
FreeElt derive_left(const CartanDatum& dat, Letter c, const FreeElt& x);

// Anti-involution fixing generators (word reversal).
FreeElt sigma(const FreeElt& x);
// Coefficient conjugation q -> -q^{-1}.
FreeElt bar_free(const FreeElt& x);
TensorElt bar_tensor(const TensorElt& x);

// Twisted coproduct via the swap closed form; requires a bar-consistent datum.
TensorElt bar_coproduct(const CartanDatum& dat, const FreeElt& x);

// a_i^{(n)} for real i; zero for n < 0.
FreeElt divided_power(const CartanDatum& dat, size_t i, long n);

} // namespace bozec
