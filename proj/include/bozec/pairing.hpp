#pragma once
// The bilinear form on the free superalgebra, per-degree Gram blocks, the
// radical with reduction/dual-basis data for the quotient, and the Serre-type
// relation elements whose radical membership the suite certifies.

#include "bozec/freesuper.hpp"
#include "bozec/linalg.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>

namespace bozec {

// (a_{il}, a_{il}) = (1 - (-1)^{p(li)} q_i^{2l})^{-1}
QScalar generator_norm(const CartanDatum& dat, Letter c);

struct GramBlock {
  ExDegree degree;
  std::vector<Word> basis_words; // block_words(degree)
  QMatrix gram;                  // pairings of basis words
  bool eliminated = false;
  size_t rank = 0;
  std::vector<size_t> pivots; // indices into basis_words
  std::vector<Word> pivot_words;
  // word j = sum_r reduction[r][j] * pivot_r modulo the radical
  QMatrix reduction;
  // nullspace vectors over basis_words; vector m is supported on its own
  // non-pivot word plus pivot words only
  QMatrix radical_basis;
  std::vector<size_t> nonpivots;
  // dual basis of the pivot images: dual_q = sum_p dual_coeffs[q][p] pivot_p
  QMatrix dual_coeffs;
};

class BlockTower {
public:
  BlockTower(CartanDatum dat, long bound);
  const CartanDatum& datum() const { return dat_; }
  long bound() const { return bound_; }

  QScalar form_words(const Word& x, const Word& y) const;
  QScalar form(const FreeElt& x, const FreeElt& y) const;

  // Gram entries only.
  const GramBlock& block(const ExDegree& nu);
  // With rank, pivots, radical, reduction and dual data.
  const GramBlock& full_block(const ExDegree& nu);

  // Coordinates of a block-homogeneous element over basis_words.
  std::vector<QScalar> coordinates(const GramBlock& b, const FreeElt& x) const;
  // Representative over pivot words modulo the radical, blockwise.
  FreeElt reduce(const FreeElt& x);

  struct Membership {
    bool in_radical = false;
    std::vector<QScalar> certificate; // coefficients over radical_basis when true
    std::optional<Word> witness;      // word pairing nonzero when false
  };
  Membership radical_membership(const FreeElt& x);

private:
  CartanDatum dat_;
  long bound_;
  std::map<ExDegree, GramBlock> blocks_;
  mutable std::map<TensorKey, QScalar, TensorKeyLess> memo_;
  QScalar form_rec(const Word& x, const Word& y) const;
};

// Sum over n+n'=1-k*a_ij of (-1)^{n'} (-1)^{p(i)(n' p(kj) + C(n',2))}
// a_i^{(n)} a_{jk} a_i^{(n')}; requires i real and (j,k) != (i,1).
FreeElt serre_element(const CartanDatum& dat, size_t i, size_t j, long k);

// Sum over r+s=m of (-1)^r (-1)^{nr p(i)p(j) + C(r,2) p(i)}
// ((-1)^{p(i)} q_i)^{-r(n a_ij + m - 1)} a_i^{(r)} a_{j,c} a_i^{(s)} with
// a_{j,c} the product of a_{j,c_t} and n the sum of c; requires i real,
// j imaginary and m > -a_ij n.
FreeElt higher_serre_element(const CartanDatum& dat, size_t i, size_t j, long m,
                             const std::vector<long>& c);

struct LabeledRelation {
  std::string label;
  FreeElt elt;
};

// Every admissible relation instance within the bounds: classical family up to
// the height bound, higher family up to m_max and total middle level n_max,
// plus the commuting pairs available when a_ij = 0.
std::vector<LabeledRelation> serre_relations(const CartanDatum& dat, long height_bound,
                                             long m_max, long n_max);

} // namespace bozec
