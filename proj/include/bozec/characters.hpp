#pragma once
// Correction terms over imaginary simple roots, truncated integer series on
// the root lattice, and the orbit-sum character formula whose denominator is
// the weight-zero specialization of the numerator.

#include "bozec/cartan.hpp"

#include <functional>
#include <map>
#include <vector>

namespace bozec {

// coefficients of prod_{k>=1}(1 - x^k) up to degree bound, inclusive
// one admissible correction: a root-lattice element with its sign weight
struct CorrectionTerm {
  RootWeight total;
  long sign = 1;
};

// coefficient attached to odd isotropic corrections; receives the anchor's
// coroot values and the offset n*alpha_i of the shifted weight
using OddIsoCoef = std::function<long(const std::vector<long>&, const RootWeight&)>;

// even-index corrections: supports of pairwise orthogonal imaginary even
// simple roots orthogonal to lambda, one term per lattice element
std::vector<CorrectionTerm> enumerate_E(const CartanDatum& dat,
                                        const std::vector<long>& lambda_coroot,
                                        long depth);

// odd-index corrections; an isotropic support needs the coefficient hook and
// its absence on a qualifying term is an error
std::vector<CorrectionTerm> enumerate_O(const CartanDatum& dat,
                                        const std::vector<long>& lambda_coroot,
                                        long depth,
                                        const OddIsoCoef& hook = nullptr);

// Integer series sum_beta c(beta) e^{anchor - beta} truncated at height depth.
class CharacterSeries {
public:
  CharacterSeries(std::vector<long> anchor, long depth);

  const std::vector<long>& anchor() const { return anchor_; }
  long depth() const { return depth_; }
  size_t rank() const { return anchor_.size(); }
  const std::map<RootWeight, long>& coeffs() const { return c_; }
  long at(const RootWeight& off) const;
  // accumulate, dropping offsets beyond the depth and erasing zeros
  void add(const RootWeight& off, long v);

  CharacterSeries operator+(const CharacterSeries& o) const;
  CharacterSeries operator-(const CharacterSeries& o) const;
  CharacterSeries operator*(const CharacterSeries& o) const;
  bool operator==(const CharacterSeries& o) const = default;

  CharacterSeries reanchored(std::vector<long> anchor) const;
  std::string str(const CartanDatum& dat) const;

private:
  std::vector<long> anchor_;
  long depth_ = 0;
  std::map<RootWeight, long> c_;
};

// exact truncated division; the denominator's constant term must be 1
CharacterSeries divide(const CharacterSeries& num, const CharacterSeries& den);

// S_lambda: pairs of orthogonal corrections, one even and one odd
CharacterSeries build_S(const CartanDatum& dat, const std::vector<long>& lambda_coroot,
                        long depth, const OddIsoCoef& hook = nullptr);

// character of the irreducible quotient at highest weight lambda, as the
// orbit sum of the shifted anchor against S_lambda divided by the
// weight-zero specialization
CharacterSeries formula_character(const CartanDatum& dat,
                                  const std::vector<long>& lambda_coroot, long depth,
                                  const OddIsoCoef& hook = nullptr);

} // namespace bozec
