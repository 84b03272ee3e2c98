#pragma once
// Highest-weight modules at truncated depth: the universal module as a free
// module over the lowering half, the raising action through the derivation
// formula, the maximal graded submodule, and the irreducible quotient.

#include "bozec/ualgebra.hpp"

namespace bozec {

// all offsets beta >= 0 with height(beta) <= depth, by height then lex
std::vector<RootWeight> offsets_up_to(const CartanDatum& dat, long depth);

class VermaModule {
public:
  VermaModule(const CartanDatum& dat, std::vector<long> lambda_coroot, long depth);

  const CartanDatum& datum() const { return tower_.datum(); }
  long depth() const { return depth_; }
  const std::vector<long>& lambda() const { return lam_; }
  BlockTower& tower() { return tower_; }

  // coordinates over the weight-space basis at lambda - offset
  struct Vec {
    RootWeight offset;
    std::vector<QScalar> coords;
    bool zero() const;
  };

  // pivot words of every letter multiset of this weight, block by block
  const std::vector<Word>& basis(const RootWeight& beta);
  size_t dim(const RootWeight& beta);

  Vec zero_vec(const RootWeight& beta);
  Vec highest();
  Vec unit_vec(const RootWeight& beta, size_t k);
  // x^- v_lambda for weight-homogeneous x
  Vec from_lowering(const FreeElt& x);

  // b_{il} v; the target must stay within depth
  Vec lower(Letter c, const Vec& v);
  // a_{il} v through the commutation formula; exact at every offset
  Vec raise(Letter c, const Vec& v);
  // K_i^e eigenvalue on the space at lambda - beta
  QScalar k_eigen(size_t i, long e, const RootWeight& beta) const;

  // maximal graded submodule: vectors from which no raising path reaches the
  // highest weight line; computed per offset by descent
  const std::vector<std::vector<QScalar>>& submodule_basis(const RootWeight& beta);
  size_t submodule_dim(const RootWeight& beta);
  size_t quotient_dim(const RootWeight& beta);
  bool in_submodule(const Vec& v);
  // nonzero dimensions of the irreducible quotient, offset -> dim
  std::map<RootWeight, long> quotient_character();

  // kernel of all single-letter raisings at this offset
  std::vector<std::vector<QScalar>> singular_vectors(const RootWeight& beta);

private:
  struct Slice {
    std::vector<Word> words;
    std::map<Word, size_t, WordLess> pos;
    bool ready = false;
  };
  struct Sub {
    std::vector<std::vector<QScalar>> basis;
    RowSpan span{0};
    bool ready = false;
  };

  Slice& slice(const RootWeight& beta);
  Vec project(const RootWeight& beta, const FreeElt& x);
  const QMatrix& raise_matrix(Letter c, const RootWeight& beta);
  Sub& submodule(const RootWeight& beta);

  BlockTower tower_;
  std::vector<long> lam_;
  long depth_;
  std::map<RootWeight, Slice> slices_;
  std::map<RootWeight, Sub> subs_;
  std::map<std::pair<Letter, RootWeight>, QMatrix> raise_;
};

// window report for the integrability conditions: a check that cannot be
// settled inside the depth window counts as indeterminate, never as failure
struct OintReport {
  bool real_strings_ok = true;      // every checked lowering string reached the
                                    // submodule inside the window
  size_t indeterminate_strings = 0; // strings still alive at the window edge
  bool imaginary_nonneg = true;     // <h_i, mu> >= 0 on all quotient weights
  bool zero_pairing_lowering = true; // <h_i, mu> = 0 forces b_{il} V_mu = 0
  bool raising_bound = true;         // <h_i, mu> <= -l a_ii forces a_{il} V_mu = 0
  bool ok() const {
    return imaginary_nonneg && zero_pairing_lowering && raising_bound;
  }
};

OintReport check_oint(VermaModule& m);

} // namespace bozec
