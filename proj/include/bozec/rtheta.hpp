#pragma once

#include "bozec/modules.hpp"

namespace bozec {

// One bidegree block of the quasi-R-matrix: the signed dual-pairing matrix
// over the pivot basis, so that the block tensor is
//   sum_{j,k} coef[j][k] b_{w_j} (x) a_{w_k},  coef = sign * (pivot Gram)^{-1},
// with sign = (-1)^{parts + odd pairs}. Degenerate directions live in the
// radical and never enter: dual bases exist on the quotient.
struct ThetaBlock {
  ExDegree degree;
  int sign = 1;
  std::vector<Word> words; // pivot words, both sides
  QMatrix coef;            // coef[j][k]: b side j, a side k
};

class ThetaExpansion {
 public:
  ThetaExpansion(BlockTower& tower, long height_bound);

  BlockTower& tower() const { return tower_; }
  long height_bound() const { return bound_; }
  const std::vector<ExDegree>& degrees() const { return degrees_; }

  const ThetaBlock& block(const ExDegree& nu) const;
  const ThetaBlock* block_ptr(const ExDegree& nu) const;
  ThetaBlock& block_mutable(const ExDegree& nu); // for perturbation probes

  UTensor tensor(const ExDegree& nu) const;
  // image under the coefficient conjugation on both factors; raising words
  // are fixed, each lowering letter rescales by (-1)^{p(li)} q_i^{2l}
  UTensor bar_tensor(const ExDegree& nu) const;

 private:
  BlockTower& tower_;
  long bound_;
  std::vector<ExDegree> degrees_;
  std::map<Word, size_t, WordLess> index_;
  std::vector<ThetaBlock> blocks_;
};

ThetaExpansion compute_theta(BlockTower& tower, long height_bound);

// Block-local forms of the defining intertwining property: for every block nu
// in the expansion,
//   (a_c (x) 1) T_nu + (K_c (x) a_c) T_{nu-c} = T_nu (a_c (x) 1) + T_{nu-c} (K_c^{-1} (x) a_c)
//   (1 (x) b_c) T_nu + (b_c (x) K_c^{-1}) T_{nu-c} = T_nu (1 (x) b_c) + T_{nu-c} (b_c (x) K_c)
// where the missing-block terms vanish when nu does not contain c.
bool verify_intertwiner_raise(const ThetaExpansion& th, Letter c);
bool verify_intertwiner_lower(const ThetaExpansion& th, Letter c);
bool verify_intertwiner(const ThetaExpansion& th, Letter c);

// The convolution of the expansion with its conjugated image is 1 (x) 1:
// every positive total weight within the bound cancels, in both orders.
bool verify_inverse(const ThetaExpansion& th);

// The four recursions tying the block coefficient matrices at nu and nu - c,
// checked against the bilinear form with z running over the pivot words.
bool check_cas_recursions(const ThetaExpansion& th, const ExDegree& nu, Letter c);

// Omega = sum over blocks of sign * S(b^-) b^{*+}, acting weight space by
// weight space; only blocks fitting under the current offset contribute, so
// the sum is finite without any completion.
class CasimirOperator {
 public:
  explicit CasimirOperator(VermaModule& mod) : mod_(mod) {}

  VermaModule& module() { return mod_; }

  VermaModule::Vec omega(const VermaModule::Vec& v);
  // q^{g(beta)} omega with g the relative exponent below
  VermaModule::Vec casimir(const VermaModule::Vec& v);

  // f(lambda - beta) - f(lambda) for f(mu) = (mu, mu + 2 rho): depends only
  // on pairings the datum determines
  long relative_exponent(const RootWeight& beta) const;
  // sum of l(l-1)(alpha_i, alpha_i) over the parts of nu
  long block_exponent(const ExDegree& nu) const;

  const QMatrix& omega_matrix(const RootWeight& beta);

 private:
  VermaModule::Vec omega_direct(const VermaModule::Vec& v);
  VermaModule& mod_;
  std::map<RootWeight, QMatrix> cache_;
  std::map<Word, UElement, WordLess> scache_; // antipodes of pivot words
};

struct CasimirReport {
  bool raise_commutation = true; // K^{-l} a Omega = K^l Omega a
  bool lower_commutation = true; // Omega b = b K^l Omega K^l
  bool eigenvalue_law = true;    // Omega diagonal, exponent s(nu) - g(beta)
  bool f_identity = true;
  bool singular_consistency = true; // singular support forces g(beta) = s(nu)
  bool ok() const {
    return raise_commutation && lower_commutation && eigenvalue_law &&
           f_identity && singular_consistency;
  }
};

CasimirReport casimir_eigen_check(VermaModule& mod);

} // namespace bozec
