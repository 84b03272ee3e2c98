#pragma once
// Super Borcherds-Cartan data: an integer matrix with symmetrizer and parity per
// index, plus the root/weight lattice helpers built on it.

#include "bozec/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bozec {

struct IndexInfo {
  std::string name;
  int parity = 0;              // 0 even, 1 odd
  long d = 1;                  // symmetrizer entry, positive
  std::optional<long> bozec_bound; // cap on letter levels for imaginary indices
};

struct ValidationReport {
  bool ok = false;
  bool bar_consistent = false; // d_i = parity_i mod 2 for all i
  std::vector<std::string> errors;
};

// Nonnegative element of the root lattice, coordinates over the index set.
using RootWeight = std::vector<long>;

long height(const RootWeight& b);
RootWeight rw_add(const RootWeight& a, const RootWeight& b);
bool rw_leq(const RootWeight& a, const RootWeight& b); // componentwise
bool rw_nonneg(const RootWeight& a);

class CartanDatum {
public:
  CartanDatum(std::vector<IndexInfo> idx, std::vector<std::vector<long>> a);

  ValidationReport validate() const;
  void require_valid() const; // throws std::invalid_argument with the messages

  size_t n() const { return idx_.size(); }
  long a(size_t i, size_t j) const { return a_[i][j]; }
  long d(size_t i) const { return idx_[i].d; }
  int parity(size_t i) const { return idx_[i].parity; }
  const std::string& name(size_t i) const { return idx_[i].name; }
  const IndexInfo& index(size_t i) const { return idx_[i]; }

  bool is_real(size_t i) const { return a_[i][i] == 2; }
  bool is_imaginary(size_t i) const { return a_[i][i] <= 0; }
  bool is_isotropic(size_t i) const { return a_[i][i] == 0; }

  // parity of the letter (i,l): l*parity(i) mod 2
  int letter_parity(size_t i, long l) const {
    return (l % 2 != 0) ? parity(i) : 0;
  }
  // highest allowed level for letters on index i under a height bound
  long level_cap(size_t i, long bound) const;

  // (alpha_i, alpha_j) = d_i a_ij
  long sym(size_t i, size_t j) const { return idx_[i].d * a_[i][j]; }
  // (beta, gamma) for root lattice elements
  long sym_root(const RootWeight& b, const RootWeight& g) const;
  // <h_i, beta>
  long coroot_on_root(size_t i, const RootWeight& b) const;
  // (lambda, beta) given the coroot values of lambda
  long sym_weight_root(const std::vector<long>& coroot, const RootWeight& b) const;
  // coroot values of rho: <h_i, rho> = a_ii/2
  std::vector<long> rho() const;
  // 2(rho, beta) = sum_i beta_i (alpha_i, alpha_i)
  long two_rho_pairing(const RootWeight& b) const;

  // lambda in P+: coroot values nonnegative, even on odd real indices
  bool dominant_integral(const std::vector<long>& coroot) const;

private:
  std::vector<IndexInfo> idx_;
  std::vector<std::vector<long>> a_;
};

// Weight tracked as absolute coroot values plus the offset below a fixed anchor
// (weight = anchor - offset).
struct Weight {
  std::vector<long> coroot;
  RootWeight offset;
};

Weight reflect(const CartanDatum& dat, size_t i, const Weight& w);
RootWeight reflect_root(const CartanDatum& dat, size_t i, const RootWeight& b);
RootWeight apply_word_to_root(const CartanDatum& dat, const std::vector<size_t>& word,
                              const RootWeight& b);

struct OrbitPoint {
  RootWeight offset;          // anchor - w(anchor)
  std::vector<size_t> word;   // reflections in application order (first applied first)
  int sign() const { return word.size() % 2 == 0 ? 1 : -1; }
};

// Orbit of the anchor under the real Weyl group, pruned to offsets in Q+ of
// height <= depth, deduplicated by weight, BFS by word length. Requires the
// anchor to be strictly dominant on real indices so stabilizers are trivial.
std::vector<OrbitPoint> weyl_orbit_bfs(const CartanDatum& dat,
                                       const std::vector<long>& anchor_coroot,
                                       long depth);

} // namespace bozec
