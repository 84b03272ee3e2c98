#include "bozec/rtheta.hpp"

#include <stdexcept>

namespace bozec {

namespace {

int block_sign(const CartanDatum& dat, const ExDegree& nu) {
  return ((nu.parts() + nu.odd_pairs(dat)) % 2 != 0) ? -1 : 1;
}

UMono mono_minus(const Word& w) {
  UMono m;
  m.minus = w;
  return m;
}

UMono mono_plus(const Word& w) {
  UMono m;
  m.plus = w;
  return m;
}

UMono mono_k(size_t i, long e) {
  UMono m;
  if (e != 0) m.kexp[i] = e;
  return m;
}

// scale picked up by each lowering letter under the coefficient conjugation
QScalar bar_letter_scale(const CartanDatum& dat, Letter c) {
  QScalar s = QScalar::q_power(2 * c.l * dat.d(c.i));
  if (dat.letter_parity(c.i, c.l)) s = -s;
  return s;
}

} // namespace

ThetaExpansion::ThetaExpansion(BlockTower& tower, long height_bound)
    : tower_(tower), bound_(height_bound) {
  if (height_bound > tower.bound())
    throw std::invalid_argument("expansion bound exceeds the tower window");
  degrees_ = exdegrees_up_to(tower.datum(), height_bound);
  for (const ExDegree& nu : degrees_) {
    const GramBlock& gb = tower_.full_block(nu);
    ThetaBlock tb;
    tb.degree = nu;
    tb.sign = block_sign(tower_.datum(), nu);
    tb.words = gb.pivot_words;
    size_t n = tb.words.size();
    tb.coef.assign(n, std::vector<QScalar>(n));
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k)
        tb.coef[j][k] = gb.dual_coeffs[j][k] * QScalar(tb.sign);
    index_[nu.sorted_word()] = blocks_.size();
    blocks_.push_back(std::move(tb));
  }
}

const ThetaBlock* ThetaExpansion::block_ptr(const ExDegree& nu) const {
  auto it = index_.find(nu.sorted_word());
  return it == index_.end() ? nullptr : &blocks_[it->second];
}

const ThetaBlock& ThetaExpansion::block(const ExDegree& nu) const {
  const ThetaBlock* p = block_ptr(nu);
  if (!p) throw std::out_of_range("block outside the expansion");
  return *p;
}

ThetaBlock& ThetaExpansion::block_mutable(const ExDegree& nu) {
  auto it = index_.find(nu.sorted_word());
  if (it == index_.end()) throw std::out_of_range("block outside the expansion");
  return blocks_[it->second];
}

UTensor ThetaExpansion::tensor(const ExDegree& nu) const {
  const ThetaBlock& tb = block(nu);
  UTensor t;
  for (size_t j = 0; j < tb.words.size(); ++j)
    for (size_t k = 0; k < tb.words.size(); ++k)
      t.add(mono_minus(tb.words[j]), mono_plus(tb.words[k]), tb.coef[j][k]);
  return t;
}

UTensor ThetaExpansion::bar_tensor(const ExDegree& nu) const {
  const CartanDatum& dat = tower_.datum();
  const ThetaBlock& tb = block(nu);
  UTensor t;
  for (size_t j = 0; j < tb.words.size(); ++j) {
    QScalar scale(1);
    for (Letter c : tb.words[j]) scale = scale * bar_letter_scale(dat, c);
    for (size_t k = 0; k < tb.words.size(); ++k)
      t.add(mono_minus(tb.words[j]), mono_plus(tb.words[k]),
            tb.coef[j][k].bar() * scale);
  }
  return t;
}

ThetaExpansion compute_theta(BlockTower& tower, long height_bound) {
  return ThetaExpansion(tower, height_bound);
}

bool verify_intertwiner_raise(const ThetaExpansion& th, Letter c) {
  BlockTower& tw = th.tower();
  UTensor a_left;
  a_left.add(mono_plus({c}), UMono{}, QScalar(1));
  UTensor ka_in;
  ka_in.add(mono_k(c.i, c.l), mono_plus({c}), QScalar(1));
  UTensor ka_out;
  ka_out.add(mono_k(c.i, -c.l), mono_plus({c}), QScalar(1));

  for (const ExDegree& nu : th.degrees()) {
    UTensor t = th.tensor(nu);
    UTensor lhs = tensor_mul_u(tw, a_left, t);
    UTensor rhs = tensor_mul_u(tw, t, a_left);
    if (nu.contains(c)) {
      UTensor less = th.tensor(nu.minus(c));
      lhs = lhs + tensor_mul_u(tw, ka_in, less);
      rhs = rhs + tensor_mul_u(tw, less, ka_out);
    }
    if (lhs.truncated() || rhs.truncated()) return false;
    if (!(lhs == rhs)) return false;
  }
  return true;
}

bool verify_intertwiner_lower(const ThetaExpansion& th, Letter c) {
  BlockTower& tw = th.tower();
  UTensor b_right;
  b_right.add(UMono{}, mono_minus({c}), QScalar(1));
  UTensor bk_in;
  bk_in.add(mono_minus({c}), mono_k(c.i, -c.l), QScalar(1));
  UTensor bk_out;
  bk_out.add(mono_minus({c}), mono_k(c.i, c.l), QScalar(1));

  for (const ExDegree& nu : th.degrees()) {
    UTensor t = th.tensor(nu);
    UTensor lhs = tensor_mul_u(tw, b_right, t);
    UTensor rhs = tensor_mul_u(tw, t, b_right);
    if (nu.contains(c)) {
      UTensor less = th.tensor(nu.minus(c));
      lhs = lhs + tensor_mul_u(tw, bk_in, less);
      rhs = rhs + tensor_mul_u(tw, less, bk_out);
    }
    if (lhs.truncated() || rhs.truncated()) return false;
    if (!(lhs == rhs)) return false;
  }
  return true;
}

bool verify_intertwiner(const ThetaExpansion& th, Letter c) {
  return verify_intertwiner_raise(th, c) && verify_intertwiner_lower(th, c);
}

bool verify_inverse(const ThetaExpansion& th) {
  BlockTower& tw = th.tower();
  const CartanDatum& dat = tw.datum();
  std::map<RootWeight, std::vector<const ExDegree*>> by_weight;
  for (const ExDegree& nu : th.degrees())
    by_weight[nu.weight(dat)].push_back(&nu);

  for (const auto& [beta, group] : by_weight) {
    if (height(beta) == 0) {
      (void)group;
      continue;
    }
    UTensor forward;
    UTensor backward;
    for (const auto& [gamma, seconds] : by_weight) {
      if (!rw_leq(gamma, beta)) continue;
      RootWeight rest(beta.size());
      for (size_t i = 0; i < beta.size(); ++i) rest[i] = beta[i] - gamma[i];
      auto it = by_weight.find(rest);
      if (it == by_weight.end()) continue;
      for (const ExDegree* mu : seconds)
        for (const ExDegree* nu : it->second) {
          forward = forward + tensor_mul_u(tw, th.tensor(*mu), th.bar_tensor(*nu));
          backward = backward + tensor_mul_u(tw, th.bar_tensor(*mu), th.tensor(*nu));
        }
    }
    if (forward.truncated() || backward.truncated()) return false;
    if (!forward.zero() || !backward.zero()) return false;
  }
  return true;
}

bool check_cas_recursions(const ThetaExpansion& th, const ExDegree& nu, Letter c) {
  BlockTower& tw = th.tower();
  const CartanDatum& dat = tw.datum();
  if (!nu.contains(c)) return true; // both second sums vanish with the first
  const ThetaBlock& A = th.block(nu);
  const ThetaBlock& B = th.block(nu.minus(c));
  size_t na = A.words.size(), nb = B.words.size();
  if (na == 0) return true;

  // coefficient matrices in (basis, dual basis) parametrization: C = coef * G
  auto cmatrix = [&tw](const ThetaBlock& tb) {
    size_t n = tb.words.size();
    QMatrix gram(n, std::vector<QScalar>(n));
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k)
        gram[j][k] = tw.form_words(tb.words[j], tb.words[k]);
    return matmul(tb.coef, gram);
  };
  QMatrix CA = cmatrix(A);
  QMatrix CB = cmatrix(B);

  auto dual_elt = [&tw](const ThetaBlock& tb, size_t k) {
    const GramBlock& gb = tw.full_block(tb.degree);
    FreeElt d;
    for (size_t p = 0; p < tb.words.size(); ++p)
      d = d + FreeElt::unit(tb.words[p], gb.dual_coeffs[k][p]);
    return d;
  };
  std::vector<FreeElt> dualA(na), dualB(nb);
  for (size_t k = 0; k < na; ++k) dualA[k] = dual_elt(A, k);
  for (size_t k = 0; k < nb; ++k) dualB[k] = dual_elt(B, k);

  int pc = dat.letter_parity(c.i, c.l);
  int pA = nu.parity(dat);
  int pB = nu.minus(c).parity(dat);
  QScalar sgn_first = ((pc * pA + pc) % 2 != 0) ? QScalar(-1) : QScalar(1);
  QScalar sgn_second = ((pc * pB) % 2 != 0) ? QScalar(-1) : QScalar(1);

  for (const Word& zw : A.words) {
    FreeElt z = FreeElt::unit(zw, QScalar(1));
    FreeElt z_left = derive_left(dat, c, z);   // rho^{i,l}(z)
    FreeElt z_right = derive_right(dat, c, z); // rho_{i,l}(z)
    FreeElt r1, r2, r3, r4;
    for (size_t j = 0; j < na; ++j)
      for (size_t k = 0; k < na; ++k) {
        if (CA[j][k].zero()) continue;
        FreeElt bj = FreeElt::unit(A.words[j], QScalar(1));
        QScalar pd = tw.form(dualA[k], z);
        r1 = r1 + derive_left(dat, c, bj).scaled(CA[j][k] * pd);
        r2 = r2 + derive_right(dat, c, bj).scaled(CA[j][k] * sgn_first * pd);
        QScalar pb = tw.form(bj, z);
        r3 = r3 + derive_right(dat, c, dualA[k]).scaled(CA[j][k] * pb);
        r4 = r4 + derive_left(dat, c, dualA[k]).scaled(CA[j][k] * sgn_first * pb);
      }
    for (size_t j = 0; j < nb; ++j)
      for (size_t k = 0; k < nb; ++k) {
        if (CB[j][k].zero()) continue;
        FreeElt bj = FreeElt::unit(B.words[j], QScalar(1));
        r1 = r1 + bj.scaled(CB[j][k] * sgn_second * tw.form(dualB[k], z_left));
        r2 = r2 + bj.scaled(CB[j][k] * tw.form(dualB[k], z_right));
        r3 = r3 + dualB[k].scaled(CB[j][k] * sgn_second * tw.form(bj, z_right));
        r4 = r4 + dualB[k].scaled(CB[j][k] * tw.form(bj, z_left));
      }
    for (const FreeElt* r : {&r1, &r2, &r3, &r4})
      if (!tw.radical_membership(*r).in_radical) return false;
  }
  return true;
}

VermaModule::Vec CasimirOperator::omega_direct(const VermaModule::Vec& v) {
  const CartanDatum& dat = mod_.datum();
  BlockTower& tw = mod_.tower();
  VermaModule::Vec out = v; // the empty block acts as the identity
  if (v.coords.empty()) return out;

  for (const ExDegree& nu : exdegrees_up_to(dat, height(v.offset))) {
    if (nu.parts() == 0) continue;
    RootWeight wt = nu.weight(dat);
    RootWeight target = v.offset;
    bool fits = true;
    for (size_t i = 0; i < target.size(); ++i) {
      target[i] -= wt[i];
      if (target[i] < 0) fits = false;
    }
    if (!fits) continue;
    const GramBlock& gb = tw.full_block(nu);
    size_t n = gb.pivot_words.size();
    if (n == 0) continue;
    QScalar sign(block_sign(dat, nu));

    std::vector<VermaModule::Vec> raised;
    raised.reserve(n);
    bool any = false;
    for (size_t k = 0; k < n; ++k) {
      VermaModule::Vec r = v;
      const Word& w = gb.pivot_words[k];
      for (size_t t = w.size(); t-- > 0;) r = mod_.raise(w[t], r);
      any = any || !r.zero();
      raised.push_back(std::move(r));
    }
    if (!any) continue;

    for (size_t j = 0; j < n; ++j) {
      VermaModule::Vec vv = mod_.zero_vec(target);
      for (size_t k = 0; k < n; ++k) {
        if (gb.dual_coeffs[j][k].zero() || raised[k].zero()) continue;
        for (size_t t = 0; t < vv.coords.size(); ++t)
          vv.coords[t] += gb.dual_coeffs[j][k] * raised[k].coords[t];
      }
      if (vv.zero()) continue;

      auto it = scache_.find(gb.pivot_words[j]);
      if (it == scache_.end()) {
        UElement s = antipode_S(
            tw, UElement::monomial(mono_minus(gb.pivot_words[j]), QScalar(1)));
        it = scache_.emplace(gb.pivot_words[j], std::move(s)).first;
      }
      for (const auto& [mono, sc] : it->second.terms()) {
        QScalar scalar = sc * sign;
        for (const auto& [i, e] : mono.kexp)
          scalar = scalar * mod_.k_eigen(i, e, target);
        VermaModule::Vec tmp = vv;
        for (QScalar& x : tmp.coords) x = x * scalar;
        const Word& w = mono.minus;
        for (size_t t = w.size(); t-- > 0;) tmp = mod_.lower(w[t], tmp);
        for (size_t t = 0; t < out.coords.size(); ++t)
          out.coords[t] += tmp.coords[t];
      }
    }
  }
  return out;
}

const QMatrix& CasimirOperator::omega_matrix(const RootWeight& beta) {
  auto it = cache_.find(beta);
  if (it != cache_.end()) return it->second;
  size_t n = mod_.dim(beta);
  QMatrix m(n, std::vector<QScalar>(n));
  for (size_t k = 0; k < n; ++k) {
    VermaModule::Vec img = omega_direct(mod_.unit_vec(beta, k));
    for (size_t r = 0; r < n; ++r) m[r][k] = img.coords[r];
  }
  return cache_.emplace(beta, std::move(m)).first->second;
}

VermaModule::Vec CasimirOperator::omega(const VermaModule::Vec& v) {
  if (v.coords.empty()) return v;
  VermaModule::Vec out = v;
  out.coords = matvec(omega_matrix(v.offset), v.coords);
  return out;
}

VermaModule::Vec CasimirOperator::casimir(const VermaModule::Vec& v) {
  VermaModule::Vec out = omega(v);
  QScalar scale = QScalar::q_power(relative_exponent(v.offset));
  for (QScalar& x : out.coords) x = x * scale;
  return out;
}

long CasimirOperator::relative_exponent(const RootWeight& beta) const {
  const CartanDatum& dat = mod_.datum();
  return dat.sym_root(beta, beta) - 2 * dat.sym_weight_root(mod_.lambda(), beta) -
         dat.two_rho_pairing(beta);
}

long CasimirOperator::block_exponent(const ExDegree& nu) const {
  const CartanDatum& dat = mod_.datum();
  long s = 0;
  for (const auto& [c, m] : nu.mult())
    s += m * c.l * (c.l - 1) * dat.sym(c.i, c.i);
  return s;
}

CasimirReport casimir_eigen_check(VermaModule& mod) {
  CasimirOperator cas(mod);
  CasimirReport rep;
  const CartanDatum& dat = mod.datum();
  const std::vector<long>& lam = mod.lambda();
  std::vector<Letter> letters = alphabet(dat, mod.depth());

  for (const RootWeight& beta : offsets_up_to(dat, mod.depth())) {
    for (Letter c : letters) {
      RootWeight down = beta;
      down[c.i] += c.l;
      long drop = 2 * c.l * dat.d(c.i) * (lam[c.i] - dat.coroot_on_root(c.i, beta));
      if (cas.relative_exponent(down) - cas.relative_exponent(beta) + drop !=
          (c.l * c.l - c.l) * dat.sym(c.i, c.i))
        rep.f_identity = false;
    }

    size_t n = mod.dim(beta);
    if (n == 0) continue;
    const QMatrix& M = cas.omega_matrix(beta);
    long g = cas.relative_exponent(beta);
    const std::vector<Word>& words = mod.basis(beta);
    for (size_t k = 0; k < n; ++k) {
      QScalar eig = QScalar::q_power(cas.block_exponent(ExDegree(words[k])) - g);
      for (size_t r = 0; r < n; ++r) {
        QScalar want = (r == k) ? eig : QScalar(0);
        if (!(M[r][k] == want)) rep.eigenvalue_law = false;
      }
    }

    for (Letter c : letters) {
      RootWeight up = beta;
      up[c.i] -= c.l;
      RootWeight down = beta;
      down[c.i] += c.l;
      for (size_t k = 0; k < n; ++k) {
        VermaModule::Vec v = mod.unit_vec(beta, k);
        VermaModule::Vec ov = cas.omega(v);
        if (rw_nonneg(up)) {
          VermaModule::Vec lhs = mod.raise(c, ov);
          QScalar le = mod.k_eigen(c.i, -c.l, up);
          for (QScalar& x : lhs.coords) x = x * le;
          VermaModule::Vec rhs = cas.omega(mod.raise(c, v));
          QScalar re = mod.k_eigen(c.i, c.l, up);
          for (QScalar& x : rhs.coords) x = x * re;
          if (!(lhs.offset == rhs.offset && lhs.coords == rhs.coords))
            rep.raise_commutation = false;
        }
        if (height(down) <= mod.depth()) {
          VermaModule::Vec lhs = cas.omega(mod.lower(c, v));
          VermaModule::Vec rhs = mod.lower(c, ov);
          QScalar ke = mod.k_eigen(c.i, c.l, beta);
          ke = ke * ke;
          for (QScalar& x : rhs.coords) x = x * ke;
          if (!(lhs.offset == rhs.offset && lhs.coords == rhs.coords))
            rep.lower_commutation = false;
        }
      }
    }

    if (height(beta) > 0)
      for (const auto& s : mod.singular_vectors(beta))
        for (size_t k = 0; k < n; ++k)
          if (!s[k].zero() && cas.block_exponent(ExDegree(words[k])) != g)
            rep.singular_consistency = false;
  }
  return rep;
}

} // namespace bozec
