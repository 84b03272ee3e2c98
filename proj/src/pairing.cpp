#include "bozec/pairing.hpp"

#include <algorithm>
#include <stdexcept>

namespace bozec {

QScalar generator_norm(const CartanDatum& dat, Letter c) {
  LaurentPoly den = LaurentPoly(1);
  LaurentPoly qp = LaurentPoly::q(2 * c.l * dat.d(c.i));
  if (dat.letter_parity(c.i, c.l)) {
    den += qp;
  } else {
    den -= qp;
  }
  return QScalar(LaurentPoly(1), den);
}

BlockTower::BlockTower(CartanDatum dat, long bound) : dat_(std::move(dat)), bound_(bound) {
  dat_.require_valid();
  if (bound_ < 0) throw std::invalid_argument("tower bound must be nonnegative");
}

QScalar BlockTower::form_words(const Word& x, const Word& y) const {
  if (word_weight(dat_, x) != word_weight(dat_, y)) return QScalar();
  return form_rec(x, y);
}

QScalar BlockTower::form_rec(const Word& x, const Word& y) const {
  if (x.empty() && y.empty()) return QScalar(1);
  if (x.empty() || y.empty()) return QScalar();
  TensorKey key{x, y};
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;

  QScalar out;
  if (x.size() > y.size()) {
    // Peel the last letter of the shorter (second) argument.
    Letter c = y.back();
    Word rest(y.begin(), y.end() - 1);
    FreeElt d = derive_right(dat_, c, FreeElt::unit(x, QScalar(1)));
    for (const auto& [u, coef] : d.terms()) out += coef * form_rec(u, rest);
    out *= generator_norm(dat_, c);
  } else {
    // Peel the last letter of the first argument (shorter, or tied lengths).
    Letter c = x.back();
    Word rest(x.begin(), x.end() - 1);
    FreeElt d = derive_right(dat_, c, FreeElt::unit(y, QScalar(1)));
    for (const auto& [u, coef] : d.terms()) out += coef * form_rec(rest, u);
    out *= generator_norm(dat_, c);
  }
  memo_.emplace(std::move(key), out);
  return out;
}

QScalar BlockTower::form(const FreeElt& x, const FreeElt& y) const {
  QScalar out;
  for (const auto& [w, cw] : x.terms())
    for (const auto& [v, cv] : y.terms()) {
      QScalar f = form_words(w, v);
      if (!f.zero()) out += cw * cv * f;
    }
  return out;
}

const GramBlock& BlockTower::block(const ExDegree& nu) {
  auto it = blocks_.find(nu);
  if (it != blocks_.end()) return it->second;
  if (height(nu.weight(dat_)) > bound_)
    throw std::out_of_range("degree exceeds the tower height bound");
  GramBlock b;
  b.degree = nu;
  b.basis_words = block_words(nu);
  size_t n = b.basis_words.size();
  b.gram.assign(n, std::vector<QScalar>(n));
  for (size_t r = 0; r < n; ++r)
    for (size_t c = 0; c < n; ++c)
      b.gram[r][c] = form_rec(b.basis_words[r], b.basis_words[c]);
  return blocks_.emplace(nu, std::move(b)).first->second;
}

const GramBlock& BlockTower::full_block(const ExDegree& nu) {
  GramBlock& b = const_cast<GramBlock&>(block(nu));
  if (b.eliminated) return b;
  EchelonResult e = column_echelon(b.gram);
  b.rank = e.rank;
  b.pivots = e.pivot_cols;
  b.pivot_words.clear();
  for (size_t p : b.pivots) b.pivot_words.push_back(b.basis_words[p]);
  b.reduction = std::move(e.column_reduction);
  b.radical_basis = std::move(e.nullspace);
  b.nonpivots.clear();
  {
    size_t t = 0;
    for (size_t j = 0; j < b.basis_words.size(); ++j) {
      if (t < b.pivots.size() && b.pivots[t] == j) {
        ++t;
        continue;
      }
      b.nonpivots.push_back(j);
    }
  }
  if (b.rank > 0) {
    QMatrix gpp(b.rank, std::vector<QScalar>(b.rank));
    for (size_t r = 0; r < b.rank; ++r)
      for (size_t c = 0; c < b.rank; ++c) gpp[r][c] = b.gram[b.pivots[r]][b.pivots[c]];
    b.dual_coeffs = invert(gpp);
  } else {
    b.dual_coeffs.clear();
  }
  b.eliminated = true;
  return b;
}

std::vector<QScalar> BlockTower::coordinates(const GramBlock& b, const FreeElt& x) const {
  std::vector<QScalar> v(b.basis_words.size());
  for (const auto& [w, c] : x.terms()) {
    auto it = std::find(b.basis_words.begin(), b.basis_words.end(), w);
    if (it == b.basis_words.end())
      throw std::invalid_argument("element leaves its degree block");
    v[static_cast<size_t>(it - b.basis_words.begin())] += c;
  }
  return v;
}

FreeElt BlockTower::reduce(const FreeElt& x) {
  // Split by degree, rewrite each component over pivot words.
  std::map<ExDegree, FreeElt> comps;
  for (const auto& [w, c] : x.terms()) comps[ExDegree(w)].add(w, c);
  FreeElt out;
  for (auto& [nu, comp] : comps) {
    const GramBlock& b = full_block(nu);
    std::vector<QScalar> v = coordinates(b, comp);
    for (size_t r = 0; r < b.rank; ++r) {
      QScalar acc;
      for (size_t j = 0; j < v.size(); ++j)
        if (!v[j].zero() && !b.reduction[r][j].zero()) acc += b.reduction[r][j] * v[j];
      if (!acc.zero()) out.add(b.pivot_words[r], acc);
    }
  }
  return out;
}

BlockTower::Membership BlockTower::radical_membership(const FreeElt& x) {
  Membership m;
  if (x.zero()) {
    m.in_radical = true;
    return m;
  }
  ExDegree nu(x.terms().begin()->first);
  for (const auto& [w, c] : x.terms())
    if (ExDegree(w) != nu)
      throw std::invalid_argument("radical membership requires a degree-homogeneous element");
  const GramBlock& b = full_block(nu);
  std::vector<QScalar> v = coordinates(b, x);
  for (size_t j = 0; j < b.basis_words.size(); ++j) {
    QScalar pairing;
    for (size_t k = 0; k < v.size(); ++k)
      if (!v[k].zero()) pairing += v[k] * b.gram[k][j];
    if (!pairing.zero()) {
      m.in_radical = false;
      m.witness = b.basis_words[j];
      return m;
    }
  }
  m.in_radical = true;
  // Express the coordinate vector over the radical basis and confirm exactly.
  m.certificate.assign(b.radical_basis.size(), QScalar());
  std::vector<QScalar> residue = v;
  for (size_t k = 0; k < b.radical_basis.size(); ++k) {
    size_t j = b.nonpivots[k];
    if (v[j].zero()) continue;
    QScalar coef = v[j] / b.radical_basis[k][j];
    m.certificate[k] = coef;
    for (size_t t = 0; t < residue.size(); ++t)
      if (!b.radical_basis[k][t].zero()) residue[t] -= coef * b.radical_basis[k][t];
  }
  for (const auto& e : residue)
    if (!e.zero()) throw std::logic_error("radical certificate failed to reproduce the element");
  return m;
}

FreeElt serre_element(const CartanDatum& dat, size_t i, size_t j, long k) {
  if (!dat.is_real(i)) throw std::invalid_argument("first index must be real");
  if (dat.is_real(j) && k != 1)
    throw std::invalid_argument("letters on a real index have level 1");
  if (k < 1) throw std::invalid_argument("level must be positive");
  if (j == i && k == 1) throw std::invalid_argument("(j,k)=(i,1) is excluded");
  long nn = 1 - k * dat.a(i, j);
  int pi = dat.parity(i);
  int pkj = dat.letter_parity(j, k);
  FreeElt mid = FreeElt::generator(Letter{j, k});
  FreeElt out;
  for (long n = 0; n <= nn; ++n) {
    long np = nn - n;
    long sgn = np + static_cast<long>(pi) * (np * pkj + np * (np - 1) / 2);
    FreeElt term = divided_power(dat, i, n) * mid * divided_power(dat, i, np);
    out = out + ((sgn % 2 != 0) ? term.scaled(QScalar(-1)) : term);
  }
  return out;
}

FreeElt higher_serre_element(const CartanDatum& dat, size_t i, size_t j, long m,
                             const std::vector<long>& c) {
  if (!dat.is_real(i)) throw std::invalid_argument("first index must be real");
  if (!dat.is_imaginary(j)) throw std::invalid_argument("second index must be imaginary");
  long n = 0;
  FreeElt mid = FreeElt::one();
  for (long ct : c) {
    if (ct < 1) throw std::invalid_argument("composition parts must be positive");
    if (dat.index(j).bozec_bound && ct > *dat.index(j).bozec_bound)
      throw std::invalid_argument("composition part exceeds the level cap");
    n += ct;
    mid = mid * FreeElt::generator(Letter{j, ct});
  }
  if (m <= -dat.a(i, j) * n) throw std::invalid_argument("requires m > -a_ij n");
  int pi = dat.parity(i);
  int pj = dat.parity(j);
  long base = n * dat.a(i, j) + m - 1;
  FreeElt out;
  for (long r = 0; r <= m; ++r) {
    long s = m - r;
    long sgn = r + n * r * pi * pj + r * (r - 1) / 2 * pi;
    long e = -r * base;
    if (e % 2 != 0 && pi) sgn += 1;
    FreeElt term = divided_power(dat, i, r) * mid * divided_power(dat, i, s);
    term = term.scaled(QScalar::q_power(e * dat.d(i)));
    out = out + ((sgn % 2 != 0) ? term.scaled(QScalar(-1)) : term);
  }
  return out;
}

namespace {

void compositions_of(long n, std::vector<long>& cur, std::vector<std::vector<long>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (long p = 1; p <= n; ++p) {
    cur.push_back(p);
    compositions_of(n - p, cur, out);
    cur.pop_back();
  }
}

std::string letter_label(const CartanDatum& dat, Letter c) {
  return dat.name(c.i) + ":" + std::to_string(c.l);
}

} // namespace

std::vector<LabeledRelation> serre_relations(const CartanDatum& dat, long height_bound,
                                             long m_max, long n_max) {
  std::vector<LabeledRelation> out;
  for (size_t i = 0; i < dat.n(); ++i) {
    if (!dat.is_real(i)) continue;
    for (size_t j = 0; j < dat.n(); ++j) {
      if (j == i) continue;
      long kmax = dat.is_real(j) ? 1 : dat.level_cap(j, height_bound);
      for (long k = 1; k <= kmax; ++k) {
        long ht = 1 - k * dat.a(i, j) + k;
        if (ht > height_bound) continue;
        out.push_back({"serre i=" + dat.name(i) + " j=" + dat.name(j) +
                           " k=" + std::to_string(k),
                       serre_element(dat, i, j, k)});
      }
    }
    for (size_t j = 0; j < dat.n(); ++j) {
      if (!dat.is_imaginary(j)) continue;
      for (long n = 1; n <= n_max; ++n) {
        std::vector<std::vector<long>> comps;
        std::vector<long> cur;
        compositions_of(n, cur, comps);
        for (const auto& c : comps) {
          bool capped = false;
          for (long ct : c)
            if (ct > dat.level_cap(j, height_bound)) capped = true;
          if (capped) continue;
          for (long m = 1; m <= m_max; ++m) {
            if (m <= -dat.a(i, j) * n) continue;
            if (m + n > height_bound) continue;
            std::string cs;
            for (size_t t = 0; t < c.size(); ++t)
              cs += (t ? "," : "") + std::to_string(c[t]);
            out.push_back({"higher i=" + dat.name(i) + " j=" + dat.name(j) +
                               " m=" + std::to_string(m) + " c=(" + cs + ")",
                           higher_serre_element(dat, i, j, m, c)});
          }
        }
      }
    }
  }
  // Commuting pairs when a_ij = 0.
  std::vector<Letter> letters = alphabet(dat, height_bound);
  for (size_t s = 0; s < letters.size(); ++s)
    for (size_t t = 0; t <= s; ++t) {
      Letter c1 = letters[s], c2 = letters[t];
      if (dat.a(c1.i, c2.i) != 0) continue;
      if (c1.l + c2.l > height_bound) continue;
      int sgn = dat.letter_parity(c1.i, c1.l) * dat.letter_parity(c2.i, c2.l);
      FreeElt e = FreeElt::generator(c1) * FreeElt::generator(c2);
      FreeElt f = FreeElt::generator(c2) * FreeElt::generator(c1);
      FreeElt rel = sgn ? e + f : e - f;
      if (rel.zero()) continue;
      out.push_back({"commute " + letter_label(dat, c1) + "|" + letter_label(dat, c2), rel});
    }
  return out;
}

} // namespace bozec
