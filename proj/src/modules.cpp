#include "bozec/modules.hpp"

#include <algorithm>
#include <stdexcept>

namespace bozec {

std::vector<RootWeight> offsets_up_to(const CartanDatum& dat, long depth) {
  std::vector<RootWeight> out;
  RootWeight cur(dat.n(), 0);
  auto rec = [&](auto&& self, size_t i, long left) -> void {
    if (i == dat.n()) {
      out.push_back(cur);
      return;
    }
    for (long v = 0; v <= left; ++v) {
      cur[i] = v;
      self(self, i + 1, left - v);
    }
    cur[i] = 0;
  };
  rec(rec, 0, depth);
  std::sort(out.begin(), out.end(), [](const RootWeight& a, const RootWeight& b) {
    long ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return a < b;
  });
  return out;
}

VermaModule::VermaModule(const CartanDatum& dat, std::vector<long> lambda_coroot, long depth)
    : tower_(dat, depth), lam_(std::move(lambda_coroot)), depth_(depth) {
  if (lam_.size() != dat.n())
    throw std::invalid_argument("highest weight needs one coroot value per index");
}

bool VermaModule::Vec::zero() const {
  for (const QScalar& c : coords)
    if (!c.zero()) return false;
  return true;
}

VermaModule::Slice& VermaModule::slice(const RootWeight& beta) {
  Slice& s = slices_[beta];
  if (s.ready) return s;
  s.ready = true;
  if (!rw_nonneg(beta) || height(beta) > depth_) return s; // empty space
  for (const ExDegree& nu : exdegrees_of_weight(datum(), beta, depth_))
    for (const Word& w : tower_.full_block(nu).pivot_words) {
      s.pos.emplace(w, s.words.size());
      s.words.push_back(w);
    }
  return s;
}

const std::vector<Word>& VermaModule::basis(const RootWeight& beta) {
  return slice(beta).words;
}

size_t VermaModule::dim(const RootWeight& beta) { return slice(beta).words.size(); }

VermaModule::Vec VermaModule::zero_vec(const RootWeight& beta) {
  return Vec{beta, std::vector<QScalar>(dim(beta))};
}

VermaModule::Vec VermaModule::highest() {
  return Vec{RootWeight(datum().n(), 0), {QScalar(1)}};
}

VermaModule::Vec VermaModule::unit_vec(const RootWeight& beta, size_t k) {
  Vec v = zero_vec(beta);
  v.coords.at(k) = QScalar(1);
  return v;
}

VermaModule::Vec VermaModule::project(const RootWeight& beta, const FreeElt& x) {
  Slice& s = slice(beta);
  Vec v{beta, std::vector<QScalar>(s.words.size())};
  FreeElt red = tower_.reduce(x);
  for (const auto& [w, c] : red.terms()) {
    auto it = s.pos.find(w);
    if (it == s.pos.end()) throw std::logic_error("reduced word escapes the weight space");
    v.coords[it->second] += c;
  }
  return v;
}

VermaModule::Vec VermaModule::from_lowering(const FreeElt& x) {
  if (x.zero()) return zero_vec(RootWeight(datum().n(), 0));
  RootWeight beta = word_weight(datum(), x.terms().begin()->first);
  for (const auto& [w, c] : x.terms())
    if (word_weight(datum(), w) != beta)
      throw std::invalid_argument("lowering element must be weight-homogeneous");
  return project(beta, x);
}

VermaModule::Vec VermaModule::lower(Letter c, const Vec& v) {
  RootWeight target = rw_add(v.offset, letter_weight(datum(), c));
  if (height(target) > depth_) throw std::out_of_range("lowering leaves the depth window");
  const Slice& s = slice(v.offset);
  FreeElt acc;
  for (size_t k = 0; k < v.coords.size(); ++k) {
    if (v.coords[k].zero()) continue;
    Word w{c};
    w.insert(w.end(), s.words[k].begin(), s.words[k].end());
    acc.add(w, v.coords[k]);
  }
  return project(target, acc);
}

const QMatrix& VermaModule::raise_matrix(Letter c, const RootWeight& beta) {
  auto key = std::make_pair(c, beta);
  auto it = raise_.find(key);
  if (it != raise_.end()) return it->second;

  const CartanDatum& dat = datum();
  Slice& s = slice(beta);
  RootWeight target = beta;
  target[c.i] -= c.l;
  size_t rows = rw_nonneg(target) ? dim(target) : 0;
  QMatrix m(rows, std::vector<QScalar>(s.words.size()));
  if (rows != 0) {
    int pc = dat.letter_parity(c.i, c.l);
    long hi_beta = dat.coroot_on_root(c.i, beta);
    QScalar norm = generator_norm(dat, c);
    QScalar ql = QScalar::q_power(c.l * dat.d(c.i) * (lam_[c.i] - hi_beta + c.l * dat.a(c.i, c.i)));
    QScalar qr = QScalar::q_power(-c.l * dat.d(c.i) * lam_[c.i]);
    for (size_t k = 0; k < s.words.size(); ++k) {
      FreeElt x = FreeElt::unit(s.words[k], QScalar(1));
      int pw = word_parity(dat, s.words[k]);
      QScalar right = qr;
      if (pc && pw == 0) right = -right; // (-1)^{p(li)p(x)-p(li)}
      FreeElt img = derive_left(dat, c, x).scaled(ql * norm) -
                    derive_right(dat, c, x).scaled(right * norm);
      Vec col = project(target, img);
      for (size_t r = 0; r < rows; ++r) m[r][k] = col.coords[r];
    }
  }
  return raise_.emplace(std::move(key), std::move(m)).first->second;
}

VermaModule::Vec VermaModule::raise(Letter c, const Vec& v) {
  RootWeight target = v.offset;
  target.at(c.i) -= c.l;
  const QMatrix& m = raise_matrix(c, v.offset);
  Vec out{target, std::vector<QScalar>(m.size())};
  for (size_t r = 0; r < m.size(); ++r)
    for (size_t k = 0; k < v.coords.size(); ++k) out.coords[r] += m[r][k] * v.coords[k];
  return out;
}

QScalar VermaModule::k_eigen(size_t i, long e, const RootWeight& beta) const {
  const CartanDatum& dat = tower_.datum();
  return QScalar::q_power(e * dat.d(i) * (lam_[i] - dat.coroot_on_root(i, beta)));
}

VermaModule::Sub& VermaModule::submodule(const RootWeight& beta) {
  Sub& s = subs_[beta];
  if (s.ready) return s;
  s.ready = true;
  size_t n = dim(beta);
  s.span = RowSpan(n);
  if (height(beta) == 0 || n == 0) return s; // the top line stays free

  // m lies in the submodule iff every single raising step lands in the
  // submodule one floor up; floors are filled in height order
  QMatrix constraints;
  for (Letter c : alphabet(datum(), depth_)) {
    RootWeight target = beta;
    target[c.i] -= c.l;
    if (!rw_nonneg(target)) continue;
    Sub& st = submodule(target);
    const QMatrix& m = raise_matrix(c, beta);
    size_t rows = m.size();
    if (rows == 0) continue;
    std::vector<std::vector<QScalar>> residues(n);
    for (size_t k = 0; k < n; ++k) {
      std::vector<QScalar> col(rows);
      for (size_t r = 0; r < rows; ++r) col[r] = m[r][k];
      residues[k] = st.span.reduce(col);
    }
    for (size_t r = 0; r < rows; ++r) {
      std::vector<QScalar> row(n);
      bool nonzero = false;
      for (size_t k = 0; k < n; ++k) {
        row[k] = residues[k][r];
        nonzero = nonzero || !row[k].zero();
      }
      if (nonzero) constraints.push_back(std::move(row));
    }
  }
  if (constraints.empty()) {
    // no raising constraint reaches this offset: everything is invisible
    // from the top
    for (size_t k = 0; k < n; ++k) {
      std::vector<QScalar> e(n);
      e[k] = QScalar(1);
      s.basis.push_back(e);
      s.span.add(s.basis.back());
    }
    return s;
  }
  EchelonResult ech = column_echelon(constraints);
  for (const auto& v : ech.nullspace) {
    s.basis.push_back(v);
    s.span.add(v);
  }
  return s;
}

const std::vector<std::vector<QScalar>>& VermaModule::submodule_basis(const RootWeight& beta) {
  return submodule(beta).basis;
}

size_t VermaModule::submodule_dim(const RootWeight& beta) {
  return submodule(beta).basis.size();
}

size_t VermaModule::quotient_dim(const RootWeight& beta) {
  return dim(beta) - submodule_dim(beta);
}

bool VermaModule::in_submodule(const Vec& v) {
  if (v.coords.empty()) return true;
  return submodule(v.offset).span.contains(v.coords);
}

std::map<RootWeight, long> VermaModule::quotient_character() {
  std::map<RootWeight, long> ch;
  for (const RootWeight& beta : offsets_up_to(datum(), depth_)) {
    long d = static_cast<long>(quotient_dim(beta));
    if (d != 0) ch[beta] = d;
  }
  return ch;
}

std::vector<std::vector<QScalar>> VermaModule::singular_vectors(const RootWeight& beta) {
  size_t n = dim(beta);
  QMatrix constraints;
  for (Letter c : alphabet(datum(), depth_)) {
    RootWeight target = beta;
    target[c.i] -= c.l;
    if (!rw_nonneg(target)) continue;
    const QMatrix& m = raise_matrix(c, beta);
    for (const auto& row : m) constraints.push_back(row);
  }
  if (constraints.empty()) {
    std::vector<std::vector<QScalar>> all;
    for (size_t k = 0; k < n; ++k) {
      std::vector<QScalar> e(n);
      e[k] = QScalar(1);
      all.push_back(e);
    }
    return all;
  }
  return column_echelon(constraints).nullspace;
}

OintReport check_oint(VermaModule& m) {
  const CartanDatum& dat = m.datum();
  OintReport rep;
  std::vector<RootWeight> offsets = offsets_up_to(dat, m.depth());
  for (const RootWeight& beta : offsets) {
    if (m.quotient_dim(beta) == 0) continue;
    for (size_t i = 0; i < dat.n(); ++i) {
      if (!dat.is_imaginary(i)) continue;
      long pairing = m.lambda()[i] - dat.coroot_on_root(i, beta);
      if (pairing < 0) rep.imaginary_nonneg = false;
      for (long l = 1; l <= dat.level_cap(i, m.depth()); ++l) {
        if (pairing == 0) {
          RootWeight down = beta;
          down[i] += l;
          if (height(down) <= m.depth()) {
            for (size_t k = 0; k < m.dim(beta); ++k)
              if (!m.in_submodule(m.lower(Letter{i, l}, m.unit_vec(beta, k))))
                rep.zero_pairing_lowering = false;
          }
        }
        if (pairing <= -l * dat.a(i, i)) {
          RootWeight up = beta;
          up[i] -= l;
          if (rw_nonneg(up)) {
            for (size_t k = 0; k < m.dim(beta); ++k)
              if (!m.in_submodule(m.raise(Letter{i, l}, m.unit_vec(beta, k))))
                rep.raising_bound = false;
          }
        }
      }
    }
  }
  // real lowering strings from quotient representatives
  for (size_t i = 0; i < dat.n(); ++i) {
    if (!dat.is_real(i)) continue;
    Letter b{i, 1};
    for (const RootWeight& beta : offsets) {
      if (m.quotient_dim(beta) == 0) continue;
      for (size_t k = 0; k < m.dim(beta); ++k) {
        VermaModule::Vec v = m.unit_vec(beta, k);
        bool settled = false;
        while (height(rw_add(v.offset, letter_weight(dat, b))) <= m.depth()) {
          v = m.lower(b, v);
          if (m.in_submodule(v)) {
            settled = true;
            break;
          }
        }
        if (!settled) {
          rep.real_strings_ok = false;
          ++rep.indeterminate_strings;
        }
      }
    }
  }
  return rep;
}

} // namespace bozec
