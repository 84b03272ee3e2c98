#include "bozec/linalg.hpp"

#include <stdexcept>

namespace bozec {

namespace {

LaurentPoly poly_lcm(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.zero() || b.zero()) return LaurentPoly();
  LaurentPoly g = LaurentPoly::gcd(a, b);
  LaurentPoly q;
  if (!LaurentPoly::divide(a, g, q)) throw std::logic_error("lcm: inexact gcd division");
  return q * b;
}

LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly q;
  if (!LaurentPoly::divide(a, b, q)) throw std::logic_error("fraction-free step: inexact division");
  return q;
}

// Denominator-cleared copy: entries scaled by the lcm of all denominators.
std::vector<std::vector<LaurentPoly>> cleared(const QMatrix& m) {
  LaurentPoly l(1);
  for (const auto& row : m)
    for (const auto& e : row)
      if (!e.zero()) l = poly_lcm(l, e.den());
  std::vector<std::vector<LaurentPoly>> out(m.size());
  for (size_t i = 0; i < m.size(); ++i) {
    out[i].reserve(m[i].size());
    for (const auto& e : m[i]) {
      if (e.zero()) {
        out[i].push_back(LaurentPoly());
      } else {
        out[i].push_back(e.num() * exact_div(l, e.den()));
      }
    }
  }
  return out;
}

} // namespace

EchelonResult column_echelon(const QMatrix& m) {
  EchelonResult res;
  size_t rows = m.size();
  size_t cols = rows ? m[0].size() : 0;
  for (const auto& row : m)
    if (row.size() != cols) throw std::invalid_argument("column_echelon: ragged matrix");
  if (cols == 0) return res;

  auto a = cleared(m);
  std::vector<size_t>& piv = res.pivot_cols;
  LaurentPoly prev(1);
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t pr = r;
    while (pr < rows && a[pr][c].zero()) ++pr;
    if (pr == rows) continue;
    std::swap(a[pr], a[r]);
    for (size_t i = r + 1; i < rows; ++i) {
      for (size_t j = c + 1; j < cols; ++j)
        a[i][j] = exact_div(a[r][c] * a[i][j] - a[i][c] * a[r][j], prev);
      a[i][c] = LaurentPoly();
    }
    prev = a[r][c];
    piv.push_back(c);
    ++r;
  }
  res.rank = r;

  // Back-substitution on the echelon rows over rational functions.
  QMatrix red(r, std::vector<QScalar>(cols));
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < cols; ++j) red[i][j] = QScalar(a[i][j]);
  for (size_t k = r; k-- > 0;) {
    QScalar inv = red[k][piv[k]].inverse();
    for (size_t j = 0; j < cols; ++j) red[k][j] *= inv;
    for (size_t i = 0; i < k; ++i) {
      QScalar f = red[i][piv[k]];
      if (f.zero()) continue;
      for (size_t j = 0; j < cols; ++j) red[i][j] -= f * red[k][j];
    }
  }
  res.column_reduction = std::move(red);

  // Nullspace: one vector per non-pivot column, denominator-cleared and primitive.
  size_t np = 0;
  for (size_t j = 0; j < cols; ++j) {
    if (np < piv.size() && piv[np] == j) {
      ++np;
      continue;
    }
    std::vector<QScalar> v(cols);
    v[j] = QScalar(1);
    for (size_t t = 0; t < res.rank; ++t) v[piv[t]] = -res.column_reduction[t][j];
    LaurentPoly l(1);
    for (const auto& e : v)
      if (!e.zero()) l = poly_lcm(l, e.den());
    std::vector<LaurentPoly> w(cols);
    for (size_t t = 0; t < cols; ++t)
      if (!v[t].zero()) w[t] = v[t].num() * exact_div(l, v[t].den());
    LaurentPoly g;
    for (const auto& e : w)
      if (!e.zero()) g = LaurentPoly::gcd(g, e);
    bool flip = false;
    bool first = true;
    std::vector<QScalar> out(cols);
    std::vector<LaurentPoly> wg(cols);
    for (size_t t = 0; t < cols; ++t) {
      if (w[t].zero()) continue;
      wg[t] = exact_div(w[t], g);
      if (first) {
        first = false;
        flip = wg[t].signed_content() < Rat(0);
      }
    }
    long k = 0;
    bool have = false;
    for (size_t t = 0; t < cols; ++t) {
      if (wg[t].zero()) continue;
      if (flip) wg[t] = -wg[t];
      k = have ? std::min(k, wg[t].min_exp()) : wg[t].min_exp();
      have = true;
    }
    for (size_t t = 0; t < cols; ++t)
      if (!wg[t].zero()) out[t] = QScalar(wg[t].shifted(-k));
    res.nullspace.push_back(std::move(out));
  }
  return res;
}

QMatrix invert(const QMatrix& m) {
  size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("invert: not square");
  QMatrix a = m;
  QMatrix inv(n, std::vector<QScalar>(n));
  for (size_t i = 0; i < n; ++i) inv[i][i] = QScalar(1);
  for (size_t c = 0; c < n; ++c) {
    size_t pr = c;
    while (pr < n && a[pr][c].zero()) ++pr;
    if (pr == n) throw std::invalid_argument("invert: singular matrix");
    std::swap(a[pr], a[c]);
    std::swap(inv[pr], inv[c]);
    QScalar f = a[c][c].inverse();
    for (size_t j = 0; j < n; ++j) {
      a[c][j] *= f;
      inv[c][j] *= f;
    }
    for (size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c].zero()) continue;
      QScalar g = a[i][c];
      for (size_t j = 0; j < n; ++j) {
        a[i][j] -= g * a[c][j];
        inv[i][j] -= g * inv[c][j];
      }
    }
  }
  return inv;
}

std::vector<QScalar> solve(const QMatrix& m, const std::vector<QScalar>& rhs) {
  return matvec(invert(m), rhs);
}

QMatrix matmul(const QMatrix& a, const QMatrix& b) {
  size_t n = a.size();
  size_t k = b.size();
  size_t p = k ? b[0].size() : 0;
  QMatrix out(n, std::vector<QScalar>(p));
  for (size_t i = 0; i < n; ++i) {
    if (a[i].size() != k) throw std::invalid_argument("matmul: shape mismatch");
    for (size_t t = 0; t < k; ++t) {
      if (a[i][t].zero()) continue;
      for (size_t j = 0; j < p; ++j) {
        if (b[t][j].zero()) continue;
        out[i][j] += a[i][t] * b[t][j];
      }
    }
  }
  return out;
}

std::vector<QScalar> matvec(const QMatrix& a, const std::vector<QScalar>& v) {
  std::vector<QScalar> out(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != v.size()) throw std::invalid_argument("matvec: shape mismatch");
    for (size_t j = 0; j < v.size(); ++j)
      if (!a[i][j].zero() && !v[j].zero()) out[i] += a[i][j] * v[j];
  }
  return out;
}

std::vector<QScalar> RowSpan::reduce(std::vector<QScalar> v) const {
  if (v.size() != ncols_) throw std::invalid_argument("RowSpan: size mismatch");
  for (size_t r = 0; r < rows_.size(); ++r) {
    QScalar f = v[pivots_[r]];
    if (f.zero()) continue;
    for (size_t j = 0; j < ncols_; ++j)
      if (!rows_[r][j].zero()) v[j] -= f * rows_[r][j];
  }
  return v;
}

bool RowSpan::contains(const std::vector<QScalar>& v) const {
  auto r = reduce(v);
  for (const auto& e : r)
    if (!e.zero()) return false;
  return true;
}

bool RowSpan::add(std::vector<QScalar> v) {
  v = reduce(std::move(v));
  size_t p = 0;
  while (p < ncols_ && v[p].zero()) ++p;
  if (p == ncols_) return false;
  QScalar f = v[p].inverse();
  for (auto& e : v) e *= f;
  // Clear the new pivot column from existing rows to keep reduced form.
  for (size_t r = 0; r < rows_.size(); ++r) {
    QScalar g = rows_[r][p];
    if (g.zero()) continue;
    for (size_t j = 0; j < ncols_; ++j)
      if (!v[j].zero()) rows_[r][j] -= g * v[j];
  }
  size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
  rows_.insert(rows_.begin() + pos, std::move(v));
  pivots_.insert(pivots_.begin() + pos, p);
  return true;
}

std::vector<size_t> RowSpan::free_columns() const {
  std::vector<size_t> out;
  size_t r = 0;
  for (size_t j = 0; j < ncols_; ++j) {
    if (r < pivots_.size() && pivots_[r] == j) {
      ++r;
      continue;
    }
    out.push_back(j);
  }
  return out;
}

} // namespace bozec
