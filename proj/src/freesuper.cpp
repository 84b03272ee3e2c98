#include "bozec/freesuper.hpp"

#include "bozec/qcombinat.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace bozec {

RootWeight letter_weight(const CartanDatum& dat, Letter c) {
  RootWeight w(dat.n(), 0);
  w.at(c.i) = c.l;
  return w;
}

RootWeight word_weight(const CartanDatum& dat, const Word& w) {
  RootWeight r(dat.n(), 0);
  for (Letter c : w) r.at(c.i) += c.l;
  return r;
}

int word_parity(const CartanDatum& dat, const Word& w) {
  int p = 0;
  for (Letter c : w) p ^= dat.letter_parity(c.i, c.l);
  return p;
}

std::string word_str(const CartanDatum& dat, const Word& w, char symbol) {
  if (w.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (Letter c : w) {
    if (!first) os << " ";
    first = false;
    os << symbol << "[" << dat.name(c.i) << "," << c.l << "]";
  }
  return os.str();
}

ExDegree::ExDegree(const Word& w) {
  for (Letter c : w) m_[c] += 1;
}

long ExDegree::parts() const {
  long n = 0;
  for (const auto& [c, k] : m_) n += k;
  return n;
}

RootWeight ExDegree::weight(const CartanDatum& dat) const {
  RootWeight r(dat.n(), 0);
  for (const auto& [c, k] : m_) r.at(c.i) += c.l * k;
  return r;
}

int ExDegree::parity(const CartanDatum& dat) const {
  int p = 0;
  for (const auto& [c, k] : m_)
    if (k % 2 != 0) p ^= dat.letter_parity(c.i, c.l);
  return p;
}

long ExDegree::odd_pairs(const CartanDatum& dat) const {
  long odd = 0;
  for (const auto& [c, k] : m_)
    if (dat.letter_parity(c.i, c.l)) odd += k;
  return odd * (odd - 1) / 2;
}

long ExDegree::level_square_pairing(const CartanDatum& dat) const {
  long s = 0;
  for (const auto& [c, k] : m_) s += k * c.l * c.l * dat.sym(c.i, c.i);
  return s;
}

long ExDegree::cross_pairing(const CartanDatum& dat) const {
  RootWeight b = weight(dat);
  long total = dat.sym_root(b, b) - level_square_pairing(dat);
  if (total % 2 != 0) throw std::logic_error("cross pairing is not even");
  return total / 2;
}

ExDegree ExDegree::plus(Letter c) const {
  ExDegree r = *this;
  r.m_[c] += 1;
  return r;
}

bool ExDegree::contains(Letter c) const { return m_.count(c) != 0; }

ExDegree ExDegree::minus(Letter c) const {
  ExDegree r = *this;
  auto it = r.m_.find(c);
  if (it == r.m_.end()) throw std::logic_error("letter not present in degree");
  if (--it->second == 0) r.m_.erase(it);
  return r;
}

Word ExDegree::sorted_word() const {
  Word w;
  for (const auto& [c, k] : m_)
    for (int t = 0; t < k; ++t) w.push_back(c);
  return w;
}

std::vector<Letter> alphabet(const CartanDatum& dat, long bound) {
  std::vector<Letter> out;
  for (size_t i = 0; i < dat.n(); ++i)
    for (long l = 1; l <= dat.level_cap(i, bound); ++l) out.push_back(Letter{i, l});
  return out;
}

bool letter_allowed(const CartanDatum& dat, long bound, Letter c) {
  return c.i < dat.n() && c.l >= 1 && c.l <= dat.level_cap(c.i, bound);
}

std::vector<ExDegree> exdegrees_up_to(const CartanDatum& dat, long bound) {
  std::vector<Letter> ab = alphabet(dat, bound);
  std::vector<ExDegree> out{ExDegree{}};
  // Extend letter by letter, keeping the total height within the bound.
  for (Letter c : ab) {
    size_t prev = out.size();
    for (size_t s = 0; s < prev; ++s) {
      ExDegree d = out[s];
      long h = height(d.weight(dat));
      while (h + c.l <= bound) {
        d = d.plus(c);
        h += c.l;
        out.push_back(d);
      }
    }
  }
  std::sort(out.begin(), out.end(), [&](const ExDegree& a, const ExDegree& b) {
    long ha = height(a.weight(dat)), hb = height(b.weight(dat));
    if (ha != hb) return ha < hb;
    return a < b;
  });
  return out;
}

std::vector<ExDegree> exdegrees_of_weight(const CartanDatum& dat, const RootWeight& b,
                                          long bound) {
  std::vector<ExDegree> out;
  for (const ExDegree& d : exdegrees_up_to(dat, std::max(bound, height(b))))
    if (d.weight(dat) == b) out.push_back(d);
  return out;
}

std::vector<Word> block_words(const ExDegree& nu) {
  Word w = nu.sorted_word();
  std::vector<Word> out;
  do {
    out.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

FreeElt FreeElt::unit(const Word& w, const QScalar& c) {
  FreeElt e;
  e.add(w, c);
  return e;
}

FreeElt FreeElt::generator(Letter c) { return unit(Word{c}, QScalar(1)); }

void FreeElt::add(const Word& w, const QScalar& c) {
  if (c.zero()) return;
  auto it = t_.find(w);
  if (it == t_.end()) {
    t_.emplace(w, c);
    return;
  }
  it->second = it->second + c;
  if (it->second.zero()) t_.erase(it);
}

FreeElt FreeElt::operator+(const FreeElt& o) const {
  FreeElt r = *this;
  for (const auto& [w, c] : o.t_) r.add(w, c);
  return r;
}

FreeElt FreeElt::operator-(const FreeElt& o) const {
  FreeElt r = *this;
  for (const auto& [w, c] : o.t_) r.add(w, -c);
  return r;
}

FreeElt FreeElt::operator*(const FreeElt& o) const {
  FreeElt r;
  for (const auto& [u, cu] : t_)
    for (const auto& [v, cv] : o.t_) {
      Word w = u;
      w.insert(w.end(), v.begin(), v.end());
      r.add(w, cu * cv);
    }
  return r;
}

FreeElt FreeElt::scaled(const QScalar& c) const {
  FreeElt r;
  for (const auto& [w, cw] : t_) r.add(w, cw * c);
  return r;
}

std::string FreeElt::str(const CartanDatum& dat) const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : t_) {
    if (!first) os << " + ";
    first = false;
    os << c.str() << " * " << word_str(dat, w, 'a');
  }
  return os.str();
}

TensorElt TensorElt::one() {
  TensorElt t;
  t.add(Word{}, Word{}, QScalar(1));
  return t;
}

void TensorElt::add(const Word& u, const Word& v, const QScalar& c) {
  if (c.zero()) return;
  TensorKey k{u, v};
  auto it = t_.find(k);
  if (it == t_.end()) {
    t_.emplace(std::move(k), c);
    return;
  }
  it->second = it->second + c;
  if (it->second.zero()) t_.erase(it);
}

TensorElt TensorElt::operator+(const TensorElt& o) const {
  TensorElt r = *this;
  for (const auto& [k, c] : o.t_) r.add(k.first, k.second, c);
  return r;
}

TensorElt TensorElt::operator-(const TensorElt& o) const {
  TensorElt r = *this;
  for (const auto& [k, c] : o.t_) r.add(k.first, k.second, -c);
  return r;
}

TensorElt TensorElt::scaled(const QScalar& c) const {
  TensorElt r;
  for (const auto& [k, ck] : t_) r.add(k.first, k.second, ck * c);
  return r;
}

TensorElt tensor_mul(const CartanDatum& dat, const TensorElt& a, const TensorElt& b) {
  TensorElt r;
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      const Word &x1 = ka.first, &x2 = ka.second, &x3 = kb.first, &x4 = kb.second;
      long twist = dat.sym_root(word_weight(dat, x2), word_weight(dat, x3));
      int sign = word_parity(dat, x2) & word_parity(dat, x3);
      QScalar c = ca * cb * QScalar::q_power(twist);
      if (sign) c = -c;
      Word u = x1;
      u.insert(u.end(), x3.begin(), x3.end());
      Word v = x2;
      v.insert(v.end(), x4.begin(), x4.end());
      r.add(u, v, c);
    }
  return r;
}

TensorElt coproduct(const CartanDatum& dat, const FreeElt& x) {
  TensorElt out;
  for (const auto& [w, cw] : x.terms()) {
    TensorElt t = TensorElt::one();
    for (Letter c : w) {
      RootWeight lc = letter_weight(dat, c);
      int pc = dat.letter_parity(c.i, c.l);
      TensorElt next;
      for (const auto& [k, ck] : t.terms()) {
        // (u@v)(c@1): the letter crosses v.
        long twist = dat.sym_root(word_weight(dat, k.second), lc);
        int sign = word_parity(dat, k.second) & pc;
        QScalar left = ck * QScalar::q_power(twist);
        if (sign) left = -left;
        Word u = k.first;
        u.push_back(c);
        next.add(u, k.second, left);
        // (u@v)(1@c): no crossing.
        Word v = k.second;
        v.push_back(c);
        next.add(k.first, v, ck);
      }
      t = next;
    }
    out = out + t.scaled(cw);
  }
  return out;
}

FreeElt derive_right(const CartanDatum& dat, Letter c, const FreeElt& x) {
  FreeElt out;
  RootWeight lc = letter_weight(dat, c);
  int pc = dat.letter_parity(c.i, c.l);
  for (const auto& [w, cw] : x.terms()) {
    for (size_t t = 0; t < w.size(); ++t) {
      if (!(w[t] == c)) continue;
      Word suffix(w.begin() + t + 1, w.end());
      long twist = dat.sym_root(lc, word_weight(dat, suffix));
      int sign = pc & word_parity(dat, suffix);
      QScalar coef = cw * QScalar::q_power(twist);
      if (sign) coef = -coef;
      Word rest(w.begin(), w.begin() + t);
      rest.insert(rest.end(), suffix.begin(), suffix.end());
      out.add(rest, coef);
    }
  }
  return out;
}

FreeElt derive_left(const CartanDatum& dat, Letter c, const FreeElt& x) {
  FreeElt out;
  RootWeight lc = letter_weight(dat, c);
  int pc = dat.letter_parity(c.i, c.l);
  for (const auto& [w, cw] : x.terms()) {
    for (size_t t = 0; t < w.size(); ++t) {
      if (!(w[t] == c)) continue;
      Word prefix(w.begin(), w.begin() + t);
      long twist = dat.sym_root(lc, word_weight(dat, prefix));
      int sign = pc & word_parity(dat, prefix);
      QScalar coef = cw * QScalar::q_power(twist);
      if (sign) coef = -coef;
      Word rest = prefix;
      rest.insert(rest.end(), w.begin() + t + 1, w.end());
      out.add(rest, coef);
    }
  }
  return out;
}

FreeElt sigma(const FreeElt& x) {
  FreeElt out;
  for (const auto& [w, c] : x.terms()) {
    Word r(w.rbegin(), w.rend());
    out.add(r, c);
  }
  return out;
}

FreeElt bar_free(const FreeElt& x) {
  FreeElt out;
  for (const auto& [w, c] : x.terms()) out.add(w, c.bar());
  return out;
}

TensorElt bar_tensor(const TensorElt& x) {
  TensorElt out;
  for (const auto& [k, c] : x.terms()) out.add(k.first, k.second, c.bar());
  return out;
}

TensorElt bar_coproduct(const CartanDatum& dat, const FreeElt& x) {
  if (!dat.validate().bar_consistent)
    throw std::invalid_argument("bar twisted coproduct needs a bar-consistent datum");
  TensorElt rho = coproduct(dat, x);
  TensorElt out;
  for (const auto& [k, c] : rho.terms()) {
    long pair = dat.sym_root(word_weight(dat, k.first), word_weight(dat, k.second));
    int sign = word_parity(dat, k.first) & word_parity(dat, k.second);
    // (-q)^{-pair} with the Koszul sign of the swap.
    QScalar coef = c * QScalar::q_power(-pair);
    if ((pair % 2 != 0) ^ (sign != 0)) coef = -coef;
    out.add(k.second, k.first, coef);
  }
  return out;
}

FreeElt divided_power(const CartanDatum& dat, size_t i, long n) {
  if (!dat.is_real(i)) throw std::invalid_argument("divided powers need a real index");
  if (n < 0) return FreeElt{};
  QScalar fact(super_qfact(n, dat.d(i), dat.parity(i)));
  Word w(static_cast<size_t>(n), Letter{i, 1});
  return FreeElt::unit(w, fact.inverse());
}

} // namespace bozec
