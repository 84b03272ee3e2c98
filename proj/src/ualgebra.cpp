#include "bozec/ualgebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace bozec {

namespace {

enum class Kind { B, K, A };

struct Token {
  Kind kind;
  Letter c;   // B/A
  size_t i;   // K
  long e;     // K exponent
};

int token_parity(const CartanDatum& dat, const Token& t) {
  if (t.kind == Kind::K) return 0;
  return dat.letter_parity(t.c.i, t.c.l);
}

std::vector<Token> tokens_of(const UMono& m) {
  std::vector<Token> ts;
  for (Letter c : m.minus) ts.push_back({Kind::B, c, 0, 0});
  for (const auto& [i, e] : m.kexp)
    if (e != 0) ts.push_back({Kind::K, Letter{}, i, e});
  for (Letter c : m.plus) ts.push_back({Kind::A, c, 0, 0});
  return ts;
}

struct RawTerm {
  std::vector<Token> ts;
  QScalar coef;
};

// Straightens a token word into normal monomials, reducing both word halves
// over pivot words; out-of-window terms are dropped and flagged.
void raw_reduce(BlockTower& tower, std::vector<Token> ts, QScalar coef, UElement& out) {
  const CartanDatum& dat = tower.datum();
  std::vector<RawTerm> work;
  work.push_back({std::move(ts), std::move(coef)});
  while (!work.empty()) {
    RawTerm cur = std::move(work.back());
    work.pop_back();
    bool rewritten = false;
    for (size_t t = 0; t + 1 < cur.ts.size() && !rewritten; ++t) {
      const Token& x = cur.ts[t];
      const Token& y = cur.ts[t + 1];
      if (x.kind == Kind::A && y.kind == Kind::B) {
        Letter a = x.c, b = y.c;
        int sgn = dat.letter_parity(a.i, a.l) * dat.letter_parity(b.i, b.l);
        RawTerm swapped = cur;
        std::swap(swapped.ts[t], swapped.ts[t + 1]);
        if (sgn) swapped.coef = -swapped.coef;
        if (a == b) {
          QScalar norm = generator_norm(dat, a);
          for (int dir : {+1, -1}) {
            RawTerm kterm;
            kterm.ts.assign(cur.ts.begin(), cur.ts.begin() + t);
            kterm.ts.push_back({Kind::K, Letter{}, a.i, dir * a.l});
            kterm.ts.insert(kterm.ts.end(), cur.ts.begin() + t + 2, cur.ts.end());
            kterm.coef = cur.coef * norm;
            if (dir < 0) kterm.coef = -kterm.coef;
            work.push_back(std::move(kterm));
          }
        }
        work.push_back(std::move(swapped));
        rewritten = true;
      } else if (x.kind == Kind::A && y.kind == Kind::K) {
        RawTerm swapped = cur;
        std::swap(swapped.ts[t], swapped.ts[t + 1]);
        long s = x.c.l * y.e * dat.d(y.i) * dat.a(y.i, x.c.i);
        swapped.coef = swapped.coef * QScalar::q_power(-s);
        work.push_back(std::move(swapped));
        rewritten = true;
      } else if (x.kind == Kind::K && y.kind == Kind::B) {
        RawTerm swapped = cur;
        std::swap(swapped.ts[t], swapped.ts[t + 1]);
        long s = y.c.l * x.e * dat.d(x.i) * dat.a(x.i, y.c.i);
        swapped.coef = swapped.coef * QScalar::q_power(-s);
        work.push_back(std::move(swapped));
        rewritten = true;
      }
    }
    if (rewritten) continue;

    Word minus, plus;
    std::map<size_t, long> kexp;
    for (const Token& t : cur.ts) {
      if (t.kind == Kind::B) minus.push_back(t.c);
      else if (t.kind == Kind::A) plus.push_back(t.c);
      else kexp[t.i] += t.e;
    }
    std::erase_if(kexp, [](const auto& kv) { return kv.second == 0; });
    if (height(word_weight(dat, minus)) > tower.bound() ||
        height(word_weight(dat, plus)) > tower.bound()) {
      out.mark_truncated();
      continue;
    }
    FreeElt mr = tower.reduce(FreeElt::unit(minus, QScalar(1)));
    FreeElt pr = tower.reduce(FreeElt::unit(plus, QScalar(1)));
    for (const auto& [mw, mc] : mr.terms())
      for (const auto& [pw, pc] : pr.terms())
        out.add(UMono{mw, kexp, pw}, cur.coef * mc * pc);
  }
}

QScalar koszul_sign(int p1, int p2) { return (p1 && p2) ? QScalar(-1) : QScalar(1); }

} // namespace

int umono_parity(const CartanDatum& dat, const UMono& m) {
  return (word_parity(dat, m.minus) + word_parity(dat, m.plus)) % 2;
}

std::vector<long> umono_weight(const CartanDatum& dat, const UMono& m) {
  RootWeight p = word_weight(dat, m.plus);
  RootWeight q = word_weight(dat, m.minus);
  std::vector<long> out(dat.n());
  for (size_t i = 0; i < dat.n(); ++i) out[i] = p[i] - q[i];
  return out;
}

UElement UElement::monomial(UMono m, const QScalar& c) {
  UElement u;
  u.add(m, c);
  return u;
}

void UElement::add(const UMono& m, const QScalar& c) {
  if (c.zero()) return;
  auto [it, fresh] = t_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.zero()) t_.erase(it);
  }
}

UElement UElement::operator+(const UElement& o) const {
  UElement out = *this;
  if (o.truncated_) out.truncated_ = true;
  for (const auto& [m, c] : o.t_) out.add(m, c);
  return out;
}

UElement UElement::operator-(const UElement& o) const {
  UElement out = *this;
  if (o.truncated_) out.truncated_ = true;
  for (const auto& [m, c] : o.t_) out.add(m, -c);
  return out;
}

UElement UElement::scaled(const QScalar& c) const {
  UElement out;
  out.truncated_ = truncated_;
  if (c.zero()) return out;
  for (const auto& [m, v] : t_) out.t_.emplace(m, v * c);
  return out;
}

UElement k_element(size_t i, long l) { return k_element({{i, l}}); }

UElement k_element(const std::map<size_t, long>& e) {
  UMono m;
  for (const auto& [i, v] : e)
    if (v != 0) m.kexp.emplace(i, v);
  return UElement::monomial(m, QScalar(1));
}

UElement embed_plus(BlockTower& tower, const FreeElt& x) {
  UElement out;
  FreeElt red = tower.reduce(x);
  for (const auto& [w, c] : red.terms()) out.add(UMono{{}, {}, w}, c);
  return out;
}

UElement embed_minus(BlockTower& tower, const FreeElt& x) {
  UElement out;
  FreeElt red = tower.reduce(x);
  for (const auto& [w, c] : red.terms()) out.add(UMono{w, {}, {}}, c);
  return out;
}

UElement straighten_product(BlockTower& tower, const UElement& u, const UElement& v) {
  UElement out;
  if (u.truncated() || v.truncated()) out.mark_truncated();
  for (const auto& [mu, cu] : u.terms()) {
    std::vector<Token> base = tokens_of(mu);
    for (const auto& [mv, cv] : v.terms()) {
      std::vector<Token> ts = base;
      std::vector<Token> tv = tokens_of(mv);
      ts.insert(ts.end(), tv.begin(), tv.end());
      raw_reduce(tower, std::move(ts), cu * cv, out);
    }
  }
  return out;
}

UElement omega_u(BlockTower& tower, const UElement& u) {
  const CartanDatum& dat = tower.datum();
  UElement out;
  if (u.truncated()) out.mark_truncated();
  for (const auto& [m, c] : u.terms()) {
    std::vector<Token> ts;
    QScalar coef = c;
    for (Letter l : m.minus) ts.push_back({Kind::A, l, 0, 0});
    for (const auto& [i, e] : m.kexp) ts.push_back({Kind::K, Letter{}, i, -e});
    for (Letter l : m.plus) {
      ts.push_back({Kind::B, l, 0, 0});
      if (dat.letter_parity(l.i, l.l)) coef = -coef;
    }
    raw_reduce(tower, std::move(ts), coef, out);
  }
  return out;
}

UElement bar_u(BlockTower& tower, const UElement& u) {
  const CartanDatum& dat = tower.datum();
  UElement out;
  if (u.truncated()) out.mark_truncated();
  for (const auto& [m, c] : u.terms()) {
    QScalar coef = c.bar();
    long qexp = 0;
    for (Letter l : m.minus) {
      if (dat.letter_parity(l.i, l.l)) coef = -coef;
      qexp += 2 * l.l * dat.d(l.i);
    }
    coef = coef * QScalar::q_power(qexp);
    UMono bm = m;
    for (auto& [i, e] : bm.kexp) e = -e;
    out.add(bm, coef);
  }
  return out;
}

namespace {

UElement antipode_impl(BlockTower& tower, const UElement& u, bool primed) {
  const CartanDatum& dat = tower.datum();
  UElement out;
  if (u.truncated()) out.mark_truncated();
  for (const auto& [m, c] : u.terms()) {
    std::vector<Token> ts = tokens_of(m);
    long odd = 0;
    QScalar coef = c;
    std::vector<Token> rev;
    for (auto it = ts.rbegin(); it != ts.rend(); ++it) {
      const Token& t = *it;
      if (token_parity(dat, t)) ++odd;
      switch (t.kind) {
        case Kind::A:
          coef = -coef;
          if (primed) {
            rev.push_back(t);
            rev.push_back({Kind::K, Letter{}, t.c.i, -t.c.l});
          } else {
            rev.push_back({Kind::K, Letter{}, t.c.i, -t.c.l});
            rev.push_back(t);
          }
          break;
        case Kind::B:
          coef = -coef;
          if (primed) {
            rev.push_back({Kind::K, Letter{}, t.c.i, t.c.l});
            rev.push_back(t);
          } else {
            rev.push_back(t);
            rev.push_back({Kind::K, Letter{}, t.c.i, t.c.l});
          }
          break;
        case Kind::K:
          rev.push_back({Kind::K, Letter{}, t.i, -t.e});
          break;
      }
    }
    if ((odd * (odd - 1) / 2) % 2 != 0) coef = -coef;
    raw_reduce(tower, std::move(rev), coef, out);
  }
  return out;
}

} // namespace

UElement antipode_S(BlockTower& tower, const UElement& u) {
  return antipode_impl(tower, u, false);
}

UElement antipode_Sprime(BlockTower& tower, const UElement& u) {
  return antipode_impl(tower, u, true);
}

UElement commutator_plus(BlockTower& tower, const FreeElt& x, Letter c) {
  const CartanDatum& dat = tower.datum();
  if (x.zero()) return UElement();
  int px = word_parity(dat, x.terms().begin()->first);
  for (const auto& [w, coef] : x.terms())
    if (word_parity(dat, w) != px)
      throw std::invalid_argument("commutator requires a parity-homogeneous element");
  int pc = dat.letter_parity(c.i, c.l);
  UElement right = straighten_product(
      tower, embed_plus(tower, derive_right(dat, c, x)), k_element(c.i, c.l));
  UElement left = straighten_product(
      tower, k_element(c.i, -c.l), embed_plus(tower, derive_left(dat, c, x)));
  if ((pc * px - pc) % 2 != 0) left = left.scaled(QScalar(-1));
  return (right - left).scaled(generator_norm(dat, c));
}

UTensor UTensor::one() {
  UTensor t;
  t.add(UMono{}, UMono{}, QScalar(1));
  return t;
}

void UTensor::add(const UMono& a, const UMono& b, const QScalar& c) {
  if (c.zero()) return;
  Key k{a, b};
  auto [it, fresh] = t_.emplace(std::move(k), c);
  if (!fresh) {
    it->second += c;
    if (it->second.zero()) t_.erase(it);
  }
}

UTensor UTensor::operator+(const UTensor& o) const {
  UTensor out = *this;
  if (o.truncated_) out.truncated_ = true;
  for (const auto& [k, c] : o.t_) out.add(k.first, k.second, c);
  return out;
}

UTensor UTensor::operator-(const UTensor& o) const {
  UTensor out = *this;
  if (o.truncated_) out.truncated_ = true;
  for (const auto& [k, c] : o.t_) out.add(k.first, k.second, -c);
  return out;
}

UTensor UTensor::scaled(const QScalar& c) const {
  UTensor out;
  out.truncated_ = truncated_;
  if (c.zero()) return out;
  for (const auto& [k, v] : t_) out.t_.emplace(k, v * c);
  return out;
}

UTensor tensor_mul_u(BlockTower& tower, const UTensor& a, const UTensor& b) {
  const CartanDatum& dat = tower.datum();
  UTensor out;
  if (a.truncated() || b.truncated()) out.mark_truncated();
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      QScalar coef =
          ca * cb * koszul_sign(umono_parity(dat, ka.second), umono_parity(dat, kb.first));
      UElement l = straighten_product(tower, UElement::monomial(ka.first, QScalar(1)),
                                      UElement::monomial(kb.first, QScalar(1)));
      UElement r = straighten_product(tower, UElement::monomial(ka.second, QScalar(1)),
                                      UElement::monomial(kb.second, QScalar(1)));
      if (l.truncated() || r.truncated()) out.mark_truncated();
      for (const auto& [ml, cl] : l.terms())
        for (const auto& [mr, cr] : r.terms()) out.add(ml, mr, coef * cl * cr);
    }
  return out;
}

UTensor coproduct_u(BlockTower& tower, const UElement& u) {
  const CartanDatum& dat = tower.datum();
  UTensor out;
  if (u.truncated()) out.mark_truncated();
  struct Branch {
    std::vector<Token> l, r;
    QScalar coef;
    int rpar; // parity of the accumulated right factor
  };
  for (const auto& [m, c] : u.terms()) {
    std::vector<Branch> branches{{{}, {}, c, 0}};
    for (const Token& t : tokens_of(m)) {
      std::vector<Branch> next;
      for (const Branch& br : branches) {
        auto push = [&](std::vector<Token> lt, std::vector<Token> rt, int lpar, int rpar) {
          Branch nb = br;
          if (lpar && br.rpar) nb.coef = -nb.coef;
          nb.l.insert(nb.l.end(), lt.begin(), lt.end());
          nb.r.insert(nb.r.end(), rt.begin(), rt.end());
          nb.rpar = (br.rpar + rpar) % 2;
          next.push_back(std::move(nb));
        };
        int p = token_parity(dat, t);
        switch (t.kind) {
          case Kind::A:
            push({t}, {}, p, 0);
            push({{Kind::K, Letter{}, t.c.i, t.c.l}}, {t}, 0, p);
            break;
          case Kind::B:
            push({t}, {{Kind::K, Letter{}, t.c.i, -t.c.l}}, p, 0);
            push({}, {t}, 0, p);
            break;
          case Kind::K:
            push({t}, {t}, 0, 0);
            break;
        }
      }
      branches = std::move(next);
    }
    for (const Branch& br : branches) {
      UElement l, r;
      raw_reduce(tower, br.l, QScalar(1), l);
      raw_reduce(tower, br.r, QScalar(1), r);
      if (l.truncated() || r.truncated()) out.mark_truncated();
      for (const auto& [ml, cl] : l.terms())
        for (const auto& [mr, cr] : r.terms()) out.add(ml, mr, br.coef * cl * cr);
    }
  }
  return out;
}

namespace {

std::string umono_str(const CartanDatum& dat, const UMono& m) {
  std::string s;
  auto append = [&s](const std::string& part) {
    if (part.empty()) return;
    if (!s.empty()) s += ' ';
    s += part;
  };
  if (!m.minus.empty()) append(word_str(dat, m.minus, 'b'));
  for (const auto& [i, e] : m.kexp) {
    if (e == 0) continue;
    std::string k = "K[" + dat.name(i) + "]";
    if (e != 1) k += "^" + std::to_string(e);
    append(k);
  }
  if (!m.plus.empty()) append(word_str(dat, m.plus, 'a'));
  if (s.empty()) s = "1";
  return s;
}

} // namespace

std::string UElement::str(const CartanDatum& dat) const {
  if (t_.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : t_) {
    if (!s.empty()) s += " + ";
    s += c.str() + " * " + umono_str(dat, m);
  }
  return s;
}

std::string UTensor::str(const CartanDatum& dat) const {
  if (t_.empty()) return "0";
  std::string s;
  for (const auto& [k, c] : t_) {
    if (!s.empty()) s += " + ";
    s += c.str() + " * (" + umono_str(dat, k.first) + ") @ (" + umono_str(dat, k.second) + ")";
  }
  return s;
}

} // namespace bozec
