#include "bozec/characters.hpp"

#include "bozec/qcombinat.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace bozec {

namespace {

// common enumeration over supports of pairwise orthogonal imaginary simple
// roots orthogonal to lambda, one term per lattice element; the per-index
// factor distinguishes the even and odd sign rules
std::vector<CorrectionTerm> enumerate_corrections(
    const CartanDatum& dat, const std::vector<long>& lam, long depth, int want_parity,
    const std::function<long(size_t, long)>& factor) {
  if (lam.size() != dat.n()) throw std::invalid_argument("weight has wrong rank");
  std::vector<size_t> cand;
  for (size_t i = 0; i < dat.n(); ++i)
    if (dat.is_imaginary(i) && dat.parity(i) == want_parity && lam[i] == 0)
      cand.push_back(i);

  std::vector<CorrectionTerm> out;
  RootWeight cur(dat.n(), 0);
  std::vector<size_t> support;
  std::function<void(size_t, long, long)> dfs = [&](size_t p, long ht, long sign) {
    out.push_back({cur, sign});
    for (size_t t = p; t < cand.size(); ++t) {
      size_t i = cand[t];
      bool ortho = true;
      for (size_t s : support)
        if (dat.sym(i, s) != 0) ortho = false;
      if (!ortho) continue;
      support.push_back(i);
      for (long c = 1; ht + c <= depth; ++c) {
        cur[i] = c;
        dfs(t + 1, ht + c, sign * factor(i, c));
      }
      cur[i] = 0;
      support.pop_back();
    }
  };
  dfs(0, 0, 1);
  return out;
}

} // namespace

std::vector<CorrectionTerm> enumerate_E(const CartanDatum& dat,
                                        const std::vector<long>& lam, long depth) {
  std::vector<long> phi = euler_phi_coeffs(depth);
  auto factor = [&](size_t i, long c) -> long {
    // isotropic indices weight the total coefficient; others count the single
    // support position, since a repeat would pair nonzero with itself
    return dat.is_isotropic(i) ? phi[static_cast<size_t>(c)] : -1;
  };
  return enumerate_corrections(dat, lam, depth, 0, factor);
}

std::vector<CorrectionTerm> enumerate_O(const CartanDatum& dat,
                                        const std::vector<long>& lam, long depth,
                                        const OddIsoCoef& hook) {
  auto factor = [&](size_t i, long c) -> long {
    if (!dat.is_isotropic(i)) return -1;
    if (!hook) throw std::runtime_error("odd-isotropic coefficient undefined");
    RootWeight off(dat.n(), 0);
    off[i] = c;
    return hook(lam, off);
  };
  return enumerate_corrections(dat, lam, depth, 1, factor);
}

CharacterSeries::CharacterSeries(std::vector<long> anchor, long depth)
    : anchor_(std::move(anchor)), depth_(depth) {}

long CharacterSeries::at(const RootWeight& off) const {
  auto it = c_.find(off);
  return it == c_.end() ? 0 : it->second;
}

void CharacterSeries::add(const RootWeight& off, long v) {
  if (v == 0 || height(off) > depth_) return;
  long& slot = c_[off];
  slot += v;
  if (slot == 0) c_.erase(off);
}

CharacterSeries CharacterSeries::operator+(const CharacterSeries& o) const {
  if (anchor_ != o.anchor_) throw std::invalid_argument("anchor mismatch");
  CharacterSeries r = *this;
  r.depth_ = std::min(depth_, o.depth_);
  for (const auto& [off, v] : o.c_) r.add(off, v);
  return r;
}

CharacterSeries CharacterSeries::operator-(const CharacterSeries& o) const {
  if (anchor_ != o.anchor_) throw std::invalid_argument("anchor mismatch");
  CharacterSeries r = *this;
  r.depth_ = std::min(depth_, o.depth_);
  for (const auto& [off, v] : o.c_) r.add(off, -v);
  return r;
}

CharacterSeries CharacterSeries::operator*(const CharacterSeries& o) const {
  if (anchor_.size() != o.anchor_.size()) throw std::invalid_argument("rank mismatch");
  CharacterSeries r(anchor_, std::min(depth_, o.depth_));
  for (const auto& [x, vx] : c_)
    for (const auto& [y, vy] : o.c_) r.add(rw_add(x, y), vx * vy);
  return r;
}

CharacterSeries CharacterSeries::reanchored(std::vector<long> anchor) const {
  CharacterSeries r = *this;
  r.anchor_ = std::move(anchor);
  return r;
}

std::string CharacterSeries::str(const CartanDatum& dat) const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [off, v] : c_) {
    os << (first ? "" : " ") << (v < 0 ? "- " : first ? "" : "+ ");
    first = false;
    long a = v < 0 ? -v : v;
    if (a != 1) os << a << "*";
    os << "e[";
    for (size_t i = 0; i < off.size(); ++i) os << (i ? "," : "") << -off[i];
    os << "]";
  }
  if (first) os << "0";
  (void)dat;
  return os.str();
}

CharacterSeries divide(const CharacterSeries& num, const CharacterSeries& den) {
  if (num.rank() != den.rank()) throw std::invalid_argument("rank mismatch");
  RootWeight zero(num.rank(), 0);
  if (den.at(zero) != 1)
    throw std::logic_error("denominator constant term must be 1");
  long depth = std::min(num.depth(), den.depth());
  CharacterSeries q(num.anchor(), depth);

  // offsets in increasing height so every subtraction is already resolved
  std::vector<RootWeight> grid;
  RootWeight cur = zero;
  std::function<void(size_t, long)> walk = [&](size_t i, long left) {
    if (i == num.rank()) {
      grid.push_back(cur);
      return;
    }
    for (long c = 0; c <= left; ++c) {
      cur[i] = c;
      walk(i + 1, left - c);
    }
    cur[i] = 0;
  };
  walk(0, depth);
  std::sort(grid.begin(), grid.end(), [](const RootWeight& a, const RootWeight& b) {
    long ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return a < b;
  });

  for (const RootWeight& g : grid) {
    long v = num.at(g);
    for (const auto& [d, dv] : den.coeffs()) {
      if (height(d) == 0) continue;
      RootWeight rest(num.rank());
      bool ok = true;
      for (size_t i = 0; i < num.rank(); ++i) {
        rest[i] = g[i] - d[i];
        if (rest[i] < 0) ok = false;
      }
      if (ok) v -= dv * q.at(rest);
    }
    q.add(g, v);
  }
  return q;
}

CharacterSeries build_S(const CartanDatum& dat, const std::vector<long>& lam,
                        long depth, const OddIsoCoef& hook) {
  std::vector<CorrectionTerm> evens = enumerate_E(dat, lam, depth);
  std::vector<CorrectionTerm> odds = enumerate_O(dat, lam, depth, hook);
  CharacterSeries s(std::vector<long>(dat.n(), 0), depth);
  for (const CorrectionTerm& a : evens)
    for (const CorrectionTerm& b : odds) {
      if (dat.sym_root(a.total, b.total) != 0) continue;
      s.add(rw_add(a.total, b.total), a.sign * b.sign);
    }
  return s;
}

namespace {

CharacterSeries orbit_sum(const CartanDatum& dat, const std::vector<long>& lam,
                          const CharacterSeries& s, long depth) {
  std::vector<long> rho = dat.rho();
  std::vector<long> anchor(dat.n());
  for (size_t i = 0; i < dat.n(); ++i) anchor[i] = lam[i] + rho[i];
  CharacterSeries n(std::vector<long>(dat.n(), 0), depth);
  for (const OrbitPoint& op : weyl_orbit_bfs(dat, anchor, depth))
    for (const auto& [off, v] : s.coeffs()) {
      RootWeight ws = apply_word_to_root(dat, op.word, off);
      if (!rw_nonneg(ws))
        throw std::logic_error("reflected correction left the positive cone");
      n.add(rw_add(op.offset, ws), op.sign() * v);
    }
  return n;
}

} // namespace

CharacterSeries formula_character(const CartanDatum& dat,
                                  const std::vector<long>& lam, long depth,
                                  const OddIsoCoef& hook) {
  dat.require_valid();
  if (lam.size() != dat.n()) throw std::invalid_argument("weight has wrong rank");
  if (!dat.dominant_integral(lam))
    throw std::invalid_argument("weight is not dominant integral");

  CharacterSeries s_lam = build_S(dat, lam, depth, hook);
  std::vector<long> zero(dat.n(), 0);
  CharacterSeries s_zero = build_S(dat, zero, depth, hook);

  CharacterSeries numer = orbit_sum(dat, lam, s_lam, depth);
  CharacterSeries denom = orbit_sum(dat, zero, s_zero, depth);
  return divide(numer, denom).reanchored(lam);
}

} // namespace bozec
