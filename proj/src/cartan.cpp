#include "bozec/cartan.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

namespace bozec {

long height(const RootWeight& b) {
  long h = 0;
  for (long v : b) h += v;
  return h;
}

RootWeight rw_add(const RootWeight& a, const RootWeight& b) {
  RootWeight r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

bool rw_leq(const RootWeight& a, const RootWeight& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

bool rw_nonneg(const RootWeight& a) {
  return std::all_of(a.begin(), a.end(), [](long v) { return v >= 0; });
}

CartanDatum::CartanDatum(std::vector<IndexInfo> idx, std::vector<std::vector<long>> a)
    : idx_(std::move(idx)), a_(std::move(a)) {}

ValidationReport CartanDatum::validate() const {
  ValidationReport rep;
  auto fail = [&rep](const std::string& m) { rep.errors.push_back(m); };
  size_t m = idx_.size();
  if (m == 0) fail("empty index set");
  if (a_.size() != m) fail("cartan matrix row count does not match index count");
  for (size_t i = 0; i < a_.size(); ++i)
    if (a_[i].size() != m) {
      std::ostringstream os;
      os << "cartan row " << i << " has wrong length";
      fail(os.str());
    }
  if (!rep.errors.empty()) return rep;

  for (size_t i = 0; i < m; ++i) {
    if (idx_[i].d <= 0) fail("symmetrizer entry for " + idx_[i].name + " must be positive");
    if (idx_[i].parity != 0 && idx_[i].parity != 1)
      fail("parity for " + idx_[i].name + " must be 0 or 1");
    if (idx_[i].bozec_bound && *idx_[i].bozec_bound < 1)
      fail("level bound for " + idx_[i].name + " must be at least 1");
    long aii = a_[i][i];
    if (!(aii == 2 || (aii <= 0 && aii % 2 == 0)))
      fail("diagonal entry for " + idx_[i].name + " must be 2 or a nonpositive even integer");
    for (size_t j = 0; j < m; ++j) {
      if (i != j && a_[i][j] > 0)
        fail("off-diagonal entry (" + idx_[i].name + "," + idx_[j].name + ") must be <= 0");
      if (idx_[i].d * a_[i][j] != idx_[j].d * a_[j][i])
        fail("DA is not symmetric at (" + idx_[i].name + "," + idx_[j].name + ")");
      if (idx_[i].parity == 1 && a_[i][j] % 2 != 0)
        fail("odd index " + idx_[i].name + " requires even row entries");
    }
  }
  rep.bar_consistent = true;
  for (size_t i = 0; i < m; ++i)
    if (((idx_[i].d % 2) + 2) % 2 != idx_[i].parity) rep.bar_consistent = false;
  rep.ok = rep.errors.empty();
  return rep;
}

void CartanDatum::require_valid() const {
  auto rep = validate();
  if (rep.ok) return;
  std::string msg = "invalid datum:";
  for (const auto& e : rep.errors) msg += "\n  " + e;
  throw std::invalid_argument(msg);
}

long CartanDatum::level_cap(size_t i, long bound) const {
  if (is_real(i)) return 1;
  long cap = bound;
  if (idx_[i].bozec_bound) cap = std::min(cap, *idx_[i].bozec_bound);
  return std::max<long>(cap, 0);
}

long CartanDatum::sym_root(const RootWeight& b, const RootWeight& g) const {
  long s = 0;
  for (size_t i = 0; i < n(); ++i) {
    if (b[i] == 0) continue;
    for (size_t j = 0; j < n(); ++j) s += b[i] * g[j] * sym(i, j);
  }
  return s;
}

long CartanDatum::coroot_on_root(size_t i, const RootWeight& b) const {
  long s = 0;
  for (size_t j = 0; j < n(); ++j) s += a_[i][j] * b[j];
  return s;
}

long CartanDatum::sym_weight_root(const std::vector<long>& coroot,
                                  const RootWeight& b) const {
  long s = 0;
  for (size_t j = 0; j < n(); ++j) s += b[j] * idx_[j].d * coroot[j];
  return s;
}

std::vector<long> CartanDatum::rho() const {
  std::vector<long> r(n());
  for (size_t i = 0; i < n(); ++i) r[i] = a_[i][i] / 2;
  return r;
}

long CartanDatum::two_rho_pairing(const RootWeight& b) const {
  long s = 0;
  for (size_t i = 0; i < n(); ++i) s += b[i] * sym(i, i);
  return s;
}

bool CartanDatum::dominant_integral(const std::vector<long>& coroot) const {
  for (size_t i = 0; i < n(); ++i) {
    if (coroot[i] < 0) return false;
    if (is_real(i) && parity(i) == 1 && coroot[i] % 2 != 0) return false;
  }
  return true;
}

Weight reflect(const CartanDatum& dat, size_t i, const Weight& w) {
  Weight r = w;
  long ci = w.coroot[i];
  for (size_t j = 0; j < dat.n(); ++j) r.coroot[j] -= ci * dat.a(j, i);
  r.offset[i] += ci;
  return r;
}

RootWeight reflect_root(const CartanDatum& dat, size_t i, const RootWeight& b) {
  RootWeight r = b;
  r[i] -= dat.coroot_on_root(i, b);
  return r;
}

RootWeight apply_word_to_root(const CartanDatum& dat, const std::vector<size_t>& word,
                              const RootWeight& b) {
  RootWeight r = b;
  for (size_t i : word) r = reflect_root(dat, i, r);
  return r;
}

std::vector<OrbitPoint> weyl_orbit_bfs(const CartanDatum& dat,
                                       const std::vector<long>& anchor_coroot,
                                       long depth) {
  std::vector<size_t> reals;
  for (size_t i = 0; i < dat.n(); ++i)
    if (dat.is_real(i)) reals.push_back(i);

  std::vector<OrbitPoint> out;
  std::set<RootWeight> seen;
  std::deque<std::pair<Weight, std::vector<size_t>>> queue;
  Weight start{anchor_coroot, RootWeight(dat.n(), 0)};
  queue.push_back({start, {}});
  seen.insert(start.offset);
  out.push_back({start.offset, {}});

  while (!queue.empty()) {
    auto [w, word] = queue.front();
    queue.pop_front();
    for (size_t i : reals) {
      Weight nw = reflect(dat, i, w);
      if (!rw_nonneg(nw.offset) || height(nw.offset) > depth) continue;
      if (seen.count(nw.offset)) continue;
      seen.insert(nw.offset);
      auto nword = word;
      nword.push_back(i);
      out.push_back({nw.offset, nword});
      queue.push_back({nw, nword});
    }
  }
  std::sort(out.begin(), out.end(), [](const OrbitPoint& a, const OrbitPoint& b) {
    long ha = height(a.offset), hb = height(b.offset);
    if (ha != hb) return ha < hb;
    return a.offset < b.offset;
  });
  return out;
}

} // namespace bozec
