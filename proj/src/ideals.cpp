#include "iwa/ideals.hpp"

#include <stdexcept>

namespace iwa {

namespace {

long norm_mod(long a, long p) {
  long r = a % p;
  return r < 0 ? r + p : r;
}

long scalar_inv(long a, long p) {
  long inv = 1, e = p - 2, base = norm_mod(a, p);
  while (e > 0) {
    if (e & 1) inv = norm_mod(inv * base, p);
    base = norm_mod(base * base, p);
    e >>= 1;
  }
  return inv;
}

void axpy(TermMap& v, long c, const TermMap& row, long p) {
  for (const auto& [e, rc] : row) {
    long nv = norm_mod(v[e] + c * rc, p);
    if (nv == 0)
      v.erase(e);
    else
      v[e] = nv;
  }
}

}  // namespace

const char* to_string(DeltaVerdict v) {
  switch (v) {
    case DeltaVerdict::InfiniteCertified: return "InfiniteCertified";
    case DeltaVerdict::ZeroSoFar: return "ZeroSoFar";
    case DeltaVerdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

IdealHandle::IdealHandle(SeriesRingPtr ring, std::vector<TruncatedSeries> gens)
    : ring_(std::move(ring)), gens_(std::move(gens)) {
  for (const auto& g : gens_) {
    if (!g.ring() || !g.ring()->same_spec(*ring_))
      throw std::invalid_argument("ideal: generator from a different ring context");
  }
}

TermMap IdealHandle::reduce_terms(const Rref& r, TermMap v, long p) {
  // Subtracting a row only touches monomials above its pivot, so a single
  // ascending sweep terminates.
  while (true) {
    bool changed = false;
    for (auto it = v.begin(); it != v.end(); ++it) {
      auto row = r.rows.find(it->first);
      if (row != r.rows.end()) {
        axpy(v, norm_mod(-it->second, p), row->second, p);
        changed = true;
        break;
      }
    }
    if (!changed) return v;
  }
}

void IdealHandle::insert_row(Rref& r, TermMap v, long p) {
  v = reduce_terms(r, std::move(v), p);
  if (v.empty()) return;
  // normalize pivot to 1
  const Expo pivot = v.begin()->first;
  long lead = v.begin()->second;
  if (lead != 1) {
    long inv = scalar_inv(lead, p);
    for (auto& [e, c] : v) c = norm_mod(c * inv, p);
  }
  // back-substitute into existing rows
  for (auto& [piv, row] : r.rows) {
    auto hit = row.find(pivot);
    if (hit != row.end()) axpy(row, norm_mod(-hit->second, p), v, p);
  }
  r.rows.emplace(pivot, std::move(v));
}

const IdealHandle::Rref& IdealHandle::cache(int d) const {
  if (d < 0 || d > ring_->N()) throw std::invalid_argument("ideal: cache degree out of range");
  std::lock_guard<std::mutex> lock(mu_);
  auto it = caches_.find(d);
  if (it != caches_.end()) return it->second;
  Rref r;
  const long p = ring_->p();
  for (const auto& g : gens_) {
    auto o = g.order();
    if (!o || *o >= d) continue;
    for (int deg = 0; deg < d - *o; ++deg) {
      for (const auto& mono : ring_->monomials_of_degree(deg)) {
        auto prod = ts_truncate(ts_mul(g, ring_->monomial(mono, 1)), d);
        if (!prod.is_zero()) insert_row(r, prod.terms(), p);
      }
    }
  }
  return caches_.emplace(d, std::move(r)).first->second;
}

bool IdealHandle::contains(const TruncatedSeries& x, int d) const {
  return reduce(x, d).is_zero();
}

TruncatedSeries IdealHandle::reduce(const TruncatedSeries& x, int d) const {
  if (!x.ring() || !x.ring()->same_spec(*ring_))
    throw std::invalid_argument("ideal: element from a different ring context");
  if (d < 0 || d > ring_->N()) throw std::invalid_argument("ideal: degree out of range");
  auto v = ts_truncate(x, d).terms();
  v = reduce_terms(cache(d), std::move(v), ring_->p());
  return ring_->from_terms(std::move(v));
}

NuValue IdealHandle::nu(const TruncatedSeries& x) const {
  auto r = reduce(x, ring_->N());
  if (r.is_zero()) return NuValue{false, 0};
  return NuValue{true, *r.order()};
}

bool IdealHandle::gr_member(const TruncatedSeries& h) const {
  if (!h.is_homogeneous())
    throw std::invalid_argument("ideal: gr membership needs a homogeneous element");
  if (h.is_zero()) return true;
  int d = *h.order();
  // Reduction of a degree-d form against the degree-(d+1) basis only ever
  // meets the homogeneous degree-d rows, which present the graded piece.
  return reduce(h, d + 1).is_zero();
}

RadicalResult IdealHandle::radical_member_bounded(const TruncatedSeries& h, int K) const {
  if (!h.is_homogeneous())
    throw std::invalid_argument("ideal: radical membership needs a homogeneous element");
  if (K < 1) throw std::invalid_argument("ideal: exponent bound must be >= 1");
  auto o = h.order();
  int d = o ? *o : ring_->N();
  if (d * K >= ring_->N())
    throw std::invalid_argument("ideal: exponent bound exceeds precision (deg(h)*K >= N)");
  TruncatedSeries pow = ring_->one();
  for (int k = 1; k <= K; ++k) {
    pow = ts_mul(pow, h);
    if (gr_member(pow)) return RadicalResult{true, k};
  }
  return RadicalResult{false, 0};
}

DeltaReport IdealHandle::delta_estimate(const TruncatedSeries& x, const TruncatedSeries& P,
                                        int K) const {
  DeltaReport rep;
  if (contains(x, ring_->N()) || contains(P, ring_->N())) {
    rep.verdict = DeltaVerdict::InfiniteCertified;
    rep.convention_membership = true;
    return rep;
  }
  if (K < 0) throw std::invalid_argument("ideal: iteration bound must be >= 0");
  int dx = x.order() ? *x.order() : ring_->N();
  int dP = P.order() ? *P.order() : ring_->N();
  if (dx * K + dP >= ring_->N())
    throw std::invalid_argument("ideal: precision exhausted (deg(x)*K + deg(P) >= N)");

  const Expo zero_e(ring_->nvars(), 0);
  bool p_is_one = P.terms().size() == 1 && P.coeff(zero_e) == 1;
  bool saw_at_least = false;
  TruncatedSeries xk = ring_->one();
  for (int k = 0; k <= K; ++k) {
    TruncatedSeries t = ts_mul(xk, P);
    DeltaRow row;
    row.k = k;
    row.deg = t.order();
    row.nu = nu(t);
    rep.table.push_back(row);
    if (!rep.witness_k && row.nu.finite && row.deg && row.nu.k > *row.deg)
      rep.witness_k = k;
    if (!row.nu.finite) saw_at_least = true;
    if (k < K) xk = ts_mul(xk, x);
  }
  if (rep.witness_k) {
    rep.verdict = DeltaVerdict::InfiniteCertified;
    if (p_is_one && *rep.witness_k >= 1 && dx >= 1)
      rep.epsilon = std::make_pair(1L, 2L * *rep.witness_k * dx);
  } else if (saw_at_least) {
    rep.verdict = DeltaVerdict::Inconclusive;
  } else {
    rep.verdict = DeltaVerdict::ZeroSoFar;
  }
  return rep;
}

std::optional<int> IdealHandle::open_witness() const {
  const int N = ring_->N();
  const auto& r = cache(N);
  const long p = ring_->p();
  int k = N;  // smallest degree from which every monomial downward is covered
  for (int d = N - 1; d >= 0; --d) {
    bool all_in = true;
    for (const auto& mono : ring_->monomials_of_degree(d)) {
      TermMap v;
      v.emplace(mono, 1);
      if (!reduce_terms(r, std::move(v), p).empty()) {
        all_in = false;
        break;
      }
    }
    if (!all_in) break;
    k = d;
  }
  if (k == N) return std::nullopt;
  return k;
}

int IdealHandle::span_dim(int d) const {
  return static_cast<int>(cache(d).rows.size());
}

std::vector<TruncatedSeries> IdealHandle::basis_rows(int d) const {
  std::vector<TruncatedSeries> out;
  for (const auto& [piv, row] : cache(d).rows) out.push_back(ring_->from_terms(TermMap(row)));
  return out;
}

}  // namespace iwa
