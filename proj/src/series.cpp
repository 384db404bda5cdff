#include "iwa/series.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "poly_text.hpp"

namespace iwa {

namespace {

long norm_mod(long a, long p) {
  long r = a % p;
  return r < 0 ? r + p : r;
}

void check_same_ring(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (!a.ring() || !b.ring()) throw std::invalid_argument("series: uninitialized operand");
  if (!a.ring()->same_spec(*b.ring()))
    throw std::invalid_argument("series: mismatched ring contexts");
}

// Binomial coefficient mod p for small arguments (n < p after base-p split).
long binom_mod(long n, long k, long p) {
  if (k < 0 || k > n) return 0;
  long num = 1, den = 1;
  for (long i = 0; i < k; ++i) {
    num = norm_mod(num * ((n - i) % p), p);
    den = norm_mod(den * ((i + 1) % p), p);
  }
  // den is a unit: k < p
  long inv = 1, e = p - 2, base = den;
  while (e > 0) {
    if (e & 1) inv = norm_mod(inv * base, p);
    base = norm_mod(base * base, p);
    e >>= 1;
  }
  return norm_mod(num * inv, p);
}

}  // namespace

int total_degree(const Expo& e) {
  int d = 0;
  for (int v : e) d += v;
  return d;
}

bool GradedLexLess::operator()(const Expo& a, const Expo& b) const {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  return a > b;  // lexicographically larger vector first within a degree
}

std::optional<int> TruncatedSeries::order() const {
  if (terms_.empty()) return std::nullopt;
  return total_degree(terms_.begin()->first);
}

TruncatedSeries TruncatedSeries::symbol() const {
  TruncatedSeries s;
  s.ring_ = ring_;
  s.prec_ = prec_;
  if (terms_.empty()) return s;
  int d = total_degree(terms_.begin()->first);
  for (const auto& [e, c] : terms_) {
    if (total_degree(e) != d) break;  // map is graded: all degree-d terms lead
    s.terms_.emplace(e, c);
  }
  return s;
}

bool TruncatedSeries::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = total_degree(terms_.begin()->first);
  return total_degree(terms_.rbegin()->first) == d;
}

long TruncatedSeries::coeff(const Expo& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? 0 : it->second;
}

TruncatedSeries ts_carry(const SeriesRingPtr& ring, TermMap t, int prec) {
  TruncatedSeries s;
  s.ring_ = ring;
  s.prec_ = prec;
  s.terms_ = std::move(t);
  return s;
}

SeriesRingPtr SeriesRing::make(long p, int e, int f, int N) {
  if (!is_prime(p)) throw std::invalid_argument("series: p must be prime");
  if (e < 1 || f < 1 || e * f > 12) throw std::invalid_argument("series: need 1 <= e*f <= 12");
  if (N < 2 || N > 64) throw std::invalid_argument("series: need 2 <= N <= 64");
  auto r = std::shared_ptr<SeriesRing>(new SeriesRing());
  r->p_ = p;
  r->e_ = e;
  r->f_ = f;
  r->N_ = N;
  return r;
}

int SeriesRing::var_index(int i, int k) const {
  if (i < 0 || i >= e_ || k < 0 || k >= f_)
    throw std::invalid_argument("series: variable index (i,k) out of range");
  return i * f_ + k;
}

std::pair<int, int> SeriesRing::var_levels(int v) const { return {v / f_, v % f_}; }

std::string SeriesRing::var_name(int v) const {
  auto [i, k] = var_levels(v);
  return "X" + std::to_string(i) + "_" + std::to_string(k);
}

TruncatedSeries SeriesRing::zero() const {
  return ts_carry(shared_from_this(), {}, N_);
}

TruncatedSeries SeriesRing::one() const { return constant(1); }

TruncatedSeries SeriesRing::constant(long c) const {
  TermMap t;
  c = norm_mod(c, p_);
  if (c != 0) t.emplace(Expo(nvars(), 0), c);
  return ts_carry(shared_from_this(), std::move(t), N_);
}

TruncatedSeries SeriesRing::variable(int i, int k) const {
  Expo e(nvars(), 0);
  e[var_index(i, k)] = 1;
  return monomial(e, 1);
}

TruncatedSeries SeriesRing::monomial(const Expo& e, long c) const {
  if (static_cast<int>(e.size()) != nvars())
    throw std::invalid_argument("series: exponent vector has wrong length");
  TermMap t;
  c = norm_mod(c, p_);
  if (c != 0 && total_degree(e) < N_) t.emplace(e, c);
  return ts_carry(shared_from_this(), std::move(t), N_);
}

TruncatedSeries SeriesRing::from_terms(TermMap raw) const {
  TermMap t;
  for (auto& [e, c] : raw) {
    if (static_cast<int>(e.size()) != nvars())
      throw std::invalid_argument("series: exponent vector has wrong length");
    long v = norm_mod(c, p_);
    if (v != 0 && total_degree(e) < N_) t.emplace(e, v);
  }
  return ts_carry(shared_from_this(), std::move(t), N_);
}

long SeriesRing::dim_below(int d) const {
  long total = 0;
  for (int deg = 0; deg < d; ++deg) total += static_cast<long>(monomials_of_degree(deg).size());
  return total;
}

std::vector<Expo> SeriesRing::monomials_of_degree(int d) const {
  std::vector<Expo> out;
  Expo cur(nvars(), 0);
  // enumerate exponent vectors of total degree d, then sort canonically
  std::function<void(int, int)> rec = [&](int v, int rem) {
    if (v == nvars() - 1) {
      cur[v] = rem;
      out.push_back(cur);
      return;
    }
    for (int t = 0; t <= rem; ++t) {
      cur[v] = t;
      rec(v + 1, rem - t);
    }
    cur[v] = 0;
  };
  if (nvars() == 0) return out;
  rec(0, d);
  std::sort(out.begin(), out.end(), GradedLexLess{});
  return out;
}

bool SeriesRing::same_spec(const SeriesRing& o) const {
  return p_ == o.p_ && e_ == o.e_ && f_ == o.f_ && N_ == o.N_;
}

TruncatedSeries ts_add(const TruncatedSeries& a, const TruncatedSeries& b) {
  check_same_ring(a, b);
  const long p = a.ring()->p();
  TermMap t = a.terms();
  for (const auto& [e, c] : b.terms()) {
    long v = norm_mod(t[e] + c, p);
    if (v == 0)
      t.erase(e);
    else
      t[e] = v;
  }
  return ts_carry(a.ring(), std::move(t), std::min(a.precision(), b.precision()));
}

TruncatedSeries ts_neg(const TruncatedSeries& a) { return ts_scalar_mul(a, -1); }

TruncatedSeries ts_sub(const TruncatedSeries& a, const TruncatedSeries& b) {
  return ts_add(a, ts_neg(b));
}

TruncatedSeries ts_scalar_mul(const TruncatedSeries& a, long c) {
  const long p = a.ring()->p();
  c = norm_mod(c, p);
  TermMap t;
  if (c != 0)
    for (const auto& [e, v] : a.terms()) t.emplace(e, norm_mod(v * c, p));
  return ts_carry(a.ring(), std::move(t), a.precision());
}

namespace {

int effective_deg(const TruncatedSeries& a) {
  auto o = a.order();
  return o ? *o : a.ring()->N();
}

}  // namespace

TruncatedSeries ts_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  check_same_ring(a, b);
  const long p = a.ring()->p();
  const int N = a.ring()->N();
  TermMap t;
  for (const auto& [ea, ca] : a.terms()) {
    const int da = total_degree(ea);
    for (const auto& [eb, cb] : b.terms()) {
      if (da + total_degree(eb) >= N) continue;
      Expo e(ea.size());
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      long v = norm_mod(t[e] + ca * cb, p);
      if (v == 0)
        t.erase(e);
      else
        t[e] = v;
    }
  }
  // unknown tails: tail(a)*b lives in m^{prec_a + deg b}, symmetrically for b
  int prec = std::min({N, a.precision() + effective_deg(b), b.precision() + effective_deg(a)});
  return ts_carry(a.ring(), std::move(t), prec);
}

TruncatedSeries ts_truncate(const TruncatedSeries& a, int d) {
  if (d < 0 || d > a.ring()->N()) throw std::invalid_argument("series: truncation degree out of range");
  TermMap t;
  for (const auto& [e, c] : a.terms())
    if (total_degree(e) < d) t.emplace(e, c);
  return ts_carry(a.ring(), std::move(t), a.precision());
}

TruncatedSeries ts_pow(const TruncatedSeries& a, long n) {
  if (n < 0) throw std::invalid_argument("series: negative power");
  TruncatedSeries r = a.ring()->one();
  TruncatedSeries base = a;
  while (n > 0) {
    if (n & 1) r = ts_mul(r, base);
    base = ts_mul(base, base);
    n >>= 1;
  }
  return r;
}

TruncatedSeries ts_inverse(const TruncatedSeries& a) {
  const auto& ring = a.ring();
  Expo zero_e(ring->nvars(), 0);
  long c0 = a.coeff(zero_e);
  if (c0 == 0) throw std::domain_error("series: inverse of a non-unit (zero constant term)");
  // a = c0 (1 - u) with u in m; invert by the geometric series, which
  // terminates below degree N.
  long p = ring->p();
  long c0inv = 1;
  {
    long e = p - 2, base = norm_mod(c0, p);
    while (e > 0) {
      if (e & 1) c0inv = norm_mod(c0inv * base, p);
      base = norm_mod(base * base, p);
      e >>= 1;
    }
  }
  TruncatedSeries u = ts_sub(ring->one(), ts_scalar_mul(a, c0inv));
  TruncatedSeries acc = ring->one();
  TruncatedSeries powu = ring->one();
  for (int i = 1; i < ring->N(); ++i) {
    powu = ts_mul(powu, u);
    if (powu.is_zero()) break;
    acc = ts_add(acc, powu);
  }
  return ts_scalar_mul(acc, c0inv);
}

TruncatedSeries ts_partial(const TruncatedSeries& a, int i, int k) {
  const auto& ring = a.ring();
  const int v = ring->var_index(i, k);
  const long p = ring->p();
  TermMap t;
  for (const auto& [e, c] : a.terms()) {
    if (e[v] == 0) continue;
    long nc = norm_mod(c * (e[v] % p), p);
    if (nc == 0) continue;
    Expo ne = e;
    ne[v] -= 1;
    t.emplace(std::move(ne), nc);
  }
  return ts_carry(ring, std::move(t), std::max(0, a.precision() - 1));
}

TruncatedSeries ts_substitute(const TruncatedSeries& a,
                              const std::vector<TruncatedSeries>& images) {
  const auto& ring = a.ring();
  if (static_cast<int>(images.size()) != ring->nvars())
    throw std::invalid_argument("series: substitution needs one image per variable");
  Expo zero_e(ring->nvars(), 0);
  int img_prec = ring->N();
  for (const auto& im : images) {
    check_same_ring(a, im);
    if (im.coeff(zero_e) != 0)
      throw std::invalid_argument("series: substitution image has nonzero constant term");
    img_prec = std::min(img_prec, im.precision());
  }
  // per-variable power cache
  std::vector<std::vector<TruncatedSeries>> pows(images.size());
  auto power = [&](int v, int n) -> const TruncatedSeries& {
    auto& cache = pows[v];
    if (cache.empty()) cache.push_back(ring->one());
    while (static_cast<int>(cache.size()) <= n)
      cache.push_back(ts_mul(cache.back(), images[v]));
    return cache[n];
  };
  TruncatedSeries acc = ring->zero();
  for (const auto& [e, c] : a.terms()) {
    TruncatedSeries term = ring->constant(c);
    for (size_t v = 0; v < e.size(); ++v)
      if (e[v] > 0) term = ts_mul(term, power(static_cast<int>(v), e[v]));
    acc = ts_add(acc, term);
  }
  return ts_carry(ring, acc.terms(), std::min(a.precision(), img_prec));
}

TruncatedSeries one_plus_pow(const SeriesRingPtr& ring, int i, int k, long a) {
  if (a < 0) throw std::invalid_argument("series: exponent must be nonnegative");
  const long p = ring->p();
  const int v = ring->var_index(i, k);
  TruncatedSeries acc = ring->one();
  long pj = 1;  // p^j
  while (a > 0 && pj < ring->N()) {
    long digit = a % p;
    a /= p;
    if (digit != 0) {
      // (1 + X^{p^j})^digit expanded by binomials; digit < p
      TermMap t;
      for (long s = 0; s <= digit; ++s) {
        if (s * pj >= ring->N()) break;
        Expo e(ring->nvars(), 0);
        e[v] = static_cast<int>(s * pj);
        long c = binom_mod(digit, s, p);
        if (c != 0) t.emplace(std::move(e), c);
      }
      acc = ts_mul(acc, ring->from_terms(std::move(t)));
    }
    pj *= p;
  }
  return acc;
}

TruncatedSeries parse_series(const SeriesRingPtr& ring, const std::string& text) {
  auto var_index = [&](const std::string& name) -> int {
    // X<i>_<k>
    if (name.size() < 4 || name[0] != 'X')
      throw std::invalid_argument("series: unknown variable '" + name + "'");
    auto us = name.find('_');
    if (us == std::string::npos || us < 2 || us + 1 >= name.size())
      throw std::invalid_argument("series: unknown variable '" + name + "'");
    int i, k;
    try {
      i = std::stoi(name.substr(1, us - 1));
      k = std::stoi(name.substr(us + 1));
    } catch (const std::exception&) {
      throw std::invalid_argument("series: unknown variable '" + name + "'");
    }
    return ring->var_index(i, k);
  };
  auto parsed = detail::parse_poly_text(text, var_index);
  TermMap t;
  const long p = ring->p();
  for (const auto& term : parsed) {
    Expo e(ring->nvars(), 0);
    bool overflow = false;
    for (auto [v, exp] : term.varpows) {
      e[v] += exp;
      if (e[v] >= 4 * ring->N()) overflow = true;  // clamp; truncated anyway
    }
    if (overflow || total_degree(e) >= ring->N()) continue;
    long c = norm_mod(t[e] + term.coeff, p);
    if (c == 0)
      t.erase(e);
    else
      t[e] = c;
  }
  return ring->from_terms(std::move(t));
}

std::string to_text(const TruncatedSeries& a) {
  if (a.is_zero()) return "0";
  const auto& ring = a.ring();
  std::string out;
  for (const auto& [e, c] : a.terms()) {
    if (!out.empty()) out += " + ";
    std::string mono;
    for (size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += ring->var_name(static_cast<int>(v));
      if (e[v] > 1) mono += "^" + std::to_string(e[v]);
    }
    if (mono.empty()) {
      out += std::to_string(c);
    } else if (c == 1) {
      out += mono;
    } else {
      out += std::to_string(c) + "*" + mono;
    }
  }
  return out;
}

}  // namespace iwa
