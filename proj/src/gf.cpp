#include "iwa/gf.hpp"

#include <algorithm>

namespace iwa {

namespace {

long norm_mod(long a, long p) {
  long r = a % p;
  return r < 0 ? r + p : r;
}

// Dense F_p[t] helpers on coefficient vectors, constant term first.
std::vector<long> poly_trim(std::vector<long> a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

std::vector<long> poly_mul(const std::vector<long>& a, const std::vector<long>& b, long p) {
  if (a.empty() || b.empty()) return {};
  std::vector<long> c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      c[i + j] = norm_mod(c[i + j] + a[i] * b[j], p);
  return poly_trim(std::move(c));
}

// Remainder of a by monic b.
std::vector<long> poly_rem(std::vector<long> a, const std::vector<long>& b, long p) {
  a = poly_trim(std::move(a));
  const size_t db = b.size() - 1;
  while (a.size() > db) {
    long lead = a.back();
    size_t shift = a.size() - 1 - db;
    if (lead != 0) {
      for (size_t i = 0; i <= db; ++i)
        a[shift + i] = norm_mod(a[shift + i] - lead * b[i], p);
    }
    a.pop_back();
    a = poly_trim(std::move(a));
    if (a.empty()) break;
  }
  return a;
}

bool poly_is_zero(const std::vector<long>& a) { return poly_trim(a).empty(); }

// Enumerates monic polynomials of the given degree by counter; returns false
// when exhausted.
bool next_monic(std::vector<long>& g, long p) {
  // g has degree deg = g.size()-1, leading coefficient 1; increment the tail.
  for (size_t i = 0; i + 1 < g.size(); ++i) {
    if (++g[i] < p) return true;
    g[i] = 0;
  }
  return false;
}

bool is_irreducible(const std::vector<long>& phi, long p) {
  const int f = static_cast<int>(phi.size()) - 1;
  if (f == 1) return true;
  for (int d = 1; 2 * d <= f; ++d) {
    std::vector<long> g(d + 1, 0);
    g[d] = 1;
    do {
      if (poly_is_zero(poly_rem(phi, g, p))) return false;
    } while (next_monic(g, p));
  }
  return true;
}

}  // namespace

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

Field Field::make(const FieldSpec& spec) {
  if (!is_prime(spec.p)) throw std::invalid_argument("field: p = " + std::to_string(spec.p) + " is not prime");
  if (spec.f < 1 || spec.f > 8) throw std::invalid_argument("field: f must be in [1,8]");
  if (static_cast<int>(spec.phi.size()) != spec.f + 1)
    throw std::invalid_argument("field: phi must have f+1 coefficients");
  std::vector<long> phi(spec.phi.size());
  for (size_t i = 0; i < phi.size(); ++i) phi[i] = norm_mod(spec.phi[i], spec.p);
  if (phi.back() != 1) throw std::invalid_argument("field: phi must be monic");
  if (!is_irreducible(phi, spec.p))
    throw std::invalid_argument("field: phi is reducible over F_p");

  Field F;
  F.p_ = spec.p;
  F.f_ = spec.f;
  F.phi_ = phi;
  long q = 1;
  for (int i = 0; i < spec.f; ++i) {
    q *= spec.p;
    if (q > (1L << 30)) throw std::invalid_argument("field: q too large");
  }
  F.q_ = q;
  if (spec.f == 1) {
    F.lambda_ = FqElem{{1}};  // degenerate prime-field convention
  } else {
    std::vector<long> l(spec.f, 0);
    l[1] = 1;
    F.lambda_ = FqElem{std::move(l)};
  }
  return F;
}

void Field::check_elem(const FqElem& a) const {
  if (static_cast<int>(a.c.size()) != f_)
    throw std::invalid_argument("field: element has wrong coordinate length (context mismatch)");
}

FqElem Field::zero() const { return FqElem{std::vector<long>(f_, 0)}; }

FqElem Field::one() const {
  auto e = zero();
  e.c[0] = 1;
  return e;
}

FqElem Field::lambda() const { return lambda_; }

FqElem Field::lambda_pow(int k) const {
  FqElem r = one();
  for (int i = 0; i < k; ++i) r = mul(r, lambda_);
  return r;
}

FqElem Field::elem(std::vector<long> coords) const {
  if (static_cast<int>(coords.size()) != f_)
    throw std::invalid_argument("field: element needs exactly f coordinates");
  for (auto& v : coords) v = norm_mod(v, p_);
  return FqElem{std::move(coords)};
}

FqElem Field::elem_by_index(long n) const {
  if (n < 0 || n >= q_) throw std::invalid_argument("field: element index out of range");
  std::vector<long> c(f_, 0);
  for (int i = 0; i < f_; ++i) {
    c[i] = n % p_;
    n /= p_;
  }
  return FqElem{std::move(c)};
}

long Field::index_of(const FqElem& a) const {
  check_elem(a);
  long n = 0;
  for (int i = f_ - 1; i >= 0; --i) n = n * p_ + a.c[i];
  return n;
}

bool Field::is_zero(const FqElem& a) const {
  check_elem(a);
  return std::all_of(a.c.begin(), a.c.end(), [](long v) { return v == 0; });
}

FqElem Field::add(const FqElem& a, const FqElem& b) const {
  check_elem(a);
  check_elem(b);
  FqElem r = a;
  for (int i = 0; i < f_; ++i) r.c[i] = norm_mod(r.c[i] + b.c[i], p_);
  return r;
}

FqElem Field::sub(const FqElem& a, const FqElem& b) const { return add(a, neg(b)); }

FqElem Field::neg(const FqElem& a) const {
  check_elem(a);
  FqElem r = a;
  for (auto& v : r.c) v = norm_mod(-v, p_);
  return r;
}

FqElem Field::mul(const FqElem& a, const FqElem& b) const {
  check_elem(a);
  check_elem(b);
  auto prod = poly_rem(poly_mul(a.c, b.c, p_), phi_, p_);
  prod.resize(f_, 0);
  return FqElem{std::move(prod)};
}

FqElem Field::pow(const FqElem& a, long n) const {
  FqElem base = a;
  FqElem r = one();
  while (n > 0) {
    if (n & 1) r = mul(r, base);
    base = mul(base, base);
    n >>= 1;
  }
  return r;
}

FqElem Field::inv(const FqElem& a) const {
  if (is_zero(a)) throw std::domain_error("field: inverse of zero");
  return pow(a, q_ - 2);  // Fermat; q is desk-scale
}

FpMat Field::regular_rep_matrix(const FqElem& a) const {
  check_elem(a);
  FpMat m(f_, std::vector<long>(f_, 0));
  FqElem col = a;  // a * lambda^k, built incrementally
  for (int k = 0; k < f_; ++k) {
    for (int i = 0; i < f_; ++i) m[i][k] = col.c[i];
    if (k + 1 < f_) col = mul(col, lambda_);
  }
  return m;
}

bool Field::same_spec(const Field& other) const {
  return p_ == other.p_ && f_ == other.f_ && phi_ == other.phi_;
}

}  // namespace iwa
