#include "iwa/padic.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "iwa/fp_linalg.hpp"

namespace iwa {

namespace {

long norm_mod(long a, long mod) {
  long r = a % mod;
  return r < 0 ? r + mod : r;
}

}  // namespace

// W = (Z/p^M)[t]/(phi~): dense coefficient vectors of length f.
std::vector<long> LocalRing::wmul(const std::vector<long>& a, const std::vector<long>& b) const {
  const int f = F_.f();
  std::vector<long> c(2 * f - 1, 0);
  for (int i = 0; i < f; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < f; ++j) c[i + j] = norm_mod(c[i + j] + a[i] * b[j], pM_);
  }
  // fold down by monic phi~: t^f = -(phi_{f-1} t^{f-1} + ... + phi_0)
  for (int d = 2 * f - 2; d >= f; --d) {
    long lead = c[d];
    if (lead == 0) continue;
    c[d] = 0;
    for (int i = 0; i < f; ++i)
      c[d - f + i] = norm_mod(c[d - f + i] - lead * phi_lift_[i], pM_);
  }
  c.resize(f);
  return c;
}

std::vector<long> LocalRing::wneg(const std::vector<long>& a) const {
  std::vector<long> r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = norm_mod(-a[i], pM_);
  return r;
}

LocalRing LocalRing::make(const LocalFieldSpec& spec) {
  LocalRing R;
  R.F_ = Field::make(spec.base);
  const long p = R.F_.p();
  const int f = R.F_.f();
  if (spec.e < 1 || spec.e > 8) throw std::invalid_argument("padic: e must be in [1,8]");
  if (spec.M < 1) throw std::invalid_argument("padic: M must be positive");
  R.e_ = spec.e;
  R.M_ = spec.M;
  long pM = 1;
  for (int i = 0; i < spec.M; ++i) {
    pM *= p;
    if (pM > (1L << 40)) throw std::invalid_argument("padic: p^M too large");
  }
  R.pM_ = pM;
  if (static_cast<int>(spec.eis.size()) != spec.e + 1)
    throw std::invalid_argument("padic: eisenstein polynomial needs e+1 coefficients");

  // Eisenstein conditions are checked on the supplied integers: every
  // non-leading coefficient is divisible by p, the constant term is not
  // divisible by p^2, and the polynomial is monic.
  for (const auto& coeff : spec.eis)
    if (static_cast<int>(coeff.size()) != f)
      throw std::invalid_argument("padic: each eisenstein coefficient needs f coordinates");
  {
    const auto& lead = spec.eis.back();
    bool monic = norm_mod(lead[0], pM) == 1;
    for (int k = 1; k < f; ++k) monic = monic && norm_mod(lead[k], pM) == 0;
    if (!monic) throw std::invalid_argument("padic: eisenstein polynomial must be monic");
  }
  for (int j = 0; j + 1 < static_cast<int>(spec.eis.size()); ++j)
    for (int k = 0; k < f; ++k)
      if (norm_mod(spec.eis[j][k], p) != 0)
        throw std::invalid_argument(
            "padic: eisenstein coefficient " + std::to_string(j) + " not divisible by p");
  {
    bool all_p2 = true;
    for (int k = 0; k < f; ++k)
      if (norm_mod(spec.eis[0][k], p * p) != 0) all_p2 = false;
    if (all_p2)
      throw std::invalid_argument("padic: eisenstein constant term divisible by p^2");
  }

  R.eis_.resize(spec.eis.size());
  for (size_t j = 0; j < spec.eis.size(); ++j) {
    R.eis_[j].resize(f);
    for (int k = 0; k < f; ++k) R.eis_[j][k] = norm_mod(spec.eis[j][k], pM);
  }
  R.phi_lift_.resize(f + 1);
  for (int i = 0; i <= f; ++i) R.phi_lift_[i] = norm_mod(R.F_.phi()[i], pM);

  // Teichmuller cache and change-of-basis matrix.
  const int n = R.n();
  for (int k = 0; k < f; ++k) {
    std::vector<long> coords(n, 0);
    FqElem lk = R.F_.lambda_pow(k);
    for (int t = 0; t < f; ++t) coords[t] = lk.c[t];  // level i = 0
    R.teich_.push_back(R.teichmuller_fixpoint(OFElem{std::move(coords)}));
  }
  FpMat B(n, std::vector<long>(n, 0));
  OFElem piw = R.pi();
  for (int i = 0; i < R.e_; ++i) {
    OFElem pipow = R.one();
    for (int t = 0; t < i; ++t) pipow = R.mul(pipow, piw);
    for (int k = 0; k < f; ++k) {
      OFElem col = R.mul(pipow, R.teich_[k]);
      for (int row = 0; row < n; ++row) B[row][i * f + k] = col.c[row];
    }
  }
  R.B_ = B;
  R.Binv_ = mat_inverse_unit_pivot(B, pM, p);  // internal error if singular
  return R;
}

void LocalRing::check_elem(const OFElem& a) const {
  if (static_cast<int>(a.c.size()) != n())
    throw std::invalid_argument("padic: element has wrong coordinate length (context mismatch)");
}

OFElem LocalRing::zero() const { return OFElem{std::vector<long>(n(), 0)}; }

OFElem LocalRing::one() const {
  auto x = zero();
  x.c[0] = 1;
  return x;
}

OFElem LocalRing::pi() const {
  if (e_ >= 2) {
    auto x = zero();
    x.c[F_.f()] = 1;  // level 1, k = 0
    return x;
  }
  // e = 1: pi is already reduced by E, pi = -E_0
  auto x = zero();
  for (int k = 0; k < F_.f(); ++k) x.c[k] = norm_mod(-eis_[0][k], pM_);
  return x;
}

OFElem LocalRing::from_coords(std::vector<long> coords) const {
  if (static_cast<int>(coords.size()) != n())
    throw std::invalid_argument("padic: element needs e*f coordinates");
  for (auto& v : coords) v = norm_mod(v, pM_);
  return OFElem{std::move(coords)};
}

OFElem LocalRing::scalar(long c) const {
  auto x = zero();
  x.c[0] = norm_mod(c, pM_);
  return x;
}

OFElem LocalRing::add(const OFElem& a, const OFElem& b) const {
  check_elem(a);
  check_elem(b);
  OFElem r = a;
  for (int i = 0; i < n(); ++i) r.c[i] = norm_mod(r.c[i] + b.c[i], pM_);
  return r;
}

OFElem LocalRing::sub(const OFElem& a, const OFElem& b) const { return add(a, neg(b)); }

OFElem LocalRing::neg(const OFElem& a) const {
  check_elem(a);
  OFElem r = a;
  for (auto& v : r.c) v = norm_mod(-v, pM_);
  return r;
}

OFElem LocalRing::mul(const OFElem& a, const OFElem& b) const {
  check_elem(a);
  check_elem(b);
  const int f = F_.f();
  // pi-polynomials with W coefficients; convolve, then divide by monic E.
  std::vector<std::vector<long>> prod(2 * e_ - 1, std::vector<long>(f, 0));
  for (int i = 0; i < e_; ++i) {
    std::vector<long> ai(a.c.begin() + i * f, a.c.begin() + (i + 1) * f);
    bool zero_ai = std::all_of(ai.begin(), ai.end(), [](long v) { return v == 0; });
    if (zero_ai) continue;
    for (int j = 0; j < e_; ++j) {
      std::vector<long> bj(b.c.begin() + j * f, b.c.begin() + (j + 1) * f);
      auto t = wmul(ai, bj);
      for (int k = 0; k < f; ++k) prod[i + j][k] = norm_mod(prod[i + j][k] + t[k], pM_);
    }
  }
  for (int d = 2 * e_ - 2; d >= e_; --d) {
    auto lead = prod[d];
    bool zero_lead = std::all_of(lead.begin(), lead.end(), [](long v) { return v == 0; });
    if (zero_lead) continue;
    prod[d].assign(f, 0);
    for (int i = 0; i < e_; ++i) {
      auto t = wmul(lead, eis_[i]);
      for (int k = 0; k < f; ++k)
        prod[d - e_ + i][k] = norm_mod(prod[d - e_ + i][k] - t[k], pM_);
    }
  }
  OFElem r = zero();
  for (int i = 0; i < e_; ++i)
    for (int k = 0; k < f; ++k) r.c[i * f + k] = prod[i][k];
  return r;
}

OFElem LocalRing::scalar_mul(long c, const OFElem& a) const {
  check_elem(a);
  c = norm_mod(c, pM_);
  OFElem r = a;
  for (auto& v : r.c) v = norm_mod(v * c, pM_);
  return r;
}

OFElem LocalRing::pow(const OFElem& a, long nexp) const {
  OFElem r = one();
  OFElem base = a;
  while (nexp > 0) {
    if (nexp & 1) r = mul(r, base);
    base = mul(base, base);
    nexp >>= 1;
  }
  return r;
}

bool LocalRing::is_zero(const OFElem& a) const {
  check_elem(a);
  return std::all_of(a.c.begin(), a.c.end(), [](long v) { return v == 0; });
}

OFElem LocalRing::teichmuller_fixpoint(const OFElem& x) const {
  OFElem y = x;
  for (int it = 0; it < M_ + 1; ++it) {
    OFElem z = pow(y, F_.q());
    if (z == y) break;
    y = z;
  }
  return y;
}

OFElem LocalRing::teichmuller(int k) const {
  if (k < 0 || k >= F_.f()) throw std::invalid_argument("padic: teichmuller index out of range");
  return teich_[k];
}

DigitVector LocalRing::digits_decompose(const OFElem& x) const {
  check_elem(x);
  return DigitVector{mat_apply(Binv_, x.c, pM_)};
}

OFElem LocalRing::digits_compose(const DigitVector& a) const {
  if (static_cast<int>(a.a.size()) != n())
    throw std::invalid_argument("padic: digit vector needs e*f entries");
  std::vector<long> d(a.a);
  for (auto& v : d) v = norm_mod(v, pM_);
  return OFElem{mat_apply(B_, d, pM_)};
}

ResidueElem LocalRing::reduce_mod_p(const OFElem& x) const {
  check_elem(x);
  const int f = F_.f();
  ResidueElem r;
  for (int i = 0; i < e_; ++i) {
    std::vector<long> c(f);
    for (int k = 0; k < f; ++k) c[k] = norm_mod(x.c[i * f + k], p());
    r.level.push_back(F_.elem(std::move(c)));
  }
  return r;
}

ResidueElem LocalRing::residue_from_level(const FqElem& y, int level) const {
  if (level < 0 || level >= e_) throw std::invalid_argument("padic: residue level out of range");
  ResidueElem r;
  for (int i = 0; i < e_; ++i) r.level.push_back(i == level ? y : F_.zero());
  return r;
}

ResidueElem LocalRing::res_add(const ResidueElem& a, const ResidueElem& b) const {
  ResidueElem r;
  for (int i = 0; i < e_; ++i) r.level.push_back(F_.add(a.level[i], b.level[i]));
  return r;
}

ResidueElem LocalRing::res_mul(const ResidueElem& a, const ResidueElem& b) const {
  // F_q[pi]/(pi^e): convolution truncated at pi^e
  ResidueElem r;
  for (int i = 0; i < e_; ++i) r.level.push_back(F_.zero());
  for (int i = 0; i < e_; ++i)
    for (int j = 0; i + j < e_; ++j)
      r.level[i + j] = F_.add(r.level[i + j], F_.mul(a.level[i], b.level[j]));
  return r;
}

bool LocalRing::res_is_zero(const ResidueElem& a) const {
  return std::all_of(a.level.begin(), a.level.end(),
                     [&](const FqElem& y) { return F_.is_zero(y); });
}

ResidueElem LocalRing::residue_by_index(long idx) const {
  ResidueElem r;
  for (int i = 0; i < e_; ++i) {
    r.level.push_back(F_.elem_by_index(idx % F_.q()));
    idx /= F_.q();
  }
  return r;
}

bool LocalRing::same_spec(const LocalRing& o) const {
  return F_.same_spec(o.F_) && e_ == o.e_ && M_ == o.M_ && eis_ == o.eis_;
}

std::string digits_to_text(const LocalRing& R, const DigitVector& d) {
  std::string out;
  for (int i = 0; i < R.e(); ++i) {
    if (i) out += ";";
    for (int k = 0; k < R.f(); ++k) {
      if (k) out += ",";
      out += std::to_string(d.a[i * R.f() + k]);
    }
  }
  return out;
}

DigitVector digits_from_text(const LocalRing& R, const std::string& text) {
  std::vector<long> vals;
  std::stringstream rows(text);
  std::string row;
  int nrows = 0;
  while (std::getline(rows, row, ';')) {
    ++nrows;
    std::stringstream cols(row);
    std::string cell;
    int ncols = 0;
    while (std::getline(cols, cell, ',')) {
      ++ncols;
      try {
        vals.push_back(std::stol(cell));
      } catch (const std::exception&) {
        throw std::invalid_argument("padic: bad digit literal '" + cell + "'");
      }
    }
    if (ncols != R.f())
      throw std::invalid_argument("padic: digit literal row needs f entries");
  }
  if (nrows != R.e()) throw std::invalid_argument("padic: digit literal needs e rows");
  return DigitVector{std::move(vals)};
}

}  // namespace iwa
