#include "iwa/dynamics.hpp"

#include <chrono>
#include <stdexcept>

namespace iwa {

namespace {

long ipow(long b, int e) {
  long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

ActionContext::ActionContext(LocalRing R, SeriesRingPtr A)
    : R_(std::move(R)), A_(std::move(A)) {
  if (R_.p() != A_->p() || R_.e() != A_->e() || R_.f() != A_->f())
    throw std::invalid_argument("dynamics: local ring and series ring disagree on (p, e, f)");
  if (R_.pM() < A_->N())
    throw std::invalid_argument(
        "dynamics: precision coupling violated (need p^M >= N so that digits determine the "
        "series)");
}

TruncatedSeries ActionContext::embed(const OFElem& x) const {
  DigitVector d = R_.digits_decompose(x);
  TruncatedSeries acc = A_->one();
  for (int i = 0; i < R_.e(); ++i)
    for (int k = 0; k < R_.f(); ++k) {
      long a = d.a[i * R_.f() + k];
      if (a != 0) acc = ts_mul(acc, one_plus_pow(A_, i, k, a));
    }
  return acc;
}

FpMat ActionContext::rho_level(const FqElem& y, int level) const {
  const int e = R_.e(), f = R_.f();
  if (level < 0 || level >= e) throw std::invalid_argument("dynamics: rho level out of range");
  FpMat rep = R_.residue_field().regular_rep_matrix(y);
  FpMat out(e * f, std::vector<long>(e * f, 0));
  // X_{j,k} carries pi^j lambda^k; multiplication by y pi^level sends the
  // block Y_j into Y_{j+level} (and to zero past the top level).
  for (int j = 0; j + level < e; ++j)
    for (int k = 0; k < f; ++k)
      for (int kk = 0; kk < f; ++kk)
        out[(j + level) * f + kk][j * f + k] = rep[kk][k];
  return out;
}

FpMat ActionContext::rho_residue(const ResidueElem& xbar) const {
  const int n = R_.n();
  FpMat acc(n, std::vector<long>(n, 0));
  for (int i = 0; i < R_.e(); ++i) {
    if (R_.residue_field().is_zero(xbar.level[i])) continue;
    FpMat part = rho_level(xbar.level[i], i);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) acc[r][c] = (acc[r][c] + part[r][c]) % R_.p();
  }
  return acc;
}

TruncatedSeries ActionContext::rho_linear_form(const FpMat& rho, int i, int k) const {
  const int col = A_->var_index(i, k);
  TruncatedSeries acc = A_->zero();
  for (int row = 0; row < A_->nvars(); ++row) {
    if (rho[row][col] == 0) continue;
    auto [ri, rk] = A_->var_levels(row);
    acc = ts_add(acc, ts_scalar_mul(A_->variable(ri, rk), rho[row][col]));
  }
  return acc;
}

GammaEndomorphism ActionContext::gamma_make(int r, const OFElem& x) const {
  if (r < 1) throw std::invalid_argument("dynamics: gamma needs r >= 1");
  GammaEndomorphism g;
  g.r = r;
  g.x = x;
  // unit u = 1 + p^r x (p^r reduces mod p^M; for r >= M gamma acts trivially
  // at this precision)
  long pr = 1;
  for (int t = 0; t < r && pr < R_.pM(); ++t) pr *= R_.p();
  OFElem u = R_.add(R_.one(), R_.scalar_mul(pr % R_.pM(), x));
  for (int i = 0; i < R_.e(); ++i) {
    OFElem pip = R_.pow(R_.pi(), i);
    for (int k = 0; k < R_.f(); ++k) {
      OFElem b = R_.mul(u, R_.mul(pip, R_.teichmuller(k)));
      TruncatedSeries img = ts_sub(embed(b), A_->one());
      g.images.push_back(std::move(img));
    }
  }
  return g;
}

TruncatedSeries ActionContext::gamma_act(const GammaEndomorphism& g,
                                         const TruncatedSeries& F) const {
  return ts_substitute(F, g.images);
}

TaylorResult ActionContext::taylor_gap_check(const GammaEndomorphism& g,
                                             const TruncatedSeries& F) const {
  const int N = A_->N();
  long pr = ipow(R_.p(), g.r);
  TaylorResult out;
  out.full_strength = 2 * pr <= N;
  out.bound = static_cast<int>(std::min<long>(2 * pr, N));

  FpMat rho = rho_residue(R_.reduce_mod_p(g.x));
  TruncatedSeries correction = A_->zero();
  for (int i = 0; i < R_.e(); ++i)
    for (int k = 0; k < R_.f(); ++k) {
      TruncatedSeries dF = ts_partial(F, i, k);
      if (dF.is_zero()) continue;
      TruncatedSeries lf = rho_linear_form(rho, i, k);
      TruncatedSeries lf_pr = ts_pow(lf, pr);
      if (lf_pr.is_zero()) continue;
      TruncatedSeries one_plus = ts_add(A_->one(), A_->variable(i, k));
      correction = ts_add(correction, ts_mul(lf_pr, ts_mul(one_plus, dF)));
    }
  out.residual = ts_sub(ts_sub(gamma_act(g, F), F), correction);
  auto o = out.residual.order();
  int deg = o ? *o : N;
  out.ok = deg >= out.bound;
  return out;
}

TruncatedSeries ActionContext::u_g_series(const std::vector<long>& g, int i0) const {
  const int f = R_.f();
  const long p = R_.p();
  if (i0 < 0 || i0 >= R_.e()) throw std::invalid_argument("dynamics: level i0 out of range");
  if (static_cast<int>(g.size()) != f)
    throw std::invalid_argument("dynamics: functional g needs f coordinates");
  bool gz = true;
  for (long c : g)
    if (c % p != 0) gz = false;
  if (gz) throw std::invalid_argument("dynamics: functional g must be nonzero");

  // lines of Y_{i0}: canonical representatives w with first nonzero coord 1
  TruncatedSeries acc = A_->one();
  std::vector<long> w(f, 0);
  while (true) {
    size_t t = 0;
    while (t < w.size() && w[t] == p - 1) w[t++] = 0;
    if (t == w.size()) break;
    ++w[t];
    size_t first = 0;
    while (first < w.size() && w[first] == 0) ++first;
    if (w[first] != 1) continue;
    long gval = 0;
    for (int k = 0; k < f; ++k) gval = (gval + g[k] * w[k]) % p;
    if (gval == 0) continue;
    TruncatedSeries form = A_->zero();
    for (int k = 0; k < f; ++k)
      if (w[k] % p != 0)
        form = ts_add(form, ts_scalar_mul(A_->variable(i0, k), w[k]));
    acc = ts_mul(acc, form);
  }
  return acc;
}

TruncatedSeries ActionContext::build_P(const TruncatedSeries& F, const std::vector<long>& g,
                                       int i0, const FqElem& y) const {
  const int f = R_.f();
  const long p = R_.p();
  if (static_cast<int>(g.size()) != f)
    throw std::invalid_argument("dynamics: functional g needs f coordinates");
  bool gz = true;
  for (long c : g)
    if (c % p != 0) gz = false;
  if (gz) throw std::invalid_argument("dynamics: functional g must be nonzero");

  FpMat rho = rho_level(y, i0);
  TruncatedSeries acc = A_->zero();
  for (int k = 0; k < f; ++k) {
    // scalar (g o rho)(X_{0,k}): pair g with the column of X_{0,k}, which
    // lies in the Y_{i0} block
    long scalar = 0;
    for (int kk = 0; kk < f; ++kk)
      scalar = (scalar + g[kk] * rho[i0 * f + kk][k]) % p;
    if (scalar == 0) continue;
    TruncatedSeries dF = ts_partial(F, 0, k);
    if (dF.is_zero()) continue;
    TruncatedSeries one_plus = ts_add(A_->one(), A_->variable(0, k));
    acc = ts_add(acc, ts_scalar_mul(ts_mul(one_plus, dF), scalar));
  }
  return acc;
}

CorDeltaReport ActionContext::cor_delta_experiment(const IdealHandle& I,
                                                   const TruncatedSeries& F,
                                                   const std::vector<long>& g, int i0,
                                                   const FqElem& y, int R) const {
  if (R_.residue_field().is_zero(y))
    throw std::invalid_argument("dynamics: xbar must be nonzero");
  CorDeltaReport rep;
  TruncatedSeries ug = u_g_series(g, i0);
  TruncatedSeries P = build_P(F, g, i0, y);
  rep.u_g = to_text(ug);
  rep.P = to_text(P);

  const int N = A_->N();
  if (I.contains(ug, N) || I.contains(P, N)) {
    rep.convention_membership = true;
    rep.positive_gap_certified = true;
    return rep;
  }
  long degU = ipow(R_.p(), R_.f() - 1);
  int degP = P.order() ? *P.order() : N;
  if (ipow(R_.p(), R) * degU + degP >= N)
    throw std::invalid_argument("dynamics: precision exhausted for the requested max r");

  for (int r = 0; r <= R; ++r) {
    TruncatedSeries t = ts_mul(ts_pow(ug, ipow(R_.p(), r)), P);
    CorDeltaRow row;
    row.r = r;
    row.deg = t.order();
    row.nu = I.nu(t);
    rep.table.push_back(row);
    if (!rep.witness_r && row.nu.finite && row.deg && row.nu.k > *row.deg) rep.witness_r = r;
  }
  rep.positive_gap_certified = rep.witness_r.has_value();

  // epsilon witness: min over deeper-level variables of the certified
  // growth constants 1/(2 k0) from their own delta estimates against I.
  std::optional<std::pair<long, long>> eps;
  for (int j = i0 + 1; j < R_.e(); ++j)
    for (int k = 0; k < R_.f(); ++k) {
      int K = std::min(4, A_->N() - 1);
      DeltaReport dr = I.delta_estimate(A_->variable(j, k), A_->one(), K);
      if (dr.verdict == DeltaVerdict::InfiniteCertified && dr.epsilon) {
        if (!eps || dr.epsilon->second * eps->first > eps->second * dr.epsilon->first)
          eps = dr.epsilon;
      }
    }
  rep.epsilon_witness = eps;
  return rep;
}

ControlReport ActionContext::control_check(const IdealHandle& I) const {
  ControlReport rep;
  rep.controlled = true;
  const int d = A_->N() - 1;  // derivatives are known mod m^{N-1}
  for (const auto& gen : I.generators()) {
    std::vector<bool> row;
    for (int k = 0; k < R_.f(); ++k) {
      bool in = I.contains(ts_partial(gen, 0, k), d);
      row.push_back(in);
      if (!in) rep.controlled = false;
    }
    rep.derivative_in_ideal.push_back(std::move(row));
  }
  return rep;
}

ClosureReport ActionContext::gamma_closure(const IdealHandle& I0,
                                           const std::vector<GammaEndomorphism>& gammas,
                                           int max_rounds) const {
  auto t0 = std::chrono::steady_clock::now();
  const int N = A_->N();
  if (max_rounds <= 0) max_rounds = static_cast<int>(A_->dim_below(N)) + 1;

  ClosureReport rep;
  std::vector<TruncatedSeries> rows = I0.basis_rows(N);
  int dim = static_cast<int>(rows.size());
  std::vector<std::string> initial;
  for (const auto& r : rows) initial.push_back(to_text(r));

  for (int round = 1; round <= max_rounds; ++round) {
    std::vector<TruncatedSeries> gens = rows;
    for (const auto& g : gammas)
      for (const auto& row : rows) gens.push_back(gamma_act(g, row));
    IdealHandle next(A_, gens);
    int next_dim = next.span_dim(N);
    rep.rounds = round;
    rep.generator_counts.push_back(static_cast<int>(gens.size()));
    rep.span_dims.push_back(next_dim);
    std::vector<TruncatedSeries> next_rows = next.basis_rows(N);
    std::vector<std::string> fresh;
    for (const auto& nr : next_rows) {
      bool known = false;
      for (const auto& old : rows)
        if (old == nr) {
          known = true;
          break;
        }
      if (!known) fresh.push_back(to_text(nr));
    }
    rep.added.push_back(std::move(fresh));
    if (next_dim == dim) {
      rep.stabilized = true;
      rows = std::move(next_rows);
      break;
    }
    rows = std::move(next_rows);
    dim = next_dim;
  }
  IdealHandle final_handle(A_, rows);
  rep.open_at = final_handle.open_witness();
  rep.wall_ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
  return rep;
}

std::vector<GammaEndomorphism> ActionContext::default_gammas() const {
  std::vector<GammaEndomorphism> out;
  for (int i = 0; i < R_.e(); ++i) {
    OFElem pip = R_.pow(R_.pi(), i);
    for (int k = 0; k < R_.f(); ++k)
      out.push_back(gamma_make(1, R_.mul(pip, R_.teichmuller(k))));
  }
  return out;
}

}  // namespace iwa
