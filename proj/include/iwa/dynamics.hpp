#pragma once

// Group-theoretic layer: the embedding of the group into the truncated
// ring, the rho-action of the residue ring on the variable space, the
// endomorphisms coming from diagonal conjugation, first-order Taylor gap
// checks, the key corollary element P, derivation-stability (control), and
// the closure experiment under a finite set of endomorphisms.

#include <optional>
#include <string>
#include <vector>

#include "iwa/ideals.hpp"
#include "iwa/padic.hpp"
#include "iwa/series.hpp"

namespace iwa {

/// gamma = diag(1 + p^r x, 1) acting by conjugation; images are the
/// computed gamma(X_{i,k}), each with zero constant term.
struct GammaEndomorphism {
  int r = 1;
  OFElem x;
  std::vector<TruncatedSeries> images;
};

struct TaylorResult {
  TruncatedSeries residual;
  int bound = 0;            // min(2 p^r, N): the testable part of 2 p^r
  bool full_strength = false;  // 2 p^r <= N, so the bound is the real one
  bool ok = false;          // deg(residual) >= bound
};

struct CorDeltaRow {
  int r = 0;
  std::optional<int> deg;
  NuValue nu;
};

struct CorDeltaReport {
  std::string u_g;  // canonical literal
  std::string P;
  std::vector<CorDeltaRow> table;
  bool positive_gap_certified = false;
  std::optional<int> witness_r;
  /// min over certified per-variable witnesses 1/(2 k0 deg) on deeper levels
  std::optional<std::pair<long, long>> epsilon_witness;
  /// U_g or P lay in the span: certified by the membership convention
  bool convention_membership = false;
};

struct ControlReport {
  std::vector<std::vector<bool>> derivative_in_ideal;  // [generator][k]
  bool controlled = false;
};

struct ClosureReport {
  int rounds = 0;
  bool stabilized = false;
  std::vector<int> generator_counts;            // inputs per round
  std::vector<int> span_dims;                   // degree-N span dim per round
  std::vector<std::vector<std::string>> added;  // new reduced rows per round
  std::optional<int> open_at;
  double wall_ms = 0.0;
};

class ActionContext {
 public:
  /// Couples a local ring and a series ring; requires matching (p, e, f)
  /// and p^M >= N, so that digits mod p^M determine series mod m^N.
  ActionContext(LocalRing R, SeriesRingPtr A);

  const LocalRing& local() const { return R_; }
  const SeriesRingPtr& series() const { return A_; }

  /// Image of the group element with coordinate x: the product of
  /// (1 + X_{i,k})^{a_{i,k}} over the digits a of x. Additive-to-
  /// multiplicative: embed(x+y) = embed(x) embed(y).
  TruncatedSeries embed(const OFElem& x) const;

  /// Matrix on V = span(X_{i,k}) of multiplication by y*pi^level in the
  /// residue ring, transported through X_{j,k} <-> pi^j [lambda^k].
  FpMat rho_level(const FqElem& y, int level) const;
  FpMat rho_residue(const ResidueElem& xbar) const;
  /// Column (i,k) of the matrix as a linear form in the variables.
  TruncatedSeries rho_linear_form(const FpMat& rho, int i, int k) const;

  GammaEndomorphism gamma_make(int r, const OFElem& x) const;
  TruncatedSeries gamma_act(const GammaEndomorphism& g, const TruncatedSeries& F) const;

  /// residual = gamma(F) - F - sum rho(xbar)(X_{i,k})^{p^r} (1+X_{i,k}) dF/dX_{i,k};
  /// xbar is recomputed from gamma's own x. ok means deg(residual) >= min(2p^r, N).
  TaylorResult taylor_gap_check(const GammaEndomorphism& g, const TruncatedSeries& F) const;

  /// Product of one representative per line of Y_{i0} off ker(g), as a
  /// series in the X_{i0,k}; homogeneous of degree p^{f-1}.
  TruncatedSeries u_g_series(const std::vector<long>& g, int i0) const;

  /// P = sum_k (g o rho(y pi^{i0}))(X_{0,k}) (1 + X_{0,k}) dF/dX_{0,k}.
  TruncatedSeries build_P(const TruncatedSeries& F, const std::vector<long>& g, int i0,
                          const FqElem& y) const;

  CorDeltaReport cor_delta_experiment(const IdealHandle& I, const TruncatedSeries& F,
                                      const std::vector<long>& g, int i0, const FqElem& y,
                                      int R) const;

  /// Stability of the ideal under d/dX_{0,k} for all k, checked at degree
  /// N-1 (derivatives lose one order of precision).
  ControlReport control_check(const IdealHandle& I) const;

  /// Iteratively replaces I by I + sum gamma(I) until the degree-N span
  /// stabilizes; spans grow in a finite lattice so this terminates.
  ClosureReport gamma_closure(const IdealHandle& I0,
                              const std::vector<GammaEndomorphism>& gammas,
                              int max_rounds = 0) const;

  /// The gamma set {gamma(r=1, x = pi^i [lambda^k]) : all (i,k)}.
  std::vector<GammaEndomorphism> default_gammas() const;

 private:
  LocalRing R_;
  SeriesRingPtr A_;
};

}  // namespace iwa
