#pragma once

// The truncated power-series ring A_N = F_p[X_{i,k}] / m^N in n = e*f
// variables: sparse canonical storage, order/symbol queries, inversion,
// formal derivations and substitution endomorphisms.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace iwa {

using Expo = std::vector<int>;

int total_degree(const Expo& e);

/// Graded-lexicographic order: lower total degree first; within a degree,
/// the exponent vector that is lexicographically larger (earlier variables
/// weigh more) comes first. This single order fixes canonical term output
/// and all row-reduction pivots.
struct GradedLexLess {
  bool operator()(const Expo& a, const Expo& b) const;
};

using TermMap = std::map<Expo, long, GradedLexLess>;

class SeriesRing;
using SeriesRingPtr = std::shared_ptr<const SeriesRing>;

class TruncatedSeries {
 public:
  TruncatedSeries() = default;

  const SeriesRingPtr& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Known modulo m^precision; N for freshly constructed values, lowered by
  /// derivations.
  int precision() const { return prec_; }

  /// Minimal total degree of a stored term; nullopt means ">= N"
  /// (the zero representative).
  std::optional<int> order() const;

  /// Sum of the minimal-degree terms (gr(x)); zero for zero.
  TruncatedSeries symbol() const;

  bool is_homogeneous() const;
  long coeff(const Expo& e) const;

  /// Value equality (term sets); precision metadata is not compared.
  bool operator==(const TruncatedSeries& o) const { return terms_ == o.terms_; }

 private:
  friend class SeriesRing;
  friend TruncatedSeries ts_carry(const SeriesRingPtr&, TermMap, int);

  SeriesRingPtr ring_;
  TermMap terms_;
  int prec_ = 0;
};

class SeriesRing : public std::enable_shared_from_this<SeriesRing> {
 public:
  static SeriesRingPtr make(long p, int e, int f, int N);

  long p() const { return p_; }
  int e() const { return e_; }
  int f() const { return f_; }
  int N() const { return N_; }
  int nvars() const { return e_ * f_; }

  int var_index(int i, int k) const;
  std::pair<int, int> var_levels(int v) const;  // (i, k)
  std::string var_name(int v) const;

  TruncatedSeries zero() const;
  TruncatedSeries one() const;
  TruncatedSeries constant(long c) const;
  TruncatedSeries variable(int i, int k) const;
  TruncatedSeries monomial(const Expo& e, long c) const;
  TruncatedSeries from_terms(TermMap t) const;  // reduces and truncates

  /// Number of monomials of total degree < d.
  long dim_below(int d) const;
  /// All monomials of total degree exactly d, in canonical order.
  std::vector<Expo> monomials_of_degree(int d) const;

  bool same_spec(const SeriesRing& o) const;

 private:
  SeriesRing() = default;
  long p_ = 0;
  int e_ = 0, f_ = 0, N_ = 0;
};

// Arithmetic. Operands must come from rings with equal parameters.
TruncatedSeries ts_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries ts_sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries ts_neg(const TruncatedSeries& a);
TruncatedSeries ts_scalar_mul(const TruncatedSeries& a, long c);
TruncatedSeries ts_mul(const TruncatedSeries& a, const TruncatedSeries& b);
/// Product truncated at degree d (below the ring's N) — the image in A/m^d.
TruncatedSeries ts_truncate(const TruncatedSeries& a, int d);
TruncatedSeries ts_pow(const TruncatedSeries& a, long n);

/// Inverse of a unit (nonzero constant term); throws std::domain_error
/// otherwise.
TruncatedSeries ts_inverse(const TruncatedSeries& a);

/// Formal partial derivative d/dX_{i,k}. Result precision drops by one:
/// a series known mod m^N has derivative known mod m^{N-1}.
TruncatedSeries ts_partial(const TruncatedSeries& a, int i, int k);

/// Substitution X_v -> images[v]; every image must have zero constant term.
TruncatedSeries ts_substitute(const TruncatedSeries& a,
                              const std::vector<TruncatedSeries>& images);

/// (1 + X_{i,k})^a via the base-p expansion of a >= 0, using
/// (1+X)^{p^j} = 1 + X^{p^j} in characteristic p.
TruncatedSeries one_plus_pow(const SeriesRingPtr& ring, int i, int k, long a);

// Literal grammar: term sums over "X<i>_<k>" with '+', '-', '*', '^' and
// integer coefficients, e.g. "X0_0^2*X1_0 + X0_1".
TruncatedSeries parse_series(const SeriesRingPtr& ring, const std::string& text);
std::string to_text(const TruncatedSeries& a);

}  // namespace iwa
