#pragma once

// Degreewise linear-algebra calculus for finitely generated ideals of the
// truncated ring: membership, the nu function, associated-graded membership,
// bounded radical tests, delta estimation and the openness criterion.

#include <map>
#include <mutex>
#include <optional>
#include <vector>

#include "iwa/series.hpp"

namespace iwa {

/// Largest k with x in (ideal + m^k), capped by the truncation order.
/// finite == false means the element lies in the degree-N span of the ideal
/// itself ("at least precision" — never silently conflated with infinity).
struct NuValue {
  bool finite = true;
  int k = 0;

  bool operator==(const NuValue&) const = default;
};

enum class DeltaVerdict { InfiniteCertified, ZeroSoFar, Inconclusive };

const char* to_string(DeltaVerdict v);

struct DeltaRow {
  int k = 0;
  std::optional<int> deg;  // nullopt = ">= N"
  NuValue nu;
};

struct DeltaReport {
  std::vector<DeltaRow> table;
  DeltaVerdict verdict = DeltaVerdict::ZeroSoFar;
  std::optional<int> witness_k;  // first k with a certified positive gap
  /// Growth certificate epsilon = 1/(2 k0 deg x), reported for P = 1.
  std::optional<std::pair<long, long>> epsilon;
  /// x or P lay in the degree-N span; verdict is the membership convention.
  bool convention_membership = false;
};

struct RadicalResult {
  bool member = false;
  int witness = 0;  // exponent k with gr(h^k) in the graded ideal
};

class IdealHandle {
 public:
  IdealHandle(SeriesRingPtr ring, std::vector<TruncatedSeries> gens);

  const SeriesRingPtr& ring() const { return ring_; }
  const std::vector<TruncatedSeries>& generators() const { return gens_; }

  /// Membership of x mod m^d in the image of the ideal in A/m^d.
  bool contains(const TruncatedSeries& x, int d) const;

  /// Canonical residual of x after reduction by the degree-d basis.
  TruncatedSeries reduce(const TruncatedSeries& x, int d) const;

  NuValue nu(const TruncatedSeries& x) const;

  /// h homogeneous: membership in the corresponding graded piece of the
  /// associated graded ideal. Throws on non-homogeneous input.
  bool gr_member(const TruncatedSeries& h) const;

  /// Bounded-exponent radical surrogate; requires deg(h)*K < N.
  /// member == false only means "not at exponents <= K".
  RadicalResult radical_member_bounded(const TruncatedSeries& h, int K) const;

  DeltaReport delta_estimate(const TruncatedSeries& x, const TruncatedSeries& P,
                             int K) const;

  /// Smallest k with m^k contained in the degree-N span, if any.
  std::optional<int> open_witness() const;

  /// Dimension of the degree-d cache (row count).
  int span_dim(int d) const;
  /// The reduced basis rows of the degree-d cache, as series.
  std::vector<TruncatedSeries> basis_rows(int d) const;

 private:
  // Reduced row echelon form with rows keyed by pivot monomial; pivots are
  // the graded-lex-smallest monomials, so reduction pushes residuals upward
  // in degree and nu(x) can be read off the residual order.
  struct Rref {
    std::map<Expo, TermMap, GradedLexLess> rows;
  };

  const Rref& cache(int d) const;
  static TermMap reduce_terms(const Rref& r, TermMap v, long p);
  static void insert_row(Rref& r, TermMap v, long p);

  SeriesRingPtr ring_;
  std::vector<TruncatedSeries> gens_;
  mutable std::mutex mu_;
  mutable std::map<int, Rref> caches_;
};

}  // namespace iwa
