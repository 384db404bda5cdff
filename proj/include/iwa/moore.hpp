#pragma once

// Exact (untruncated) sparse polynomials over F_p and the Moore-matrix
// toolkit: determinants, comatrices, projective-line products, minor
// degree estimates, and the power-combination certificates expressing a
// functional times a twisted product as a span of Frobenius powers.

#include <optional>
#include <string>
#include <vector>

#include "iwa/series.hpp"  // Expo / TermMap / GradedLexLess

namespace iwa {

/// Untruncated sparse polynomial over F_p in a fixed number of variables.
struct ExactPoly {
  long p = 0;
  int nvars = 0;
  TermMap terms;

  bool is_zero() const { return terms.empty(); }
  std::optional<int> min_degree() const;  // nullopt for zero
  int max_degree() const;                 // 0 for zero
  bool is_homogeneous() const;
  bool operator==(const ExactPoly& o) const { return terms == o.terms; }
};

struct ExactOptions {
  int max_degree = 512;  // hard budget; exceeding it throws
};

ExactPoly ep_zero(long p, int nvars);
ExactPoly ep_const(long p, int nvars, long c);
ExactPoly ep_monomial(long p, const Expo& e, long c);
ExactPoly ep_add(const ExactPoly& a, const ExactPoly& b);
ExactPoly ep_sub(const ExactPoly& a, const ExactPoly& b);
ExactPoly ep_scalar_mul(const ExactPoly& a, long c);
ExactPoly ep_mul(const ExactPoly& a, const ExactPoly& b, const ExactOptions& opt = {});
ExactPoly ep_pow(const ExactPoly& a, long n, const ExactOptions& opt = {});
/// Exact division; nullopt when b does not divide a.
std::optional<ExactPoly> ep_div_exact(const ExactPoly& a, const ExactPoly& b,
                                      const ExactOptions& opt = {});

/// Linear form sum c_v x_v from a coefficient vector.
ExactPoly ep_linear_form(long p, const std::vector<long>& coeffs);
/// Coefficient vector of a degree-<=1 form with no constant; throws otherwise.
std::vector<long> ep_form_coeffs(const ExactPoly& a);

// Literal grammar over variables "w1".."wm" (1-based).
ExactPoly parse_exact(long p, int nvars, const std::string& text);
std::string to_text_exact(const ExactPoly& a);

/// Moore matrix: entry (r,j) = w_j^{p^{r-1}}, 1 <= r,j <= m.
struct MooreMatrix {
  std::vector<std::vector<ExactPoly>> entry;
};

MooreMatrix moore_matrix(const std::vector<ExactPoly>& forms, const ExactOptions& opt = {});

/// Determinant of the Moore matrix of independent linear forms; homogeneous
/// of degree 1 + p + ... + p^{m-1}. Throws std::domain_error on dependent
/// forms.
ExactPoly moore_det(const std::vector<ExactPoly>& forms, const ExactOptions& opt = {});

struct CramerCheck {
  std::vector<std::vector<ExactPoly>> com;  // (i,j) entry = (-1)^{i+j} det C_{ji}
  ExactPoly det;
  bool ok = false;  // M * Com == det * Id, entrywise
};
CramerCheck comatrix_cramer_check(const std::vector<ExactPoly>& forms,
                                  const ExactOptions& opt = {});

/// Canonical representative of the line through v: scaled so the first
/// nonzero coordinate is 1.
std::vector<long> canonical_line(long p, std::vector<long> v);
/// All lines of F_p^m, canonical representatives, deterministic order.
std::vector<std::vector<long>> all_lines(long p, int m);
/// Product of the canonical representatives of a set of lines.
ExactPoly projective_product(long p, int nvars,
                             const std::vector<std::vector<long>>& points,
                             const ExactOptions& opt = {});
/// Product over the lines l of the span of `basis` with g(l) != 0, where g
/// is a functional given on the ambient space.
ExactPoly twisted_line_product(long p, int nvars,
                               const std::vector<std::vector<long>>& basis,
                               const std::vector<long>& g,
                               const ExactOptions& opt = {});

struct EstimationCheck {
  ExactPoly quotient;
  int bound = 0;  // p^{m-1} - p^{row-1}
  bool ok = false;
};
/// Divides det C_{row,col} by det M(w_1,...,^w_col,...,w_m) (1-based
/// indices) and checks the quotient against the minor degree bound.
/// Non-exact division is reported by throwing (it would contradict the
/// divisibility theorem for Moore minors).
EstimationCheck lemma_estimation_check(const std::vector<ExactPoly>& forms, int row, int col,
                                       const ExactOptions& opt = {});

struct UfCertificate {
  int m = 0;                           // dim of the image space
  std::vector<ExactPoly> coefficients; // c_j, j = 1..m
  std::vector<int> bounds;             // p^s (p^{m-1} - p^{j-1})
  std::vector<long> lambdas;           // recovered scalars
  ExactPoly line_product;              // U_g on the image space
  bool bounds_ok = false;
  bool identity_ok = false;            // all rows, on every basis vector
};

/// Certificate for U_g^{p^s} * (g o varphi) = sum_j c_j * varphi^{p^{s+j-1}}
/// with deg-bounded coefficients. varphi is given by its images (linear
/// forms in the ambient variables), g as a functional on the ambient space
/// whose restriction to the image is nonzero.
UfCertificate prop_uf_certificate(long p, int nvars,
                                  const std::vector<ExactPoly>& varphi_images,
                                  const std::vector<long>& g, int s,
                                  const ExactOptions& opt = {});

}  // namespace iwa
