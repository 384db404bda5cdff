#include "iwa/moore.hpp"

#include <algorithm>
#include <stdexcept>

#include "iwa/fp_linalg.hpp"
#include "poly_text.hpp"

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

void check_compat(const ExactPoly& a, const ExactPoly& b) {
  if (a.p != b.p || a.nvars != b.nvars)
    throw std::invalid_argument("exact poly: mismatched contexts");
}

long ipow(long b, int e) {
  long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

std::optional<int> ExactPoly::min_degree() const {
  if (terms.empty()) return std::nullopt;
  return total_degree(terms.begin()->first);
}

int ExactPoly::max_degree() const {
  if (terms.empty()) return 0;
  return total_degree(terms.rbegin()->first);
}

bool ExactPoly::is_homogeneous() const {
  if (terms.empty()) return true;
  return total_degree(terms.begin()->first) == total_degree(terms.rbegin()->first);
}

ExactPoly ep_zero(long p, int nvars) { return ExactPoly{p, nvars, {}}; }

ExactPoly ep_const(long p, int nvars, long c) {
  ExactPoly r{p, nvars, {}};
  c = norm_mod(c, p);
  if (c != 0) r.terms.emplace(Expo(nvars, 0), c);
  return r;
}

ExactPoly ep_monomial(long p, const Expo& e, long c) {
  ExactPoly r{p, static_cast<int>(e.size()), {}};
  c = norm_mod(c, p);
  if (c != 0) r.terms.emplace(e, c);
  return r;
}

ExactPoly ep_add(const ExactPoly& a, const ExactPoly& b) {
  check_compat(a, b);
  ExactPoly r = a;
  for (const auto& [e, c] : b.terms) {
    long v = norm_mod(r.terms[e] + c, a.p);
    if (v == 0)
      r.terms.erase(e);
    else
      r.terms[e] = v;
  }
  return r;
}

ExactPoly ep_scalar_mul(const ExactPoly& a, long c) {
  ExactPoly r{a.p, a.nvars, {}};
  c = norm_mod(c, a.p);
  if (c != 0)
    for (const auto& [e, v] : a.terms) r.terms.emplace(e, norm_mod(v * c, a.p));
  return r;
}

ExactPoly ep_sub(const ExactPoly& a, const ExactPoly& b) {
  return ep_add(a, ep_scalar_mul(b, -1));
}

ExactPoly ep_mul(const ExactPoly& a, const ExactPoly& b, const ExactOptions& opt) {
  check_compat(a, b);
  if (!a.terms.empty() && !b.terms.empty() &&
      a.max_degree() + b.max_degree() > opt.max_degree)
    throw std::runtime_error("exact poly: degree budget exceeded");
  ExactPoly r{a.p, a.nvars, {}};
  for (const auto& [ea, ca] : a.terms)
    for (const auto& [eb, cb] : b.terms) {
      Expo e(ea.size());
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      long v = norm_mod(r.terms[e] + ca * cb, a.p);
      if (v == 0)
        r.terms.erase(e);
      else
        r.terms[e] = v;
    }
  return r;
}

ExactPoly ep_pow(const ExactPoly& a, long n, const ExactOptions& opt) {
  if (n < 0) throw std::invalid_argument("exact poly: negative power");
  ExactPoly r = ep_const(a.p, a.nvars, 1);
  ExactPoly base = a;
  while (n > 0) {
    if (n & 1) r = ep_mul(r, base, opt);
    base = (n >>= 1) > 0 ? ep_mul(base, base, opt) : base;
  }
  return r;
}

std::optional<ExactPoly> ep_div_exact(const ExactPoly& a, const ExactPoly& b,
                                      const ExactOptions& opt) {
  check_compat(a, b);
  if (b.is_zero()) throw std::domain_error("exact poly: division by zero");
  ExactPoly q = ep_zero(a.p, a.nvars);
  ExactPoly r = a;
  // Single-divisor exact division: cancel the graded-lex leading term each
  // step; over a domain, exact divisibility guarantees the leading term of
  // the remainder stays divisible.
  const auto& blead = *b.terms.rbegin();
  while (!r.is_zero()) {
    const auto& rlead = *r.terms.rbegin();
    Expo e(rlead.first.size());
    for (size_t i = 0; i < e.size(); ++i) {
      int d = rlead.first[i] - blead.first[i];
      if (d < 0) return std::nullopt;
      e[i] = d;
    }
    long c = norm_mod(rlead.second * scalar_inv(blead.second, a.p), a.p);
    ExactPoly t = ep_monomial(a.p, e, c);
    q = ep_add(q, t);
    r = ep_sub(r, ep_mul(t, b, opt));
  }
  return q;
}

ExactPoly ep_linear_form(long p, const std::vector<long>& coeffs) {
  ExactPoly r{p, static_cast<int>(coeffs.size()), {}};
  for (size_t v = 0; v < coeffs.size(); ++v) {
    long c = norm_mod(coeffs[v], p);
    if (c == 0) continue;
    Expo e(coeffs.size(), 0);
    e[v] = 1;
    r.terms.emplace(std::move(e), c);
  }
  return r;
}

std::vector<long> ep_form_coeffs(const ExactPoly& a) {
  std::vector<long> out(a.nvars, 0);
  for (const auto& [e, c] : a.terms) {
    if (total_degree(e) != 1)
      throw std::invalid_argument("exact poly: expected a homogeneous linear form");
    for (int v = 0; v < a.nvars; ++v)
      if (e[v] == 1) out[v] = c;
  }
  return out;
}

ExactPoly parse_exact(long p, int nvars, const std::string& text) {
  auto var_index = [&](const std::string& name) -> int {
    if (name.size() < 2 || name[0] != 'w')
      throw std::invalid_argument("exact poly: unknown variable '" + name + "'");
    int j;
    try {
      j = std::stoi(name.substr(1));
    } catch (const std::exception&) {
      throw std::invalid_argument("exact poly: unknown variable '" + name + "'");
    }
    if (j < 1 || j > nvars)
      throw std::invalid_argument("exact poly: variable index out of range in '" + name + "'");
    return j - 1;
  };
  auto parsed = detail::parse_poly_text(text, var_index);
  ExactPoly r = ep_zero(p, nvars);
  for (const auto& term : parsed) {
    Expo e(nvars, 0);
    for (auto [v, exp] : term.varpows) e[v] += exp;
    r = ep_add(r, ep_monomial(p, e, term.coeff));
  }
  return r;
}

std::string to_text_exact(const ExactPoly& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : a.terms) {
    if (!out.empty()) out += " + ";
    std::string mono;
    for (int v = 0; v < a.nvars; ++v) {
      if (e[v] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "w" + std::to_string(v + 1);
      if (e[v] > 1) mono += "^" + std::to_string(e[v]);
    }
    if (mono.empty())
      out += std::to_string(c);
    else if (c == 1)
      out += mono;
    else
      out += std::to_string(c) + "*" + mono;
  }
  return out;
}

namespace {

void check_forms(const std::vector<ExactPoly>& forms) {
  if (forms.empty()) throw std::invalid_argument("moore: need at least one form");
  for (const auto& w : forms) {
    if (w.p != forms[0].p || w.nvars != forms[0].nvars)
      throw std::invalid_argument("moore: mismatched contexts");
    (void)ep_form_coeffs(w);  // throws unless a linear form
  }
  FpMat m;
  for (const auto& w : forms) m.push_back(ep_form_coeffs(w));
  if (mat_rank(m, forms[0].p) != static_cast<int>(forms.size()))
    throw std::domain_error("moore: forms are linearly dependent");
}

ExactPoly det_recursive(const std::vector<std::vector<ExactPoly>>& m, std::vector<int> cols,
                        int row, long p, int nvars, const ExactOptions& opt) {
  if (cols.empty()) return ep_const(p, nvars, 1);
  ExactPoly acc = ep_zero(p, nvars);
  for (size_t t = 0; t < cols.size(); ++t) {
    std::vector<int> rest;
    for (size_t u = 0; u < cols.size(); ++u)
      if (u != t) rest.push_back(cols[u]);
    ExactPoly minor = det_recursive(m, rest, row + 1, p, nvars, opt);
    ExactPoly contrib = ep_mul(m[row][cols[t]], minor, opt);
    if (t % 2 == 1) contrib = ep_scalar_mul(contrib, -1);
    acc = ep_add(acc, contrib);
  }
  return acc;
}

ExactPoly matrix_det(const std::vector<std::vector<ExactPoly>>& m, long p, int nvars,
                     const ExactOptions& opt) {
  std::vector<int> cols(m.size());
  for (size_t i = 0; i < m.size(); ++i) cols[i] = static_cast<int>(i);
  return det_recursive(m, cols, 0, p, nvars, opt);
}

std::vector<std::vector<ExactPoly>> minor_matrix(const std::vector<std::vector<ExactPoly>>& m,
                                                 int drop_row, int drop_col) {
  std::vector<std::vector<ExactPoly>> out;
  for (int r = 0; r < static_cast<int>(m.size()); ++r) {
    if (r == drop_row) continue;
    std::vector<ExactPoly> row;
    for (int c = 0; c < static_cast<int>(m.size()); ++c) {
      if (c == drop_col) continue;
      row.push_back(m[r][c]);
    }
    out.push_back(std::move(row));
  }
  return out;
}

// Vandermonde-type matrix on base entries forms[j]^{p^s}: entry (r,j) is
// forms[j]^{p^{s+r}}, r = 0..m-1.
MooreMatrix moore_matrix_shift(const std::vector<ExactPoly>& forms, int s,
                               const ExactOptions& opt) {
  check_forms(forms);
  const long p = forms[0].p;
  const int m = static_cast<int>(forms.size());
  MooreMatrix M;
  M.entry.resize(m);
  for (int r = 0; r < m; ++r) {
    for (int j = 0; j < m; ++j)
      M.entry[r].push_back(ep_pow(forms[j], ipow(p, s + r), opt));
  }
  return M;
}

}  // namespace

MooreMatrix moore_matrix(const std::vector<ExactPoly>& forms, const ExactOptions& opt) {
  return moore_matrix_shift(forms, 0, opt);
}

ExactPoly moore_det(const std::vector<ExactPoly>& forms, const ExactOptions& opt) {
  auto M = moore_matrix(forms, opt);
  auto d = matrix_det(M.entry, forms[0].p, forms[0].nvars, opt);
  if (d.is_zero())
    throw std::domain_error("moore: determinant vanished on allegedly independent forms");
  return d;
}

CramerCheck comatrix_cramer_check(const std::vector<ExactPoly>& forms, const ExactOptions& opt) {
  auto M = moore_matrix(forms, opt);
  const long p = forms[0].p;
  const int nv = forms[0].nvars;
  const int m = static_cast<int>(forms.size());
  CramerCheck out;
  out.det = matrix_det(M.entry, p, nv, opt);
  out.com.assign(m, std::vector<ExactPoly>(m, ep_zero(p, nv)));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      // (i,j) entry is (-1)^{i+j} det C_{ji}: delete row j, column i.
      ExactPoly d = matrix_det(minor_matrix(M.entry, j, i), p, nv, opt);
      if ((i + j) % 2 == 1) d = ep_scalar_mul(d, -1);
      out.com[i][j] = d;
    }
  out.ok = true;
  for (int i = 0; i < m && out.ok; ++i)
    for (int j = 0; j < m && out.ok; ++j) {
      ExactPoly acc = ep_zero(p, nv);
      for (int t = 0; t < m; ++t) acc = ep_add(acc, ep_mul(M.entry[i][t], out.com[t][j], opt));
      const ExactPoly expect = (i == j) ? out.det : ep_zero(p, nv);
      if (!(acc == expect)) out.ok = false;
    }
  return out;
}

std::vector<long> canonical_line(long p, std::vector<long> v) {
  for (auto& x : v) x = norm_mod(x, p);
  size_t first = v.size();
  for (size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) {
      first = i;
      break;
    }
  if (first == v.size()) throw std::invalid_argument("moore: zero vector does not span a line");
  long inv = scalar_inv(v[first], p);
  for (auto& x : v) x = norm_mod(x * inv, p);
  return v;
}

std::vector<std::vector<long>> all_lines(long p, int m) {
  // Canonical representatives: first nonzero coordinate equals 1.
  std::vector<std::vector<long>> out;
  std::vector<long> v(m, 0);
  while (true) {
    size_t i = 0;
    while (i < v.size() && v[i] == p - 1) v[i++] = 0;
    if (i == v.size()) break;
    ++v[i];
    std::vector<long> c = v;
    size_t first = 0;
    while (first < c.size() && c[first] == 0) ++first;
    if (c[first] == 1) out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

ExactPoly projective_product(long p, int nvars,
                             const std::vector<std::vector<long>>& points,
                             const ExactOptions& opt) {
  std::vector<std::vector<long>> reps;
  for (const auto& v : points) reps.push_back(canonical_line(p, v));
  std::sort(reps.begin(), reps.end());
  reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
  ExactPoly acc = ep_const(p, nvars, 1);
  for (const auto& r : reps) acc = ep_mul(acc, ep_linear_form(p, r), opt);
  return acc;
}

ExactPoly twisted_line_product(long p, int nvars,
                               const std::vector<std::vector<long>>& basis,
                               const std::vector<long>& g, const ExactOptions& opt) {
  const int m = static_cast<int>(basis.size());
  ExactPoly acc = ep_const(p, nvars, 1);
  for (const auto& coeffs : all_lines(p, m)) {
    // point = sum coeffs[j] * basis[j] in the ambient space
    std::vector<long> pt(nvars, 0);
    for (int j = 0; j < m; ++j)
      for (int v = 0; v < nvars; ++v) pt[v] = norm_mod(pt[v] + coeffs[j] * basis[j][v], p);
    long gval = 0;
    for (int v = 0; v < nvars; ++v) gval = norm_mod(gval + g[v] * pt[v], p);
    if (gval == 0) continue;
    acc = ep_mul(acc, ep_linear_form(p, canonical_line(p, pt)), opt);
  }
  return acc;
}

EstimationCheck lemma_estimation_check(const std::vector<ExactPoly>& forms, int row, int col,
                                       const ExactOptions& opt) {
  check_forms(forms);
  const int m = static_cast<int>(forms.size());
  if (m < 2) throw std::invalid_argument("moore: estimation needs m >= 2");
  if (row < 1 || row > m || col < 1 || col > m)
    throw std::invalid_argument("moore: row/col out of range (1-based)");
  const long p = forms[0].p;
  const int nv = forms[0].nvars;
  auto M = moore_matrix(forms, opt);
  ExactPoly numer = matrix_det(minor_matrix(M.entry, row - 1, col - 1), p, nv, opt);
  std::vector<ExactPoly> rest;
  for (int j = 0; j < m; ++j)
    if (j != col - 1) rest.push_back(forms[j]);
  ExactPoly denom = matrix_det(moore_matrix(rest, opt).entry, p, nv, opt);
  auto q = ep_div_exact(numer, denom, opt);
  if (!q)
    throw std::runtime_error(
        "moore: minor not divisible by the smaller Moore determinant (theory violated)");
  EstimationCheck out;
  out.quotient = *q;
  out.bound = static_cast<int>(ipow(p, m - 1) - ipow(p, row - 1));
  auto mindeg = out.quotient.min_degree();
  out.ok = !mindeg ? true : *mindeg >= out.bound;
  return out;
}

UfCertificate prop_uf_certificate(long p, int nvars,
                                  const std::vector<ExactPoly>& varphi_images,
                                  const std::vector<long>& g, int s,
                                  const ExactOptions& opt) {
  if (varphi_images.empty()) throw std::invalid_argument("moore: varphi needs at least one image");
  if (static_cast<int>(g.size()) != nvars)
    throw std::invalid_argument("moore: g needs one coordinate per ambient variable");
  if (s < 0) throw std::invalid_argument("moore: s must be >= 0");
  for (const auto& im : varphi_images)
    if (im.p != p || im.nvars != nvars)
      throw std::invalid_argument("moore: mismatched contexts");

  // Image space V_2: column space of the varphi images.
  std::vector<std::vector<long>> img_vecs;
  for (const auto& im : varphi_images) img_vecs.push_back(ep_form_coeffs(im));
  std::vector<std::vector<long>> basis;  // greedy independent subset
  for (const auto& v : img_vecs) {
    auto trial = basis;
    trial.push_back(v);
    if (mat_rank(trial, p) == static_cast<int>(trial.size())) basis = trial;
  }
  const int m = static_cast<int>(basis.size());
  if (m == 0) throw std::invalid_argument("moore: varphi has zero image");

  // Restriction of g to V_2 in the chosen basis; must be nonzero.
  std::vector<long> g_res(m, 0);
  for (int j = 0; j < m; ++j) {
    long acc = 0;
    for (int v = 0; v < nvars; ++v) acc += g[v] * basis[j][v];
    g_res[j] = norm_mod(acc, p);
  }
  if (std::all_of(g_res.begin(), g_res.end(), [](long v) { return v == 0; }))
    throw std::invalid_argument("moore: g vanishes on the image of varphi");

  // Complete f_1 = g|V2 to a basis of V_2^*; rows of Fmat are the f_j in
  // B-coordinates. Dual basis w_j = B * Fmat^{-1} e_j.
  FpMat Fmat{g_res};
  for (int j = 0; j < m && static_cast<int>(Fmat.size()) < m; ++j) {
    std::vector<long> cand(m, 0);
    cand[j] = 1;
    auto trial = Fmat;
    trial.push_back(cand);
    if (mat_rank(trial, p) == static_cast<int>(trial.size())) Fmat = trial;
  }
  FpMat Finv = mat_inverse_unit_pivot(Fmat, p, p);
  std::vector<std::vector<long>> w(m, std::vector<long>(nvars, 0));  // dual basis, ambient coords
  for (int j = 0; j < m; ++j)
    for (int v = 0; v < nvars; ++v) {
      long acc = 0;
      for (int t = 0; t < m; ++t) acc += basis[t][v] * Finv[t][j];
      w[j][v] = norm_mod(acc, p);
    }

  const long ps = ipow(p, s);
  std::vector<ExactPoly> w_forms;  // the dual basis as linear forms
  for (int j = 0; j < m; ++j) w_forms.push_back(ep_linear_form(p, w[j]));
  auto Ms = moore_matrix_shift(w_forms, s, opt);
  ExactPoly detMs = matrix_det(Ms.entry, p, nvars, opt);
  if (detMs.is_zero()) throw std::runtime_error("moore: degenerate dual basis");

  UfCertificate cert;
  cert.m = m;
  // Delta_j: product of the lines of V_2 outside ker f_j; f_j on ambient
  // points is recovered through B-coordinates, so enumerate V_2 by its basis.
  std::vector<ExactPoly> delta(m, ep_zero(p, nvars));
  for (int j = 0; j < m; ++j) {
    ExactPoly acc = ep_const(p, nvars, 1);
    for (const auto& coeffs : all_lines(p, m)) {
      long fj = 0;
      for (int t = 0; t < m; ++t) fj = norm_mod(fj + Fmat[j][t] * coeffs[t], p);
      if (fj == 0) continue;
      std::vector<long> pt(nvars, 0);
      for (int t = 0; t < m; ++t)
        for (int v = 0; v < nvars; ++v) pt[v] = norm_mod(pt[v] + coeffs[t] * basis[t][v], p);
      acc = ep_mul(acc, ep_linear_form(p, canonical_line(p, pt)), opt);
    }
    delta[j] = acc;
  }
  cert.line_product = delta[0];

  // Scalars lambda_j from Delta_j^{p^s} = lambda_j det(Ms) / det(Ms without j).
  std::vector<ExactPoly> denom(m, ep_zero(p, nvars));
  for (int j = 0; j < m; ++j) {
    std::vector<ExactPoly> rest;
    for (int t = 0; t < m; ++t)
      if (t != j) rest.push_back(w_forms[t]);
    denom[j] = rest.empty()
                   ? ep_const(p, nvars, 1)
                   : matrix_det(moore_matrix_shift(rest, s, opt).entry, p, nvars, opt);
    auto q = ep_div_exact(detMs, denom[j], opt);
    if (!q) throw std::runtime_error("moore: Moore determinant quotient not exact");
    ExactPoly delta_ps = ep_pow(delta[j], ps, opt);
    // q = lambda_j^{-1} * delta_ps
    auto ratio = ep_div_exact(*q, delta_ps, opt);
    if (!ratio || ratio->terms.size() != 1 || total_degree(ratio->terms.begin()->first) != 0)
      throw std::runtime_error("moore: line-product scalar recovery failed");
    long lam_inv = ratio->terms.begin()->second;
    cert.lambdas.push_back(scalar_inv(lam_inv, p));
  }

  // U = H^{-1} Com(Ms): row j equals lambda_j / det(Ms without j) times the
  // corresponding comatrix row; entries are exact quotients of minors.
  std::vector<std::vector<ExactPoly>> U(m, std::vector<ExactPoly>(m, ep_zero(p, nvars)));
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < m; ++i) {
      ExactPoly minor_det = matrix_det(minor_matrix(Ms.entry, i, j), p, nvars, opt);
      auto q = ep_div_exact(minor_det, denom[j], opt);
      if (!q)
        throw std::runtime_error(
            "moore: minor not divisible by the smaller Moore determinant (theory violated)");
      ExactPoly entry = ep_scalar_mul(*q, cert.lambdas[j]);
      if ((i + j) % 2 == 1) entry = ep_scalar_mul(entry, -1);
      U[j][i] = entry;
    }

  cert.coefficients.assign(U[0].begin(), U[0].end());
  cert.bounds.resize(m);
  cert.bounds_ok = true;
  for (int i = 0; i < m; ++i) {
    cert.bounds[i] = static_cast<int>(ps * (ipow(p, m - 1) - ipow(p, i)));
    for (int j = 0; j < m; ++j) {
      int required = static_cast<int>(ps * (ipow(p, m - 1) - ipow(p, i)));
      auto mindeg = U[j][i].min_degree();
      if (mindeg && *mindeg < required) cert.bounds_ok = false;
    }
  }

  // Row-wise identity on every basis vector of V_1:
  //   sum_i U[j][i] * varphi(v)^{p^{s+i}} == Delta_j^{p^s} * f_j(varphi(v)).
  cert.identity_ok = true;
  for (int j = 0; j < m && cert.identity_ok; ++j) {
    ExactPoly delta_ps = ep_pow(delta[j], ps, opt);
    for (size_t vi = 0; vi < varphi_images.size() && cert.identity_ok; ++vi) {
      ExactPoly lhs = ep_zero(p, nvars);
      for (int i = 0; i < m; ++i)
        lhs = ep_add(lhs, ep_mul(U[j][i], ep_pow(varphi_images[vi], ipow(p, s + i), opt), opt));
      // f_j(varphi(v)): express the image vector in B-coordinates.
      std::vector<long> target = img_vecs[vi];
      // solve basis^T z = target over F_p
      FpMat sys(nvars, std::vector<long>(m + 1, 0));
      for (int v = 0; v < nvars; ++v) {
        for (int t = 0; t < m; ++t) sys[v][t] = basis[t][v];
        sys[v][m] = target[v];
      }
      // tiny elimination; the system is consistent since target lies in V_2
      std::vector<long> z(m, 0);
      {
        int r = 0;
        std::vector<int> pivot_col(m, -1);
        for (int c = 0; c < m && r < nvars; ++c) {
          int pr = -1;
          for (int rr = r; rr < nvars; ++rr)
            if (sys[rr][c] % p != 0) {
              pr = rr;
              break;
            }
          if (pr < 0) continue;
          std::swap(sys[r], sys[pr]);
          long inv = scalar_inv(sys[r][c], p);
          for (int cc = 0; cc <= m; ++cc) sys[r][cc] = norm_mod(sys[r][cc] * inv, p);
          for (int rr = 0; rr < nvars; ++rr) {
            if (rr == r || sys[rr][c] == 0) continue;
            long factor = sys[rr][c];
            for (int cc = 0; cc <= m; ++cc)
              sys[rr][cc] = norm_mod(sys[rr][cc] - factor * sys[r][cc], p);
          }
          pivot_col[c] = r;
          ++r;
        }
        for (int c = 0; c < m; ++c)
          if (pivot_col[c] >= 0) z[c] = sys[pivot_col[c]][m];
      }
      long fj = 0;
      for (int t = 0; t < m; ++t) fj = norm_mod(fj + Fmat[j][t] * z[t], p);
      ExactPoly rhs = ep_scalar_mul(delta_ps, fj);
      if (!(lhs == rhs)) cert.identity_ok = false;
    }
  }
  return cert;
}

}  // namespace iwa
