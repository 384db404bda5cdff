#include "iwa/fp_linalg.hpp"

#include <stdexcept>

namespace iwa {

namespace {

long norm_mod(long a, long mod) {
  long r = a % mod;
  return r < 0 ? r + mod : r;
}

// Inverse of a unit mod `mod` by extended Euclid.
long unit_inverse(long a, long mod) {
  long t = 0, newt = 1, r = mod, newr = norm_mod(a, mod);
  while (newr != 0) {
    long q = r / newr;
    long tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  if (r != 1) throw std::runtime_error("linalg: element is not a unit");
  return norm_mod(t, mod);
}

}  // namespace

FpMat mat_identity(int n) {
  FpMat m(n, std::vector<long>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

FpMat mat_mul(const FpMat& a, const FpMat& b, long mod) {
  const int n = static_cast<int>(a.size());
  const int k = static_cast<int>(b.size());
  const int m = k ? static_cast<int>(b[0].size()) : 0;
  FpMat c(n, std::vector<long>(m, 0));
  for (int i = 0; i < n; ++i)
    for (int t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (int j = 0; j < m; ++j)
        c[i][j] = norm_mod(c[i][j] + a[i][t] * b[t][j], mod);
    }
  return c;
}

FpMat mat_add(const FpMat& a, const FpMat& b, long mod) {
  FpMat c = a;
  for (size_t i = 0; i < c.size(); ++i)
    for (size_t j = 0; j < c[i].size(); ++j)
      c[i][j] = norm_mod(c[i][j] + b[i][j], mod);
  return c;
}

std::vector<long> mat_apply(const FpMat& m, const std::vector<long>& v, long mod) {
  std::vector<long> r(m.size(), 0);
  for (size_t i = 0; i < m.size(); ++i) {
    long acc = 0;
    for (size_t j = 0; j < v.size(); ++j) acc += m[i][j] * v[j];
    r[i] = norm_mod(acc, mod);
  }
  return r;
}

bool mat_equal(const FpMat& a, const FpMat& b) { return a == b; }

int mat_rank(FpMat m, long p) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][c] % p != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[rank], m[piv]);
    long inv = unit_inverse(m[rank][c], p);
    for (int j = c; j < cols; ++j) m[rank][j] = norm_mod(m[rank][j] * inv, p);
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] % p == 0) continue;
      long factor = m[r][c];
      for (int j = c; j < cols; ++j)
        m[r][j] = norm_mod(m[r][j] - factor * m[rank][j], p);
    }
    ++rank;
  }
  return rank;
}

FpMat mat_inverse_unit_pivot(FpMat m, long mod, long p) {
  const int n = static_cast<int>(m.size());
  FpMat inv = mat_identity(n);
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (m[r][c] % p != 0) {
        piv = r;
        break;
      }
    if (piv < 0) throw std::runtime_error("linalg: matrix not invertible mod p");
    std::swap(m[c], m[piv]);
    std::swap(inv[c], inv[piv]);
    long u = unit_inverse(m[c][c], mod);
    for (int j = 0; j < n; ++j) {
      m[c][j] = norm_mod(m[c][j] * u, mod);
      inv[c][j] = norm_mod(inv[c][j] * u, mod);
    }
    for (int r = 0; r < n; ++r) {
      if (r == c || m[r][c] == 0) continue;
      long factor = m[r][c];
      for (int j = 0; j < n; ++j) {
        m[r][j] = norm_mod(m[r][j] - factor * m[c][j], mod);
        inv[r][j] = norm_mod(inv[r][j] - factor * inv[c][j], mod);
      }
    }
  }
  return inv;
}

}  // namespace iwa
