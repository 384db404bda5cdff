#pragma once

// Arithmetic in F_p and F_q = F_p[t]/(phi), with the regular-representation
// matrices used by the rho-action downstream.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace iwa {

using FpMat = std::vector<std::vector<long>>;

/// Element of F_q, coordinates in the basis 1, lambda, ..., lambda^{f-1}.
struct FqElem {
  std::vector<long> c;

  bool operator==(const FqElem&) const = default;
};

struct FieldSpec {
  long p = 0;
  int f = 0;
  std::vector<long> phi;  // f+1 coefficients, constant term first, monic
};

bool is_prime(long p);

/// Immutable field context. Construction validates the spec: p prime,
/// phi monic of degree f and irreducible over F_p (trial division;
/// desk-scale sizes only).
class Field {
 public:
  static Field make(const FieldSpec& spec);

  long p() const { return p_; }
  int f() const { return f_; }
  long q() const { return q_; }
  const std::vector<long>& phi() const { return phi_; }

  FqElem zero() const;
  FqElem one() const;
  /// Class of t for f >= 2; the convention is lambda = 1 when f = 1.
  FqElem lambda() const;
  /// lambda^k, 0 <= k.
  FqElem lambda_pow(int k) const;

  FqElem elem(std::vector<long> coords) const;  // reduces entries mod p
  /// Element with index n in [0, q), base-p digits as coordinates.
  FqElem elem_by_index(long n) const;
  long index_of(const FqElem& a) const;

  bool is_zero(const FqElem& a) const;
  FqElem add(const FqElem& a, const FqElem& b) const;
  FqElem sub(const FqElem& a, const FqElem& b) const;
  FqElem neg(const FqElem& a) const;
  FqElem mul(const FqElem& a, const FqElem& b) const;
  FqElem pow(const FqElem& a, long n) const;
  FqElem inv(const FqElem& a) const;

  /// f x f matrix over F_p: column k holds the coordinates of a*lambda^k.
  /// The map a -> matrix is a homomorphism of F_p-algebras.
  FpMat regular_rep_matrix(const FqElem& a) const;

  bool same_spec(const Field& other) const;

 private:
  Field() = default;
  void check_elem(const FqElem& a) const;

  long p_ = 0;
  int f_ = 0;
  long q_ = 0;
  std::vector<long> phi_;
  FqElem lambda_;
};

}  // namespace iwa
