#pragma once

// Arithmetic in O_F / p^M O_F for F with residue degree f and ramification
// index e, presented as (Z/p^M)[t]/(phi~)[pi]/(E(pi)) with E Eisenstein.
// Provides Teichmuller representatives and the digit decomposition in the
// Z_p-basis {pi^i [lambda^k]}.

#include <string>
#include <vector>

#include "iwa/gf.hpp"

namespace iwa {

/// Coordinates in the basis {pi^i t^k}, entries in [0, p^M), index i*f + k.
struct OFElem {
  std::vector<long> c;

  bool operator==(const OFElem&) const = default;
};

/// Digits a_{i,k} in [0, p^M): x = sum a_{i,k} pi^i [lambda^k].
struct DigitVector {
  std::vector<long> a;  // index i*f + k

  bool operator==(const DigitVector&) const = default;
};

/// Element of the residue ring O_F/p = F_q[pi]/(pi^e): one FqElem per level.
struct ResidueElem {
  std::vector<FqElem> level;

  bool operator==(const ResidueElem&) const = default;
};

struct LocalFieldSpec {
  FieldSpec base;
  int e = 0;
  /// e+1 coefficients of the monic Eisenstein polynomial, constant term
  /// first; each coefficient is an unramified-part element given by f
  /// integer coordinates.
  std::vector<std::vector<long>> eis;
  int M = 0;
};

class LocalRing {
 public:
  static LocalRing make(const LocalFieldSpec& spec);

  const Field& residue_field() const { return F_; }
  long p() const { return F_.p(); }
  int f() const { return F_.f(); }
  int e() const { return e_; }
  int n() const { return e_ * F_.f(); }
  int M() const { return M_; }
  long pM() const { return pM_; }

  OFElem zero() const;
  OFElem one() const;
  /// Class of pi (for e = 1 this is the reduced element -E_0, e.g. p).
  OFElem pi() const;
  OFElem from_coords(std::vector<long> coords) const;
  OFElem scalar(long c) const;

  OFElem add(const OFElem& a, const OFElem& b) const;
  OFElem sub(const OFElem& a, const OFElem& b) const;
  OFElem neg(const OFElem& a) const;
  OFElem mul(const OFElem& a, const OFElem& b) const;
  OFElem scalar_mul(long c, const OFElem& a) const;
  OFElem pow(const OFElem& a, long n) const;
  bool is_zero(const OFElem& a) const;

  /// Teichmuller lift of lambda^k, 0 <= k < f: the fixed point of y -> y^q
  /// reached from the coordinate lift.
  OFElem teichmuller(int k) const;
  /// Fixed point of y -> y^q starting from x (at most M iterations).
  OFElem teichmuller_fixpoint(const OFElem& x) const;

  DigitVector digits_decompose(const OFElem& x) const;
  OFElem digits_compose(const DigitVector& a) const;

  ResidueElem reduce_mod_p(const OFElem& x) const;
  ResidueElem residue_from_level(const FqElem& y, int level) const;
  ResidueElem res_add(const ResidueElem& a, const ResidueElem& b) const;
  ResidueElem res_mul(const ResidueElem& a, const ResidueElem& b) const;
  bool res_is_zero(const ResidueElem& a) const;
  /// All q^e residue-ring elements, by mixed-radix index.
  ResidueElem residue_by_index(long idx) const;

  /// Change-of-basis matrix B: column (i,k) holds the coordinates of
  /// pi^i [lambda^k]. Invertible mod p.
  const FpMat& basis_matrix() const { return B_; }

  bool same_spec(const LocalRing& o) const;

 private:
  LocalRing() = default;
  void check_elem(const OFElem& a) const;
  std::vector<long> wmul(const std::vector<long>& a, const std::vector<long>& b) const;
  std::vector<long> wneg(const std::vector<long>& a) const;

  Field F_;
  int e_ = 0;
  int M_ = 0;
  long pM_ = 0;
  std::vector<std::vector<long>> eis_;  // reduced mod p^M, entries as W-coords
  std::vector<long> phi_lift_;          // phi with integer-lifted coefficients
  std::vector<OFElem> teich_;           // cached [lambda^k]
  FpMat B_;
  FpMat Binv_;
};

std::string digits_to_text(const LocalRing& R, const DigitVector& d);
DigitVector digits_from_text(const LocalRing& R, const std::string& text);

}  // namespace iwa
