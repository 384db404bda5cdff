#pragma once

// Small dense linear algebra mod a prime p, plus the unit-pivot solver mod
// p^M needed for digit decomposition (matrices invertible mod p stay
// invertible mod p^M).

#include <vector>

#include "iwa/gf.hpp"

namespace iwa {

FpMat mat_identity(int n);
FpMat mat_mul(const FpMat& a, const FpMat& b, long mod);
FpMat mat_add(const FpMat& a, const FpMat& b, long mod);
std::vector<long> mat_apply(const FpMat& m, const std::vector<long>& v, long mod);
bool mat_equal(const FpMat& a, const FpMat& b);

/// Rank over F_p (p prime).
int mat_rank(FpMat m, long p);

/// Inverse mod `mod`, pivoting only on entries that are units mod `mod`.
/// Throws std::runtime_error when no unit pivot exists (matrix not
/// invertible mod the prime below `mod`).
FpMat mat_inverse_unit_pivot(FpMat m, long mod, long p);

}  // namespace iwa
