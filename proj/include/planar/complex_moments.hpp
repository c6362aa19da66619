#pragma once

#include "planar/a_coeff.hpp"
#include "planar/rational.hpp"
#include "planar/scalar.hpp"

namespace planar {

// M_{p1,p2,N} of the determinantal ensemble: sum_{k<N} sum_j (h_j/h_k) (A^{p1})^j_k (A^{p2})^j_k.
Scalar moment_complex(const ACoeffTable& A, int p1, int p2, int N);
// M_{p,0,N} = sum_{k<N} (A^p)^k_k.
Scalar moment_complex_holomorphic(const ACoeffTable& A, int p, int N);
// M_{p,0,N} / alpha^p: moment of the real-line ensemble whose monic orthogonal polynomials are P_k.
// DomainError when alpha^p vanishes (tau = 0).
Scalar hermitian_unitary_moment(const ACoeffTable& A, int p, int N);

Rational ginue_moment(int p1, int p2, int N);
// Moment of index 2p of the GUE with weight exp(-x^2/2).
Rational gue_moment(int p, int N);

// Hermite family only. Rational tau must be < 1; symbolic tau uses exact division by 1 - t^2.
Scalar eginue_cd_moment(const ACoeffTable& hermite, int p1, int p2, int N);
Scalar eginue_cd_moment(int p1, int p2, int N, const Scalar& tau);
Scalar eginue_appendixB_moment(int p1, int p2, int N, const Scalar& tau);
// tau^p (2p-1)!! sum_{k<N} sum_l 2^l binom(p,l) binom(k,l) = M_{2p,0,N}
Scalar eginue_appendixB_holomorphic(int p, int N, const Scalar& tau);

}  // namespace planar
