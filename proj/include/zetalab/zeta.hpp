#pragma once
// Complex-argument zeta machinery on the desk-scale window |Im s| <= 5e4:
// Euler-Maclaurin zeta and Hurwitz zeta, term-wise-differentiated log
// derivative, the functional-equation factor in log space, digamma, and
// Dirichlet L-functions over the character tables.

#include <complex>
#include <cstdint>

#include "zetalab/characters.hpp"

namespace zetalab {

using cplx = std::complex<double>;

// Value plus a posteriori error estimate for a series evaluation.
struct EvalResult {
    cplx value{0.0, 0.0};
    double est_abs_error = 0.0;
    int terms_used = 1;
};

// Riemann zeta.  Euler-Maclaurin for Re s >= -2, functional equation below.
// Throws PoleAtOne within 1e-12 of s = 1, OverflowRisk for |Im s| > 5e4,
// PrecisionUnreachable if the tail estimate exceeds target_abs_err.
EvalResult zeta(cplx s, double target_abs_err = 1e-10);

// zeta'(s), term-wise differentiation of the same expansion (no differencing).
EvalResult zeta_deriv(cplx s, double target_abs_err = 1e-10);

// zeta'(s)/zeta(s).  Throws NearSingularity if s is within 1e-6 of the pole
// or (by Newton quotient estimate) of a zero.
EvalResult zeta_log_deriv(cplx s, double target_abs_err = 1e-8);

// X(s) = 2^s pi^(s-1) Gamma(1-s) sin(pi s / 2), the factor with
// zeta(s) = X(s) zeta(1-s).  Evaluated as exp(log-sum); even-integer points
// use the finite limit value.
EvalResult chi_factor(cplx s);

// log X(s) with imaginary part only defined modulo 2*pi (sufficient for
// exponentiation; exposed for magnitude/phase asymptotics).
cplx log_chi_factor_mod2pi(cplx s);

// Digamma psi(s) by upward recurrence + Stirling.  Throws
// PoleAtNonpositiveInteger within 1e-8 of 0, -1, -2, ...
EvalResult digamma(cplx s);

// Hurwitz zeta(s, q) for 0 < q <= 1, Euler-Maclaurin.  Same pole/window
// guards as zeta.
EvalResult hurwitz_zeta(cplx s, double q, double target_abs_err = 1e-10);

// Dirichlet L(s, chi) for prime modulus, via Hurwitz zeta (non-principal at
// s = 1 uses the digamma limit); principal chi uses zeta(s)(1 - x^{-s}) and
// keeps the zeta pole guard.
EvalResult l_function(cplx s, const chars::Character& chi);

// log Gamma(z) with imaginary part only defined modulo 2*pi.
cplx log_gamma_mod2pi(cplx z);

}  // namespace zetalab
