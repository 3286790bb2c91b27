#pragma once
// The star computation: the two-shift correlation sum over critical-line
// ordinates, its predicted main term with the M' bracket, the prime-pair
// selection that keeps |M'| bounded away from zero, and the exact triple-sum
// remainder diagnostics.

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "zetalab/arith.hpp"
#include "zetalab/zeros.hpp"

namespace zetalab::corr {

using cplx = std::complex<double>;

// The two ordinate shifts and the window-width constant C (the window is
// [T, (1+eps)T] with eps = exp(-C sqrt(log T))).
struct ShiftParams {
    double y1 = 0.0;
    double y2 = 0.0;
    double C = 1.0;
    ShiftParams(double y1_, double y2_, double C_);  // validates all three
    double alpha() const { return y2 - y1; }         // the shift difference
};

// A summation window with its twist prime and everything derived from them.
// Standing assumption 2*T1 > T2 > T1 enforced at construction.
struct AnalysisParams {
    double T1 = 0.0;
    double T2 = 0.0;
    std::uint64_t x = 0;
    double C = 1.0;
    AnalysisParams(double T1_, double T2_, std::uint64_t x_, double C_);
    double delta() const { return T2 - T1; }
    double T() const { return 0.5 * (T1 + T2); }          // window midpoint
    double epsilon() const;   // exp(-C sqrt(log T))
    double big_l() const;     // exp(log T / log log T)
    double c_line() const;    // 1 + 1/log x   (right abscissa)
    double b_line() const;    // 1/2 - 1/log log T  (left abscissa)
};

// The window [T, (1+eps)T] with eps = exp(-C sqrt(log T)).
AnalysisParams standard_window(double T, std::uint64_t x, double C);

// ---------------------------------------------------------------------------
// Zero-side sum:  sum over T1 < gamma < T2 of
//   x^rho zeta(rho + i y1) conj(zeta(rho + i y2)),   rho = 1/2 + i gamma.
// With real shifts both factors sit on the critical line, so each term is
//   x^(1/2) e^(i gamma log x) Z(g+y1) e^(-i theta(g+y1))
//                             Z(g+y2) e^(+i theta(g+y2)).
// Compensated summation in ascending-ordinate order; `threads` > 1 sums
// fixed 64-zero chunks in parallel and reduces them in index order, so the
// result is bit-identical to the single-threaded one.
// ---------------------------------------------------------------------------
struct ZeroSumResult {
    cplx value{0.0, 0.0};
    double est_abs_error = 0.0;
    int zeros_used = 0;
};

ZeroSumResult zero_sum(const zeros::ZeroCatalog& catalog,
                       const ShiftParams& shifts, const AnalysisParams& params,
                       int threads = 1);

// ---------------------------------------------------------------------------
// Main-term bracket
//   M'(x, y1, y2) = [ zeta(1+ia)/zeta(1-ia) * ((T1+y1)/(2 pi x))^(ia)
//                     * paren / (1+ia) ] + 1,     a = y2 - y1,
// with paren = (T2+y1)/(T2-T1) * ((T2+y1)/(T1+y1))^(ia) - (T1+y1)/(T2-T1).
// ---------------------------------------------------------------------------
cplx m_prime(std::uint64_t x, const AnalysisParams& params,
             const ShiftParams& shifts);

// The parenthesized factor alone, at T2 = (1+eps)T1 (pure arithmetic; its
// large-T1 limit is 1 + i(y2-y1)).
cplx bracket_paren(double T1, double eps, double y1, double y2);

// |x2^(-ia) - x1^(-ia)| = 2 |sin(a log(x2/x1) / 2)|.
double pair_separation(std::uint64_t x1, std::uint64_t x2, double alpha);

// ---------------------------------------------------------------------------
// Prime-pair selection: primes x1 < x2 with pair separation > sqrt(2), which
// forces |M'| > 1/sqrt(2) for at least one of them.  Modes:
//   "window"     log T >= 20: first primes in (t, At) and (A^3 t, A^4 t),
//                A = exp(pi / (4|a|)), t = log T (separation then guaranteed
//                by the window geometry; still verified directly)
//   "exhaustive" small t, bounded windows: scan primes up to
//                max(101, A^4 t) for the best separation
//   "guided"     tiny |a| makes A^4 t astronomically large: aim x2 near
//                x1 * exp(pi/|a|) (antipodal angle) and take the next prime
// Throws NoPairFound if no pair reaches sqrt(2) (reported, never silently
// accepted), DegenerateShifts if y1 = y2.
// ---------------------------------------------------------------------------
struct PrimePair {
    std::uint64_t x1 = 0;
    std::uint64_t x2 = 0;
    double separation = 0.0;
    std::uint64_t chosen = 0;  // argmax of |M'| over {x1, x2}
    double m_abs_x1 = 0.0;
    double m_abs_x2 = 0.0;
    std::string mode;
};

PrimePair select_prime_pair(double T, const ShiftParams& shifts);

// ---------------------------------------------------------------------------
// Full pipeline report: zero_sum against
//   main_term = (Delta log T / 2 pi) x^(-i y1) zeta(1 - i(y2-y1)) M',
// with residual diagnostics and the asymptotic error budget
// Delta sqrt(log T).  Windows holding fewer than 25 zeros are refused with
// the smallest viable T in the message.  pre: 10 <= T <= 2*10^4.
// ---------------------------------------------------------------------------
struct SumReport {
    double T_mid = 0.0;
    double delta = 0.0;
    std::uint64_t x = 0;
    double y1 = 0.0;
    double y2 = 0.0;
    int zeros_used = 0;
    cplx zero_sum_value{0.0, 0.0};
    cplx main_term{0.0, 0.0};
    cplx m_prime_value{0.0, 0.0};
    cplx residual{0.0, 0.0};
    double rel_residual = 0.0;  // |residual| / max(|main_term|, 1e-30)
    double error_budget = 0.0;  // Delta sqrt(log T)
    double sum_est_error = 0.0;
    std::string pair_mode;

    std::string to_json() const;
    static std::string csv_header();
    std::string csv_row() const;
};

SumReport theorem21_report(const ShiftParams& shifts, double T,
                           const zeros::ZeroCatalog& catalog, int threads = 1);

// Smallest T whose standard window is expected to hold >= 25 zeros.
double minimum_viable_T(double C);

// ---------------------------------------------------------------------------
// Exact triple-sum remainder:  K(T) enumerated over a1 a2 a3 <= x(T+y2)/2pi
// with weight Lambda(a1) a1^(i y2) a2^(i(y2-y1)) e(-a1 a2 a3 / x), and
//   K1 = -x^(-i y2) (K(T2) - K(T1)),
// reported against the bound shape T log^(1/2) T exp(-C sqrt(log T))
// (threshold-free diagnostic).  pre: x (T + y2) / 2pi <= 10^6, else TooLarge.
// ---------------------------------------------------------------------------
struct KBrute {
    cplx value{0.0, 0.0};
    std::uint64_t terms_total = 0;
    std::uint64_t terms_multiple = 0;  // terms with x | a1*a2*a3
    double multiple_fraction = 0.0;
};

KBrute k_sum_brute(double T, std::uint64_t x, const ShiftParams& shifts);

struct K1Report {
    cplx K1{0.0, 0.0};
    double magnitude = 0.0;
    double bound_shape = 0.0;
    double ratio = 0.0;  // magnitude / bound_shape
};

K1Report k1_assemble(const AnalysisParams& params, const ShiftParams& shifts);

}  // namespace zetalab::corr
