#pragma once
// Brute-force oracles and ratio scans for the elementary estimates: each
// check computes its "exact" side by direct summation or enumeration (never
// by the asymptotic formula under test), then reports the worst observed
// ratio against the claimed shape together with a documented pass threshold.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace zetalab::lemmas {

// Outcome of one ratio scan.  `witness` is the grid point where the worst
// ratio occurred; `tested_domain` describes the scanned set.
struct LemmaVerdict {
    std::string lemma_id;
    std::string tested_domain;
    double worst_ratio = 0.0;
    std::string witness;
    bool passed = false;
};

// CSV serialization: lemma_id, domain, worst_ratio, witness, passed.
std::string verdict_csv_header();
std::string verdict_csv_row(const LemmaVerdict& v);

// |sum_{abc=n} Lambda(a) a^{i*th1} b^{i*th2} c^{i*th3}| <= d(n) log n for all
// 2 <= n <= n_max and every phase triple with th_i in {0, +-1, +-pi}.
// The inequality is exact (triangle inequality against the zero-phase value
// sum_{abc=n} Lambda(a) = d(n) log(n) / 2), so passed requires ratio <= 1;
// the observed worst ratio is 1/2, attained at zero phases.
// pre: 2 <= n_max <= 10^6.
LemmaVerdict check_3_14(std::uint64_t n_max);

// ((X+Y) log(X+Y) - (X-Y) log(X-Y)) / (Y log X) <= 2 (1 + 1/log X) + slack
// for Y in (0, cX], X on the given grid; Y is sampled on a mixed
// logarithmic/linear grid of fractions of cX.  Records the worst raw ratio.
// pre: 0 < c < 1, every X > e (so log X > 1).
LemmaVerdict check_3_15(const std::vector<double>& X_grid, double c);

// Exact sum_{A<n<=B} d(n)/n by sieve against the two-term asymptotic
// 2*gamma*log(B/A) + (log^2 B - log^2 A)/2; worst_ratio is the empirical
// constant K = |exact - asymptotic| / (A^{-2/3} + B^{-2/3}), pass if K <= 10.
// pre: 1 < A <= B <= 10^7 (A == B gives the empty range, both sides zero).
LemmaVerdict check_3_16(double A, double B);

// Exact S1 = sum_{X/2<n<X-Y} d(n)/(n (X-n+Y)) and
//       S2 = sum_{X+Y<n<3X} d(n)/(n (n-X+Y)),
// with Y = Y_rule(X); worst_ratio = sup over the grid and both sums of
// S * X / log^2 X, pass if <= 100 (documented policy threshold).
// pre: every X >= 4, 0 < Y_rule(X) < X/2, 3X <= 2*10^7.
using YRule = std::function<double(double)>;
LemmaVerdict check_3_17(const std::vector<double>& X_grid, const YRule& y_rule);

// Truncated exact evaluation of
//   sum_{n>=2} d(n) log n / (n^c (|t - 2 pi n x| + sqrt t))      (variant nx)
//   sum_{n>=2} d(n) log n / (n^c (|t - 2 pi n / x| + sqrt t))    (variant n_over_x)
// with c = 1 + 1/log x, truncated once the provable tail (integral comparison
// against n^{-c} after the resonance region) is below 10^-3 of the partial
// sum; worst_ratio = sup over the t grid of sum / ((log^3 t + log^3 x) / t),
// pass if <= 100 (documented policy threshold).
// pre (nx):       t >= 10 x >= 100 for every grid point.
// pre (n_over_x): t >= 3 and x >= 3.
enum class SumVariant { nx, n_over_x };
LemmaVerdict check_3_18_19(const std::vector<double>& t_grid, std::uint64_t x,
                           SumVariant variant);

// Pure-formula scan of S = (X/W) log^3 X + (X/W) log^6 W + X^b log^5 W with
// X = T log T, x = log T, b = 1 - c/log(xW), evaluated in log space.
//   sqrt_window: W = exp(C' sqrt(log T)), ratio = S / (log T * T e^{-C sqrt(log T)});
//                the claim under test is a strictly decreasing column ending
//                below 1.  Throws BadConstants if C^2 >= c.
//   banks_eps:   target log T * T^{1 - k/log log T} for k in {0.5, 1, 2};
//                the scan flags that the ratio fails to vanish (it increases
//                along the grid for every tested k).
// pre: T grid inside [10^6, 10^16], increasing.
enum class ScanMode { banks_eps, sqrt_window };
struct ScanRow {
    double T = 0.0;
    double k = 0.0;  // banks_eps only; 0 for sqrt_window
    double ratio = 0.0;
};
struct ScanTable {
    ScanMode mode = ScanMode::sqrt_window;
    double C = 0.0, C_prime = 0.0, c = 0.0;
    std::vector<ScanRow> rows;
    bool decreasing = false;       // sqrt_window: column strictly decreasing
    bool top_below_one = false;    // sqrt_window: final ratio < 1
    bool nonvanishing = false;     // banks_eps: every k increases along grid
    std::string boundary_note;     // untested boundary-regime caveat
};
ScanTable appendix_scan(const std::vector<double>& T_grid, double C,
                        double C_prime, double c, ScanMode mode);

}  // namespace zetalab::lemmas
