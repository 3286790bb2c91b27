#pragma once
// Complex-path quadrature (adaptive Gauss-Kronrod with oscillation-aware
// panels) and the contour/residue checks built on it: the rectangle identity
// relating a windowed sum over critical-line zeros to four edge integrals,
// the stationary-phase integral estimate, the truncated Perron formula with
// its explicit error budget, and the closed-form residue packs.

#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "zetalab/arith.hpp"
#include "zetalab/characters.hpp"
#include "zetalab/zeros.hpp"

namespace zetalab::contour {

using cplx = std::complex<double>;

struct QuadratureResult {
    cplx value{0.0, 0.0};
    double est_error = 0.0;  // difference of successive refinement levels
    long evaluations = 0;
};

// Integrand with its known singularities (for the hard 10^-3 proximity
// check) and a conservative bound on the local oscillation frequency
// (radians per unit arclength), which sets the initial panel length at
// pi / (4 * frequency).
struct Integrand {
    std::function<cplx(const cplx&)> f;
    std::vector<cplx> poles;
    double frequency = 1.0;
};

// Integral of f along the straight segment [from, to].  Adaptive
// Gauss-Kronrod 7-15: panels split until the summed error estimate is at
// most tol.  Throws SingularityTooClose if a listed pole lies within 10^-3
// of the segment, OscillationTooFast if the initial panel count explodes,
// MaxEvalExceeded if refinement stalls above tol.
QuadratureResult segment_integral(const Integrand& g, cplx from, cplx to,
                                  double tol);

// (1/2 pi i) times the counterclockwise circle integral of f, by the
// n-point trapezoid rule (spectrally accurate for f analytic in an annulus
// around the circle).
cplx circle_mean(const std::function<cplx(const cplx&)>& f, cplx center,
                 double radius, int points = 128);

// ---------------------------------------------------------------------------
// Rectangle identity: sum over critical-line zeros inside the window against
// the four edge integrals of (zeta'/zeta)(s) zeta(s+iy1) zeta(1-s-iy2) x^s
// minus the indicator-gated residues at s = 1, s = 1-iy1, s = -iy2.
// Default abscissae: right edge c = 1 + 1/log x, left edge
// b = 1/2 - 1/log log T with T the window midpoint; both can be overridden
// (required for windows whose midpoint is too small for the default b).
// Horizontal edges are nudged outward in 0.01 steps until they clear every
// catalogued ordinate by 10^-2 of the local mean gap; nudges are reported.
// ---------------------------------------------------------------------------
struct RectangleOptions {
    std::optional<double> left_abscissa;   // override b
    std::optional<double> right_abscissa;  // override c
};

struct RectangleReport {
    double left_abscissa = 0.0;
    double right_abscissa = 0.0;
    double t_bottom = 0.0;  // final, after nudging
    double t_top = 0.0;
    double nudge_bottom = 0.0;  // applied outward shifts
    double nudge_top = 0.0;
    cplx lhs{0.0, 0.0};          // zero-side sum
    cplx rhs{0.0, 0.0};          // edge integrals minus residues
    cplx edges[4]{};             // right, top, left, bottom (counterclockwise)
    cplx residue_correction{0.0, 0.0};
    bool residue_at_one = false;       // indicator outcomes
    bool residue_at_shift1 = false;    // s = 1 - iy1
    bool residue_at_shift2 = false;    // s = -iy2
    int zeros_used = 0;
    double residual = 0.0;
    double tolerance = 0.0;  // max(1e-6, combined est_error)
    double est_error = 0.0;
    long evaluations = 0;
    bool passed = false;
    std::string to_json() const;
};

RectangleReport rectangle_identity_check(double y1, double y2,
                                         std::uint64_t x, double T1, double T2,
                                         const zeros::ZeroCatalog& catalog,
                                         const RectangleOptions& options = {});

// ---------------------------------------------------------------------------
// Stationary-phase integral: direct quadrature of
//   int_a^b exp(i t log(t/(u e))) (t/2pi)^{sigma-1/2} log^m(t/2pi) dt
// against the predicted main term
//   (2 pi)^{1-sigma} u^sigma exp(-(u - pi/4) i) log^m(u/2pi) * [a < u <= b],
// with error shape E = a^{sigma-1/2} + a^{sigma+1/2}/(|a-u|+sqrt a)
//                    + b^{sigma+1/2}/(|b-u|+sqrt b).
// K = |numeric - main| / (E log^m a); pass requires K <= 10.
// pre: 10a >= b > a >= 10, sigma in [1/10, 10], m in {0,1}, b <= 2000.
// ---------------------------------------------------------------------------
struct GonekReport {
    cplx numeric{0.0, 0.0};
    cplx main_term{0.0, 0.0};
    double err_shape = 0.0;  // E * log^m a
    double K = 0.0;
    long evaluations = 0;
    bool passed = false;
    std::string to_json() const;
};

GonekReport gonek_check(double a, double b, double sigma, double u, int m);

// ---------------------------------------------------------------------------
// Truncated Perron formula for a coefficient family: exact finite sum
// against (1/2 pi i) int_{s0-iW}^{s0+iW} alpha(s) X^s / s ds with
// s0 = 1 + 1/log X, where alpha is the family's closed-form product of
// zeta factors.  r1_bound is the explicit error budget
//   sum_{X/2<n<2X} |b_n| min(1, X/(W|X-n|)) + (4X)^{s0}/W * sum |b_n| n^{-s0} + 1
// with the series term bounded by the family's majorant in closed form.
// Pass requires r1_observed <= 5 * r1_bound.
// pre: 3 <= X <= 10^5 (integer X nudged to X + 0.5), W >= 10.
// ---------------------------------------------------------------------------
struct PerronReport {
    double X = 0.0;  // final, after the half-step nudge
    double W = 0.0;
    cplx exact_sum{0.0, 0.0};
    cplx integral{0.0, 0.0};
    double r1_observed = 0.0;
    double r1_bound = 0.0;
    double K = 0.0;
    long evaluations = 0;
    bool passed = false;
    std::string to_json() const;
};

PerronReport perron_check(const arith::CoefficientFamily& family, double X,
                          double W);

// ---------------------------------------------------------------------------
// Closed-form residue packs: the pole contributions of the four Dirichlet
// integrands, assembled from zeta / L values.
//   S1: principal-character product  (needs chi = principal character mod x)
//   S2: real-character product at a supplied real abscissa beta
//       (needs chi = the real non-principal character mod x)
//   S3: zeta product with the log-derivative factor
//   S4: plain double zeta product
// pre: y1 != 0, y2 != 0, y1 != y2 (distinct poles); X > 1;
//      for S2: 1/2 < beta < 1.
// ---------------------------------------------------------------------------
enum class Pack { S1, S2, S3, S4 };

cplx residue_pack(Pack which, double X, std::uint64_t x, double y1, double y2,
                  const chars::Character* chi = nullptr, double beta = 0.75);

}  // namespace zetalab::contour
