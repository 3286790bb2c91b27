#include "zetalab/hardy.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <mutex>
#include <vector>

#include "zetalab/errors.hpp"
#include "zetalab/zeta.hpp"

namespace zetalab::hardy {

namespace {

using cplx = std::complex<double>;

constexpr double HEIGHT_WINDOW = 5e4;

// ---------------------------------------------------------------------------
// Riemann-Siegel correction coefficients C_0..C_4 built from
//   Psi(p) = cos(2*pi*(p^2 - p - 1/16)) / cos(2*pi*p),
// an entire function; derivatives are taken by Cauchy integrals on a circle
// of radius 0.35 (trapezoid rule, exact for the truncated Laurent tail),
// which is stable even near Psi's removable 0/0 points.  The five
// coefficients are tabulated once on a uniform grid over p in [0, 1] and
// evaluated afterwards by 6-point Lagrange interpolation.
// ---------------------------------------------------------------------------

constexpr int GRID = 4096;     // panels; 4097 nodes
constexpr int CIRCLE = 128;    // trapezoid points per Cauchy integral
constexpr double RADIUS = 0.35;

struct RsTables {
    // c[j][i] = C_j(i / GRID)
    std::array<std::vector<double>, 5> c;
};

cplx psi_fn(cplx w) {
    cplx arg = 2.0 * M_PI * (w * w - w - 0.0625);
    return std::cos(arg) / std::cos(2.0 * M_PI * w);
}

const RsTables& rs_tables() {
    static RsTables tab;
    static std::once_flag flag;
    std::call_once(flag, [] {
        for (auto& v : tab.c) v.assign(GRID + 1, 0.0);
        // Precompute circle nodes and the e^{-ik phi} twiddles.
        std::array<cplx, CIRCLE> node;
        for (int m = 0; m < CIRCLE; ++m) {
            double phi = 2.0 * M_PI * m / CIRCLE;
            node[m] = cplx{RADIUS * std::cos(phi), RADIUS * std::sin(phi)};
        }
        double fact = 1.0;                 // k!
        std::array<double, 13> kfact{};    // k! / RADIUS^k
        double rk = 1.0;
        for (int k = 0; k <= 12; ++k) {
            if (k > 0) fact *= k;
            kfact[k] = fact / rk;
            rk *= RADIUS;
        }
        for (int i = 0; i <= GRID; ++i) {
            double p = static_cast<double>(i) / GRID;
            std::array<cplx, CIRCLE> f;
            for (int m = 0; m < CIRCLE; ++m) f[m] = psi_fn(p + node[m]);
            // d[k] ~ Psi^(k)(p) = k!/(M r^k) sum_m f_m e^{-2 pi i k m / M}
            std::array<double, 13> d{};
            for (int k = 0; k <= 12; ++k) {
                cplx acc{0.0, 0.0};
                for (int m = 0; m < CIRCLE; ++m) {
                    double ang = -2.0 * M_PI * k * m / CIRCLE;
                    acc += f[m] * cplx{std::cos(ang), std::sin(ang)};
                }
                d[k] = kfact[k] * acc.real() / CIRCLE;
            }
            const double pi2 = M_PI * M_PI;
            const double pi4 = pi2 * pi2;
            const double pi6 = pi4 * pi2;
            const double pi8 = pi4 * pi4;
            tab.c[0][i] = d[0];
            tab.c[1][i] = -d[3] / (96.0 * pi2);
            tab.c[2][i] = d[2] / (64.0 * pi2) + d[6] / (18432.0 * pi4);
            tab.c[3][i] = -d[1] / (64.0 * pi2) - d[5] / (3840.0 * pi4) -
                          d[9] / (5308416.0 * pi6);
            tab.c[4][i] = d[0] / (128.0 * pi2) + d[4] / (24576.0 * pi4) +
                          d[8] / (5898240.0 * pi6) +
                          d[12] / (2038431744.0 * pi8);
        }
    });
    return tab;
}

// 6-point Lagrange interpolation of C_j at p in [0, 1].
double interp_c(int j, double p) {
    const auto& tab = rs_tables().c[j];
    double x = p * GRID;
    int base = static_cast<int>(x) - 2;
    if (base < 0) base = 0;
    if (base > GRID - 5) base = GRID - 5;
    double out = 0.0;
    for (int a = 0; a < 6; ++a) {
        double num = 1.0, den = 1.0;
        for (int b = 0; b < 6; ++b) {
            if (a == b) continue;
            num *= x - (base + b);
            den *= static_cast<double>(a - b);
        }
        out += tab[base + a] * num / den;
    }
    return out;
}

}  // namespace

double theta(double t) {
    if (t < 2.0) throw UnsupportedRange("theta: t < 2");
    if (t < 16.0) {
        // Below the asymptotic regime: exact arg Gamma(1/4 + it/2) via the
        // recurrence log-gamma (all factors in the right half-plane, so the
        // accumulated imaginary part is the continuous branch, not just
        // mod 2*pi).
        cplx lg = log_gamma_mod2pi(cplx{0.25, 0.5 * t});
        return lg.imag() - 0.5 * t * std::log(M_PI);
    }
    double u = t / (2.0 * M_PI);
    double t2 = t * t;
    // Stirling series: t/2 log(t/2pi) - t/2 - pi/8 + 1/(48t) + 7/(5760 t^3)
    //                  + 31/(80640 t^5) + 127/(430080 t^7) + 511/(1216512 t^9)
    return 0.5 * t * std::log(u) - 0.5 * t - M_PI / 8.0 +
           (1.0 / 48.0) / t + (7.0 / 5760.0) / (t * t2) +
           (31.0 / 80640.0) / (t * t2 * t2) +
           (127.0 / 430080.0) / (t * t2 * t2 * t2) +
           (511.0 / 1216512.0) / (t * t2 * t2 * t2 * t2);
}

ZTheta hardy_z_theta(double t) {
    if (t < 2.0) throw UnsupportedRange("hardy_z_theta: t < 2");
    if (t > HEIGHT_WINDOW) throw OverflowRisk("hardy_z_theta: t above window");
    double th = theta(t);
    // The five-term Riemann-Siegel correction has remainder of order
    // (t/2pi)^{-13/4}, which only drops below the 1e-9 needed for
    // full-accuracy zero refinement near t = 500; Euler-Maclaurin is cheap
    // up to a thousand or so, so the main-sum switch sits at 520.
    if (t < 520.0) {
        EvalResult z = zeta(cplx{0.5, t}, 1e-11);
        cplx rot = cplx{std::cos(th), std::sin(th)} * z.value;
        return {rot.real(), th, z.est_abs_error + std::abs(rot.imag())};
    }
    double a = std::sqrt(t / (2.0 * M_PI));
    int nu = static_cast<int>(a);
    double p = a - nu;
    double main = 0.0;
    for (int n = nu; n >= 1; --n) {
        double ln = std::log(static_cast<double>(n));
        main += std::cos(th - t * ln) / std::sqrt(static_cast<double>(n));
    }
    main *= 2.0;
    double ainv = 1.0 / a;
    double corr = 0.0;
    double scale = 1.0 / std::sqrt(a);  // (t/2pi)^{-1/4}
    double apow = 1.0;
    for (int j = 0; j <= 4; ++j) {
        corr += interp_c(j, p) * apow;
        apow *= ainv;
    }
    corr *= scale;
    double Z = main + ((nu - 1) % 2 == 0 ? 1.0 : -1.0) * corr;
    // Remainder after C_4 shrinks like (t/2pi)^{-11/4}.
    double est = 2e-4 * std::pow(a, -5.5);
    return {Z, th, est};
}

CriticalValue zeta_on_critical_line(double t) {
    ZTheta zt = hardy_z_theta(t);
    return {zt.Z * std::cos(zt.theta), -zt.Z * std::sin(zt.theta)};
}

}  // namespace zetalab::hardy
