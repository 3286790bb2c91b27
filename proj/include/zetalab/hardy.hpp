#pragma once
// Critical-line real form: theta(t) rotation angle by Stirling asymptotics
// and Z(t) = e^{i theta(t)} zeta(1/2 + it), real for real t.  Z is computed
// by Euler-Maclaurin below t = 520 and by the Riemann-Siegel main sum with
// interpolated correction terms above.

namespace zetalab::hardy {

struct ZTheta {
    double Z;
    double theta;
    double est_abs_error;  // for Z
};

// Rotation angle theta(t), t >= 2, Stirling series with 5 correction terms.
double theta(double t);

// Z(t) and theta(t) together.  Throws UnsupportedRange for t < 2,
// OverflowRisk above the supported window.
ZTheta hardy_z_theta(double t);

// zeta(1/2 + it) reconstructed as Z(t) e^{-i theta(t)}.
// (Convenience for the zero-sum weights; complex return.)
struct CriticalValue {
    double re;
    double im;
};
CriticalValue zeta_on_critical_line(double t);

}  // namespace zetalab::hardy
