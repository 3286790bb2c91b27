#include "zetalab/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "zetalab/errors.hpp"
#include "zetalab/summation.hpp"

namespace zetalab {

using u64 = std::uint64_t;

namespace {

constexpr double HEIGHT_WINDOW = 5e4;

// B_2, B_4, ..., B_26.
constexpr double BERNOULLI[13] = {
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
};

inline cplx cis(double t) { return {std::cos(t), std::sin(t)}; }

// ln n and n^{-sigma} tables shared across evaluations on a vertical line.
struct EmTables {
    std::vector<double> logs{0.0, 0.0};  // logs[n] = ln n (n >= 1)
    double sigma = std::numeric_limits<double>::quiet_NaN();
    std::vector<double> npow;

    void ensure(std::size_t n_max, double sig) {
        if (logs.size() <= n_max) {
            std::size_t old = logs.size();
            logs.resize(n_max + 1);
            for (std::size_t n = old; n <= n_max; ++n)
                logs[n] = std::log(static_cast<double>(n));
        }
        std::size_t start = 1;
        if (sigma == sig && npow.size() > 1) {
            if (npow.size() > n_max) return;
            start = npow.size();  // same abscissa: extend, don't rebuild
        }
        sigma = sig;
        npow.resize(n_max + 1);
        npow[0] = 0.0;
        for (std::size_t n = start; n <= n_max; ++n)
            npow[n] = std::exp(-sig * logs[n]);
    }
};
thread_local EmTables em_tables;

struct EmOut {
    cplx value;
    cplx deriv;
    double tail = 0.0;     // Euler-Maclaurin remainder bound
    double mag = 0.0;      // magnitude scale for the roundoff floor
    int terms = 0;
};

// Euler-Maclaurin for zeta(s, q) with K Bernoulli corrections:
//   sum_{n=0}^{N-1} (n+q)^{-s} + (N+q)^{1-s}/(s-1) + (N+q)^{-s}/2
//   + sum_k B_{2k}/(2k)! * s(s+1)..(s+2k-2) * (N+q)^{-s-2k+1}.
// q = 1 gives the Riemann case (main sum over n = 1..N-1 plus boundary N).
// The value and its s-derivative are accumulated together, the derivative by
// term-wise differentiation with a product-rule recurrence for the rising
// factors (never divided back out, so s + j = 0 is harmless).
EmOut em_core(cplx s, double q, std::size_t N, int K) {
    EmOut out;
    ComplexSum val, der;
    NeumaierSum abs_acc;
    double t = s.imag();

    if (q == 1.0) {
        EmTables& tab = em_tables;
        tab.ensure(N, s.real());
        for (std::size_t n = 1; n < N; ++n) {
            cplx term = tab.npow[n] * cis(-t * tab.logs[n]);
            val.add(term);
            der.add(-tab.logs[n] * term);
            abs_acc.add(tab.npow[n]);
        }
    } else {
        for (std::size_t n = 0; n + 1 <= N; ++n) {
            double base = static_cast<double>(n) + q;
            double lb = std::log(base);
            cplx term = std::exp(-s.real() * lb) * cis(-t * lb);
            val.add(term);
            der.add(-lb * term);
            abs_acc.add(std::abs(term));
        }
    }

    double U = static_cast<double>(N) + (q == 1.0 ? 0.0 : q);
    double logU = std::log(U);
    cplx Upow = std::exp(-s * logU);  // U^{-s}
    cplx sm1 = s - 1.0;

    // U^{1-s}/(s-1) and its derivative.
    cplx T1 = Upow * U / sm1;
    val.add(T1);
    der.add(-logU * T1 - T1 / sm1);
    abs_acc.add(std::abs(T1));

    cplx T2 = 0.5 * Upow;
    val.add(T2);
    der.add(-logU * T2);
    abs_acc.add(std::abs(T2));

    // Rising product P = s(s+1)...(s+j) maintained with its derivative.
    cplx P = 1.0, dP = 0.0;
    int j = 0;  // next factor to absorb is (s + j)
    double fact = 1.0;  // (2k)!
    for (int k = 1; k <= K; ++k) {
        // absorb factors up to (s + 2k - 2)
        while (j <= 2 * k - 2) {
            cplx Pold = P;
            P *= (s + static_cast<double>(j));
            dP = dP * (s + static_cast<double>(j)) + Pold;
            ++j;
        }
        fact *= (2.0 * k - 1.0) * (2.0 * k);
        cplx scale = std::exp(-(s + (2.0 * k - 1.0)) * logU);
        cplx term = (BERNOULLI[k - 1] / fact) * P * scale;
        val.add(term);
        der.add((BERNOULLI[k - 1] / fact) * (dP - logU * P) * scale);
        abs_acc.add(std::abs(term));
    }

    // Remainder bound: first omitted correction term times |s+2K+1|/(sigma+2K+1).
    {
        cplx Pn = P;
        while (j <= 2 * K) {
            Pn *= (s + static_cast<double>(j));
            ++j;
        }
        double factn = fact * (2.0 * K + 1.0) * (2.0 * K + 2.0);
        double sig_shift = s.real() + 2.0 * K + 1.0;
        double safety =
            sig_shift > 0.0 ? std::abs(s + (2.0 * K + 1.0)) / sig_shift : 10.0;
        out.tail = std::abs(BERNOULLI[K] / factn * Pn *
                            std::exp(-(s + (2.0 * K + 1.0)) * logU)) *
                   safety;
    }

    out.value = val.value();
    out.deriv = der.value();
    out.mag = abs_acc.value();
    out.terms = static_cast<int>(N) + K + 2;
    return out;
}

// Shared guards + adaptive N escalation for the direct region.
EmOut zeta_em(cplx s, double q, double target) {
    double t = s.imag();
    std::size_t N = std::max<std::size_t>(
        30, static_cast<std::size_t>(std::ceil(2.0 * std::abs(t))));
    constexpr int K = 12;
    for (;;) {
        EmOut out = em_core(s, q, N, K);
        // Roundoff floor: each summand exp(-s log n) carries a phase error of
        // about |t| ulps of log n, so the achievable absolute accuracy
        // degrades with both the accumulated magnitude and the height.
        double roundoff = 1e-15 * (1.0 + out.mag) * (1.0 + 0.5 * std::abs(t));
        // Once the truncation tail is below the roundoff floor, more terms
        // cannot improve the result: return with the honest (floor-dominated)
        // error estimate.
        bool at_floor = out.tail <= roundoff;
        out.tail += roundoff;
        if (out.tail <= target || at_floor) return out;
        if (N >= 1'000'000) throw PrecisionUnreachable(
            "euler-maclaurin tail above target at maximum term count");
        N *= 2;
    }
}

// Reflection routing: left of the strip the direct sum's phase-noise floor
// (growing with |t| times the accumulated magnitude) quickly exceeds what
// the reflected path achieves, so reflect off-axis as soon as sigma < 0.
// Near the real axis stay direct down to -2: the reflected derivative
// factors hit cot/digamma poles at the real even integers, and phase noise
// is harmless at small |t|.
bool reflect_left(cplx s) {
    return s.real() < (std::abs(s.imag()) > 0.5 ? 0.0 : -2.0);
}

void window_guard(cplx s) {
    if (std::abs(s.imag()) > HEIGHT_WINDOW)
        throw OverflowRisk("evaluation outside supported height window |t| <= 5e4");
}

// Branch-safe log sin for large |Im|, imaginary part mod 2*pi.
cplx log_sin_mod2pi(cplx w) {
    double v = w.imag();
    const cplx I{0.0, 1.0};
    if (std::abs(v) <= 20.0) return std::log(std::sin(w));
    if (v > 0.0) {
        // sin w = (i/2) e^{-iw} (1 - e^{2iw})
        cplx small = std::exp(2.0 * I * w);
        return std::log(cplx{0.0, 0.5}) - I * w + std::log(1.0 - small);
    }
    cplx small = std::exp(-2.0 * I * w);
    return std::log(cplx{0.0, -0.5}) + I * w + std::log(1.0 - small);
}

cplx cot(cplx w) {
    double v = w.imag();
    const cplx I{0.0, 1.0};
    if (v > 20.0) {
        cplx q = std::exp(2.0 * I * w);
        return I * (q + 1.0) / (q - 1.0);
    }
    if (v < -20.0) {
        cplx q = std::exp(-2.0 * I * w);
        return I * (1.0 + q) / (1.0 - q);
    }
    return std::cos(w) / std::sin(w);
}

double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace

cplx log_gamma_mod2pi(cplx z) {
    // Upward recurrence until |z| >= 10, then Stirling.  Each log may sit on
    // any branch: the imaginary part is only meaningful mod 2*pi.
    cplx shift{0.0, 0.0};
    while (std::abs(z) < 10.0) {
        if (std::abs(z - std::round(z.real())) < 1e-12 && z.real() <= 0.5)
            throw PoleAtNonpositiveInteger("log_gamma at non-positive integer");
        shift -= std::log(z);
        z += 1.0;
    }
    cplx lz = std::log(z);
    cplx out = (z - 0.5) * lz - z + 0.5 * std::log(2.0 * M_PI);
    cplx zinv2 = 1.0 / (z * z);
    cplx zp = 1.0 / z;
    for (int k = 1; k <= 8; ++k) {
        out += BERNOULLI[k - 1] / ((2.0 * k) * (2.0 * k - 1.0)) * zp;
        zp *= zinv2;
    }
    return out + shift;
}

cplx log_chi_factor_mod2pi(cplx s) {
    window_guard(s);
    return s * std::log(2.0) + (s - 1.0) * std::log(M_PI) +
           log_gamma_mod2pi(1.0 - s) + log_sin_mod2pi(0.5 * M_PI * s);
}

EvalResult chi_factor(cplx s) {
    window_guard(s);
    // Real even integers: finite limits (trivial zeros on the left, the
    // Gamma-pole/sin-zero cancellation on the right).
    if (std::abs(s.imag()) < 1e-8) {
        double r = std::round(s.real() / 2.0) * 2.0;
        if (std::abs(s.real() - r) < 1e-8 && std::abs(r) > 0.5) {
            long k = std::lround(r / 2.0);
            if (k < 0) return {cplx{0.0, 0.0}, 1e-15, 1};
            // X(2k) = (-1)^k 2^{2k-1} pi^{2k} / (2k-1)!
            double v = ((k % 2 == 0) ? 1.0 : -1.0) *
                       std::pow(2.0, 2.0 * k - 1.0) *
                       std::pow(M_PI, 2.0 * k) / factorial(2 * static_cast<int>(k) - 1);
            return {cplx{v, 0.0}, std::abs(v) * 1e-13, 1};
        }
        double ro = std::round((s.real() - 1.0) / 2.0) * 2.0 + 1.0;
        if (ro > 0.5 && std::abs(s.real() - ro) < 1e-10)
            throw NearSingularity("chi_factor pole at positive odd integer");
    }
    cplx lc = log_chi_factor_mod2pi(s);
    if (lc.real() > 700.0) throw OverflowRisk("chi_factor magnitude overflows binary64");
    cplx v = std::exp(lc);
    return {v, std::abs(v) * 1e-12, 1};
}

EvalResult zeta(cplx s, double target_abs_err) {
    if (!(target_abs_err > 0.0)) throw PreconditionViolated("target_abs_err <= 0");
    window_guard(s);
    if (std::abs(s - 1.0) < 1e-12) throw PoleAtOne("zeta pole at s = 1");
    if (!reflect_left(s)) {
        EmOut out = zeta_em(s, 1.0, target_abs_err);
        return {out.value, out.tail, out.terms};
    }
    // Functional equation zeta(s) = X(s) zeta(1-s); 1-s has Re > 1.
    EvalResult chi = chi_factor(s);
    double sub_target = target_abs_err / std::max(1.0, 2.0 * std::abs(chi.value));
    EmOut rhs = zeta_em(1.0 - s, 1.0, sub_target);
    cplx v = chi.value * rhs.value;
    double err = std::abs(chi.value) * rhs.tail + chi.est_abs_error * std::abs(rhs.value);
    return {v, err, rhs.terms};
}

EvalResult zeta_deriv(cplx s, double target_abs_err) {
    if (!(target_abs_err > 0.0)) throw PreconditionViolated("target_abs_err <= 0");
    window_guard(s);
    if (std::abs(s - 1.0) < 1e-12) throw PoleAtOne("zeta pole at s = 1");
    if (!reflect_left(s)) {
        EmOut out = zeta_em(s, 1.0, target_abs_err);
        double logN = std::log(static_cast<double>(std::max<int>(out.terms, 30)));
        return {out.deriv, out.tail * (logN + 1.0), out.terms};
    }
    // zeta'(s) = X(s) [ dlogX(s) * zeta(1-s) - zeta'(1-s) ].
    EvalResult chi = chi_factor(s);
    cplx dlogchi = std::log(2.0) + std::log(M_PI) - digamma(1.0 - s).value +
                   0.5 * M_PI * cot(0.5 * M_PI * s);
    double sub_target =
        target_abs_err / std::max(1.0, 2.0 * std::abs(chi.value) * (1.0 + std::abs(dlogchi)));
    EmOut rhs = zeta_em(1.0 - s, 1.0, sub_target);
    cplx v = chi.value * (dlogchi * rhs.value - rhs.deriv);
    double err = std::abs(chi.value) * rhs.tail * (1.0 + std::abs(dlogchi)) +
                 chi.est_abs_error * (std::abs(rhs.value) + std::abs(rhs.deriv));
    return {v, err, rhs.terms};
}

EvalResult zeta_log_deriv(cplx s, double target_abs_err) {
    window_guard(s);
    if (std::abs(s - 1.0) < 1e-6)
        throw NearSingularity("zeta_log_deriv within 1e-6 of the pole");
    if (!reflect_left(s)) {
        EmOut out = zeta_em(s, 1.0, std::min(1e-10, target_abs_err));
        double az = std::abs(out.value);
        double adz = std::abs(out.deriv);
        // Newton quotient approximates the distance to the nearest zero.
        if (az < 1e-6 * std::max(1.0, adz))
            throw NearSingularity("zeta_log_deriv within 1e-6 of a zero");
        cplx v = out.deriv / out.value;
        double logN = std::log(static_cast<double>(std::max<int>(out.terms, 30)));
        double err = out.tail * (logN + 1.0 + std::abs(v)) / az;
        return {v, err, out.terms};
    }
    // Reflected form: -zeta'/zeta(1-s) + log pi - psi(s/2)/2 - psi((1-s)/2)/2.
    try {
        EvalResult inner = zeta_log_deriv(1.0 - s, target_abs_err);
        cplx v = -inner.value + std::log(M_PI) - 0.5 * digamma(0.5 * s).value -
                 0.5 * digamma(0.5 * (1.0 - s)).value;
        return {v, inner.est_abs_error + 1e-12, inner.terms_used};
    } catch (const PoleAtNonpositiveInteger&) {
        throw NearSingularity("zeta_log_deriv at a trivial zero");
    }
}

EvalResult digamma(cplx s) {
    if (std::abs(s.imag()) < 1e-8) {
        double r = std::round(s.real());
        if (r <= 0.0 && std::abs(s.real() - r) < 1e-8)
            throw PoleAtNonpositiveInteger("digamma pole");
    }
    cplx shift{0.0, 0.0};
    int steps = 0;
    while (std::abs(s) < 10.0) {
        shift -= 1.0 / s;
        s += 1.0;
        if (++steps > 64) throw PreconditionViolated("digamma recurrence runaway");
    }
    cplx out = std::log(s) - 0.5 / s;
    cplx zinv2 = 1.0 / (s * s);
    cplx zp = zinv2;
    for (int k = 1; k <= 7; ++k) {
        out -= BERNOULLI[k - 1] / (2.0 * k) * zp;
        zp *= zinv2;
    }
    return {out + shift, 1e-13 * (1.0 + std::abs(out + shift)), steps + 8};
}

EvalResult hurwitz_zeta(cplx s, double q, double target_abs_err) {
    if (!(q > 0.0) || q > 1.0) throw OutOfRange("hurwitz_zeta: need 0 < q <= 1");
    window_guard(s);
    if (std::abs(s - 1.0) < 1e-12) throw PoleAtOne("hurwitz_zeta pole at s = 1");
    if (s.real() < -2.0)
        throw UnsupportedRange("hurwitz_zeta supported for Re s >= -2");
    if (q == 1.0) return zeta(s, target_abs_err);
    EmOut out = zeta_em(s, q, target_abs_err);
    return {out.value, out.tail, out.terms};
}

EvalResult l_function(cplx s, const chars::Character& chi) {
    u64 x = chi.modulus;
    if (x < 3 || x > 101) throw OutOfRange("l_function: modulus out of range");
    if (chi.principal()) {
        // L(s, chi0) = zeta(s) (1 - x^{-s}); inherits the zeta pole.
        EvalResult z = zeta(s, 1e-12);
        cplx factor = 1.0 - std::exp(-s * std::log(static_cast<double>(x)));
        return {z.value * factor, z.est_abs_error * std::abs(factor) + 1e-14,
                z.terms_used};
    }
    cplx xs = std::exp(-s * std::log(static_cast<double>(x)));  // x^{-s}
    if (std::abs(s - 1.0) < 1e-8) {
        // Pole cancellation across the Hurwitz terms: L(1, chi) =
        // -(1/x) sum_a chi(a) psi(a/x).
        ComplexSum acc;
        for (u64 a = 1; a < x; ++a)
            acc.add(chi.values[a] *
                    digamma(cplx{static_cast<double>(a) / static_cast<double>(x), 0.0})
                        .value);
        return {-acc.value() / static_cast<double>(x), 1e-12, static_cast<int>(x)};
    }
    ComplexSum acc;
    double err = 0.0;
    int terms = 0;
    for (u64 a = 1; a < x; ++a) {
        EvalResult h =
            hurwitz_zeta(s, static_cast<double>(a) / static_cast<double>(x), 1e-12);
        acc.add(chi.values[a] * h.value);
        err += h.est_abs_error;
        terms += h.terms_used;
    }
    return {xs * acc.value(), std::abs(xs) * err + 1e-14, terms};
}

}  // namespace zetalab
