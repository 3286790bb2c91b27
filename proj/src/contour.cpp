#include "zetalab/contour.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

#include <json.hpp>

#include "zetalab/errors.hpp"
#include "zetalab/summation.hpp"
#include "zetalab/zeta.hpp"

namespace zetalab::contour {

namespace {

using u64 = std::uint64_t;
using json = nlohmann::json;

constexpr double PI = 3.14159265358979323846;
constexpr double TWO_PI = 6.28318530717958647692;

inline cplx cis(double t) { return {std::cos(t), std::sin(t)}; }

// Gauss-Kronrod 7-15 nodes and weights on [-1, 1] (QUADPACK qk15).
// xgk[1], xgk[3], ... are the embedded 7-point Gauss nodes.
constexpr double XGK[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.000000000000000};
constexpr double WGK[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
constexpr double WG[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469};

struct Panel {
    double t0 = 0.0, t1 = 0.0;  // segment parameters in [0, 1]
    cplx value{0.0, 0.0};
    double err = 0.0;
};

struct PanelWorse {
    bool operator()(const Panel& a, const Panel& b) const {
        return a.err < b.err;
    }
};

double dist_point_segment(cplx p, cplx a, cplx b) {
    cplx d = b - a;
    double len2 = std::norm(d);
    if (len2 == 0.0) return std::abs(p - a);
    double t = ((p.real() - a.real()) * d.real() +
                (p.imag() - a.imag()) * d.imag()) /
               len2;
    t = std::clamp(t, 0.0, 1.0);
    return std::abs(a + t * d - p);
}

// One Gauss-Kronrod evaluation of int f(from + tau*dir) dtau over [t0, t1],
// premultiplied by dir at the end by the caller.
Panel evaluate_panel(const std::function<cplx(const cplx&)>& f, cplx from,
                     cplx dir, double t0, double t1) {
    double h = 0.5 * (t1 - t0);
    double mid = 0.5 * (t0 + t1);
    cplx k15{0.0, 0.0}, g7{0.0, 0.0};
    for (int j = 0; j < 8; ++j) {
        if (j == 7) {
            cplx fc = f(from + mid * dir);
            k15 += WGK[7] * fc;
            g7 += WG[3] * fc;
        } else {
            cplx fp = f(from + (mid + h * XGK[j]) * dir);
            cplx fm = f(from + (mid - h * XGK[j]) * dir);
            k15 += WGK[j] * (fp + fm);
            if (j % 2 == 1) g7 += WG[j / 2] * (fp + fm);
        }
    }
    Panel p;
    p.t0 = t0;
    p.t1 = t1;
    p.value = h * k15;
    p.err = std::abs(h * (k15 - g7));
    return p;
}

}  // namespace

QuadratureResult segment_integral(const Integrand& g, cplx from, cplx to,
                                  double tol) {
    const double length = std::abs(to - from);
    if (!(length > 0.0))
        throw PreconditionViolated("segment_integral: zero-length segment");
    for (const cplx& p : g.poles)
        if (dist_point_segment(p, from, to) < 1e-3)
            throw SingularityTooClose(
                "segment_integral: singularity within 10^-3 of the path");

    double freq = std::max(g.frequency, 1e-3);
    double panel_len = std::min(length, PI / (4.0 * freq));
    std::size_t n0 = static_cast<std::size_t>(std::ceil(length / panel_len));
    if (n0 > 200000)
        throw OscillationTooFast(
            "segment_integral: initial panel count above 2*10^5");

    cplx dir = to - from;
    long evals = 0;
    const long MAX_EVALS = 4000000;

    std::priority_queue<Panel, std::vector<Panel>, PanelWorse> heap;
    double total_err = 0.0;
    cplx total{0.0, 0.0};
    for (std::size_t k = 0; k < n0; ++k) {
        double t0 = static_cast<double>(k) / static_cast<double>(n0);
        double t1 = static_cast<double>(k + 1) / static_cast<double>(n0);
        Panel p = evaluate_panel(g.f, from, dir, t0, t1);
        evals += 15;
        total_err += p.err;
        total += p.value;
        heap.push(p);
    }

    // Errors scale with |dir| once premultiplied; compare in premultiplied
    // units throughout.
    while (total_err * std::abs(dir) > tol) {
        if (evals >= MAX_EVALS)
            throw MaxEvalExceeded(
                "segment_integral: error target unreached within the "
                "evaluation budget");
        Panel worst = heap.top();
        heap.pop();
        if (worst.t1 - worst.t0 < 1e-13)
            throw MaxEvalExceeded(
                "segment_integral: panel underflow before reaching the "
                "error target");
        total_err -= worst.err;
        total -= worst.value;
        double tm = 0.5 * (worst.t0 + worst.t1);
        Panel left = evaluate_panel(g.f, from, dir, worst.t0, tm);
        Panel right = evaluate_panel(g.f, from, dir, tm, worst.t1);
        evals += 30;
        total_err += left.err + right.err;
        total += left.value + right.value;
        heap.push(left);
        heap.push(right);
    }

    QuadratureResult r;
    r.value = dir * total;
    r.est_error = total_err * std::abs(dir);
    r.evaluations = evals;
    return r;
}

cplx circle_mean(const std::function<cplx(const cplx&)>& f, cplx center,
                 double radius, int points) {
    if (points < 8) throw PreconditionViolated("circle_mean: too few points");
    ComplexSum acc;
    for (int k = 0; k < points; ++k) {
        double th = TWO_PI * static_cast<double>(k) / points;
        cplx w = cis(th);
        acc.add(f(center + radius * w) * w);
    }
    return acc.value() * (radius / static_cast<double>(points));
}

// ---------------------------------------------------------------------------
// Rectangle identity
// ---------------------------------------------------------------------------

namespace {

// No ordinate lies below this height: the counting formula gives
// N(10) < 0.03, and every scan validates its count against it, so a catalog
// starting at or below 14 certifies the range (0, t_min) is zero-free.
constexpr double FIRST_ORDINATE_FLOOR = 14.0;

double zero_clearance(double T_edge) {
    double a = std::max(std::abs(T_edge), 20.0);
    return std::max(1e-3, 0.01 * TWO_PI / std::log(a / TWO_PI));
}

double nearest_signed_ordinate(const zeros::ZeroCatalog& cat, double T_edge) {
    double best = 1e300;
    for (const auto& e : cat.entries) {
        best = std::min(best, std::abs(T_edge - e.ordinate));
        best = std::min(best, std::abs(T_edge + e.ordinate));
    }
    return best;
}

void require_coverage(const zeros::ZeroCatalog& cat, double lo, double hi) {
    if (hi <= lo || hi <= 0.0) return;  // empty positive range
    lo = std::max(lo, 0.0);
    if (cat.t_max < hi)
        throw CatalogGap("rectangle: catalog top below the window edge");
    if (lo < cat.t_min && cat.t_min > FIRST_ORDINATE_FLOOR)
        throw CatalogGap("rectangle: catalog bottom above the window edge");
}

}  // namespace

RectangleReport rectangle_identity_check(double y1, double y2,
                                         std::uint64_t x, double T1, double T2,
                                         const zeros::ZeroCatalog& catalog,
                                         const RectangleOptions& options) {
    if (!arith::is_prime(x))
        throw NotPrime("rectangle: twist modulus must be prime");
    if (std::abs(y1) < 1e-9 || std::abs(y2) < 1e-9)
        throw InvalidShift("rectangle: shifts must be nonzero");
    if (!(T2 > T1 + 0.5))
        throw InvalidWindow("rectangle: need T2 > T1 + 0.5");

    const double lx = std::log(static_cast<double>(x));
    double c = options.right_abscissa.value_or(1.0 + 1.0 / lx);
    double b;
    if (options.left_abscissa) {
        b = *options.left_abscissa;
    } else {
        double Tmid = 0.5 * (T1 + T2);
        if (!(Tmid >= 5.0))
            throw PreconditionViolated(
                "rectangle: default left abscissa needs window midpoint >= 5 "
                "(override it for straddling windows)");
        b = 0.5 - 1.0 / std::log(std::log(Tmid));
    }
    if (!(b >= -1.9 && b <= 0.48))
        throw PreconditionViolated("rectangle: left abscissa outside [-1.9, 0.48]");
    if (!(c > 1.004 && c <= 3.0))
        throw PreconditionViolated("rectangle: right abscissa outside (1.004, 3]");

    RectangleReport rep;
    rep.left_abscissa = b;
    rep.right_abscissa = c;
    rep.t_bottom = T1;
    rep.t_top = T2;

    // Nudge horizontal edges outward until clear of every +-ordinate.
    for (int step = 0; step < 100; ++step) {
        if (nearest_signed_ordinate(catalog, rep.t_bottom) >=
            zero_clearance(rep.t_bottom))
            break;
        rep.t_bottom -= 0.01;
        rep.nudge_bottom += 0.01;
    }
    for (int step = 0; step < 100; ++step) {
        if (nearest_signed_ordinate(catalog, rep.t_top) >=
            zero_clearance(rep.t_top))
            break;
        rep.t_top += 0.01;
        rep.nudge_top += 0.01;
    }
    if (nearest_signed_ordinate(catalog, rep.t_bottom) <
            zero_clearance(rep.t_bottom) ||
        nearest_signed_ordinate(catalog, rep.t_top) < zero_clearance(rep.t_top))
        throw PreconditionViolated("rectangle: could not clear the edges of "
                                   "catalogued ordinates by nudging");

    // Catalog must cover every ordinate magnitude the window can contain.
    require_coverage(catalog, std::max(rep.t_bottom, 0.0),
                     std::max(rep.t_top, 0.0));
    require_coverage(catalog, std::max(-rep.t_top, 0.0),
                     std::max(-rep.t_bottom, 0.0));

    // Signed ordinates inside the open window.
    std::vector<double> signed_ords;
    for (const auto& e : catalog.entries) {
        if (rep.t_bottom < e.ordinate && e.ordinate < rep.t_top)
            signed_ords.push_back(e.ordinate);
        if (rep.t_bottom < -e.ordinate && -e.ordinate < rep.t_top)
            signed_ords.push_back(-e.ordinate);
    }
    std::sort(signed_ords.begin(), signed_ords.end());
    rep.zeros_used = static_cast<int>(signed_ords.size());
    if (rep.zeros_used > 50)
        throw PreconditionViolated("rectangle: window holds more than 50 zeros");

    const cplx I{0.0, 1.0};
    const cplx corner[4] = {{c, rep.t_bottom},
                            {c, rep.t_top},
                            {b, rep.t_top},
                            {b, rep.t_bottom}};

    // Special poles of the integrand, with their in-rectangle indicators.
    const cplx special[3] = {{1.0, 0.0}, {1.0, -y1}, {0.0, -y2}};
    bool inside[3];
    for (int k = 0; k < 3; ++k) {
        for (int e = 0; e < 4; ++e)
            if (dist_point_segment(special[k], corner[e], corner[(e + 1) % 4]) <
                1e-3)
                throw SingularityTooClose(
                    "rectangle: a pole lies within 10^-3 of an edge; the run "
                    "is rejected rather than indented");
        inside[k] = special[k].real() > b && special[k].real() < c &&
                    special[k].imag() > rep.t_bottom &&
                    special[k].imag() < rep.t_top;
    }
    rep.residue_at_one = inside[0];
    rep.residue_at_shift1 = inside[1];
    rep.residue_at_shift2 = inside[2];

    // Zero-side sum.
    ComplexSum lhs_acc;
    double lhs_err = 0.0;
    for (double g : signed_ords) {
        cplx rho{0.5, g};
        auto z1 = zeta(rho + I * y1, 1e-11);
        auto z2 = zeta(1.0 - rho - I * y2, 1e-11);
        cplx xr = std::exp(rho * lx);
        lhs_acc.add(xr * z1.value * z2.value);
        lhs_err += std::abs(xr) * (z1.est_abs_error * std::abs(z2.value) +
                                   z2.est_abs_error * std::abs(z1.value) +
                                   z1.est_abs_error * z2.est_abs_error);
        // Refined ordinates carry ~1e-9 position error; first-order effect.
        lhs_err += std::abs(xr) * 2e-9 *
                   (std::abs(z1.value) + std::abs(z2.value) + 1.0) * lx;
    }
    rep.lhs = lhs_acc.value();

    // The integrand and its singularity list.
    Integrand g;
    g.f = [lx, y1, y2](const cplx& s) {
        auto ld = zeta_log_deriv(s, 1e-9);
        auto za = zeta(s + cplx{0.0, y1}, 1e-10);
        auto zb = zeta(1.0 - s - cplx{0.0, y2}, 1e-10);
        return ld.value * za.value * zb.value * std::exp(s * lx);
    };
    g.poles.assign(special, special + 3);
    g.poles.push_back({-2.0, 0.0});  // trivial zero of the log-derivative
    g.poles.push_back({-4.0, 0.0});
    for (double o : signed_ords) g.poles.push_back({0.5, o});
    // Ordinates just outside the window still matter for edge proximity.
    for (const auto& e : catalog.entries)
        for (double o : {e.ordinate, -e.ordinate})
            if ((std::abs(o - rep.t_bottom) < 2.0 ||
                 std::abs(o - rep.t_top) < 2.0) &&
                !(rep.t_bottom < o && o < rep.t_top))
                g.poles.push_back({0.5, o});

    double t_abs = std::max(std::abs(rep.t_bottom), std::abs(rep.t_top));
    g.frequency =
        lx + 3.0 * std::max(0.0, std::log((t_abs + 3.0) / TWO_PI)) + 1.0;

    const double tol_edge = 2.5e-7;
    ComplexSum rhs_acc;
    double quad_err = 0.0;
    long evals = 0;
    for (int e = 0; e < 4; ++e) {
        QuadratureResult q =
            segment_integral(g, corner[e], corner[(e + 1) % 4], tol_edge);
        rep.edges[e] = q.value / (TWO_PI * I);
        rhs_acc.add(rep.edges[e]);
        quad_err += q.est_error / TWO_PI;
        evals += q.evaluations;
    }
    rep.evaluations = evals;

    // Indicator-gated residues.
    ComplexSum delta;
    double res_err = 0.0;
    if (inside[0]) {
        auto za = zeta(cplx{1.0, y1}, 1e-11);
        auto zb = zeta(cplx{0.0, -y2}, 1e-11);
        delta.add(-za.value * zb.value * static_cast<double>(x));
        res_err += (za.est_abs_error + zb.est_abs_error) *
                   static_cast<double>(x) * 10.0;
    }
    if (inside[1]) {
        auto ld = zeta_log_deriv(cplx{1.0, -y1}, 1e-10);
        auto zv = zeta(cplx{0.0, y1 - y2}, 1e-11);
        cplx xp = std::exp(cplx{1.0, -y1} * lx);
        delta.add(ld.value * zv.value * xp);
        res_err += (ld.est_abs_error * std::abs(zv.value) +
                    zv.est_abs_error * std::abs(ld.value)) *
                   std::abs(xp);
    }
    if (inside[2]) {
        auto ld = zeta_log_deriv(cplx{0.0, -y2}, 1e-10);
        auto zv = zeta(cplx{0.0, y1 - y2}, 1e-11);
        cplx xp = std::exp(cplx{0.0, -y2} * lx);
        delta.add(-ld.value * zv.value * xp);
        res_err += (ld.est_abs_error * std::abs(zv.value) +
                    zv.est_abs_error * std::abs(ld.value)) *
                   std::abs(xp);
    }
    rep.residue_correction = delta.value();
    rep.rhs = rhs_acc.value() - rep.residue_correction;

    rep.residual = std::abs(rep.lhs - rep.rhs);
    rep.est_error = quad_err + lhs_err + res_err;
    rep.tolerance = std::max(1e-6, rep.est_error);
    rep.passed = rep.residual <= rep.tolerance;
    return rep;
}

std::string RectangleReport::to_json() const {
    json j;
    j["check"] = "rectangle_identity";
    j["left_abscissa"] = left_abscissa;
    j["right_abscissa"] = right_abscissa;
    j["t_bottom"] = t_bottom;
    j["t_top"] = t_top;
    j["nudge_bottom"] = nudge_bottom;
    j["nudge_top"] = nudge_top;
    j["lhs"] = {lhs.real(), lhs.imag()};
    j["rhs"] = {rhs.real(), rhs.imag()};
    j["edges"] = json::array();
    for (int e = 0; e < 4; ++e)
        j["edges"].push_back({edges[e].real(), edges[e].imag()});
    j["residue_correction"] = {residue_correction.real(),
                               residue_correction.imag()};
    j["residue_at_one"] = residue_at_one;
    j["residue_at_shift1"] = residue_at_shift1;
    j["residue_at_shift2"] = residue_at_shift2;
    j["zeros_used"] = zeros_used;
    j["residual"] = residual;
    j["tolerance"] = tolerance;
    j["est_error"] = est_error;
    j["evaluations"] = evaluations;
    j["passed"] = passed;
    return j.dump();
}

// ---------------------------------------------------------------------------
// Stationary-phase integral
// ---------------------------------------------------------------------------

GonekReport gonek_check(double a, double b, double sigma, double u, int m) {
    if (!(a >= 10.0 && b > a && 10.0 * a >= b && b <= 2000.0))
        throw PreconditionViolated("gonek: need 10a >= b > a >= 10, b <= 2000");
    if (!(sigma >= 0.1 && sigma <= 10.0))
        throw PreconditionViolated("gonek: sigma outside [1/10, 10]");
    if (m != 0 && m != 1)
        throw PreconditionViolated("gonek: m must be 0 or 1");
    if (!(u >= 1.0))
        throw PreconditionViolated("gonek: need u >= 1");

    Integrand f;
    f.f = [sigma, u, m](const cplx& s) {
        double t = s.real();
        double phase = t * std::log(t / (u * 2.718281828459045235));
        cplx osc = cis(phase);
        double amp = std::pow(t / TWO_PI, sigma - 0.5);
        if (m == 1) amp *= std::log(t / TWO_PI);
        return osc * amp;
    };
    f.frequency =
        std::max(std::abs(std::log(a / u)), std::abs(std::log(b / u))) + 1.0;

    double amp_scale = std::max(std::pow(a / TWO_PI, sigma - 0.5),
                                std::pow(b / TWO_PI, sigma - 0.5)) *
                       (m == 1 ? std::log(b / TWO_PI) : 1.0);
    double tol = std::max(1e-10, 1e-9 * amp_scale * (b - a));

    QuadratureResult q = segment_integral(f, {a, 0.0}, {b, 0.0}, tol);

    GonekReport rep;
    rep.numeric = q.value;
    rep.evaluations = q.evaluations;

    bool in_range = a < u && u <= b;
    if (in_range) {
        double lm = (m == 1) ? std::log(u / TWO_PI) : 1.0;
        rep.main_term = std::pow(TWO_PI, 1.0 - sigma) * std::pow(u, sigma) *
                        cis(-(u - PI / 4.0)) * lm;
    }
    double E = std::pow(a, sigma - 0.5) +
               std::pow(a, sigma + 0.5) / (std::abs(a - u) + std::sqrt(a)) +
               std::pow(b, sigma + 0.5) / (std::abs(b - u) + std::sqrt(b));
    rep.err_shape = E * std::pow(std::log(a), m);
    rep.K = std::abs(rep.numeric - rep.main_term) / rep.err_shape;
    rep.passed = rep.K <= 10.0;
    return rep;
}

std::string GonekReport::to_json() const {
    json j;
    j["check"] = "stationary_phase";
    j["numeric"] = {numeric.real(), numeric.imag()};
    j["main_term"] = {main_term.real(), main_term.imag()};
    j["err_shape"] = err_shape;
    j["K"] = K;
    j["evaluations"] = evaluations;
    j["passed"] = passed;
    return j.dump();
}

// ---------------------------------------------------------------------------
// Truncated Perron formula
// ---------------------------------------------------------------------------

namespace {

// alpha(s) for a family, as the closed-form product of zeta factors.
cplx family_series(const arith::CoefficientFamily& fam, const cplx& s) {
    const cplx I{0.0, 1.0};
    switch (fam.kind) {
        case arith::CoefficientFamily::Kind::unit:
            return zeta(s, 1e-9).value;
        case arith::CoefficientFamily::Kind::pair_unit:
            return zeta(s, 1e-9).value *
                   zeta(s - I * fam.alpha, 1e-9).value;
        case arith::CoefficientFamily::Kind::triple_lambda:
        default:
            return -zeta_log_deriv(s, 1e-8).value *
                   zeta(s - I * fam.alpha, 1e-9).value *
                   zeta(s - I * fam.beta, 1e-9).value;
    }
}

// Closed-form upper bound for sum |b_n| n^{-s0}.
double family_series_majorant(const arith::CoefficientFamily& fam, double s0) {
    double z = zeta(cplx{s0, 0.0}, 1e-11).value.real();
    switch (fam.kind) {
        case arith::CoefficientFamily::Kind::unit:
            return z;
        case arith::CoefficientFamily::Kind::pair_unit:
            return z * z;  // |b_n| <= d(n)
        case arith::CoefficientFamily::Kind::triple_lambda:
        default:
            // |b_n| <= sum_{abc=n} Lambda(a) = d(n) log(n) / 2, whose series
            // is -zeta'(s) zeta(s).
            return -zeta_deriv(cplx{s0, 0.0}, 1e-11).value.real() * z;
    }
}

}  // namespace

PerronReport perron_check(const arith::CoefficientFamily& family, double X,
                          double W) {
    if (!(X >= 3.0 && X <= 1e5))
        throw PreconditionViolated("perron: need 3 <= X <= 10^5");
    if (!(W >= 10.0))
        throw PreconditionViolated("perron: need W >= 10");
    if (std::abs(X - std::round(X)) < 1e-9) X += 0.5;

    PerronReport rep;
    rep.X = X;
    rep.W = W;
    const double s0 = 1.0 + 1.0 / std::log(X);
    const cplx I{0.0, 1.0};

    const auto n_top = static_cast<std::size_t>(std::floor(2.0 * X));
    std::vector<cplx> bn = arith::coefficient_prefix(family, n_top);

    ComplexSum exact;
    for (std::size_t n = 1; n <= static_cast<std::size_t>(std::floor(X)); ++n)
        exact.add(bn[n]);
    rep.exact_sum = exact.value();

    Integrand f;
    double lX = std::log(X);
    f.f = [&family, lX](const cplx& s) {
        return family_series(family, s) * std::exp(s * lX) / s;
    };
    f.poles = {{0.0, 0.0},
               {1.0, 0.0},
               {1.0, family.alpha},
               {1.0, family.beta}};
    f.frequency = lX + std::max(0.0, std::log((W + 3.0) / TWO_PI)) + 1.0;

    QuadratureResult q =
        segment_integral(f, cplx{s0, -W}, cplx{s0, W}, 1e-4);
    rep.integral = q.value / (TWO_PI * I);
    rep.evaluations = q.evaluations;
    rep.r1_observed = std::abs(rep.exact_sum - rep.integral);

    NeumaierSum near_diag;
    for (std::size_t n = static_cast<std::size_t>(std::floor(X / 2.0)) + 1;
         n < n_top + 1 && static_cast<double>(n) < 2.0 * X; ++n) {
        if (static_cast<double>(n) <= X / 2.0) continue;
        double w = X / (W * std::abs(X - static_cast<double>(n)));
        near_diag += std::abs(bn[n]) * std::min(1.0, w);
    }
    rep.r1_bound = near_diag.value() +
                   std::pow(4.0 * X, s0) / W * family_series_majorant(family, s0) +
                   1.0;
    rep.K = rep.r1_observed / rep.r1_bound;
    rep.passed = rep.K <= 5.0;
    return rep;
}

std::string PerronReport::to_json() const {
    json j;
    j["check"] = "perron";
    j["X"] = X;
    j["W"] = W;
    j["exact_sum"] = {exact_sum.real(), exact_sum.imag()};
    j["integral"] = {integral.real(), integral.imag()};
    j["r1_observed"] = r1_observed;
    j["r1_bound"] = r1_bound;
    j["K"] = K;
    j["evaluations"] = evaluations;
    j["passed"] = passed;
    return j.dump();
}

// ---------------------------------------------------------------------------
// Residue packs
// ---------------------------------------------------------------------------

namespace {

// Log-derivative of the principal-character series: zeta'/zeta(s) plus the
// removed Euler factor's contribution  log(x) x^{-s} / (1 - x^{-s}).
cplx principal_log_deriv(const cplx& s, u64 x) {
    double lx = std::log(static_cast<double>(x));
    cplx xs = std::exp(-s * lx);
    return zeta_log_deriv(s, 1e-10).value + lx * xs / (1.0 - xs);
}

}  // namespace

cplx residue_pack(Pack which, double X, std::uint64_t x, double y1, double y2,
                  const chars::Character* chi, double beta) {
    if (!(X > 1.0))
        throw PreconditionViolated("residue_pack: need X > 1");
    if (std::abs(y1) < 1e-9 || std::abs(y2) < 1e-9 ||
        std::abs(y1 - y2) < 1e-9)
        throw DegenerateShifts(
            "residue_pack: shifts must be nonzero and distinct");

    const cplx I{0.0, 1.0};
    const double alpha = y2 - y1;
    const double lX = std::log(X);
    auto Xp = [&](const cplx& e) { return std::exp(e * lX); };

    switch (which) {
        case Pack::S4: {
            cplx p1{1.0, alpha};
            return zeta(p1, 1e-11).value * Xp(p1) / p1 +
                   zeta(cplx{1.0, -alpha}, 1e-11).value * X;
        }
        case Pack::S3: {
            cplx p1{1.0, -y1};
            cplx p2{1.0, alpha};
            cplx t1 = -zeta(cplx{1.0, -y2}, 1e-11).value *
                      zeta(cplx{1.0, -y1}, 1e-11).value * Xp(p1) / p1;
            cplx t2 = zeta_log_deriv(cplx{1.0, y2}, 1e-10).value *
                      zeta(p2, 1e-11).value * Xp(p2) / p2;
            cplx t3 = zeta_log_deriv(cplx{1.0, y1}, 1e-10).value *
                      zeta(cplx{1.0, -alpha}, 1e-11).value * X;
            return t1 + t2 + t3;
        }
        case Pack::S1: {
            if (chi == nullptr || !chi->principal() || chi->modulus != x)
                throw PreconditionViolated(
                    "residue_pack: S1 needs the principal character mod x");
            double phi_over = static_cast<double>(x - 1) / static_cast<double>(x);
            auto L = [&](const cplx& s) {
                return l_function(s, *chi).value;
            };
            cplx p1{1.0, y2};
            cplx p2{1.0, alpha};
            cplx t1 = -L(cplx{1.0, y1}) * L(cplx{1.0, y2}) * Xp(p1) / p1;
            cplx t2 = phi_over * principal_log_deriv(cplx{1.0, -y1}, x) *
                      L(p2) * Xp(p2) / p2;
            cplx t3 = phi_over * principal_log_deriv(cplx{1.0, -y2}, x) *
                      L(cplx{1.0, -alpha}) * X;
            return t1 + t2 + t3;
        }
        case Pack::S2:
        default: {
            if (chi == nullptr || chi->principal() || chi->modulus != x)
                throw PreconditionViolated(
                    "residue_pack: S2 needs a non-principal character mod x");
            for (u64 n = 0; n < x; ++n)
                if (std::abs(chi->values[n].imag()) > 1e-12)
                    throw PreconditionViolated(
                        "residue_pack: S2 needs a real (quadratic) character");
            if (!(beta > 0.5 && beta < 1.0))
                throw PreconditionViolated(
                    "residue_pack: S2 needs 1/2 < beta < 1");
            cplx p{beta, y2};
            return l_function(cplx{beta, y1}, *chi).value *
                   l_function(cplx{beta, y2}, *chi).value * Xp(p) / p;
        }
    }
}

}  // namespace zetalab::contour
