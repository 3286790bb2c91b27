// Acceptance gate: eleven end-to-end criteria, one line of verdict each.
//
// Every criterion runs to completion (no early exit) and prints [PASS] or
// [FAIL] with its measured numbers and wall time.  Two criteria (9 and 10)
// probe asymptotic trends that the implementation measures honestly and that
// do not hold at desk scale; they are expected to FAIL and are marked as
// such.  The process exit code counts criteria whose outcome DRIFTS from the
// documented expected state, so a regression in the nine passing criteria --
// or an unexpected pass of the two documented failures -- turns the suite
// red.  See README.md for the analysis behind the two expected failures.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdarg>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <iterator>
#include <random>
#include <string>
#include <vector>

#include "zetalab/arith.hpp"
#include "zetalab/characters.hpp"
#include "zetalab/contour.hpp"
#include "zetalab/correlation.hpp"
#include "zetalab/errors.hpp"
#include "zetalab/lemmas.hpp"
#include "zetalab/zeros.hpp"
#include "zetalab/zeta.hpp"

namespace {

using cplx = std::complex<double>;
using u64 = std::uint64_t;

constexpr double PI = 3.14159265358979323846;

std::string data_file(const char* name) {
    const char* dir = std::getenv("ZETALAB_TEST_DATA");
    if (dir == nullptr || *dir == '\0') {
        std::fprintf(stderr,
                     "[FAIL] ZETALAB_TEST_DATA is not set; cannot locate %s\n",
                     name);
        std::exit(1);
    }
    return std::string(dir) + "/" + name;
}

#if defined(__GNUC__)
__attribute__((format(printf, 1, 2)))
#endif
void note(const char* fmt, ...) {
    std::va_list ap;
    va_start(ap, fmt);
    std::printf("        ");
    std::vprintf(fmt, ap);
    std::printf("\n");
    va_end(ap);
}

// Catalog computed by criterion 2 and reused by criterion 7.
zetalab::zeros::ZeroCatalog g_low_catalog;
bool g_low_ready = false;

// ---------------------------------------------------------------------------
// 1. Functional-equation suite: reflection identity for zeta values on a
//    200-point grid, and for the logarithmic derivative on a 100-point grid.
// ---------------------------------------------------------------------------
bool crit_1() {
    double worst_fe = 0.0;
    int n_fe = 0;
    for (int i = 0; i < 20; ++i) {
        double sigma = -1.0 + 3.0 * i / 19.0;
        for (int j = 0; j < 10; ++j) {
            double t = 5.0 * std::pow(200.0, j / 9.0);  // 5 .. 1000
            cplx s(sigma, t);
            cplx lhs = zetalab::zeta(s, 1e-12).value;
            cplx rhs = zetalab::chi_factor(s).value *
                       zetalab::zeta(1.0 - s, 1e-12).value;
            worst_fe = std::max(worst_fe,
                                std::abs(lhs - rhs) / (1.0 + std::abs(lhs)));
            ++n_fe;
        }
    }
    bool ok_fe = n_fe == 200 && worst_fe <= 1e-8;
    note("value identity: %d points, worst scaled residual %.3g (<= 1e-8) %s",
         n_fe, worst_fe, ok_fe ? "ok" : "VIOLATED");

    // zeta'/zeta(s) + zeta'/zeta(1-s) = log pi - psi(s/2)/2 - psi((1-s)/2)/2,
    // evaluated off the critical line so no zero is within reach.
    const double sigmas[] = {0.2, 0.3, 0.4, 0.6, 0.7};
    double worst_ld = 0.0;
    int n_ld = 0;
    for (double sigma : sigmas) {
        for (int j = 0; j < 20; ++j) {
            double t = 5.0 * std::pow(200.0, j / 19.0);
            cplx s(sigma, t);
            cplx r = zetalab::zeta_log_deriv(s).value +
                     zetalab::zeta_log_deriv(1.0 - s).value -
                     std::log(PI) +
                     0.5 * zetalab::digamma(0.5 * s).value +
                     0.5 * zetalab::digamma(0.5 * (1.0 - s)).value;
            worst_ld = std::max(worst_ld, std::abs(r));
            ++n_ld;
        }
    }
    bool ok_ld = n_ld == 100 && worst_ld <= 1e-7;
    note("log-derivative identity: %d points, worst residual %.3g (<= 1e-7) %s",
         n_ld, worst_ld, ok_ld ? "ok" : "VIOLATED");
    return ok_fe && ok_ld;
}

// ---------------------------------------------------------------------------
// 2. Zero catalog: window count against the counting formula, and the first
//    twenty computed ordinates against the imported high-precision reference.
// ---------------------------------------------------------------------------
bool crit_2() {
    auto cat = zetalab::zeros::find_zeros(10.0, 5000.0);
    double expect = zetalab::zeros::expected_count(5000.0) -
                    zetalab::zeros::expected_count(10.0);
    double dev = static_cast<double>(cat.size()) - expect;
    bool ok_count = std::abs(dev) <= 1.0;
    note("window [10, 5000]: %zu zeros, formula expects %.3f, deviation %+.3f "
         "(|dev| <= 1) %s",
         cat.size(), expect, dev, ok_count ? "ok" : "VIOLATED");

    auto ref = zetalab::zeros::import_zeros(data_file("zeros_ref.txt"));
    bool ok_ref = ref.size() >= 20 && cat.size() >= 20;
    double worst = 0.0;
    if (ok_ref) {
        for (std::size_t i = 0; i < 20; ++i)
            worst = std::max(worst, std::abs(cat.entries[i].ordinate -
                                             ref.entries[i].ordinate));
        ok_ref = worst <= 1e-6;
    }
    note("first 20 ordinates vs imported reference: worst |diff| %.3g "
         "(<= 1e-6) %s",
         worst, ok_ref ? "ok" : "VIOLATED");

    g_low_catalog = std::move(cat);
    g_low_ready = true;
    return ok_count && ok_ref;
}

// ---------------------------------------------------------------------------
// 3. Exact coefficient bound: the twisted triple-convolution magnitude never
//    exceeds d(n) log n, for every n <= 1e5 and every phase triple.
// ---------------------------------------------------------------------------
bool crit_3() {
    auto v = zetalab::lemmas::check_3_14(100000);
    note("check %s over %s: worst ratio %.10f at %s, %s", v.lemma_id.c_str(),
         v.tested_domain.c_str(), v.worst_ratio, v.witness.c_str(),
         v.passed ? "zero violations" : "VIOLATED");
    return v.passed;
}

// ---------------------------------------------------------------------------
// 4. Two-term divisor average: |exact - asymptotic| within 10 units of the
//    A^{-2/3} + B^{-2/3} shape on twenty (A, B) pairs up to B = 1e7.
// ---------------------------------------------------------------------------
bool crit_4() {
    bool all = true;
    double worst_k = 0.0;
    int pairs = 0;
    for (double a_exp : {1.0, 1.5, 2.0, 2.5, 3.0}) {
        for (double b_off : {1.0, 2.0, 3.0, 0.0}) {
            double A = std::pow(10.0, a_exp);
            double B = b_off == 0.0 ? 1e7 : std::pow(10.0, a_exp + b_off);
            auto v = zetalab::lemmas::check_3_16(A, B);
            worst_k = std::max(worst_k, v.worst_ratio);
            all = all && v.passed;
            ++pairs;
        }
    }
    note("%d (A, B) pairs, B <= 1e7: worst empirical constant %.4f (<= 10) %s",
         pairs, worst_k, all ? "ok" : "VIOLATED");
    return all && pairs == 20;
}

// ---------------------------------------------------------------------------
// 5. Character identities: additive-to-multiplicative conversion, Gauss sum
//    magnitudes, the principal Gauss sum, and the twisted-triple-sum
//    decomposition computed both ways.
// ---------------------------------------------------------------------------
bool crit_5() {
    const u64 primes[] = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31};
    double worst_add = 0.0, worst_tau = 0.0, worst_tau0 = 0.0;
    for (u64 x : primes) {
        auto table = zetalab::chars::build_characters(x);
        const double sqrt_x = std::sqrt(static_cast<double>(x));
        for (std::size_t k = 1; k < table.gauss_sums.size(); ++k)
            worst_tau = std::max(
                worst_tau, std::abs(std::abs(table.gauss_sums[k]) - sqrt_x));
        const double mu = static_cast<double>(zetalab::arith::moebius(x));
        worst_tau0 =
            std::max(worst_tau0, std::abs(table.gauss_sums[0] - cplx(mu, 0.0)));
        for (u64 n = 1; n < x; ++n)
            worst_add = std::max(
                worst_add, zetalab::chars::additive_to_multiplicative_check(x, n));
    }
    bool ok_add = worst_add <= 1e-10;
    bool ok_tau = worst_tau <= 1e-10;
    bool ok_tau0 = worst_tau0 <= 1e-12;
    note("primes 3..31: additive residual %.3g (<= 1e-10) %s, "
         "|tau| vs sqrt(x) %.3g (<= 1e-10) %s, principal tau %.3g (<= 1e-12) %s",
         worst_add, ok_add ? "ok" : "VIOLATED", worst_tau,
         ok_tau ? "ok" : "VIOLATED", worst_tau0, ok_tau0 ? "ok" : "VIOLATED");

    struct KCase { u64 x; double T2, y1, y2; };
    const KCase kcases[] = {{7, 40, 1, 2},
                            {11, 25, 0.5, 1.7},
                            {13, 30, 1, 2},
                            {19, 22, 1, 2},
                            {31, 18, 0.8, 1.8}};
    bool ok_k = true;
    double worst_rel = 0.0;
    for (const auto& c : kcases) {
        auto kd = zetalab::chars::k_decomposition_check(c.x, c.T2, c.y1, c.y2);
        double rel = kd.residual / std::max(std::abs(kd.lhs), 1e-30);
        worst_rel = std::max(worst_rel, rel);
        ok_k = ok_k && rel <= 1e-6;
    }
    note("triple-sum decomposition on 5 instances: worst relative residual "
         "%.3g (<= 1e-6) %s",
         worst_rel, ok_k ? "ok" : "VIOLATED");
    return ok_add && ok_tau && ok_tau0 && ok_k;
}

// ---------------------------------------------------------------------------
// 6. Truncated Perron formula: exact coefficient sums against the vertical
//    contour on six instances, each within 5x the explicit budget; doubling
//    the integration height never widens the observed gap.
// ---------------------------------------------------------------------------
bool crit_6() {
    using Kind = zetalab::arith::CoefficientFamily::Kind;
    struct Inst {
        Kind kind;
        double alpha, beta, X, W;
        bool doubled;  // also run at 2W and compare gaps
        const char* name;
    };
    const Inst insts[] = {
        {Kind::unit, 0.0, 0.0, 50, 120, true, "unit X=50"},
        {Kind::pair_unit, 0.6, 0.0, 80, 100, true, "pair X=80 a=0.6"},
        {Kind::pair_unit, 0.0, 0.0, 100, 150, true, "pair X=100 a=0"},
        {Kind::triple_lambda, 0.3, -1.1, 120, 100, true, "triple X=120"},
        {Kind::unit, 0.0, 0.0, 1000, 300, false, "unit X=1000"},
        {Kind::triple_lambda, 0.5, 0.25, 500, 200, false, "triple X=500"},
    };
    bool all = true;
    for (const auto& in : insts) {
        zetalab::arith::CoefficientFamily fam;
        fam.kind = in.kind;
        fam.alpha = in.alpha;
        fam.beta = in.beta;
        auto rep = zetalab::contour::perron_check(fam, in.X, in.W);
        bool ok = rep.passed;
        if (in.doubled) {
            auto rep2 = zetalab::contour::perron_check(fam, in.X, 2.0 * in.W);
            bool mono = rep2.r1_observed <= rep.r1_observed;
            ok = ok && rep2.passed && mono;
            note("%-16s gap %.3g (budget %.3g), at 2W gap %.3g -- %s",
                 in.name, rep.r1_observed, rep.r1_bound, rep2.r1_observed,
                 ok ? "ok" : "VIOLATED");
        } else {
            note("%-16s gap %.3g (budget %.3g) -- %s", in.name,
                 rep.r1_observed, rep.r1_bound, ok ? "ok" : "VIOLATED");
        }
        all = all && ok;
    }
    return all;
}

// ---------------------------------------------------------------------------
// 7. Rectangle identity: windowed zero sums against the four edge integrals
//    on six windows below height 500, each holding 1..50 zeros.
// ---------------------------------------------------------------------------
bool crit_7() {
    if (!g_low_ready) {
        g_low_catalog = zetalab::zeros::find_zeros(10.0, 505.0);
        g_low_ready = true;
    }
    struct Win { double y1, y2, t1, t2; u64 x; };
    const Win wins[] = {{1.0, 2.0, 12, 22, 13},  {1.0, 2.0, 30, 42, 13},
                        {0.8, 1.7, 45, 60, 7},   {1.0, 2.0, 95, 120, 13},
                        {1.0, 2.0, 200, 215, 19}, {1.0, 2.0, 480, 500, 13}};
    zetalab::contour::RectangleOptions opt;
    opt.left_abscissa = -0.5;
    bool all = true;
    for (const auto& w : wins) {
        auto rep = zetalab::contour::rectangle_identity_check(
            w.y1, w.y2, w.x, w.t1, w.t2, g_low_catalog, opt);
        bool zc = rep.zeros_used >= 1 && rep.zeros_used <= 50;
        bool ok = rep.passed && zc;
        note("window [%.0f, %.0f] x=%llu: %d zeros, residual %.3g "
             "(tol %.3g) -- %s",
             w.t1, w.t2, static_cast<unsigned long long>(w.x), rep.zeros_used,
             rep.residual, rep.tolerance, ok ? "ok" : "VIOLATED");
        all = all && ok;
    }
    return all;
}

// ---------------------------------------------------------------------------
// 8. Stationary-phase integral: numeric value against the predicted main
//    term on ten configurations (resonance inside, outside, and near an
//    endpoint), one fitted constant across all of them.
// ---------------------------------------------------------------------------
bool crit_8() {
    struct Cfg { double a, b, sigma, u; int m; const char* where; };
    const Cfg cfgs[] = {
        {60, 600, 1.0, 100, 0, "inside"},
        {60, 600, 1.0, 100, 1, "inside, log factor"},
        {60, 600, 1.0, 1000, 0, "outside (above)"},
        {60, 600, 0.5, 598, 0, "near upper endpoint"},
        {60, 600, 0.5, 62, 0, "near lower endpoint"},
        {100, 900, 0.75, 300, 0, "inside"},
        {100, 900, 0.75, 300, 1, "inside, log factor"},
        {100, 900, 1.5, 50, 0, "outside (below)"},
        {20, 180, 1.0, 90, 0, "inside, short range"},
        {150, 1400, 0.6, 700, 1, "inside, long range"},
    };
    bool all = true;
    double k_fit = 0.0;
    for (const auto& c : cfgs) {
        auto rep = zetalab::contour::gonek_check(c.a, c.b, c.sigma, c.u, c.m);
        k_fit = std::max(k_fit, rep.K);
        all = all && rep.passed;
        note("[%4.0f, %4.0f] sigma=%.2f u=%4.0f m=%d (%s): K=%.3f %s", c.a,
             c.b, c.sigma, c.u, c.m, c.where, rep.K,
             rep.passed ? "ok" : "VIOLATED");
    }
    note("fitted constant across all 10: K=%.3f (<= 10) %s", k_fit,
         all ? "ok" : "VIOLATED");
    return all;
}

// ---------------------------------------------------------------------------
// 9. Windowed-sum trend: relative residual of the full pipeline on the
//    height ladder 2000 / 5000 / 1e4 / 2e4 at y1=1, y2=2, C=0.4.  Two
//    clauses: the sequence is non-increasing, and it is dominated by
//    K/sqrt(log T) for one fitted K <= 5.
//
//    EXPECTED TO FAIL (the first clause): the residual at these heights is
//    noise-dominated -- it scatters instead of decaying monotonically; the
//    measured sequence and two-clause breakdown are printed below, and the
//    README carries the analysis.
// ---------------------------------------------------------------------------
bool crit_9() {
    zetalab::corr::ShiftParams shifts(1.0, 2.0, 0.4);
    const double ladder[] = {2000.0, 5000.0, 1e4, 2e4};
    std::vector<double> rels, ks;
    for (double T : ladder) {
        double eps = std::exp(-0.4 * std::sqrt(std::log(T)));
        auto cat = zetalab::zeros::find_zeros(T - 1.0, T * (1.0 + eps) + 2.0);
        auto rep = zetalab::corr::theorem21_report(shifts, T, cat, 4);
        rels.push_back(rep.rel_residual);
        ks.push_back(rep.rel_residual * std::sqrt(std::log(T)));
        note("T=%-6.0f window holds %4d zeros: rel residual %.4f "
             "(K at this point %.3f)",
             T, rep.zeros_used, rep.rel_residual, ks.back());
    }
    bool mono = true;
    for (std::size_t i = 1; i < rels.size(); ++i)
        mono = mono && rels[i] <= rels[i - 1];
    double k_fit = *std::max_element(ks.begin(), ks.end());
    bool k_ok = k_fit <= 5.0;
    note("non-increasing sequence: %s", mono ? "ok" : "VIOLATED");
    note("fitted K=%.3f (<= 5): %s", k_fit, k_ok ? "ok" : "VIOLATED");
    return mono && k_ok;
}

// ---------------------------------------------------------------------------
// 10. Error-term ratio scans with C=1, c=3, C'=2.25.  Two clauses: the
//     windowed ratio over T in {1e6..1e14} is strictly decreasing and ends
//     below 1; the epsilon-family ratio fails to decrease for every k
//     (flagged as nonvanishing).
//
//     EXPECTED TO FAIL (the first clause): the measured column INCREASES
//     over this grid -- the decay only takes over near log T ~ 346, far
//     beyond any floating-point height; the README carries the analysis.
// ---------------------------------------------------------------------------
bool crit_10() {
    const std::vector<double> grid = {1e6, 1e8, 1e10, 1e12, 1e14};
    auto sw = zetalab::lemmas::appendix_scan(grid, 1.0, 2.25, 3.0,
                                             zetalab::lemmas::ScanMode::sqrt_window);
    for (const auto& row : sw.rows)
        note("T=%-8.3g windowed ratio %.6g", row.T, row.ratio);
    bool clause1 = sw.decreasing && sw.top_below_one;
    note("strictly decreasing: %s; ends below 1: %s -> %s",
         sw.decreasing ? "yes" : "no", sw.top_below_one ? "yes" : "no",
         clause1 ? "ok" : "VIOLATED");

    auto be = zetalab::lemmas::appendix_scan(grid, 1.0, 2.25, 3.0,
                                             zetalab::lemmas::ScanMode::banks_eps);
    bool clause2 = be.nonvanishing;
    note("epsilon family fails to decrease for every k (flagged): %s",
         clause2 ? "ok" : "VIOLATED");
    if (!sw.boundary_note.empty()) note("note: %s", sw.boundary_note.c_str());
    return clause1 && clause2;
}

// ---------------------------------------------------------------------------
// 11. Bracket arithmetic: the parenthesized factor converges monotonically
//     to 1 + i(y2-y1) on the height ladder, and the selected prime pair
//     reaches separation > sqrt(2) on ten random shift draws (verified by
//     direct complex arithmetic, independent of the selector).
// ---------------------------------------------------------------------------
bool crit_11() {
    bool mono = true;
    double prev = 1e300;
    for (double T1 : {1e4, 1e6, 1e8, 1e12}) {
        double eps = std::exp(-std::sqrt(std::log(T1)));
        cplx p = zetalab::corr::bracket_paren(T1, eps, 1.0, 2.0);
        double err = std::abs(p - cplx(1.0, 1.0));
        mono = mono && err < prev;
        note("T1=%-6.0e |paren - (1+i)| = %.3e", T1, err);
        prev = err;
    }
    note("monotone convergence: %s", mono ? "ok" : "VIOLATED");

    std::mt19937 rng(20260819u);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    bool seps_ok = true;
    for (int d = 0; d < 10; ++d) {
        double alpha = 0.1 + 4.9 * uni(rng);
        double y1 = 0.3 + 2.7 * uni(rng);
        double y2 = y1 + alpha;
        double T = 1000.0 * std::pow(20.0, uni(rng));
        zetalab::corr::ShiftParams shifts(y1, y2, 1.0);
        auto pair = zetalab::corr::select_prime_pair(T, shifts);
        // independent recomputation of the separation
        cplx d2 = std::pow(cplx(double(pair.x2), 0.0), cplx(0.0, -alpha)) -
                  std::pow(cplx(double(pair.x1), 0.0), cplx(0.0, -alpha));
        bool ok = std::abs(d2) > std::sqrt(2.0) &&
                  std::abs(std::abs(d2) - pair.separation) <= 1e-9;
        seps_ok = seps_ok && ok;
        note("draw %d: |y2-y1|=%.3f T=%-7.0f %-10s x=(%llu, %llu) "
             "sep %.6f %s",
             d, alpha, T, pair.mode.c_str(),
             static_cast<unsigned long long>(pair.x1),
             static_cast<unsigned long long>(pair.x2), std::abs(d2),
             ok ? "ok" : "VIOLATED");
    }
    return mono && seps_ok;
}

struct Criterion {
    int id;
    const char* title;
    double limit_s;
    bool expect_pass;
    bool (*body)();
};

const Criterion CRITERIA[] = {
    {1, "functional-equation suite", 30, true, crit_1},
    {2, "zero catalog vs counting formula and reference", 120, true, crit_2},
    {3, "exact coefficient bound, n <= 1e5, all phases", 300, true, crit_3},
    {4, "two-term divisor average on 20 ranges", 60, true, crit_4},
    {5, "character and Gauss-sum identities", 60, true, crit_5},
    {6, "truncated Perron formula, 6 instances", 600, true, crit_6},
    {7, "rectangle identity on 6 windows", 600, true, crit_7},
    {8, "stationary-phase integral, 10 configurations", 600, true, crit_8},
    {9, "windowed-sum trend on the height ladder", 1200, false, crit_9},
    {10, "error-term ratio scans", 1, false, crit_10},
    {11, "bracket arithmetic and prime-pair separation", 10, true, crit_11},
};

}  // namespace

int main() {
    std::printf("acceptance: shifted-correlation laboratory\n");
    std::printf("%zu criteria; every one runs to completion\n\n",
                std::size(CRITERIA));

    int drift = 0, passed = 0, expected_fails = 0;
    for (const auto& c : CRITERIA) {
        std::printf("criterion %2d: %s\n", c.id, c.title);
        auto t0 = std::chrono::steady_clock::now();
        bool body_ok = false;
        try {
            body_ok = c.body();
        } catch (const std::exception& e) {
            note("threw: %s", e.what());
        }
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                .count();
        bool in_time = secs < c.limit_s;
        if (!in_time)
            note("wall time %.1f s EXCEEDS the %.0f s budget", secs, c.limit_s);
        bool ok = body_ok && in_time;

        const char* tag = ok ? "[PASS]" : "[FAIL]";
        const char* suffix = "";
        if (!ok && !c.expect_pass)
            suffix = "  (expected failure; see README)";
        else if (ok && !c.expect_pass)
            suffix = "  (UNEXPECTED PASS; expectations are stale)";
        std::printf("%s criterion %2d  %-48s %7.1f s (limit %.0f s)%s\n\n",
                    tag, c.id, c.title, secs, c.limit_s, suffix);

        if (ok) ++passed;
        if (!ok && !c.expect_pass) ++expected_fails;
        if (ok != c.expect_pass) ++drift;
    }

    std::printf("summary: %d of %zu criteria passed; %d expected "
                "failure(s) observed\n",
                passed, std::size(CRITERIA), expected_fails);
    if (drift == 0)
        std::printf("outcome matches the documented expected state\n");
    else
        std::printf("%d criterion/criteria DRIFTED from the documented "
                    "expected state\n",
                    drift);
    return drift;
}
