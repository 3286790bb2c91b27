#include "zetalab/correlation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <future>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "zetalab/errors.hpp"
#include "zetalab/hardy.hpp"
#include "zetalab/summation.hpp"
#include "zetalab/zeta.hpp"

namespace zetalab::corr {

namespace {

using u64 = std::uint64_t;
using json = nlohmann::json;

constexpr double TWO_PI = 6.28318530717958647692;
constexpr double SQRT2 = 1.41421356237309504880;

inline cplx cis(double t) { return {std::cos(t), std::sin(t)}; }

std::string fmt_g(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

ShiftParams::ShiftParams(double y1_, double y2_, double C_)
    : y1(y1_), y2(y2_), C(C_) {
    if (y1 == 0.0 || y2 == 0.0)
        throw InvalidShift("shifts: y1 and y2 must be nonzero");
    if (y1 == y2) throw DegenerateShifts("shifts: y1 and y2 must differ");
    if (!(C > 0.0)) throw PreconditionViolated("shifts: C must be positive");
}

AnalysisParams::AnalysisParams(double T1_, double T2_, std::uint64_t x_,
                               double C_)
    : T1(T1_), T2(T2_), x(x_), C(C_) {
    if (!(T2 > T1 && 2.0 * T1 > T2))
        throw InvalidWindow("window: need 2*T1 > T2 > T1");
    if (!(T1 >= 10.0))
        throw PreconditionViolated("window: need T1 >= 10");
    if (!arith::is_prime(x)) throw NotPrime("window: x must be prime");
    if (!(C > 0.0)) throw PreconditionViolated("window: C must be positive");
}

double AnalysisParams::epsilon() const {
    return std::exp(-C * std::sqrt(std::log(T())));
}

double AnalysisParams::big_l() const {
    double lt = std::log(T());
    return std::exp(lt / std::log(lt));
}

double AnalysisParams::c_line() const {
    return 1.0 + 1.0 / std::log(static_cast<double>(x));
}

double AnalysisParams::b_line() const {
    return 0.5 - 1.0 / std::log(std::log(T()));
}

AnalysisParams standard_window(double T, std::uint64_t x, double C) {
    if (!(T >= 10.0))
        throw PreconditionViolated("standard_window: need T >= 10");
    double eps = std::exp(-C * std::sqrt(std::log(T)));
    return AnalysisParams(T, (1.0 + eps) * T, x, C);
}

// ---------------------------------------------------------------------------
// Zero-side sum
// ---------------------------------------------------------------------------

namespace {

struct ChunkOut {
    cplx value{0.0, 0.0};
    double err = 0.0;
};

// One ascending 64-term chunk, compensated.
ChunkOut sum_chunk(const std::vector<zeros::ZeroEntry>& terms,
                   std::size_t lo, std::size_t hi, double y1, double y2,
                   double lx, double sqrt_x) {
    ComplexSum acc;
    double err = 0.0;
    for (std::size_t i = lo; i < hi; ++i) {
        double g = terms[i].ordinate;
        hardy::ZTheta a = hardy::hardy_z_theta(g + y1);
        hardy::ZTheta b = hardy::hardy_z_theta(g + y2);
        cplx term = sqrt_x * cis(g * lx) * a.Z * b.Z *
                    cis(b.theta - a.theta);
        acc.add(term);
        double za = std::abs(a.Z), zb = std::abs(b.Z);
        // Z/theta evaluation error plus the first-order effect of the
        // ordinate's own position error (|Z'| <= 25 is generous below 5e4).
        err += sqrt_x * (zb * a.est_abs_error + za * b.est_abs_error +
                         terms[i].abs_err *
                             (lx * za * zb + 25.0 * (za + zb)));
    }
    ChunkOut out;
    out.value = acc.value();
    out.err = err;
    return out;
}

}  // namespace

ZeroSumResult zero_sum(const zeros::ZeroCatalog& catalog,
                       const ShiftParams& shifts, const AnalysisParams& params,
                       int threads) {
    if (catalog.t_min > params.T1 || catalog.t_max < params.T2)
        throw CatalogGap("zero_sum: catalog does not cover the window");

    std::vector<zeros::ZeroEntry> terms;
    for (const auto& e : catalog.entries)
        if (params.T1 < e.ordinate && e.ordinate < params.T2)
            terms.push_back(e);
    std::sort(terms.begin(), terms.end(),
              [](const zeros::ZeroEntry& a, const zeros::ZeroEntry& b) {
                  return a.ordinate < b.ordinate;
              });

    double expected = zeros::expected_count(params.T2) -
                      zeros::expected_count(params.T1);
    if (std::abs(expected - static_cast<double>(terms.size())) > 2.5)
        throw CatalogGap("zero_sum: window count deviates from the counting "
                         "formula");

    if (!terms.empty() &&
        terms.front().ordinate + std::min(shifts.y1, shifts.y2) < 2.0)
        throw UnsupportedRange("zero_sum: a shifted ordinate falls below the "
                               "evaluation range");

    const double lx = std::log(static_cast<double>(params.x));
    const double sqrt_x = std::sqrt(static_cast<double>(params.x));
    const std::size_t n = terms.size();
    const std::size_t CHUNK = 64;
    const std::size_t n_chunks = (n + CHUNK - 1) / CHUNK;
    std::vector<ChunkOut> chunks(n_chunks);

    int workers = std::max(1, threads);
    if (workers > 1 && n_chunks > 1) {
        std::vector<std::future<void>> futs;
        for (int w = 0; w < workers; ++w)
            futs.push_back(std::async(std::launch::async, [&, w] {
                for (std::size_t k = static_cast<std::size_t>(w);
                     k < n_chunks; k += static_cast<std::size_t>(workers))
                    chunks[k] = sum_chunk(terms, k * CHUNK,
                                          std::min(n, (k + 1) * CHUNK),
                                          shifts.y1, shifts.y2, lx, sqrt_x);
            }));
        for (auto& f : futs) f.get();
    } else {
        for (std::size_t k = 0; k < n_chunks; ++k)
            chunks[k] = sum_chunk(terms, k * CHUNK,
                                  std::min(n, (k + 1) * CHUNK), shifts.y1,
                                  shifts.y2, lx, sqrt_x);
    }

    ComplexSum acc;
    double err = 0.0;
    for (const ChunkOut& c : chunks) {
        acc.add(c.value);
        err += c.err;
    }
    ZeroSumResult r;
    r.value = acc.value();
    r.est_abs_error = err;
    r.zeros_used = static_cast<int>(n);
    return r;
}

// ---------------------------------------------------------------------------
// Main-term bracket
// ---------------------------------------------------------------------------

cplx m_prime(std::uint64_t x, const AnalysisParams& params,
             const ShiftParams& shifts) {
    const double a = shifts.alpha();
    const cplx one_ia{1.0, a};
    if (!(params.T1 + shifts.y1 > 1.0))
        throw PreconditionViolated("m_prime: need T1 + y1 > 1");

    cplx za = zeta(cplx{1.0, a}, 1e-12).value;
    cplx zb = zeta(cplx{1.0, -a}, 1e-12).value;
    cplx ratio = za / zb;

    double xr = static_cast<double>(x);
    cplx phase = cis(a * std::log((params.T1 + shifts.y1) / (TWO_PI * xr)));

    double num = params.delta() / (params.T1 + shifts.y1);
    cplx paren = (params.T2 + shifts.y1) / params.delta() *
                     cis(a * std::log1p(num)) -
                 (params.T1 + shifts.y1) / params.delta();

    return ratio * phase * paren / one_ia + 1.0;
}

cplx bracket_paren(double T1, double eps, double y1, double y2) {
    if (!(T1 > 1.0 && eps > 0.0))
        throw PreconditionViolated("bracket_paren: need T1 > 1 and eps > 0");
    double a = y2 - y1;
    double top = T1 * (1.0 + eps) + y1;
    double bot = T1 + y1;
    return top / (T1 * eps) * cis(a * std::log1p(eps * T1 / bot)) -
           bot / (T1 * eps);
}

double pair_separation(std::uint64_t x1, std::uint64_t x2, double alpha) {
    double dl = std::log(static_cast<double>(x2)) -
                std::log(static_cast<double>(x1));
    return 2.0 * std::abs(std::sin(0.5 * alpha * dl));
}

// ---------------------------------------------------------------------------
// Prime-pair selection
// ---------------------------------------------------------------------------

namespace {

constexpr u64 PRIME_SCAN_CAP = 9000000000000000ULL;  // is_prime's safe range

u64 next_prime_at_least(u64 n) {
    if (n <= 2) return 2;
    if (n % 2 == 0) ++n;
    for (; n <= PRIME_SCAN_CAP; n += 2)
        if (arith::is_prime(n)) return n;
    throw NoPairFound("prime scan left the supported integer range");
}

}  // namespace

PrimePair select_prime_pair(double T, const ShiftParams& shifts) {
    const double a = shifts.alpha();
    const double abs_a = std::abs(a);
    const double t = std::log(T);
    if (!(t > 1.0))
        throw PreconditionViolated("select_prime_pair: need log T > 1");
    const double A = std::exp(3.14159265358979323846 / (4.0 * abs_a));

    PrimePair out;

    auto finish = [&](u64 p1, u64 p2, const char* mode) {
        out.x1 = p1;
        out.x2 = p2;
        out.separation = pair_separation(p1, p2, a);
        out.mode = mode;
        out.m_abs_x1 =
            std::abs(m_prime(p1, standard_window(std::max(T, 10.0), p1,
                                                 shifts.C),
                             shifts));
        out.m_abs_x2 =
            std::abs(m_prime(p2, standard_window(std::max(T, 10.0), p2,
                                                 shifts.C),
                             shifts));
        out.chosen = out.m_abs_x1 >= out.m_abs_x2 ? p1 : p2;
        return out;
    };

    // Asymptotic windows (t, At) and (A^3 t, A^4 t): geometry guarantees the
    // separation when both windows hold a prime.
    double a4t = std::pow(A, 4) * t;
    if (t >= 20.0 && a4t <= static_cast<double>(PRIME_SCAN_CAP)) {
        u64 p1 = next_prime_at_least(static_cast<u64>(std::floor(t)) + 1);
        u64 p2 = next_prime_at_least(
            static_cast<u64>(std::floor(std::pow(A, 3) * t)) + 1);
        if (static_cast<double>(p1) < A * t && static_cast<double>(p2) < a4t) {
            double sep = pair_separation(p1, p2, a);
            if (sep > SQRT2) return finish(p1, p2, "window");
        }
    }

    // Bounded exhaustive search, best separation over primes up to
    // max(101, A^4 t), first element capped at 101.
    if (a4t <= 2e5) {
        u64 limit = static_cast<u64>(std::max(101.0, a4t));
        std::vector<u64> primes = arith::primes_in(3, limit);
        double best = -1.0;
        u64 b1 = 0, b2 = 0;
        for (u64 p1 : primes) {
            if (p1 > 101) break;
            for (u64 p2 : primes) {
                if (p2 <= p1) continue;
                double sep = pair_separation(p1, p2, a);
                if (sep > best) {
                    best = sep;
                    b1 = p1;
                    b2 = p2;
                }
            }
        }
        if (best <= SQRT2)
            throw NoPairFound(
                "exhaustive prime search found no pair with separation above "
                "sqrt(2)");
        return finish(b1, b2, "exhaustive");
    }

    // Tiny |y2 - y1|: the second window sits astronomically high, so aim for
    // the antipodal angle pi, where the separation is maximal (= 2) and the
    // prime-gap perturbation is negligible.
    u64 p1 = 3;
    for (int attempt = 0; attempt < 25; ++attempt) {
        double target = static_cast<double>(p1) * std::exp(3.14159265358979323846 / abs_a);
        if (target > static_cast<double>(PRIME_SCAN_CAP))
            throw NoPairFound(
                "shift difference too small: the antipodal prime exceeds the "
                "supported integer range");
        u64 p2 = next_prime_at_least(static_cast<u64>(target));
        double sep = pair_separation(p1, p2, a);
        if (sep > SQRT2) return finish(p1, p2, "guided");
        p1 = next_prime_at_least(p1 + 1);
    }
    throw NoPairFound("guided prime search failed to reach sqrt(2)");
}

// ---------------------------------------------------------------------------
// Full pipeline report
// ---------------------------------------------------------------------------

double minimum_viable_T(double C) {
    auto window_count = [C](double T) {
        double eps = std::exp(-C * std::sqrt(std::log(T)));
        return zeros::expected_count((1.0 + eps) * T) -
               zeros::expected_count(T);
    };
    double lo = 20.0, hi = 20.0;
    while (window_count(hi) < 25.0) {
        hi *= 2.0;
        if (hi > 1e12)
            throw PreconditionViolated(
                "minimum_viable_T: no viable window below 10^12");
    }
    for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (lo + hi);
        (window_count(mid) >= 25.0 ? hi : lo) = mid;
    }
    return hi;
}

SumReport theorem21_report(const ShiftParams& shifts, double T,
                           const zeros::ZeroCatalog& catalog, int threads) {
    if (!(T >= 10.0 && T <= 2e4))
        throw PreconditionViolated(
            "theorem21_report: T outside the supported range [10, 2*10^4]");

    PrimePair pair = select_prime_pair(T, shifts);
    AnalysisParams params = standard_window(T, pair.chosen, shifts.C);

    std::vector<double> ords =
        zeros::ordinates_in(catalog, params.T1, params.T2);
    if (ords.size() < 25) {
        std::ostringstream msg;
        msg << "theorem21_report: window [" << params.T1 << ", " << params.T2
            << "] holds " << ords.size()
            << " zeros; at least 25 are required (smallest viable T is about "
            << minimum_viable_T(shifts.C) << ")";
        throw InvalidWindow(msg.str());
    }

    ZeroSumResult zs = zero_sum(catalog, shifts, params, threads);
    cplx mp = m_prime(pair.chosen, params, shifts);

    const double a = shifts.alpha();
    const double lx = std::log(static_cast<double>(pair.chosen));
    const double log_t = std::log(params.T());
    cplx main = params.delta() * log_t / TWO_PI * cis(-shifts.y1 * lx) *
                zeta(cplx{1.0, -a}, 1e-12).value * mp;

    SumReport rep;
    rep.T_mid = params.T();
    rep.delta = params.delta();
    rep.x = pair.chosen;
    rep.y1 = shifts.y1;
    rep.y2 = shifts.y2;
    rep.zeros_used = zs.zeros_used;
    rep.zero_sum_value = zs.value;
    rep.main_term = main;
    rep.m_prime_value = mp;
    rep.residual = zs.value - main;
    rep.rel_residual = std::abs(rep.residual) / std::max(std::abs(main), 1e-30);
    rep.error_budget = params.delta() * std::sqrt(log_t);
    rep.sum_est_error = zs.est_abs_error;
    rep.pair_mode = pair.mode;
    return rep;
}

std::string SumReport::to_json() const {
    json j;
    j["check"] = "theorem21";
    j["T"] = T_mid;
    j["delta"] = delta;
    j["x"] = x;
    j["y1"] = y1;
    j["y2"] = y2;
    j["zeros_used"] = zeros_used;
    j["zero_sum"] = {zero_sum_value.real(), zero_sum_value.imag()};
    j["main_term"] = {main_term.real(), main_term.imag()};
    j["m_prime"] = {m_prime_value.real(), m_prime_value.imag()};
    j["residual"] = {residual.real(), residual.imag()};
    j["rel_residual"] = rel_residual;
    j["error_budget"] = error_budget;
    j["sum_est_error"] = sum_est_error;
    j["pair_mode"] = pair_mode;
    return j.dump();
}

std::string SumReport::csv_header() {
    return "T,delta,x,y1,y2,zeros_used,re_zero_sum,im_zero_sum,re_main_term,"
           "im_main_term,rel_residual,error_budget";
}

std::string SumReport::csv_row() const {
    std::ostringstream os;
    os << fmt_g(T_mid) << ',' << fmt_g(delta) << ',' << x << ',' << fmt_g(y1)
       << ',' << fmt_g(y2) << ',' << zeros_used << ','
       << fmt_g(zero_sum_value.real()) << ',' << fmt_g(zero_sum_value.imag())
       << ',' << fmt_g(main_term.real()) << ',' << fmt_g(main_term.imag())
       << ',' << fmt_g(rel_residual) << ',' << fmt_g(error_budget);
    return os.str();
}

// ---------------------------------------------------------------------------
// Exact triple-sum remainder
// ---------------------------------------------------------------------------

KBrute k_sum_brute(double T, std::uint64_t x, const ShiftParams& shifts) {
    double limit_real =
        static_cast<double>(x) * (T + shifts.y2) / TWO_PI;
    if (limit_real > 1e6)
        throw TooLarge("k_sum_brute: enumeration range above 10^6");
    KBrute out;
    if (limit_real < 2.0) return out;  // empty range
    arith::KSumResult r = arith::k_exponential_sum(
        static_cast<u64>(std::floor(limit_real)), x, shifts.y1, shifts.y2,
        arith::KScope::all);
    out.value = r.value;
    out.terms_total = r.terms_total;
    out.terms_multiple = r.terms_multiple;
    out.multiple_fraction =
        r.terms_total == 0
            ? 0.0
            : static_cast<double>(r.terms_multiple) /
                  static_cast<double>(r.terms_total);
    return out;
}

K1Report k1_assemble(const AnalysisParams& params, const ShiftParams& shifts) {
    KBrute hi = k_sum_brute(params.T2, params.x, shifts);
    KBrute lo = k_sum_brute(params.T1, params.x, shifts);
    K1Report rep;
    double lx = std::log(static_cast<double>(params.x));
    rep.K1 = -cis(-shifts.y2 * lx) * (hi.value - lo.value);
    rep.magnitude = std::abs(rep.K1);
    double log_t = std::log(params.T());
    rep.bound_shape = params.T() * std::sqrt(log_t) *
                      std::exp(-shifts.C * std::sqrt(log_t));
    rep.ratio = rep.magnitude / rep.bound_shape;
    return rep;
}

}  // namespace zetalab::corr
