#include "zetalab/lemmas.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <future>
#include <memory>
#include <mutex>
#include <thread>

#include "zetalab/arith.hpp"
#include "zetalab/errors.hpp"
#include "zetalab/summation.hpp"

namespace zetalab::lemmas {

namespace {

using u64 = std::uint64_t;

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), f, v);
    return buf;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += "\"\"";
        out += ch;
    }
    out += '"';
    return out;
}

// Process-wide divisor table, grown on demand.  Callers hold a snapshot, so
// a concurrent grower cannot invalidate a table in use.
std::shared_ptr<const std::vector<std::uint16_t>> divisor_table(u64 limit) {
    static std::mutex m;
    static std::shared_ptr<const std::vector<std::uint16_t>> current;
    std::lock_guard<std::mutex> lock(m);
    if (!current || current->size() < limit + 1) {
        current = std::make_shared<const std::vector<std::uint16_t>>(
            arith::divisor_sieve(limit));
    }
    return current;
}

// First integer strictly above t and last integer strictly below t.
u64 first_above(double t) { return static_cast<u64>(std::floor(t)) + 1; }
u64 last_below(double t) { return static_cast<u64>(std::ceil(t)) - 1; }

double log_sum_exp3(double a, double b, double c) {
    double m = std::max(a, std::max(b, c));
    return m + std::log(std::exp(a - m) + std::exp(b - m) + std::exp(c - m));
}

}  // namespace

std::string verdict_csv_header() {
    return "lemma_id,domain,worst_ratio,witness,passed";
}

std::string verdict_csv_row(const LemmaVerdict& v) {
    return csv_escape(v.lemma_id) + "," + csv_escape(v.tested_domain) + "," +
           fmt("%.17g", v.worst_ratio) + "," + csv_escape(v.witness) + "," +
           (v.passed ? "true" : "false");
}

LemmaVerdict check_3_14(std::uint64_t n_max) {
    if (n_max < 2 || n_max > 1000000)
        throw PreconditionViolated("check_3_14: need 2 <= n_max <= 10^6");

    static const double PHASES[5] = {0.0, 1.0, -1.0,
                                     3.14159265358979323846,
                                     -3.14159265358979323846};
    auto dtab = divisor_table(n_max);

    struct ComboBest {
        double ratio = -1.0;
        u64 n = 0;
        int combo = 0;
    };
    auto run_combo = [&](int combo) {
        double th1 = PHASES[combo / 25];
        double th2 = PHASES[(combo / 5) % 5];
        double th3 = PHASES[combo % 5];
        std::vector<std::complex<double>> conv =
            arith::triple_conv_prefix(n_max, th1, th2, th3);
        ComboBest best;
        best.combo = combo;
        const std::vector<std::uint16_t>& d = *dtab;
        for (u64 n = 2; n <= n_max; ++n) {
            double bound = static_cast<double>(d[n]) * std::log(double(n));
            double ratio = std::abs(conv[n]) / bound;
            if (ratio > best.ratio) {
                best.ratio = ratio;
                best.n = n;
            }
        }
        return best;
    };

    unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    workers = std::min(workers, 125u);
    std::vector<std::future<std::vector<ComboBest>>> futures;
    for (unsigned w = 0; w < workers; ++w) {
        futures.push_back(std::async(std::launch::async, [&, w] {
            std::vector<ComboBest> out;
            for (int combo = static_cast<int>(w); combo < 125;
                 combo += static_cast<int>(workers))
                out.push_back(run_combo(combo));
            return out;
        }));
    }
    std::vector<ComboBest> all;
    for (auto& f : futures)
        for (const ComboBest& b : f.get()) all.push_back(b);
    std::sort(all.begin(), all.end(),
              [](const ComboBest& a, const ComboBest& b) {
                  return a.combo < b.combo;
              });

    ComboBest best;
    for (const ComboBest& b : all)
        if (b.ratio > best.ratio) best = b;

    LemmaVerdict v;
    v.lemma_id = "3.14";
    v.tested_domain = "2 <= n <= " + std::to_string(n_max) +
                      ", phases {0,+-1,+-pi}^3 (125 combinations)";
    v.worst_ratio = best.ratio;
    int combo = best.combo;
    v.witness = "n=" + std::to_string(best.n) + ", theta=(" +
                fmt("%.10g", PHASES[combo / 25]) + "," +
                fmt("%.10g", PHASES[(combo / 5) % 5]) + "," +
                fmt("%.10g", PHASES[combo % 5]) + ")";
    v.passed = best.ratio <= 1.0;
    return v;
}

LemmaVerdict check_3_15(const std::vector<double>& X_grid, double c) {
    if (!(c > 0.0 && c < 1.0))
        throw PreconditionViolated("check_3_15: need 0 < c < 1");
    if (X_grid.empty())
        throw PreconditionViolated("check_3_15: empty X grid");
    for (double X : X_grid)
        if (!(X > 2.718281828459045))
            throw PreconditionViolated("check_3_15: need X > e");

    static const double FRACTIONS[] = {1e-6, 1e-5, 1e-4, 1e-3, 0.01, 0.02,
                                       0.05, 0.1,  0.2,  0.3,  0.4,  0.5,
                                       0.6,  0.7,  0.8,  0.9,  1.0};

    LemmaVerdict v;
    v.lemma_id = "3.15";
    v.tested_domain = std::to_string(X_grid.size()) +
                      " values of X, Y/(cX) on a 17-point grid in [1e-6,1], c=" +
                      fmt("%.6g", c);
    v.passed = true;
    for (double X : X_grid) {
        double lx = std::log(X);
        double bound = 2.0 * (1.0 + 1.0 / lx) + 1e-9;  // documented slack
        for (double f : FRACTIONS) {
            double Y = f * c * X;
            // Cancellation-free form of (X+Y)log(X+Y) - (X-Y)log(X-Y):
            //   X log((X+Y)/(X-Y)) + Y log(X^2 - Y^2).
            double diff = X * std::log1p(2.0 * Y / (X - Y)) +
                          Y * (2.0 * lx + std::log1p(-(Y / X) * (Y / X)));
            double ratio = diff / (Y * lx);
            if (ratio > v.worst_ratio) {
                v.worst_ratio = ratio;
                v.witness = "X=" + fmt("%.10g", X) + ", Y=" + fmt("%.10g", Y);
            }
            if (ratio > bound) v.passed = false;
        }
    }
    return v;
}

LemmaVerdict check_3_16(double A, double B) {
    if (!(A > 1.0 && A <= B && B <= 1e7))
        throw PreconditionViolated("check_3_16: need 1 < A <= B <= 10^7");

    double exact = 0.0;
    if (B > A) {
        u64 lo = first_above(A);
        u64 hi = static_cast<u64>(std::floor(B));
        if (hi >= lo) {
            auto dtab = divisor_table(hi);
            const std::vector<std::uint16_t>& d = *dtab;
            NeumaierSum sum;
            for (u64 n = hi; n >= lo; --n)
                sum += static_cast<double>(d[n]) / static_cast<double>(n);
            exact = sum.value();
        }
    }
    double la = std::log(A), lb = std::log(B);
    double asymptotic = 2.0 * arith::EULER_GAMMA * (lb - la) +
                        0.5 * (lb * lb - la * la);
    double scale = std::pow(A, -2.0 / 3.0) + std::pow(B, -2.0 / 3.0);
    double K = std::abs(exact - asymptotic) / scale;

    LemmaVerdict v;
    v.lemma_id = "3.16";
    v.tested_domain =
        "A=" + fmt("%.10g", A) + ", B=" + fmt("%.10g", B) + " (exact by sieve)";
    v.worst_ratio = K;
    v.witness = "exact=" + fmt("%.17g", exact) +
                ", asymptotic=" + fmt("%.17g", asymptotic);
    v.passed = K <= 10.0;
    return v;
}

LemmaVerdict check_3_17(const std::vector<double>& X_grid, const YRule& y_rule) {
    if (X_grid.empty())
        throw PreconditionViolated("check_3_17: empty X grid");

    LemmaVerdict v;
    v.lemma_id = "3.17";
    v.tested_domain = std::to_string(X_grid.size()) +
                      " values of X, both tail sums, exact by sieve";
    v.passed = true;
    for (double X : X_grid) {
        if (!(X >= 4.0) || 3.0 * X > 2e7)
            throw PreconditionViolated("check_3_17: need 4 <= X <= (2/3)*10^7");
        double Y = y_rule(X);
        if (!(Y > 0.0 && Y < X / 2.0))
            throw PreconditionViolated("check_3_17: need 0 < Y(X) < X/2");

        auto dtab = divisor_table(static_cast<u64>(std::ceil(3.0 * X)));
        const std::vector<std::uint16_t>& d = *dtab;

        NeumaierSum s1;
        {
            u64 lo = first_above(X / 2.0);
            u64 hi = last_below(X - Y);  // X - Y > 2, so no underflow
            for (u64 n = lo; n <= hi; ++n)
                s1 += static_cast<double>(d[n]) /
                      (static_cast<double>(n) * (X - static_cast<double>(n) + Y));
        }
        NeumaierSum s2;
        {
            u64 lo = first_above(X + Y);
            u64 hi = last_below(3.0 * X);
            for (u64 n = lo; n <= hi; ++n)
                s2 += static_cast<double>(d[n]) /
                      (static_cast<double>(n) * (static_cast<double>(n) - X + Y));
        }
        double lx = std::log(X);
        double scale = X / (lx * lx);
        const char* names[2] = {"S1", "S2"};
        double sums[2] = {s1.value(), s2.value()};
        for (int i = 0; i < 2; ++i) {
            double ratio = sums[i] * scale;
            if (ratio > v.worst_ratio) {
                v.worst_ratio = ratio;
                v.witness = std::string("X=") + fmt("%.10g", X) + ", Y=" +
                            fmt("%.10g", Y) + ", sum=" + names[i];
            }
        }
    }
    v.passed = v.worst_ratio <= 100.0;
    return v;
}

LemmaVerdict check_3_18_19(const std::vector<double>& t_grid, std::uint64_t x,
                           SumVariant variant) {
    if (t_grid.empty())
        throw PreconditionViolated("check_3_18_19: empty t grid");
    for (double t : t_grid) {
        if (variant == SumVariant::nx) {
            if (!(x >= 10 && t >= 10.0 * static_cast<double>(x)))
                throw PreconditionViolated(
                    "check_3_18_19(nx): need t >= 10x >= 100");
        } else {
            if (!(x >= 3 && t >= 3.0))
                throw PreconditionViolated(
                    "check_3_18_19(n_over_x): need t >= 3, x >= 3");
        }
    }

    const double TWO_PI = 6.28318530717958647692;
    double lx = std::log(static_cast<double>(x));
    double c = 1.0 + 1.0 / lx;

    LemmaVerdict v;
    v.lemma_id = (variant == SumVariant::nx) ? "3.18" : "3.19";
    v.tested_domain = std::to_string(t_grid.size()) + " values of t, x=" +
                      std::to_string(x) + ", tail below 10^-3 of partial sum";
    v.passed = true;
    for (double t : t_grid) {
        double omega =
            (variant == SumVariant::nx) ? TWO_PI * static_cast<double>(x)
                                        : TWO_PI / static_cast<double>(x);
        double resonance = t / omega;
        u64 N = std::max<u64>(4096, static_cast<u64>(std::ceil(2.0 * resonance)));

        double partial = 0.0, tail = 0.0;
        for (;;) {
            if (N > 20000000)
                throw TooLarge("check_3_18_19: truncation point beyond sieve cap");
            auto dtab = divisor_table(N);
            const std::vector<std::uint16_t>& d = *dtab;
            NeumaierSum sum;
            double rt = std::sqrt(t);
            for (u64 n = 2; n <= N; ++n) {
                double nd = static_cast<double>(n);
                double ln = std::log(nd);
                sum += static_cast<double>(d[n]) * ln /
                       (std::exp(c * ln) * (std::abs(t - omega * nd) + rt));
            }
            partial = sum.value();
            // For n > N >= 2 t/omega the denominator exceeds omega*n/2, and
            // sum_{n>N} d(n) log n / n^{1+c} is bounded by partial summation
            // against D(u) <= u (1 + log u)^2:
            //   (1+c) N^{-c} [ (1+L)^2/c + 2(1+L)/c^2 + 2/c^3 ],  L = log N.
            double L = std::log(static_cast<double>(N));
            double series_tail =
                (1.0 + c) * std::exp(-c * L) *
                ((1.0 + L) * (1.0 + L) / c + 2.0 * (1.0 + L) / (c * c) +
                 2.0 / (c * c * c));
            tail = (2.0 / omega) * series_tail;
            if (tail < 1e-3 * partial) break;
            N *= 2;
        }
        double shape = (std::pow(std::log(t), 3) + lx * lx * lx) / t;
        double ratio = (partial + tail) / shape;
        if (ratio > v.worst_ratio) {
            v.worst_ratio = ratio;
            v.witness = "t=" + fmt("%.10g", t) + ", x=" + std::to_string(x);
        }
    }
    v.passed = v.worst_ratio <= 100.0;
    return v;
}

ScanTable appendix_scan(const std::vector<double>& T_grid, double C,
                        double C_prime, double c, ScanMode mode) {
    if (T_grid.size() < 2)
        throw PreconditionViolated("appendix_scan: need at least two T values");
    for (std::size_t i = 0; i < T_grid.size(); ++i) {
        if (!(T_grid[i] >= 1e6 && T_grid[i] <= 1e16))
            throw PreconditionViolated("appendix_scan: T outside [10^6, 10^16]");
        if (i > 0 && !(T_grid[i] > T_grid[i - 1]))
            throw PreconditionViolated("appendix_scan: T grid must increase");
    }
    if (!(c > 0.0) || !(C > 0.0) || !(C_prime > 0.0))
        throw PreconditionViolated("appendix_scan: constants must be positive");
    if (mode == ScanMode::sqrt_window && C * C >= c)
        throw BadConstants("appendix_scan: need C^2 < c for the window to exist");

    // log S for the three-term majorant, everything in log space.
    auto log_S = [&](double T) {
        double L = std::log(T);
        double lX = std::log(T) + std::log(L);  // X = T log T
        double lW = C_prime * std::sqrt(L);     // log W
        double b = 1.0 - c / (std::log(L) + lW);  // x = log T
        double t1 = lX - lW + 3.0 * std::log(lX);
        double t2 = lX - lW + 6.0 * std::log(lW);
        double t3 = b * lX + 5.0 * std::log(lW);
        return log_sum_exp3(t1, t2, t3);
    };

    ScanTable table;
    table.mode = mode;
    table.C = C;
    table.C_prime = C_prime;
    table.c = c;
    table.boundary_note =
        "boundary regime (log of the window comparable to log log T) is not "
        "separately scanned; treated as covered by continuity";

    if (mode == ScanMode::sqrt_window) {
        for (double T : T_grid) {
            double L = std::log(T);
            double log_target = std::log(L) + std::log(T) - C * std::sqrt(L);
            table.rows.push_back({T, 0.0, std::exp(log_S(T) - log_target)});
        }
        table.decreasing = true;
        for (std::size_t i = 1; i < table.rows.size(); ++i)
            if (!(table.rows[i].ratio < table.rows[i - 1].ratio))
                table.decreasing = false;
        table.top_below_one = table.rows.back().ratio < 1.0;
    } else {
        static const double K_SET[] = {0.5, 1.0, 2.0};
        table.nonvanishing = true;
        for (double k : K_SET) {
            double prev = -1.0;
            bool increasing = true;
            for (double T : T_grid) {
                double L = std::log(T);
                double log_target =
                    std::log(L) + (1.0 - k / std::log(L)) * std::log(T);
                double ratio = std::exp(log_S(T) - log_target);
                table.rows.push_back({T, k, ratio});
                if (prev >= 0.0 && !(ratio > prev)) increasing = false;
                prev = ratio;
            }
            if (!increasing) table.nonvanishing = false;
        }
    }
    return table;
}

}  // namespace zetalab::lemmas
