#include "zetalab/cli.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "zetalab/arith.hpp"
#include "zetalab/characters.hpp"
#include "zetalab/contour.hpp"
#include "zetalab/correlation.hpp"
#include "zetalab/errors.hpp"
#include "zetalab/lemmas.hpp"
#include "zetalab/zeros.hpp"

namespace zetalab::cli {
namespace {

using json = nlohmann::json;
using cplx = std::complex<double>;

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::string fmt(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string fmt(const cplx& z) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.12g %+.12gi", z.real(), z.imag());
    return buf;
}

void kv(const char* key, const std::string& value) {
    std::printf("  %-18s %s\n", key, value.c_str());
}

void head(const std::string& title) { std::printf("%s\n", title.c_str()); }

void write_text_file(const std::string& path, const std::string& body) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open output file: " + path);
    out << body;
}

void maybe_write_json(const std::string& path, const std::string& body) {
    if (!path.empty()) write_text_file(path, body);
}

std::vector<double> parse_grid(const std::string& csv) {
    std::vector<double> grid;
    std::stringstream ss(csv);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
        cell = trim(cell);
        if (cell.empty()) continue;
        std::size_t used = 0;
        double v = std::stod(cell, &used);
        if (used != cell.size()) throw Error("bad grid entry: " + cell);
        grid.push_back(v);
    }
    if (grid.empty()) throw Error("empty grid list");
    return grid;
}

// Load a catalog from `cache` when it exists and covers [lo, hi]; otherwise
// compute it and (when a cache path was given) persist it there.
zeros::ZeroCatalog obtain_catalog(const std::string& cache, double lo,
                                  double hi) {
    if (!cache.empty()) {
        const std::string path = resolve_cache_path(cache);
        if (std::filesystem::exists(path)) {
            auto cat = zeros::load_cache(path);
            if (cat.t_min <= lo + 1e-9 && cat.t_max >= hi - 1e-9) return cat;
        }
        auto cat = zeros::find_zeros(lo, hi);
        zeros::save_cache(cat, path);
        // Reload through the cache so a compute-then-persist run and a later
        // cache-hit run feed byte-identical catalogs into every report.
        return zeros::load_cache(path);
    }
    return zeros::find_zeros(lo, hi);
}

// ---------------------------------------------------------------------------
// Config file injection: tokens from the file are spliced in right after the
// subcommand name(s), so explicit command-line flags (which CLI11 reads with
// take-last semantics and which we additionally dedupe against) win.
// ---------------------------------------------------------------------------

bool user_supplied(const std::vector<std::string>& args,
                   const std::string& key) {
    const std::string flag = "--" + key;
    for (const auto& a : args)
        if (a == flag || a.rfind(flag + "=", 0) == 0) return true;
    return false;
}

std::vector<std::string> with_config(const std::vector<std::string>& args) {
    std::string cfg;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) cfg = args[i + 1];
        else if (args[i].rfind("--config=", 0) == 0) cfg = args[i].substr(9);
    }
    if (cfg.empty()) return args;

    auto pairs = config_tokens(cfg);  // flat ["--key", "value", ...]
    std::vector<std::string> inject;
    for (std::size_t i = 0; i + 1 < pairs.size(); i += 2) {
        const std::string key = pairs[i].substr(2);
        if (key == "config" || user_supplied(args, key)) continue;
        inject.push_back(pairs[i]);
        inject.push_back(pairs[i + 1]);
    }
    if (inject.empty()) return args;

    static const std::vector<std::string> TOP = {
        "zeros", "sum",   "theorem21", "lemmas", "perron",
        "contour", "gonek", "appendix",  "chars"};
    static const std::vector<std::string> ZEROS_SUB = {"find", "import",
                                                       "verify"};
    std::size_t pos = args.size();
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (std::find(TOP.begin(), TOP.end(), args[i]) != TOP.end()) {
            pos = i + 1;
            if (args[i] == "zeros" && i + 1 < args.size() &&
                std::find(ZEROS_SUB.begin(), ZEROS_SUB.end(), args[i + 1]) !=
                    ZEROS_SUB.end())
                pos = i + 2;
            break;
        }
    }
    std::vector<std::string> out(args.begin(), args.begin() + pos);
    out.insert(out.end(), inject.begin(), inject.end());
    out.insert(out.end(), args.begin() + pos, args.end());
    return out;
}

// ---------------------------------------------------------------------------
// Subcommand runners.  Each prints an aligned summary, optionally writes a
// JSON report, and returns the process exit code.
// ---------------------------------------------------------------------------

int run_zeros_find(double t_min, double t_max, const std::string& cache,
                   const std::string& out) {
    auto cat = zeros::find_zeros(t_min, t_max);
    std::string cache_path;
    if (!cache.empty()) {
        cache_path = resolve_cache_path(cache);
        zeros::save_cache(cat, cache_path);
    }
    double expect = zeros::expected_count(cat.t_max) -
                    zeros::expected_count(cat.t_min);
    head("zeros find");
    kv("window", "[" + fmt(cat.t_min) + ", " + fmt(cat.t_max) + "]");
    kv("zeros", std::to_string(cat.size()));
    kv("expected", fmt(expect));
    if (cat.size() > 0) {
        kv("first", fmt(cat.entries.front().ordinate));
        kv("last", fmt(cat.entries.back().ordinate));
    }
    if (!cache_path.empty()) kv("cache", cache_path);
    json j;
    j["command"] = "zeros find";
    j["t_min"] = cat.t_min;
    j["t_max"] = cat.t_max;
    j["count"] = cat.size();
    j["expected"] = expect;
    j["cache"] = cache_path;
    maybe_write_json(out, j.dump(2) + "\n");
    return 0;
}

int run_zeros_import(const std::string& in, const std::string& cache,
                     const std::string& out) {
    auto cat = zeros::import_zeros(in);
    std::string cache_path;
    if (!cache.empty()) {
        cache_path = resolve_cache_path(cache);
        zeros::save_cache(cat, cache_path);
    }
    head("zeros import");
    kv("source", in);
    kv("zeros", std::to_string(cat.size()));
    if (cat.size() > 0) {
        kv("first", fmt(cat.entries.front().ordinate));
        kv("last", fmt(cat.entries.back().ordinate));
    }
    if (!cache_path.empty()) kv("cache", cache_path);
    json j;
    j["command"] = "zeros import";
    j["source"] = in;
    j["count"] = cat.size();
    j["cache"] = cache_path;
    maybe_write_json(out, j.dump(2) + "\n");
    return 0;
}

int run_zeros_verify(const std::string& cache, const std::string& against,
                     const std::string& out) {
    auto cat = zeros::load_cache(resolve_cache_path(cache));
    json j;
    j["command"] = "zeros verify";
    j["count"] = cat.size();
    bool pass = false;
    head("zeros verify");
    kv("cache", resolve_cache_path(cache));
    kv("zeros", std::to_string(cat.size()));
    if (!against.empty()) {
        zeros::ZeroCatalog other;
        try {
            other = zeros::load_cache(against);
        } catch (const BadMagic&) {
            other = zeros::import_zeros(against);
        }
        pass = zeros::catalogs_equal(cat, other);
        kv("against", against);
        kv("against zeros", std::to_string(other.size()));
        kv("equal", pass ? "yes" : "no");
        j["against"] = against;
        j["equal"] = pass;
    } else {
        double expect = zeros::expected_count(cat.t_max) -
                        zeros::expected_count(cat.t_min);
        double dev = static_cast<double>(cat.size()) - expect;
        pass = std::abs(dev) <= 2.0;
        kv("expected", fmt(expect));
        kv("deviation", fmt(dev));
        kv("within +-2", pass ? "yes" : "no");
        j["expected"] = expect;
        j["deviation"] = dev;
    }
    j["passed"] = pass;
    maybe_write_json(out, j.dump(2) + "\n");
    return pass ? 0 : 1;
}

int run_sum(double t1, double t2, std::uint64_t x, double y1, double y2,
            double C, int threads, const std::string& cache,
            const std::string& out) {
    corr::ShiftParams shifts(y1, y2, C);
    corr::AnalysisParams params(t1, t2, x, C);
    auto cat = obtain_catalog(cache, std::max(10.0, t1 - 1.0), t2 + 1.0);
    auto r = corr::zero_sum(cat, shifts, params, threads);
    head("sum");
    kv("window", "[" + fmt(t1) + ", " + fmt(t2) + "]");
    kv("x", std::to_string(x));
    kv("shifts", fmt(y1) + ", " + fmt(y2));
    kv("zeros", std::to_string(r.zeros_used));
    kv("value", fmt(r.value));
    kv("est abs error", fmt(r.est_abs_error));
    json j;
    j["command"] = "sum";
    j["T1"] = t1;
    j["T2"] = t2;
    j["x"] = x;
    j["y1"] = y1;
    j["y2"] = y2;
    j["zeros_used"] = r.zeros_used;
    j["value"] = {r.value.real(), r.value.imag()};
    j["est_abs_error"] = r.est_abs_error;
    maybe_write_json(out, j.dump(2) + "\n");
    return 0;
}

int run_theorem21(double T, double y1, double y2, double C, int threads,
                  const std::string& cache, const std::string& out,
                  const std::string& csv) {
    corr::ShiftParams shifts(y1, y2, C);
    const double eps = std::exp(-C * std::sqrt(std::log(std::max(T, 10.0))));
    auto cat = obtain_catalog(cache, std::max(10.0, T - 1.0),
                              T * (1.0 + eps) + 2.0);
    auto rep = corr::theorem21_report(shifts, T, cat, threads);
    head("theorem21");
    kv("window midpoint", fmt(rep.T_mid));
    kv("delta", fmt(rep.delta));
    kv("x", std::to_string(rep.x) + "  (" + rep.pair_mode + ")");
    kv("shifts", fmt(rep.y1) + ", " + fmt(rep.y2));
    kv("zeros", std::to_string(rep.zeros_used));
    kv("zero sum", fmt(rep.zero_sum_value));
    kv("main term", fmt(rep.main_term));
    kv("bracket M'", fmt(rep.m_prime_value));
    kv("residual", fmt(rep.residual));
    kv("rel residual", fmt(rep.rel_residual));
    kv("error budget", fmt(rep.error_budget));
    kv("sum est error", fmt(rep.sum_est_error));
    maybe_write_json(out, rep.to_json() + "\n");
    if (!csv.empty()) {
        bool fresh = !std::filesystem::exists(csv) ||
                     std::filesystem::file_size(csv) == 0;
        std::ofstream f(csv, std::ios::app | std::ios::binary);
        if (!f) throw Error("cannot open output file: " + csv);
        if (fresh) f << corr::SumReport::csv_header() << "\n";
        f << rep.csv_row() << "\n";
    }
    return 0;
}

int run_lemmas(const std::string& which, std::uint64_t n_max, double c,
               double A, double B, std::uint64_t x, double y_exponent,
               const std::string& x_grid_csv, const std::string& t_grid_csv,
               const std::string& out) {
    std::vector<double> x15_grid = {10, 100, 1e3, 1e4, 1e5, 1e6};
    std::vector<double> x17_grid = {100, 1e3, 1e4, 1e5};
    std::vector<double> t_grid = {100, 316, 1e3, 3162, 1e4};
    if (!x_grid_csv.empty()) x15_grid = x17_grid = parse_grid(x_grid_csv);
    if (!t_grid_csv.empty()) t_grid = parse_grid(t_grid_csv);
    auto y_rule = [y_exponent](double X) { return std::pow(X, y_exponent); };

    std::vector<lemmas::LemmaVerdict> verdicts;
    auto want = [&which](const char* id) {
        return which == "all" || which == id;
    };
    if (want("3.14")) verdicts.push_back(lemmas::check_3_14(n_max));
    if (want("3.15")) verdicts.push_back(lemmas::check_3_15(x15_grid, c));
    if (want("3.16")) verdicts.push_back(lemmas::check_3_16(A, B));
    if (want("3.17")) verdicts.push_back(lemmas::check_3_17(x17_grid, y_rule));
    if (want("3.18"))
        verdicts.push_back(
            lemmas::check_3_18_19(t_grid, x, lemmas::SumVariant::nx));
    if (want("3.19"))
        verdicts.push_back(
            lemmas::check_3_18_19(t_grid, x, lemmas::SumVariant::n_over_x));
    if (verdicts.empty()) throw Error("no check selected: " + which);

    bool all_pass = true;
    head("lemmas");
    json rows = json::array();
    for (const auto& v : verdicts) {
        all_pass = all_pass && v.passed;
        std::printf("  %-6s %-10s ratio %-14.8g %s\n", v.lemma_id.c_str(),
                    v.passed ? "pass" : "FAIL", v.worst_ratio,
                    v.tested_domain.c_str());
        json r;
        r["lemma_id"] = v.lemma_id;
        r["tested_domain"] = v.tested_domain;
        r["worst_ratio"] = v.worst_ratio;
        r["witness"] = v.witness;
        r["passed"] = v.passed;
        rows.push_back(r);
    }
    kv("all passed", all_pass ? "yes" : "no");
    json j;
    j["command"] = "lemmas";
    j["verdicts"] = rows;
    j["passed"] = all_pass;
    maybe_write_json(out, j.dump(2) + "\n");
    return all_pass ? 0 : 1;
}

int run_perron(const std::string& family_name, double X, double W,
               double alpha, double beta, const std::string& out) {
    arith::CoefficientFamily family;
    family.alpha = alpha;
    family.beta = beta;
    if (family_name == "unit")
        family.kind = arith::CoefficientFamily::Kind::unit;
    else if (family_name == "pair_unit")
        family.kind = arith::CoefficientFamily::Kind::pair_unit;
    else
        family.kind = arith::CoefficientFamily::Kind::triple_lambda;
    auto rep = contour::perron_check(family, X, W);
    head("perron");
    kv("family", family_name);
    kv("X", fmt(rep.X));
    kv("W", fmt(rep.W));
    kv("exact sum", fmt(rep.exact_sum));
    kv("integral", fmt(rep.integral));
    kv("observed gap", fmt(rep.r1_observed));
    kv("error budget", fmt(rep.r1_bound));
    kv("K (<= 5)", fmt(rep.K));
    kv("evaluations", std::to_string(rep.evaluations));
    kv("passed", rep.passed ? "yes" : "no");
    maybe_write_json(out, rep.to_json() + "\n");
    return rep.passed ? 0 : 1;
}

int run_contour(double y1, double y2, std::uint64_t x, double t1, double t2,
                std::optional<double> left, std::optional<double> right,
                const std::string& cache, const std::string& out) {
    double hi = std::max({std::abs(t1), std::abs(t2), 15.0}) + 3.0;
    auto cat = obtain_catalog(cache, 10.0, hi);
    contour::RectangleOptions opt;
    opt.left_abscissa = left;
    opt.right_abscissa = right;
    auto rep = contour::rectangle_identity_check(y1, y2, x, t1, t2, cat, opt);
    head("contour");
    kv("window", "[" + fmt(rep.t_bottom) + ", " + fmt(rep.t_top) + "]");
    kv("nudges", fmt(rep.nudge_bottom) + ", " + fmt(rep.nudge_top));
    kv("abscissae", fmt(rep.left_abscissa) + " .. " + fmt(rep.right_abscissa));
    kv("x", std::to_string(x));
    kv("shifts", fmt(y1) + ", " + fmt(y2));
    kv("zeros", std::to_string(rep.zeros_used));
    kv("zero side", fmt(rep.lhs));
    kv("contour side", fmt(rep.rhs));
    std::string residues;
    if (rep.residue_at_one) residues += "s=1 ";
    if (rep.residue_at_shift1) residues += "s=1-iy1 ";
    if (rep.residue_at_shift2) residues += "s=-iy2 ";
    kv("residues", residues.empty() ? "none" : residues);
    kv("residual", fmt(rep.residual));
    kv("tolerance", fmt(rep.tolerance));
    kv("evaluations", std::to_string(rep.evaluations));
    kv("passed", rep.passed ? "yes" : "no");
    maybe_write_json(out, rep.to_json() + "\n");
    return rep.passed ? 0 : 1;
}

int run_gonek(double a, double b, double sigma, double u, int m,
              const std::string& out) {
    auto rep = contour::gonek_check(a, b, sigma, u, m);
    head("gonek");
    kv("range", "[" + fmt(a) + ", " + fmt(b) + "]");
    kv("sigma", fmt(sigma));
    kv("u", fmt(u));
    kv("log power m", std::to_string(m));
    kv("numeric", fmt(rep.numeric));
    kv("main term", fmt(rep.main_term));
    kv("error shape", fmt(rep.err_shape));
    kv("K (<= 10)", fmt(rep.K));
    kv("evaluations", std::to_string(rep.evaluations));
    kv("passed", rep.passed ? "yes" : "no");
    maybe_write_json(out, rep.to_json() + "\n");
    return rep.passed ? 0 : 1;
}

int run_appendix(const std::string& mode_name, double C, double c,
                 double C_prime, const std::string& t_grid_csv,
                 const std::string& out) {
    auto grid = parse_grid(t_grid_csv);
    auto mode = mode_name == "banks-eps" ? lemmas::ScanMode::banks_eps
                                         : lemmas::ScanMode::sqrt_window;
    auto table = lemmas::appendix_scan(grid, C, C_prime, c, mode);
    head("appendix");
    kv("mode", mode_name);
    kv("constants", "C=" + fmt(C) + " c=" + fmt(c) + " C'=" + fmt(C_prime));
    for (const auto& row : table.rows) {
        if (mode == lemmas::ScanMode::banks_eps)
            std::printf("  T %-12.6g k %-6.3g ratio %.8g\n", row.T, row.k,
                        row.ratio);
        else
            std::printf("  T %-12.6g ratio %.8g\n", row.T, row.ratio);
    }
    bool pass;
    json j;
    j["command"] = "appendix";
    j["mode"] = mode_name;
    j["C"] = C;
    j["c"] = c;
    j["C_prime"] = C_prime;
    json rows = json::array();
    for (const auto& row : table.rows)
        rows.push_back({row.T, row.k, row.ratio});
    j["rows"] = rows;
    if (mode == lemmas::ScanMode::sqrt_window) {
        pass = table.decreasing && table.top_below_one;
        kv("decreasing", table.decreasing ? "yes" : "no");
        kv("ends below 1", table.top_below_one ? "yes" : "no");
        j["decreasing"] = table.decreasing;
        j["top_below_one"] = table.top_below_one;
    } else {
        // The source claim is that no admissible choice makes this vanish;
        // the scan "passes" when the nonvanishing flag is raised.
        pass = table.nonvanishing;
        kv("nonvanishing", table.nonvanishing ? "yes (flagged)" : "no");
        j["nonvanishing"] = table.nonvanishing;
    }
    if (!table.boundary_note.empty()) kv("note", table.boundary_note);
    j["boundary_note"] = table.boundary_note;
    j["passed"] = pass;
    maybe_write_json(out, j.dump(2) + "\n");
    return pass ? 0 : 1;
}

int run_chars(std::uint64_t x, std::optional<std::uint64_t> n,
              std::optional<double> T2, double y1, double y2,
              const std::string& out) {
    auto table = chars::build_characters(x);
    const double sqrt_x = std::sqrt(static_cast<double>(x));
    double worst_tau = 0.0;
    for (std::size_t k = 1; k < table.gauss_sums.size(); ++k)
        worst_tau = std::max(worst_tau,
                             std::abs(std::abs(table.gauss_sums[k]) - sqrt_x));
    const double mu_x = static_cast<double>(arith::moebius(x));
    const double tau0_res = std::abs(table.gauss_sums[0] - cplx(mu_x, 0.0));
    double worst_add = 0.0;
    if (n) {
        worst_add = chars::additive_to_multiplicative_check(x, *n);
    } else {
        for (std::uint64_t k = 1; k < x; ++k)
            worst_add =
                std::max(worst_add, chars::additive_to_multiplicative_check(x, k));
    }
    bool pass =
        worst_tau <= 1e-10 && tau0_res <= 1e-12 && worst_add <= 1e-10;
    head("chars");
    kv("modulus", std::to_string(x));
    kv("generator", std::to_string(table.generator));
    kv("gauss worst", fmt(worst_tau));
    kv("principal gauss", fmt(tau0_res));
    kv("additive worst", fmt(worst_add));
    json j;
    j["command"] = "chars";
    j["x"] = x;
    j["generator"] = table.generator;
    j["gauss_worst"] = worst_tau;
    j["principal_gauss_residual"] = tau0_res;
    j["additive_worst"] = worst_add;
    if (T2) {
        auto kd = chars::k_decomposition_check(x, *T2, y1, y2);
        double rel = kd.residual / std::max(std::abs(kd.lhs), 1e-30);
        pass = pass && rel <= 1e-6;
        kv("K lhs", fmt(kd.lhs));
        kv("K rhs", fmt(kd.rhs));
        kv("K rel residual", fmt(rel));
        j["k_lhs"] = {kd.lhs.real(), kd.lhs.imag()};
        j["k_rhs"] = {kd.rhs.real(), kd.rhs.imag()};
        j["k_rel_residual"] = rel;
    }
    kv("passed", pass ? "yes" : "no");
    j["passed"] = pass;
    maybe_write_json(out, j.dump(2) + "\n");
    return pass ? 0 : 1;
}

}  // namespace

std::vector<std::string> config_tokens(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open config file: " + path);
    std::vector<std::string> tokens;
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) throw ParseError(lineno, "missing '='");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (value.size() >= 2 && ((value.front() == '"' && value.back() == '"') ||
                                  (value.front() == '\'' && value.back() == '\'')))
            value = value.substr(1, value.size() - 2);
        if (key.empty()) throw ParseError(lineno, "empty key");
        tokens.push_back("--" + key);
        tokens.push_back(value);
    }
    return tokens;
}

std::string resolve_cache_path(const std::string& path) {
    if (path.empty() || path.front() == '/' || path.rfind("./", 0) == 0 ||
        path.rfind("../", 0) == 0)
        return path;
    const char* dir = std::getenv("ZETALAB_CACHE_DIR");
    if (dir == nullptr || *dir == '\0') return path;
    std::filesystem::create_directories(dir);
    return std::string(dir) + "/" + path;
}

int dispatch(int argc, const char* const* argv) {
    std::vector<std::string> args;
    args.reserve(static_cast<std::size_t>(std::max(argc - 1, 0)));
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return dispatch(args);
}

int dispatch(const std::vector<std::string>& raw_args) {
    CLI::App app{"numerical laboratory for shifted zeta correlation sums"};
    app.require_subcommand(1);

    std::string config_path;
    int threads = 1;
    app.add_option("--config", config_path,
                   "flat key = value file; explicit flags override it");
    app.add_option("--threads", threads, "worker threads (default 1)")
        ->check(CLI::Range(1, 256));

    // zeros find|import|verify
    auto* zeros_cmd = app.add_subcommand("zeros", "zero catalog management");
    zeros_cmd->require_subcommand(1);
    zeros_cmd->fallthrough();
    double zf_tmin = 0.0, zf_tmax = 0.0;
    std::string zf_cache, zf_out;
    auto* zeros_find =
        zeros_cmd->add_subcommand("find", "scan a window for zeros");
    zeros_find->fallthrough();
    zeros_find->add_option("--t-min", zf_tmin, "window start (>= 10)")
        ->required();
    zeros_find->add_option("--t-max", zf_tmax, "window end (<= 5e4)")
        ->required();
    zeros_find->add_option("--cache", zf_cache, "write binary cache here");
    zeros_find->add_option("--out", zf_out, "write JSON report here");

    std::string zi_in, zi_cache, zi_out;
    auto* zeros_import =
        zeros_cmd->add_subcommand("import", "read an ordinate text file");
    zeros_import->fallthrough();
    zeros_import->add_option("--in", zi_in, "text file, one ordinate per line")
        ->required();
    zeros_import->add_option("--cache", zi_cache, "write binary cache here");
    zeros_import->add_option("--out", zi_out, "write JSON report here");

    std::string zv_cache, zv_against, zv_out;
    auto* zeros_verify = zeros_cmd->add_subcommand(
        "verify", "check a cache against the counting formula or a reference");
    zeros_verify->fallthrough();
    zeros_verify->add_option("--cache", zv_cache, "binary cache to verify")
        ->required();
    zeros_verify->add_option("--against", zv_against,
                             "reference cache or text file");
    zeros_verify->add_option("--out", zv_out, "write JSON report here");

    // sum
    auto* sum_cmd =
        app.add_subcommand("sum", "windowed zero-side correlation sum");
    sum_cmd->fallthrough();
    double s_t1 = 0.0, s_t2 = 0.0, s_y1 = 0.0, s_y2 = 0.0, s_C = 1.0;
    std::uint64_t s_x = 0;
    std::string s_cache, s_out;
    sum_cmd->add_option("--t1", s_t1, "window start")->required();
    sum_cmd->add_option("--t2", s_t2, "window end (< 2*t1)")->required();
    sum_cmd->add_option("--x", s_x, "twist prime")->required();
    sum_cmd->add_option("--y1", s_y1, "first shift")->required();
    sum_cmd->add_option("--y2", s_y2, "second shift")->required();
    sum_cmd->add_option("--C", s_C, "window-width constant (default 1)");
    sum_cmd->add_option("--cache", s_cache, "zero cache to reuse/create");
    sum_cmd->add_option("--out", s_out, "write JSON report here");

    // theorem21
    auto* th_cmd = app.add_subcommand(
        "theorem21", "full pipeline: pair selection, zero sum, main term");
    th_cmd->fallthrough();
    double t_T = 0.0, t_y1 = 0.0, t_y2 = 0.0, t_C = 1.0;
    std::string t_cache, t_out, t_csv;
    th_cmd->add_option("--T", t_T, "window base height (10 .. 2e4)")
        ->required();
    th_cmd->add_option("--y1", t_y1, "first shift")->required();
    th_cmd->add_option("--y2", t_y2, "second shift")->required();
    th_cmd->add_option("--C", t_C, "window-width constant (default 1)");
    th_cmd->add_option("--cache", t_cache, "zero cache to reuse/create");
    th_cmd->add_option("--out", t_out, "write JSON report here");
    th_cmd->add_option("--csv", t_csv, "append a CSV row here");

    // lemmas
    auto* lm_cmd =
        app.add_subcommand("lemmas", "brute-force oracle checks and scans");
    lm_cmd->fallthrough();
    std::string lm_which, lm_xgrid, lm_tgrid, lm_out;
    std::uint64_t lm_nmax = 100000, lm_x = 10;
    double lm_c = 0.5, lm_A = 1e3, lm_B = 1e6, lm_yexp = 2.0 / 3.0;
    lm_cmd->add_option("--which", lm_which, "3.14|3.15|3.16|3.17|3.18|3.19|all")
        ->required()
        ->check(CLI::IsMember(
            {"3.14", "3.15", "3.16", "3.17", "3.18", "3.19", "all"}));
    lm_cmd->add_option("--n-max", lm_nmax, "3.14 scan bound (default 1e5)");
    lm_cmd->add_option("--c", lm_c, "3.15 Y-range fraction (default 0.5)");
    lm_cmd->add_option("--A", lm_A, "3.16 lower endpoint (default 1e3)");
    lm_cmd->add_option("--B", lm_B, "3.16 upper endpoint (default 1e6)");
    lm_cmd->add_option("--x", lm_x, "3.18/3.19 twist size (default 10)");
    lm_cmd->add_option("--y-exponent", lm_yexp,
                       "3.17 window rule Y = X^e (default 2/3)");
    lm_cmd->add_option("--x-grid", lm_xgrid, "comma list overriding X grids");
    lm_cmd->add_option("--t-grid", lm_tgrid, "comma list overriding t grid");
    lm_cmd->add_option("--out", lm_out, "write JSON report here");

    // perron
    auto* pr_cmd =
        app.add_subcommand("perron", "truncated Perron formula check");
    pr_cmd->fallthrough();
    std::string pr_family, pr_out;
    double pr_X = 0.0, pr_W = 0.0, pr_alpha = 0.5, pr_beta = 0.25;
    pr_cmd->add_option("--family", pr_family, "unit|pair_unit|triple_lambda")
        ->required()
        ->check(CLI::IsMember({"unit", "pair_unit", "triple_lambda"}));
    pr_cmd->add_option("--X", pr_X, "summation length (3 .. 1e5)")->required();
    pr_cmd->add_option("--W", pr_W, "integration height (>= 10)")->required();
    pr_cmd->add_option("--alpha", pr_alpha, "first twist (default 0.5)");
    pr_cmd->add_option("--beta", pr_beta, "second twist (default 0.25)");
    pr_cmd->add_option("--out", pr_out, "write JSON report here");

    // contour
    auto* ct_cmd = app.add_subcommand(
        "contour", "rectangle identity: zero sum vs edge integrals");
    ct_cmd->fallthrough();
    double ct_y1 = 0.0, ct_y2 = 0.0, ct_t1 = 0.0, ct_t2 = 0.0;
    double ct_left = 0.0, ct_right = 0.0;
    std::uint64_t ct_x = 0;
    std::string ct_cache, ct_out;
    ct_cmd->add_option("--y1", ct_y1, "first shift")->required();
    ct_cmd->add_option("--y2", ct_y2, "second shift")->required();
    ct_cmd->add_option("--x", ct_x, "twist prime")->required();
    ct_cmd->add_option("--t1", ct_t1, "window bottom")->required();
    ct_cmd->add_option("--t2", ct_t2, "window top")->required();
    auto* ct_left_opt =
        ct_cmd->add_option("--left", ct_left, "override left abscissa");
    auto* ct_right_opt =
        ct_cmd->add_option("--right", ct_right, "override right abscissa");
    ct_cmd->add_option("--cache", ct_cache, "zero cache to reuse/create");
    ct_cmd->add_option("--out", ct_out, "write JSON report here");

    // gonek
    auto* gk_cmd =
        app.add_subcommand("gonek", "stationary-phase integral check");
    gk_cmd->fallthrough();
    double gk_a = 0.0, gk_b = 0.0, gk_sigma = 0.0, gk_u = 0.0;
    int gk_m = 0;
    std::string gk_out;
    gk_cmd->add_option("--a", gk_a, "lower endpoint (>= 10)")->required();
    gk_cmd->add_option("--b", gk_b, "upper endpoint (<= 10a)")->required();
    gk_cmd->add_option("--sigma", gk_sigma, "weight exponent")->required();
    gk_cmd->add_option("--u", gk_u, "resonance point")->required();
    gk_cmd->add_option("--m", gk_m, "log power, 0 or 1")
        ->required()
        ->check(CLI::Range(0, 1));
    gk_cmd->add_option("--out", gk_out, "write JSON report here");

    // appendix
    auto* ap_cmd =
        app.add_subcommand("appendix", "error-term ratio scans (pure formula)");
    ap_cmd->fallthrough();
    std::string ap_mode = "sqrt-window", ap_tgrid = "1e6,1e8,1e10,1e12,1e14";
    std::string ap_out;
    double ap_C = 1.0, ap_c = 3.0, ap_Cp = 2.25;
    ap_cmd->add_option("--mode", ap_mode, "sqrt-window|banks-eps")
        ->check(CLI::IsMember({"sqrt-window", "banks-eps"}));
    ap_cmd->add_option("--C", ap_C, "decay constant (default 1)");
    ap_cmd->add_option("--c", ap_c, "exponent constant (default 3)");
    ap_cmd->add_option("--C-prime", ap_Cp, "window constant (default 2.25)");
    ap_cmd->add_option("--T-grid", ap_tgrid, "comma list of heights");
    ap_cmd->add_option("--out", ap_out, "write JSON report here");

    // chars
    auto* ch_cmd = app.add_subcommand(
        "chars", "character table, Gauss sums, additive twist identities");
    ch_cmd->fallthrough();
    std::uint64_t ch_x = 0, ch_n = 0;
    double ch_T2 = 0.0, ch_y1 = 1.0, ch_y2 = 2.0;
    std::string ch_out;
    ch_cmd->add_option("--x", ch_x, "odd prime modulus <= 101")->required();
    auto* ch_n_opt =
        ch_cmd->add_option("--n", ch_n, "check one residue (default: all)");
    auto* ch_T2_opt = ch_cmd->add_option(
        "--T2", ch_T2, "also run the triple-sum decomposition to this height");
    ch_cmd->add_option("--y1", ch_y1, "first shift (default 1)");
    ch_cmd->add_option("--y2", ch_y2, "second shift (default 2)");
    ch_cmd->add_option("--out", ch_out, "write JSON report here");

    try {
        std::vector<std::string> args = with_config(raw_args);
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        std::printf("%s", app.help().c_str());
        return 0;
    } catch (const CLI::ParseError& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return 2;
    } catch (const Error& e) {  // config file problems
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return 2;
    }

    try {
        if (zeros_find->parsed())
            return run_zeros_find(zf_tmin, zf_tmax, zf_cache, zf_out);
        if (zeros_import->parsed())
            return run_zeros_import(zi_in, zi_cache, zi_out);
        if (zeros_verify->parsed())
            return run_zeros_verify(zv_cache, zv_against, zv_out);
        if (sum_cmd->parsed())
            return run_sum(s_t1, s_t2, s_x, s_y1, s_y2, s_C, threads, s_cache,
                           s_out);
        if (th_cmd->parsed())
            return run_theorem21(t_T, t_y1, t_y2, t_C, threads, t_cache, t_out,
                                 t_csv);
        if (lm_cmd->parsed())
            return run_lemmas(lm_which, lm_nmax, lm_c, lm_A, lm_B, lm_x,
                              lm_yexp, lm_xgrid, lm_tgrid, lm_out);
        if (pr_cmd->parsed())
            return run_perron(pr_family, pr_X, pr_W, pr_alpha, pr_beta, pr_out);
        if (ct_cmd->parsed()) {
            std::optional<double> left, right;
            if (ct_left_opt->count() > 0) left = ct_left;
            if (ct_right_opt->count() > 0) right = ct_right;
            return run_contour(ct_y1, ct_y2, ct_x, ct_t1, ct_t2, left, right,
                               ct_cache, ct_out);
        }
        if (gk_cmd->parsed())
            return run_gonek(gk_a, gk_b, gk_sigma, gk_u, gk_m, gk_out);
        if (ap_cmd->parsed())
            return run_appendix(ap_mode, ap_C, ap_c, ap_Cp, ap_tgrid, ap_out);
        if (ch_cmd->parsed()) {
            std::optional<std::uint64_t> nn;
            std::optional<double> TT2;
            if (ch_n_opt->count() > 0) nn = ch_n;
            if (ch_T2_opt->count() > 0) TT2 = ch_T2;
            return run_chars(ch_x, nn, TT2, ch_y1, ch_y2, ch_out);
        }
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    std::fprintf(stderr, "usage error: no subcommand\n");
    return 2;
}

}  // namespace zetalab::cli
