#include "zetalab/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <limits>

#include "zetalab/errors.hpp"
#include "zetalab/hardy.hpp"

namespace zetalab::zeros {

namespace {

double z_of(double t) { return hardy::hardy_z_theta(t).Z; }

// Bisection + one secant polish on a bracketing interval.
double refine_zero(double a, double b, double fa, double fb) {
    for (int it = 0; it < 64 && (b - a) > 2e-9; ++it) {
        double m = 0.5 * (a + b);
        double fm = z_of(m);
        if (fm == 0.0) return m;
        if ((fa < 0.0) != (fm < 0.0)) {
            b = m;
            fb = fm;
        } else {
            a = m;
            fa = fm;
        }
    }
    double denom = fb - fa;
    if (denom != 0.0) {
        double s = b - fb * (b - a) / denom;
        if (s > a && s < b) return s;
    }
    return 0.5 * (a + b);
}

std::vector<ZeroEntry> scan(double t_min, double t_max, double step_factor) {
    std::vector<ZeroEntry> found;
    double t = t_min;
    double ft = z_of(t);
    while (t < t_max) {
        double step = step_factor / std::log(std::max(t, 3.0));
        double u = std::min(t + step, t_max);
        double fu = z_of(u);
        if (ft == 0.0) {
            found.push_back({t, 1e-9, ZeroEntry::Source::computed, 1});
        } else if ((ft < 0.0) != (fu < 0.0)) {
            double g = refine_zero(t, u, ft, fu);
            found.push_back({g, 1e-8, ZeroEntry::Source::computed, 1});
        }
        t = u;
        ft = fu;
    }
    return found;
}

}  // namespace

double expected_count(double T) {
    double u = T / (2.0 * M_PI);
    return u * std::log(u / M_E) + 7.0 / 8.0;
}

ZeroCatalog find_zeros(double t_min, double t_max) {
    if (!(t_min < t_max)) throw InvalidWindow("find_zeros: t_min >= t_max");
    if (t_min < 10.0 || t_max > 5e4)
        throw InvalidWindow("find_zeros: window outside [10, 5e4]");
    double expected = expected_count(t_max) - expected_count(t_min);
    double step_factor = 0.25;
    for (int attempt = 0; attempt < 2; ++attempt) {
        std::vector<ZeroEntry> found = scan(t_min, t_max, step_factor);
        if (std::abs(static_cast<double>(found.size()) - expected) < 2.0) {
            ZeroCatalog cat;
            cat.entries = std::move(found);
            cat.t_min = t_min;
            cat.t_max = t_max;
            return cat;
        }
        step_factor *= 0.5;
    }
    throw MissedZeroSuspected(
        "find_zeros: count deviates from the counting formula by >= 2 after "
        "step halving");
}

ZeroCatalog import_zeros(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "import_zeros: cannot open " + path);
    ZeroCatalog cat;
    std::string line;
    long lineno = 0;
    double prev = -1.0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t pos = line.find('#');
        if (pos != std::string::npos) line.erase(pos);
        std::size_t a = line.find_first_not_of(" \t\r\n");
        if (a == std::string::npos) continue;
        std::size_t b = line.find_last_not_of(" \t\r\n");
        std::string tok = line.substr(a, b - a + 1);
        char* end = nullptr;
        double v = std::strtod(tok.c_str(), &end);
        if (end == tok.c_str() || *end != '\0')
            throw ParseError(lineno, "import_zeros: bad ordinate '" + tok + "'");
        if (v <= prev) throw NonMonotonic("import_zeros: ordinates not ascending");
        prev = v;
        cat.entries.push_back({v, 1e-9, ZeroEntry::Source::imported, 1});
    }
    if (!cat.entries.empty()) {
        cat.t_min = cat.entries.front().ordinate;
        cat.t_max = cat.entries.back().ordinate;
    }
    return cat;
}

void save_cache(const ZeroCatalog& catalog, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw TruncatedFile("save_cache: cannot open " + path);
    const char magic[5] = {'Z', 'C', 'A', 'T', 0x01};
    out.write(magic, 5);
    auto put64 = [&out](std::uint64_t v) {
        char buf[8];
        for (int i = 0; i < 8; ++i) buf[i] = static_cast<char>((v >> (8 * i)) & 0xff);
        out.write(buf, 8);
    };
    auto putf = [&](double d) {
        std::uint64_t v;
        std::memcpy(&v, &d, 8);
        put64(v);
    };
    putf(catalog.t_min);
    putf(catalog.t_max);
    put64(catalog.entries.size());
    for (const auto& e : catalog.entries) putf(e.ordinate);
    out.flush();
    if (!out) throw TruncatedFile("save_cache: write failed");
}

ZeroCatalog load_cache(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw TruncatedFile("load_cache: cannot open " + path);
    char magic[5];
    in.read(magic, 5);
    if (in.gcount() != 5 || std::memcmp(magic, "ZCAT\x01", 5) != 0)
        throw BadMagic("load_cache: bad magic/version");
    auto get64 = [&in]() {
        unsigned char buf[8];
        in.read(reinterpret_cast<char*>(buf), 8);
        if (in.gcount() != 8) throw TruncatedFile("load_cache: short read");
        std::uint64_t v = 0;
        for (int i = 7; i >= 0; --i) v = (v << 8) | buf[i];
        return v;
    };
    auto getf = [&]() {
        std::uint64_t v = get64();
        double d;
        std::memcpy(&d, &v, 8);
        return d;
    };
    ZeroCatalog cat;
    cat.t_min = getf();
    cat.t_max = getf();
    std::uint64_t count = get64();
    cat.entries.reserve(count);
    double prev = -std::numeric_limits<double>::infinity();
    for (std::uint64_t i = 0; i < count; ++i) {
        double v = getf();
        if (v <= prev) throw NonMonotonic("load_cache: ordinates not ascending");
        prev = v;
        cat.entries.push_back({v, 1e-9, ZeroEntry::Source::imported, 1});
    }
    return cat;
}

bool catalogs_equal(const ZeroCatalog& a, const ZeroCatalog& b) {
    if (a.t_min != b.t_min || a.t_max != b.t_max) return false;
    if (a.entries.size() != b.entries.size()) return false;
    for (std::size_t i = 0; i < a.entries.size(); ++i)
        if (a.entries[i].ordinate != b.entries[i].ordinate) return false;
    return true;
}

double nudge_edge(const ZeroCatalog& catalog, double T) {
    double mean_gap = 2.0 * M_PI / std::log(std::max(T, 10.0) / (2.0 * M_PI));
    double clearance = 1e-3 * mean_gap;
    auto nearest = [&catalog](double t) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& e : catalog.entries)
            best = std::min(best, std::abs(e.ordinate - t));
        return best;
    };
    double t = T;
    for (int i = 0; i < 1000 && nearest(t) < clearance; ++i) t += clearance;
    return t;
}

std::vector<double> ordinates_in(const ZeroCatalog& catalog, double t_lo,
                                 double t_hi) {
    std::vector<double> out;
    for (const auto& e : catalog.entries)
        if (e.ordinate > t_lo && e.ordinate < t_hi) out.push_back(e.ordinate);
    return out;
}

}  // namespace zetalab::zeros
