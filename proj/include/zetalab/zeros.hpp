#pragma once
// Ordered catalogs of critical-line zero ordinates: sign-change scanning with
// bisection refinement, text import, binary cache persistence, and the
// Riemann-von Mangoldt counting formula used as a completeness oracle.

#include <cstdint>
#include <string>
#include <vector>

namespace zetalab::zeros {

struct ZeroEntry {
    double ordinate = 0.0;
    double abs_err = 0.0;
    enum class Source { computed, imported } source = Source::computed;
    int multiplicity = 1;  // all zeros treated as simple
};

struct ZeroCatalog {
    std::vector<ZeroEntry> entries;
    double t_min = 0.0;
    double t_max = 0.0;

    std::size_t size() const { return entries.size(); }
};

// Smooth zero-counting approximation N(T) = (T/2pi) log(T/(2pi e)) + 7/8.
double expected_count(double T);

// Scan [t_min, t_max] (10 <= t_min < t_max <= 5e4) for sign changes of Z,
// refine by bisection plus one secant polish to ~1e-8.  Count is validated
// against the counting formula within +-1; on a deviation >= 2 the scan step
// is halved and retried once before MissedZeroSuspected is thrown.
// Degenerate windows throw InvalidWindow.
ZeroCatalog find_zeros(double t_min, double t_max);

// Odlyzko-style text: one ascending decimal ordinate per line, '#' comments
// skipped.  Throws ParseError (with line number) / NonMonotonic.
ZeroCatalog import_zeros(const std::string& path);

// Binary cache, bit-exact round trip over (t_min, t_max, ordinates):
// magic "ZCAT", version 0x01, little-endian binary64 t_min and t_max,
// unsigned-64 count, then ascending binary64 ordinates.
void save_cache(const ZeroCatalog& catalog, const std::string& path);
ZeroCatalog load_cache(const std::string& path);

// Equality over the serialized fields (bitwise ordinates).
bool catalogs_equal(const ZeroCatalog& a, const ZeroCatalog& b);

// Shift a window edge away from the nearest catalogued zero in steps of
// 1e-3 of the local mean gap until it clears that distance.
double nudge_edge(const ZeroCatalog& catalog, double T);

// Entries with t_lo < ordinate < t_hi (open window, the summation index set).
std::vector<double> ordinates_in(const ZeroCatalog& catalog, double t_lo,
                                 double t_hi);

}  // namespace zetalab::zeros
