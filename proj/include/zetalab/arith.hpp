#pragma once
// Elementary arithmetic functions (factorization-based), convolution
// coefficient families for Dirichlet-series partial sums, the hyperbola-method
// divisor summatory, and the additively twisted triple sum K used by the
// correlation machinery.

#include <complex>
#include <cstdint>
#include <vector>

namespace zetalab::arith {

using cplx = std::complex<double>;
using u64 = std::uint64_t;

// Euler-Mascheroni constant, 30 significant digits.
inline constexpr double EULER_GAMMA = 0.577215664901532860606512090082;

// Primes up to 10^6, built once, then read-only shared.
const std::vector<std::uint32_t>& small_primes();

bool is_prime(u64 n);                       // n <= 10^16
std::vector<std::pair<u64, int>> factorize(u64 n);  // n <= 10^12

double vonmangoldt(u64 n);   // log p if n = p^k, else 0
u64 divisor_count(u64 n);
int moebius(u64 n);
u64 euler_phi(u64 n);

// All primes p with lo <= p <= hi.  Span capped at 10^7.
std::vector<u64> primes_in(u64 lo, u64 hi);

// d(n) for all n <= limit, as a dense table (limit <= 2*10^7).
std::vector<std::uint16_t> divisor_sieve(std::size_t limit);

// Coefficient families b_n of the Dirichlet series under study:
//   triple_lambda: b_n = sum_{a1*a2*a3=n} Lambda(a1) a2^{i*alpha} a3^{i*beta}
//                  (series  -zeta'/zeta(s) * zeta(s-i*alpha) * zeta(s-i*beta))
//   pair_unit:     b_n = sum_{a1*a2=n} a2^{i*alpha}
//                  (series  zeta(s) * zeta(s-i*alpha))
//   unit:          b_n = 1              (series  zeta(s))
struct CoefficientFamily {
    enum class Kind { triple_lambda, pair_unit, unit };
    Kind kind = Kind::pair_unit;
    double alpha = 0.0;
    double beta = 0.0;
};

// Exact b_n by enumeration of ordered factorizations.  n <= 10^9.
cplx coefficient(const CoefficientFamily& family, u64 n);

// b_n for every n <= limit at once (inverted-loop enumeration); index 0 unused.
std::vector<cplx> coefficient_prefix(const CoefficientFamily& family,
                                     std::size_t limit);

// sum_{a1*a2*a3 = n} Lambda(a1) a1^{i*th1} a2^{i*th2} a3^{i*th3} for all
// n <= limit.  The general three-phase convolution used by the exact
// coefficient-bound scan.
std::vector<cplx> triple_conv_prefix(std::size_t limit, double th1, double th2,
                                     double th3);

// Exact D(X) = sum_{n<=X} d(n) via the Dirichlet hyperbola method, O(sqrt X),
// with the deviation from the smooth part X log X + (2*gamma - 1) X.
struct DivisorSummatory {
    u64 value;
    double voronoi_error;
};
DivisorSummatory divisor_summatory(double X);  // 1 <= X <= 10^12

// Additively twisted triple sum over a1*a2*a3 <= limit with weight
// Lambda(a1) a1^{i*y2} a2^{i*(y2-y1)} e(-a1*a2*a3 / x), x prime.
// Scope selects all terms, only x | a1*a2*a3, or only x coprime terms.
enum class KScope { all, coprime, multiples };
struct KSumResult {
    cplx value;
    u64 terms_total;     // summands with Lambda(a1) != 0
    u64 terms_multiple;  // of those, how many have x | a1*a2*a3
};
KSumResult k_exponential_sum(u64 limit, u64 x, double y1, double y2,
                             KScope scope);

}  // namespace zetalab::arith
