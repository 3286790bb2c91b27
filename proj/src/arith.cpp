#include "zetalab/arith.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

#include "zetalab/errors.hpp"
#include "zetalab/summation.hpp"

namespace zetalab::arith {

namespace {

constexpr u64 SIEVE_LIMIT = 1'000'000;

struct SieveData {
    std::vector<std::uint32_t> primes;
    std::vector<std::uint32_t> spf;  // smallest prime factor, index < SIEVE_LIMIT+1
};

const SieveData& sieve() {
    static SieveData data;
    static std::once_flag flag;
    std::call_once(flag, [] {
        data.spf.assign(SIEVE_LIMIT + 1, 0);
        for (u64 i = 2; i <= SIEVE_LIMIT; ++i) {
            if (data.spf[i] == 0) {
                data.primes.push_back(static_cast<std::uint32_t>(i));
                for (u64 j = i; j <= SIEVE_LIMIT; j += i)
                    if (data.spf[j] == 0) data.spf[j] = static_cast<std::uint32_t>(i);
            }
        }
    });
    return data;
}

// cos/sin pair as a complex unit.
inline cplx cis(double t) { return {std::cos(t), std::sin(t)}; }

// All divisors of n given its factorization (unordered).
std::vector<u64> divisors_of(const std::vector<std::pair<u64, int>>& fac) {
    std::vector<u64> divs{1};
    for (const auto& [p, e] : fac) {
        std::size_t base = divs.size();
        u64 pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    return divs;
}

}  // namespace

const std::vector<std::uint32_t>& small_primes() { return sieve().primes; }

bool is_prime(u64 n) {
    if (n > 10'000'000'000'000'000ULL) throw OutOfRange("is_prime: n > 1e16");
    if (n < 2) return false;
    if (n <= SIEVE_LIMIT) return sieve().spf[n] == n;
    for (std::uint32_t p : sieve().primes) {
        if (static_cast<u64>(p) * p > n) return true;
        if (n % p == 0) return false;
    }
    // Continue trial division past the sieve with a 6k+-1 wheel.
    for (u64 q = SIEVE_LIMIT + 1 + (SIEVE_LIMIT % 6); q * q <= n; q += 6) {
        if (n % (q + 0) == 0 || n % (q + 4) == 0) return false;
    }
    return true;
}

std::vector<std::pair<u64, int>> factorize(u64 n) {
    if (n == 0 || n > 1'000'000'000'000ULL)
        throw OutOfRange("factorize: need 1 <= n <= 1e12");
    std::vector<std::pair<u64, int>> fac;
    // Fast path via smallest-prime-factor table.
    while (n > 1 && n <= SIEVE_LIMIT) {
        u64 p = sieve().spf[n];
        int e = 0;
        while (n % p == 0) { n /= p; ++e; }
        fac.emplace_back(p, e);
    }
    if (n > 1) {
        for (std::uint32_t p : sieve().primes) {
            if (static_cast<u64>(p) * p > n) break;
            if (n % p == 0) {
                int e = 0;
                while (n % p == 0) { n /= p; ++e; }
                fac.emplace_back(p, e);
            }
            if (n > 1 && n <= SIEVE_LIMIT) {
                while (n > 1) {
                    u64 q = sieve().spf[n];
                    int e = 0;
                    while (n % q == 0) { n /= q; ++e; }
                    fac.emplace_back(q, e);
                }
                break;
            }
        }
        // Any remainder has all prime factors > 1e6, hence is prime (n <= 1e12).
        if (n > 1) fac.emplace_back(n, 1);
    }
    std::sort(fac.begin(), fac.end());
    return fac;
}

double vonmangoldt(u64 n) {
    if (n < 2) return 0.0;
    auto fac = factorize(n);
    if (fac.size() != 1) return 0.0;
    return std::log(static_cast<double>(fac[0].first));
}

u64 divisor_count(u64 n) {
    u64 d = 1;
    for (const auto& [p, e] : factorize(n)) d *= static_cast<u64>(e) + 1;
    return d;
}

int moebius(u64 n) {
    auto fac = factorize(n);
    for (const auto& [p, e] : fac)
        if (e > 1) return 0;
    return (fac.size() % 2 == 0) ? 1 : -1;
}

u64 euler_phi(u64 n) {
    u64 result = n;
    for (const auto& [p, e] : factorize(n)) result -= result / p;
    return result;
}

std::vector<u64> primes_in(u64 lo, u64 hi) {
    if (hi < lo) return {};
    if (hi > 1'000'000'000'000ULL) throw OutOfRange("primes_in: hi > 1e12");
    if (hi - lo > 10'000'000ULL) throw OutOfRange("primes_in: span > 1e7");
    lo = std::max<u64>(lo, 2);
    if (hi < lo) return {};
    std::vector<char> composite(hi - lo + 1, 0);
    for (std::uint32_t p : sieve().primes) {
        u64 pp = static_cast<u64>(p) * p;
        if (pp > hi) break;
        u64 start = std::max(pp, ((lo + p - 1) / p) * static_cast<u64>(p));
        for (u64 j = start; j <= hi; j += p) composite[j - lo] = 1;
    }
    std::vector<u64> out;
    for (u64 n = lo; n <= hi; ++n)
        if (!composite[n - lo]) out.push_back(n);
    return out;
}

std::vector<std::uint16_t> divisor_sieve(std::size_t limit) {
    if (limit > 20'000'000) throw TooLarge("divisor_sieve: limit > 2e7");
    std::vector<std::uint16_t> d(limit + 1, 0);
    for (std::size_t i = 1; i <= limit; ++i)
        for (std::size_t j = i; j <= limit; j += i) ++d[j];
    return d;
}

cplx coefficient(const CoefficientFamily& family, u64 n) {
    if (n == 0 || n > 1'000'000'000ULL)
        throw OutOfRange("coefficient: need 1 <= n <= 1e9");
    using Kind = CoefficientFamily::Kind;
    if (family.kind == Kind::unit) return {1.0, 0.0};
    auto fac = factorize(n);
    if (family.kind == Kind::pair_unit) {
        ComplexSum acc;
        for (u64 a2 : divisors_of(fac))
            acc.add(cis(family.alpha * std::log(static_cast<double>(a2))));
        return acc.value();
    }
    // triple_lambda: a1 runs over prime powers p^k || exactly dividing layouts.
    ComplexSum acc;
    for (const auto& [p, e] : fac) {
        double logp = std::log(static_cast<double>(p));
        u64 pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            u64 m = n / pk;
            auto mfac = factorize(m);
            for (u64 a2 : divisors_of(mfac)) {
                u64 a3 = m / a2;
                double phase = family.alpha * std::log(static_cast<double>(a2)) +
                               family.beta * std::log(static_cast<double>(a3));
                acc.add(logp * cis(phase));
            }
        }
    }
    return acc.value();
}

std::vector<cplx> triple_conv_prefix(std::size_t limit, double th1, double th2,
                                     double th3) {
    if (limit > 2'000'000) throw TooLarge("triple_conv_prefix: limit > 2e6");
    std::vector<cplx> acc(limit + 1, cplx{0.0, 0.0});
    if (limit == 0) return acc;
    // Phase tables n^{i*theta} for the two free indices.
    std::vector<cplx> w2(limit + 1), w3(limit + 1);
    for (std::size_t a = 1; a <= limit; ++a) {
        double la = std::log(static_cast<double>(a));
        w2[a] = cis(th2 * la);
        w3[a] = cis(th3 * la);
    }
    for (std::uint32_t p : small_primes()) {
        if (p > limit) break;
        double logp = std::log(static_cast<double>(p));
        for (u64 a1 = p; a1 <= limit; a1 *= p) {
            cplx c1 = logp * cis(th1 * std::log(static_cast<double>(a1)));
            std::size_t m1 = limit / a1;
            for (std::size_t a2 = 1; a2 <= m1; ++a2) {
                cplx c12 = c1 * w2[a2];
                std::size_t base = a1 * a2;
                std::size_t m2 = limit / base;
                for (std::size_t a3 = 1; a3 <= m2; ++a3)
                    acc[base * a3] += c12 * w3[a3];
            }
            if (a1 > limit / p) break;  // avoid overflow in a1 *= p
        }
    }
    return acc;
}

std::vector<cplx> coefficient_prefix(const CoefficientFamily& family,
                                     std::size_t limit) {
    using Kind = CoefficientFamily::Kind;
    if (family.kind == Kind::triple_lambda)
        return triple_conv_prefix(limit, 0.0, family.alpha, family.beta);
    if (limit > 20'000'000) throw TooLarge("coefficient_prefix: limit > 2e7");
    std::vector<cplx> acc(limit + 1, cplx{0.0, 0.0});
    if (limit == 0) return acc;
    if (family.kind == Kind::unit) {
        for (std::size_t n = 1; n <= limit; ++n) acc[n] = 1.0;
        return acc;
    }
    for (std::size_t a2 = 1; a2 <= limit; ++a2) {
        cplx w = cis(family.alpha * std::log(static_cast<double>(a2)));
        for (std::size_t n = a2; n <= limit; n += a2) acc[n] += w;
    }
    return acc;
}

DivisorSummatory divisor_summatory(double X) {
    if (!(X >= 1.0) || X > 1e12)
        throw OutOfRange("divisor_summatory: need 1 <= X <= 1e12");
    u64 n = static_cast<u64>(X);
    u64 root = static_cast<u64>(std::sqrt(static_cast<double>(n)));
    while ((root + 1) * (root + 1) <= n) ++root;
    while (root * root > n) --root;
    u64 total = 0;
    for (u64 k = 1; k <= root; ++k) total += n / k;
    u64 value = 2 * total - root * root;
    long double Xl = static_cast<long double>(X);
    long double smooth =
        Xl * std::log(Xl) + (2.0L * static_cast<long double>(EULER_GAMMA) - 1.0L) * Xl;
    return {value, static_cast<double>(static_cast<long double>(value) - smooth)};
}

KSumResult k_exponential_sum(u64 limit, u64 x, double y1, double y2,
                             KScope scope) {
    if (limit > 2'000'000) throw TooLarge("k_exponential_sum: limit > 2e6");
    if (x < 2 || !is_prime(x)) throw NotPrime("k_exponential_sum: x must be prime");
    // e(-j/x) for j = 0..x-1.
    std::vector<cplx> root(x);
    for (u64 j = 0; j < x; ++j)
        root[j] = cis(-2.0 * M_PI * static_cast<double>(j) / static_cast<double>(x));
    std::vector<cplx> w2(limit + 1);
    for (u64 a = 1; a <= limit; ++a)
        w2[a] = cis((y2 - y1) * std::log(static_cast<double>(a)));

    ComplexSum acc;
    u64 terms_total = 0, terms_multiple = 0;
    for (std::uint32_t p : small_primes()) {
        if (p > limit) break;
        double logp = std::log(static_cast<double>(p));
        for (u64 a1 = p; a1 <= limit; a1 *= p) {
            cplx c1 = logp * cis(y2 * std::log(static_cast<double>(a1)));
            u64 m1 = limit / a1;
            for (u64 a2 = 1; a2 <= m1; ++a2) {
                cplx c12 = c1 * w2[a2];
                u64 M = limit / (a1 * a2);
                u64 r12 = (a1 % x) * (a2 % x) % x;
                terms_total += M;
                if (r12 == 0) {
                    // x | a1*a2: every term has weight e(-integer) = 1.
                    terms_multiple += M;
                    if (scope != KScope::coprime)
                        acc.add(c12 * static_cast<double>(M));
                    continue;
                }
                u64 mult = M / x;  // count of a3 <= M with x | a3
                terms_multiple += mult;
                cplx inner{0.0, 0.0};
                u64 idx = 0;
                switch (scope) {
                    case KScope::all:
                        for (u64 a3 = 1; a3 <= M; ++a3) {
                            idx += r12;
                            if (idx >= x) idx -= x;
                            inner += root[idx];
                        }
                        break;
                    case KScope::coprime:
                        for (u64 a3 = 1; a3 <= M; ++a3) {
                            idx += r12;
                            if (idx >= x) idx -= x;
                            if (a3 % x != 0) inner += root[idx];
                        }
                        break;
                    case KScope::multiples:
                        // x | a3 forces weight 1; the sum is just the count.
                        inner = static_cast<double>(mult);
                        break;
                }
                acc.add(c12 * inner);
            }
            if (a1 > limit / p) break;
        }
    }
    if (scope == KScope::coprime) {
        terms_total -= terms_multiple;
        terms_multiple = 0;  // no multiples survive this scope
    }
    if (scope == KScope::multiples) terms_total = terms_multiple;
    return {acc.value(), terms_total, terms_multiple};
}

}  // namespace zetalab::arith
