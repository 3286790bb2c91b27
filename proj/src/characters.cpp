#include "zetalab/characters.hpp"

#include <cmath>

#include "zetalab/arith.hpp"
#include "zetalab/errors.hpp"
#include "zetalab/summation.hpp"

namespace zetalab::chars {

namespace {

inline cplx cis(double t) { return {std::cos(t), std::sin(t)}; }

u64 smallest_primitive_root(u64 x) {
    // x is an odd prime; group order x-1.
    auto fac = arith::factorize(x - 1);
    auto pow_mod = [x](u64 b, u64 e) {
        u64 r = 1 % x;
        b %= x;
        while (e) {
            if (e & 1) r = r * b % x;
            b = b * b % x;
            e >>= 1;
        }
        return r;
    };
    for (u64 g = 2; g < x; ++g) {
        bool primitive = true;
        for (const auto& [p, e] : fac) {
            if (pow_mod(g, (x - 1) / p) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) return g;
    }
    throw PreconditionViolated("no primitive root found (modulus not prime?)");
}

}  // namespace

const Character& CharacterTable::conjugate_of(u64 k) const {
    return characters[k == 0 ? 0 : modulus - 1 - k];
}

CharacterTable build_characters(u64 x) {
    if (x < 3 || x % 2 == 0 || !arith::is_prime(x))
        throw NotPrime("build_characters: modulus must be an odd prime");
    if (x > 101) throw OutOfRange("build_characters: modulus > 101");

    CharacterTable table;
    table.modulus = x;
    table.generator = smallest_primitive_root(x);

    // Discrete logs: dlog[g^j mod x] = j.
    std::vector<u64> dlog(x, 0);
    u64 gj = 1;
    for (u64 j = 0; j < x - 1; ++j) {
        dlog[gj] = j;
        gj = gj * table.generator % x;
    }

    table.characters.resize(x - 1);
    table.gauss_sums.resize(x - 1);
    for (u64 k = 0; k < x - 1; ++k) {
        Character& chi = table.characters[k];
        chi.modulus = x;
        chi.index = k;
        chi.values.assign(x, cplx{0.0, 0.0});
        for (u64 n = 1; n < x; ++n)
            chi.values[n] =
                cis(2.0 * M_PI * static_cast<double>(k * dlog[n] % (x - 1)) /
                    static_cast<double>(x - 1));
        ComplexSum tau;
        for (u64 a = 1; a < x; ++a)
            tau.add(chi.values[a] *
                    cis(2.0 * M_PI * static_cast<double>(a) / static_cast<double>(x)));
        table.gauss_sums[k] = tau.value();
    }
    return table;
}

double additive_to_multiplicative_check(u64 x, u64 n) {
    if (n % x == 0) throw NotCoprime("additive_to_multiplicative_check: x | n");
    CharacterTable table = build_characters(x);
    cplx lhs = cis(2.0 * M_PI * static_cast<double>(n % x) / static_cast<double>(x));
    ComplexSum rhs;
    for (u64 k = 0; k < x - 1; ++k)
        rhs.add(table.characters[k](n) *
                table.gauss_sums[table.characters[k].index == 0 ? 0 : x - 1 - k]);
    return std::abs(lhs - rhs.value() / static_cast<double>(x - 1));
}

KDecomposition k_decomposition_check(u64 x, double T2, double y1, double y2) {
    double Xreal = static_cast<double>(x) * (T2 + y2) / (2.0 * M_PI);
    if (Xreal > 1e6) throw TooLarge("k_decomposition_check: x(T2+y2)/2pi > 1e6");
    u64 X = static_cast<u64>(Xreal);

    // Left side: direct additive-twist enumeration, x-coprime terms only.
    auto k = arith::k_exponential_sum(X, x, y1, y2, arith::KScope::coprime);

    CharacterTable table = build_characters(x);
    double phi = static_cast<double>(x - 1);

    // Phase table for the a2 weight, shared by all characters.
    std::vector<cplx> w2(X + 1);
    for (u64 a = 1; a <= X; ++a)
        w2[a] = cis((y2 - y1) * std::log(static_cast<double>(a)));

    ComplexSum rhs;
    for (u64 kidx = 0; kidx < x - 1; ++kidx) {
        const Character& chi = table.characters[kidx];
        // One-period prefix sums of chi make the a3 sums O(1):
        // sum_{a3<=M} chi(a3) = floor(M/x)*P[x] + P[M%x].
        std::vector<cplx> prefix(x + 1, cplx{0.0, 0.0});
        for (u64 r = 1; r <= x; ++r) prefix[r] = prefix[r - 1] + chi.values[r % x];
        cplx period = prefix[x];
        auto chi_prefix = [&](u64 M) {
            return static_cast<double>(M / x) * period + prefix[M % x];
        };

        ComplexSum inner;
        for (std::uint32_t p : arith::small_primes()) {
            if (p > X) break;
            if (p == x) continue;  // chi(a1) = 0
            double logp = std::log(static_cast<double>(p));
            for (u64 a1 = p; a1 <= X; a1 *= p) {
                cplx c1 = logp * chi(a1) * cis(y2 * std::log(static_cast<double>(a1)));
                u64 m1 = X / a1;
                for (u64 a2 = 1; a2 <= m1; ++a2) {
                    if (a2 % x == 0) continue;
                    inner.add(c1 * chi(a2) * w2[a2] * chi_prefix(X / (a1 * a2)));
                }
                if (a1 > X / p) break;
            }
        }
        // chi(-1) tau(conj chi) weight.
        cplx tau_bar = table.gauss_sums[kidx == 0 ? 0 : x - 1 - kidx];
        rhs.add(chi.values[(x - 1) % x] * tau_bar * inner.value());
    }

    KDecomposition out;
    out.lhs = k.value;
    out.rhs = rhs.value() / phi;
    out.residual = std::abs(out.lhs - out.rhs);
    return out;
}

}  // namespace zetalab::chars
