#pragma once
// Dirichlet characters modulo an odd prime, Gauss sums, and the exact finite
// identities converting the additive twist e(-n/x) into multiplicative ones.

#include <complex>
#include <cstdint>
#include <vector>

namespace zetalab::chars {

using cplx = std::complex<double>;
using u64 = std::uint64_t;

// One character as a dense value table over residues 0..x-1.
// Index k means chi_k(g^j) = e(k*j/(x-1)) for the stored primitive root g;
// k = 0 is principal.
struct Character {
    u64 modulus = 0;
    u64 index = 0;
    std::vector<cplx> values;  // values[n % modulus]
    bool principal() const { return index == 0; }
    const cplx& operator()(u64 n) const { return values[n % modulus]; }
};

struct CharacterTable {
    u64 modulus = 0;
    u64 generator = 0;  // smallest primitive root
    std::vector<Character> characters;  // x-1 entries, index order
    std::vector<cplx> gauss_sums;       // tau(chi_k)

    const Character& conjugate_of(u64 k) const;
};

// Build all x-1 characters mod an odd prime x <= 101.  Throws NotPrime.
CharacterTable build_characters(u64 x);

// | e(n/x) - (1/phi(x)) sum_chi chi(n) tau(conj chi) |, exact identity for
// gcd(n, x) = 1.  Throws NotCoprime.
double additive_to_multiplicative_check(u64 x, u64 n);

// Both sides of the additive-to-multiplicative decomposition of the twisted
// triple sum over a1*a2*a3 <= x*(T2+y2)/(2*pi), restricted to x coprime to
// a1*a2*a3: lhs by direct enumeration with e(-n/x) weights, rhs through the
// character expansion with Gauss-sum coefficients.
struct KDecomposition {
    cplx lhs;
    cplx rhs;
    double residual;  // |lhs - rhs|
};
KDecomposition k_decomposition_check(u64 x, double T2, double y1, double y2);

}  // namespace zetalab::chars
