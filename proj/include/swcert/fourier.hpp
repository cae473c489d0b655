#ifndef SWCERT_FOURIER_HPP
#define SWCERT_FOURIER_HPP

#include <vector>

#include "swcert/lattice.hpp"

namespace swcert {

/// Exact element of Z[zeta_p], p prime, in the power basis 1, zeta, ...,
/// zeta^{p-2}; zeta^{p-1} is rewritten via 1 + zeta + ... + zeta^{p-1} = 0.
/// For p = 2 this degenerates to ordinary integers (zeta = -1).
struct Cyc {
    int p = 2;
    std::vector<long long> c;  // length p - 1

    Cyc() : c(1, 0) {}
    explicit Cyc(int prime) : p(prime), c(prime - 1, 0) {}

    static Cyc integer(int p, long long n);
    static Cyc zeta_pow(int p, long long k);  // zeta^k, exponent mod p

    bool is_zero() const;
    bool operator==(const Cyc& o) const;
    bool operator!=(const Cyc& o) const { return !(*this == o); }
};

Cyc cyc_add(const Cyc& a, const Cyc& b);
Cyc cyc_sub(const Cyc& a, const Cyc& b);
Cyc cyc_mul(const Cyc& a, const Cyc& b);
Cyc cyc_scale(long long s, const Cyc& a);

/// chi_y(x) = zeta_p^{Tr(x . y)}.  The trace pairing is nondegenerate, so
/// y ranges over all of F_q^m and realizes every character exactly once.
Cyc char_eval(const FieldPtr& F, const std::vector<Fel>& y, const std::vector<Fel>& x);

/// Once-per-field check that (x, y) -> Tr(x y) separates points of F_q.
bool trace_pairing_nondegenerate(const FieldPtr& F);

/// Exact Fourier transform of f: F_q^m -> Z, indexed by character index y
/// (same big-endian point indexing as the lattice helpers):
///   F(f)(y) = sum_w f(w) chi_y(w).
std::vector<Cyc> fourier(const FieldPtr& F, int m, const std::vector<long long>& f,
                         long long cap = kDefaultEnumCap);

/// Inverse transform; throws if any recovered value fails the exact division
/// by |W| or has a nonintegral cyclotomic part.
std::vector<long long> inverse_fourier(const FieldPtr& F, int m, const std::vector<Cyc>& fhat);

/// Checks F(1_V) = |V| * 1_{Vperp} pointwise, tying the dot-product
/// complement to the character annihilator.
bool check_indicator_transform(const Subspace& V, long long cap = kDefaultEnumCap);

}  // namespace swcert

#endif
