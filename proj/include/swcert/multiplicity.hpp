#ifndef SWCERT_MULTIPLICITY_HPP
#define SWCERT_MULTIPLICITY_HPP

#include <map>
#include <optional>

#include "swcert/lattice.hpp"

namespace swcert {

/// Finitely supported integer map on the subspace lattice of F_q^m.
/// Keys are canonical subspaces; zero values are never stored.
struct MultiplicityFn {
    FieldPtr F;
    int ambient = 0;
    std::map<Subspace, mpz_class> support;

    void set(const Subspace& V, const mpz_class& v) {
        if (v == 0)
            support.erase(V);
        else
            support[V] = v;
    }
    bool is_zero() const { return support.empty(); }
};

/// The sector decomposition around a fixed X of dimension m - ell:
///   s_eq   = { V : dim V = ell,     V cap X    = 0 }
///   s_lt   = { V : dim V < ell,     V cap X    = 0 }  (dimension, then canonical order)
///   s_perp = { V : dim V = m - ell, V cap Xperp = 0 } = { Vperp : V in s_eq }
/// X is pinned to span(e_{ell+1}, .., e_m) so certificates are reproducible.
struct SectorSets {
    Subspace X;
    std::vector<Subspace> s_eq, s_lt, s_perp;
};

/// E(eta)(x) = sum over the support of eta(U) * [x in U].  The point x is a
/// k x m matrix (a plain row vector when k = 1); membership in a submodule is
/// row-space inclusion.
mpz_class eval_E(const MultiplicityFn& eta, const std::vector<Fel>& point, int k);

/// The Mobius row eta_V: U -> mobius(U, V) supported on the interval [0, V].
MultiplicityFn eta_row(const Subspace& V, long long cap = kDefaultEnumCap);

SectorSets build_sectors(int m, int ell, const FieldPtr& F, long long cap = kDefaultEnumCap);

/// Sectors relative to an arbitrary X of dimension m - ell (the verifier
/// works with whatever X a certificate states).
SectorSets build_sectors_for(const Subspace& X, int ell, long long cap = kDefaultEnumCap);

/// The matrix of E' restricted to the sectors: rows indexed by s_eq, columns
/// by s_lt, entry (V, U) = mobius(U, V).  Requires m >= ell > k >= 1.
MatZ build_Eprime(const SectorSets& sectors);

struct KernelXiInfo {
    int rows = 0, cols = 0;
    int rank = -1;             // exact rank when computed, -1 if settled mod p
    int kernel_dim = 0;
    bool fast_path_full_rank = false;  // trivial kernel certified by rank mod p
};

/// A nonzero integer xi with E'(xi) = 0, chosen as the Hermite-basis row of
/// the kernel minimizing the sum of its positive entries (ties broken by
/// basis order), or nullopt when the kernel is trivial.  The positive-part
/// sum of xi becomes the code length n downstream, so smaller is better.
std::optional<MultiplicityFn> kernel_xi(int m, int ell, int k, const FieldPtr& F,
                                        long long cap = kDefaultEnumCap,
                                        KernelXiInfo* info = nullptr);

/// xi extended by zero from s_eq to the whole lattice (validates support).
MultiplicityFn eta_from_xi(const MultiplicityFn& xi, const SectorSets& sectors);

/// Support-wise orthogonal complement: eta_perp(V) = eta(Vperp).
MultiplicityFn eta_perp(const MultiplicityFn& eta);

struct EZeroResult {
    bool ok = true;
    std::vector<Fel> failing_point;  // empty when ok
    mpz_class failing_value;
};

/// Sweeps every k x m matrix point and reports the first x with E(eta)(x) != 0.
EZeroResult check_E_zero(const MultiplicityFn& eta, int k, long long cap = kDefaultEnumCap);

}  // namespace swcert

#endif
