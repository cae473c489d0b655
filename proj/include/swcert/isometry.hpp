#ifndef SWCERT_ISOMETRY_HPP
#define SWCERT_ISOMETRY_HPP

#include <optional>
#include <set>

#include "swcert/lattice.hpp"

namespace swcert {

// The alphabet A is the module of k x ell matrices over F_q; its
// automorphisms are GL_ell(F_q) acting by right multiplication.  Points of A
// are flattened row-major and indexed big-endian (lattice.hpp helpers).

/// Explicit subgroup of GL_ell(F_q): element list sorted by encoding,
/// closed under products and inverses, identity included.
struct AutGroup {
    FieldPtr F;
    int ell = 0;
    std::vector<MatFq> elems;

    int order() const { return (int)elems.size(); }
    bool is_element(const MatFq& g) const;
};

AutGroup trivial_group(const FieldPtr& F, int ell);
/// All of GL_ell(F_q), by filtering the q^{ell^2} candidate matrices.
AutGroup gl_group(const FieldPtr& F, int ell, long long cap = kDefaultEnumCap);
/// Smallest subgroup containing the given invertible generators.
AutGroup saturate(const FieldPtr& F, int ell, const std::vector<MatFq>& gens,
                  long long cap = kDefaultEnumCap);

/// Orbit decomposition of the right action of G on the points of A.
/// Orbit ids are assigned in order of least point index, so the zero orbit
/// {0} is always id 0.
struct OrbitPartition {
    FieldPtr F;
    int k = 1, ell = 0;
    long long npoints = 0;
    std::vector<int> orbit_id;
    std::vector<long long> reps;
    int num_orbits = 0;
};

OrbitPartition orbits(const AutGroup& G, int k, long long cap = kDefaultEnumCap);

/// Closure: all of GL_ell fixing every G-orbit setwise.  Shares G's orbits.
AutGroup closure(const AutGroup& G, int k, long long cap = kDefaultEnumCap);

/// n parallel homomorphisms W = F_q^m -> A, each an m x ell matrix acting by
/// right multiplication (row-wise on k x m matrix points when k > 1).
struct CodeMap {
    FieldPtr F;
    int m = 0, ell = 0;
    std::vector<MatFq> maps;

    int n() const { return (int)maps.size(); }
};

/// w * M applied row-wise to a flattened k x rows(M) point; returns the
/// flattened k x cols(M) image.
std::vector<Fel> apply_map_rows(const std::vector<Fel>& w, int k, const MatFq& M);

/// Per-orbit coordinate counts of a word given by its letter point indices.
std::vector<long long> swc_counts(const std::vector<long long>& letters, const OrbitPartition& P);

/// True iff swc(lambda(w)) = swc(mu(w)) for every point w of W.
bool is_swc_isometry(const CodeMap& lambda, const CodeMap& mu, const OrbitPartition& P, int k,
                     long long cap = kDefaultEnumCap);

/// Monomial map h(a)_i = g_i(a_{perm[i]}) with g_i from a stated group.
struct MonomialMap {
    std::vector<int> perm;
    std::vector<MatFq> gs;
};

/// Searches for a Gbar-monomial h with h(lambda(w)) = mu(w) for all w.
/// Prunes by kernel matching, then per-point orbit traces, then solves for
/// the per-coordinate automorphisms; complete, and deterministic (returns the
/// lexicographically least permutation).
std::optional<MonomialMap> extend_search(const CodeMap& lambda, const CodeMap& mu,
                                         const AutGroup& G, int k,
                                         long long cap = kDefaultEnumCap);

struct BruteForceResult {
    bool ran = false;
    mpz_class candidates = 0;
    std::optional<MonomialMap> found;
};

/// Unpruned sweep over all |Gbar|^n * n! monomial maps; refuses to run when
/// that count exceeds the budget.
BruteForceResult brute_force_extend(const CodeMap& lambda, const CodeMap& mu,
                                    const AutGroup& Gbar, int k, const mpz_class& budget);

/// Exhaustive test of the swc-isometry <=> G-monomial equivalence on A^n for
/// every group in the list: enumerates ALL linear endomorphisms of A^n.
/// Intended for tiny alphabets (A = F_2^2, n <= 2).
bool monomial_iff_isometry_check(const FieldPtr& F, int ell, int n,
                                 const std::vector<AutGroup>& groups,
                                 long long cap = kDefaultEnumCap);

/// Rational-valued weight on the points of A; exact comparisons only.
struct WeightFn {
    FieldPtr F;
    int k = 1, ell = 0;
    std::vector<mpq_class> values;  // one per point index

    long long npoints() const { return (long long)values.size(); }
};

WeightFn hamming_weight(const FieldPtr& F, int k, int ell);
/// U(omega): all g in GL_ell with omega(a g) = omega(a) for every a.
AutGroup weight_symmetry_group(const WeightFn& w, long long cap = kDefaultEnumCap);

struct PseudoInjectivityReport {
    bool pseudo_injective = true;
    bool characterizations_agree = true;
    std::optional<Subspace> witness_B;
    std::vector<std::vector<Fel>> witness_images;  // images of witness_B's basis rows
};

/// Tests G-pseudo-injectivity of A = F_q^ell two independent ways: the
/// definition (injective orbit-preserving maps from submodules extend to an
/// element of the closure) and the length-1 code search.  Both verdicts are
/// computed exhaustively and compared.
PseudoInjectivityReport g_pseudo_injective(const AutGroup& G, long long cap = kDefaultEnumCap);

/// Every subgroup, generated from all generator subsets; feasible only for
/// tiny groups (|G| <= 16).
std::vector<AutGroup> all_subgroups(const AutGroup& big);

}  // namespace swcert

#endif
