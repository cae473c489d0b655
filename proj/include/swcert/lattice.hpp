#ifndef SWCERT_LATTICE_HPP
#define SWCERT_LATTICE_HPP

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "swcert/linalg.hpp"

namespace swcert {

inline constexpr long long kDefaultEnumCap = 1000000;

/// Thrown when an enumeration would exceed its cap; nothing is silently
/// truncated.
struct CapExceededError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A subspace of F_q^m held in canonical form: the RREF basis matrix.
/// Two subspaces are equal iff their canonical bases are identical, so the
/// flattened basis doubles as a deterministic encoding for ordering.
struct Subspace {
    FieldPtr F;
    int ambient = 0;
    MatFq basis;  // RREF, full row rank, possibly 0 rows

    Subspace() = default;
    /// Canonicalizes arbitrary spanning rows (zero rows dropped).
    static Subspace span(const FieldPtr& f, int ambient, const MatFq& rows);
    static Subspace zero(const FieldPtr& f, int ambient);
    static Subspace full(const FieldPtr& f, int ambient);

    int dim() const { return basis.rows; }

    bool contains_point(const std::vector<Fel>& v) const;

    bool operator==(const Subspace& o) const {
        return ambient == o.ambient && basis.a == o.basis.a && basis.rows == o.basis.rows;
    }
    bool operator!=(const Subspace& o) const { return !(*this == o); }
    /// (dim, flattened canonical basis) lexicographic order.
    bool operator<(const Subspace& o) const;
};

/// All d-dimensional subspaces of F_q^m, sorted by their canonical encoding.
/// Throws when the count gauss_binom(m, d, q) exceeds cap.
std::vector<Subspace> enumerate_subspaces(int m, int d, const FieldPtr& F,
                                          long long cap = kDefaultEnumCap);

/// Gaussian binomial coefficient: the number of b-dimensional subspaces of
/// F_q^a; zero when b < 0 or b > a.
mpz_class gauss_binom(int a, int b, int q);

Subspace intersect(const Subspace& U, const Subspace& V);
Subspace sum(const Subspace& U, const Subspace& V);
/// True iff inner is a subspace of outer.
bool contains(const Subspace& outer, const Subspace& inner);

/// Dot-product complement { w : w . v = 0 for all v in V }.  This is also
/// the character-theoretic annihilator of V under the trace pairing, which
/// the Fourier module cross-checks.
Subspace orthogonal_complement(const Subspace& V);

/// Mobius function of the subspace lattice:
/// (-1)^d q^C(d,2) with d = dim V - dim U when U <= V, else 0.
mpz_class mobius(const Subspace& U, const Subspace& V);

/// Number of c-dimensional subspaces meeting a fixed b-dimensional subspace
/// of an a-dimensional space trivially: q^{bc} * gauss_binom(a-b, c, q).
mpz_class count_complement_avoiding(int a, int b, int c, int q);

/// Least x > t with sum_{i<t} gauss_binom(x, i, q) < q^{t(x-t)}.
int find_min_x(int t, int q);

// --- point helpers -------------------------------------------------------
//
// Points of F_q^m are indexed 0..q^m-1 big-endian: the leftmost coordinate
// is the most significant radix-q digit of the index.  A k x m matrix point
// flattens row-major into a vector of length k*m before indexing.

std::vector<Fel> point_from_index(long long idx, int len, int q);
long long index_of_point(const std::vector<Fel>& v, int q);

/// Membership of a k x m matrix point in a submodule given by a subspace V
/// of F_q^m: every row must lie in V (x in U iff rowspace(x) <= V).
bool rows_contained(const std::vector<Fel>& flat, int k, const Subspace& V);

}  // namespace swcert

#endif
