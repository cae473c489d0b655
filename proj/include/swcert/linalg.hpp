#ifndef SWCERT_LINALG_HPP
#define SWCERT_LINALG_HPP

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "swcert/gf.hpp"

namespace swcert {

// Row-vector convention throughout the library: module elements are rows and
// homomorphisms act by right multiplication, so the image of a map is the row
// space of its matrix and kernels are left null spaces.

/// Dense matrix over F_q.
struct MatFq {
    FieldPtr F;
    int rows = 0, cols = 0;
    std::vector<Fel> a;  // row-major

    MatFq() = default;
    MatFq(FieldPtr f, int r, int c) : F(std::move(f)), rows(r), cols(c), a((size_t)r * c, 0) {}

    Fel& at(int r, int c) { return a[(size_t)r * cols + c]; }
    Fel at(int r, int c) const { return a[(size_t)r * cols + c]; }

    static MatFq identity(const FieldPtr& f, int n);
    static MatFq from_rows(const FieldPtr& f, const std::vector<std::vector<Fel>>& rows);

    std::vector<Fel> row(int r) const;
    MatFq transpose() const;

    bool operator==(const MatFq& o) const {
        return rows == o.rows && cols == o.cols && a == o.a;
    }
    bool operator<(const MatFq& o) const;  // lexicographic on (rows, cols, entries)
};

MatFq mat_mul(const MatFq& A, const MatFq& B);

/// v * M for a row vector v of length M.rows.
std::vector<Fel> apply_row(const std::vector<Fel>& v, const MatFq& M);

struct RrefResult {
    MatFq R;
    std::vector<int> pivots;
    int rank = 0;
};

/// Unique reduced row echelon form.
RrefResult rref(const MatFq& M);

/// RREF basis of the left null space { v : v M = 0 }; dimension M.rows - rank(M).
MatFq kernel_fq(const MatFq& M);

/// Some x with x M = b, or nullopt when b is outside the row space of M.
std::optional<std::vector<Fel>> solve_right(const MatFq& M, const std::vector<Fel>& b);

/// Inverse of a square matrix, nullopt if singular.
std::optional<MatFq> inverse(const MatFq& M);

/// Dense matrix over Z with exact arbitrary-precision entries.
struct MatZ {
    int rows = 0, cols = 0;
    std::vector<mpz_class> a;

    MatZ() = default;
    MatZ(int r, int c) : rows(r), cols(c), a((size_t)r * c, 0) {}

    mpz_class& at(int r, int c) { return a[(size_t)r * cols + c]; }
    const mpz_class& at(int r, int c) const { return a[(size_t)r * cols + c]; }
};

struct IntKernelResult {
    MatZ basis;  // rows form a basis of { x in Z^rows(M) : x M = 0 }
    int rank = 0;
};

/// Basis of the integer left null space of M, computed by fraction-free
/// (Bareiss) elimination on [M | I] with a leftmost-column / smallest-row
/// pivot rule, then brought to row-style Hermite normal form.  The kernel
/// lattice is saturated, which makes every HNF basis row primitive; the
/// result is deterministic and reproducible across platforms.
IntKernelResult integer_kernel(const MatZ& M);

/// Row HNF: echelon with positive pivots and entries above each pivot
/// reduced into [0, pivot).  Returns only the nonzero rows.
MatZ hermite_normal_form(const MatZ& M);

/// Rank of M over F_prime.  rank_Q(M) >= this for every prime, with equality
/// when the modular rank hits min(rows, cols) -- used as a fast certificate
/// of a trivial kernel before running the exact elimination.
int rank_mod_p(const MatZ& M, long prime);

}  // namespace swcert

#endif
