#include "swcert/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace swcert {

MatFq MatFq::identity(const FieldPtr& f, int n) {
    MatFq I(f, n, n);
    for (int i = 0; i < n; ++i) I.at(i, i) = 1;
    return I;
}

MatFq MatFq::from_rows(const FieldPtr& f, const std::vector<std::vector<Fel>>& rows) {
    int r = (int)rows.size();
    int c = r ? (int)rows[0].size() : 0;
    MatFq M(f, r, c);
    for (int i = 0; i < r; ++i) {
        if ((int)rows[i].size() != c) throw std::invalid_argument("ragged rows");
        for (int j = 0; j < c; ++j) M.at(i, j) = rows[i][j];
    }
    return M;
}

std::vector<Fel> MatFq::row(int r) const {
    return std::vector<Fel>(a.begin() + (size_t)r * cols, a.begin() + (size_t)(r + 1) * cols);
}

MatFq MatFq::transpose() const {
    MatFq T(F, cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) T.at(j, i) = at(i, j);
    return T;
}

bool MatFq::operator<(const MatFq& o) const {
    if (rows != o.rows) return rows < o.rows;
    if (cols != o.cols) return cols < o.cols;
    return a < o.a;
}

MatFq mat_mul(const MatFq& A, const MatFq& B) {
    if (A.cols != B.rows) throw std::invalid_argument("dimension mismatch in mat_mul");
    const Field& F = *A.F;
    MatFq C(A.F, A.rows, B.cols);
    for (int i = 0; i < A.rows; ++i)
        for (int k = 0; k < A.cols; ++k) {
            Fel aik = A.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < B.cols; ++j)
                C.at(i, j) = F.add(C.at(i, j), F.mul(aik, B.at(k, j)));
        }
    return C;
}

std::vector<Fel> apply_row(const std::vector<Fel>& v, const MatFq& M) {
    if ((int)v.size() != M.rows) throw std::invalid_argument("dimension mismatch in apply_row");
    const Field& F = *M.F;
    std::vector<Fel> r(M.cols, 0);
    for (int i = 0; i < M.rows; ++i) {
        Fel vi = v[i];
        if (vi == 0) continue;
        for (int j = 0; j < M.cols; ++j) r[j] = F.add(r[j], F.mul(vi, M.at(i, j)));
    }
    return r;
}

RrefResult rref(const MatFq& M) {
    const Field& F = *M.F;
    RrefResult res;
    res.R = M;
    MatFq& R = res.R;
    int r = 0;
    for (int c = 0; c < R.cols && r < R.rows; ++c) {
        int piv = -1;
        for (int i = r; i < R.rows; ++i)
            if (R.at(i, c) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < R.cols; ++j) std::swap(R.at(piv, j), R.at(r, j));
        Fel inv = F.inv(R.at(r, c));
        for (int j = 0; j < R.cols; ++j) R.at(r, j) = F.mul(inv, R.at(r, j));
        for (int i = 0; i < R.rows; ++i) {
            if (i == r) continue;
            Fel f = R.at(i, c);
            if (f == 0) continue;
            for (int j = 0; j < R.cols; ++j)
                R.at(i, j) = F.sub(R.at(i, j), F.mul(f, R.at(r, j)));
        }
        res.pivots.push_back(c);
        ++r;
    }
    res.rank = r;
    return res;
}

MatFq kernel_fq(const MatFq& M) {
    // v M = 0  <=>  M^T v^T = 0; read the null space off rref(M^T).
    auto rr = rref(M.transpose());
    int n = M.rows;
    std::vector<bool> is_pivot(n, false);
    for (int c : rr.pivots) is_pivot[c] = true;

    std::vector<std::vector<Fel>> basis;
    const Field& F = *M.F;
    for (int fc = 0; fc < n; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<Fel> v(n, 0);
        v[fc] = 1;
        for (size_t i = 0; i < rr.pivots.size(); ++i)
            v[rr.pivots[i]] = F.neg(rr.R.at((int)i, fc));
        basis.push_back(std::move(v));
    }
    if (basis.empty()) return MatFq(M.F, 0, n);
    return rref(MatFq::from_rows(M.F, basis)).R;
}

std::optional<std::vector<Fel>> solve_right(const MatFq& M, const std::vector<Fel>& b) {
    if ((int)b.size() != M.cols) throw std::invalid_argument("dimension mismatch in solve_right");
    // x M = b  <=>  M^T x^T = b^T: eliminate on [M^T | b^T].
    const Field& F = *M.F;
    MatFq aug(M.F, M.cols, M.rows + 1);
    for (int i = 0; i < M.cols; ++i) {
        for (int j = 0; j < M.rows; ++j) aug.at(i, j) = M.at(j, i);
        aug.at(i, M.rows) = b[i];
    }
    auto rr = rref(aug);
    std::vector<Fel> x(M.rows, 0);
    for (size_t i = 0; i < rr.pivots.size(); ++i) {
        int c = rr.pivots[i];
        if (c == M.rows) return std::nullopt;  // pivot in the b column: inconsistent
        x[c] = rr.R.at((int)i, M.rows);
    }
    return x;
}

std::optional<MatFq> inverse(const MatFq& M) {
    if (M.rows != M.cols) throw std::invalid_argument("inverse of a non-square matrix");
    int n = M.rows;
    MatFq aug(M.F, n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = M.at(i, j);
        aug.at(i, n + i) = 1;
    }
    auto rr = rref(aug);
    if (rr.rank < n || rr.pivots[n - 1] >= n) return std::nullopt;
    MatFq inv(M.F, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = rr.R.at(i, n + j);
    return inv;
}

MatZ hermite_normal_form(const MatZ& M) {
    MatZ H = M;
    int r = 0;
    for (int c = 0; c < H.cols && r < H.rows; ++c) {
        // gcd out the column below row r via integer row operations
        while (true) {
            int piv = -1;
            mpz_class best;
            for (int i = r; i < H.rows; ++i) {
                if (H.at(i, c) == 0) continue;
                mpz_class v = abs(H.at(i, c));
                if (piv < 0 || v < best) {
                    piv = i;
                    best = v;
                }
            }
            if (piv < 0) break;
            if (piv != r)
                for (int j = 0; j < H.cols; ++j) std::swap(H.at(piv, j), H.at(r, j));
            if (H.at(r, c) < 0)
                for (int j = 0; j < H.cols; ++j) H.at(r, j) = -H.at(r, j);
            bool cleared = true;
            for (int i = r + 1; i < H.rows; ++i) {
                if (H.at(i, c) == 0) continue;
                mpz_class f;
                mpz_fdiv_q(f.get_mpz_t(), H.at(i, c).get_mpz_t(), H.at(r, c).get_mpz_t());
                for (int j = 0; j < H.cols; ++j) H.at(i, j) -= f * H.at(r, j);
                if (H.at(i, c) != 0) cleared = false;
            }
            if (cleared) break;
        }
        if (H.at(r, c) == 0) continue;
        // reduce entries above the pivot into [0, pivot)
        for (int i = 0; i < r; ++i) {
            mpz_class f;
            mpz_fdiv_q(f.get_mpz_t(), H.at(i, c).get_mpz_t(), H.at(r, c).get_mpz_t());
            if (f != 0)
                for (int j = 0; j < H.cols; ++j) H.at(i, j) -= f * H.at(r, j);
        }
        ++r;
    }
    MatZ out(r, H.cols);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < H.cols; ++j) out.at(i, j) = H.at(i, j);
    return out;
}

namespace {

IntKernelResult canonical_kernel_basis(MatZ K, int rank) {
    IntKernelResult res;
    res.rank = rank;
    res.basis = hermite_normal_form(std::move(K));
    // the kernel lattice is saturated, so the HNF rows are primitive; a gcd
    // sweep enforces the contract regardless
    const int n = res.basis.cols;
    for (int i = 0; i < res.basis.rows; ++i) {
        mpz_class g = 0;
        for (int j = 0; j < n; ++j)
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), res.basis.at(i, j).get_mpz_t());
        if (g > 1)
            for (int j = 0; j < n; ++j)
                mpz_divexact(res.basis.at(i, j).get_mpz_t(), res.basis.at(i, j).get_mpz_t(),
                             g.get_mpz_t());
    }
    return res;
}

long long floordiv_ll(long long a, long long b) {
    long long q = a / b;
    if (a % b != 0 && (a < 0) != (b < 0)) --q;
    return q;
}

// Same elimination as the mpz path below, on machine words with overflow
// guards.  Entries on the matrices this library builds stay tiny, so this
// path nearly always wins; any risk of overflow abandons to the exact path.
std::optional<IntKernelResult> integer_kernel_ll(const MatZ& M) {
    const int n = M.rows, w = M.cols;
    const long long limit = 1LL << 62;
    const int width = w + n;
    std::vector<long long> A((size_t)n * width, 0);
    auto at = [&](int i, int j) -> long long& { return A[(size_t)i * width + j]; };
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < w; ++j) {
            if (!mpz_fits_slong_p(M.at(i, j).get_mpz_t())) return std::nullopt;
            long long v = mpz_get_si(M.at(i, j).get_mpz_t());
            if (v >= limit || v <= -limit) return std::nullopt;
            at(i, j) = v;
        }
        at(i, w + i) = 1;
    }

    bool overflow = false;
    auto submul_row = [&](int i, int rsrc, long long f) {
        if (f == 0) return;
        long long* dst = &A[(size_t)i * width];
        const long long* src = &A[(size_t)rsrc * width];
        for (int j = 0; j < width; ++j) {
            if (src[j] == 0) continue;
            long long prod, res;
            if (__builtin_mul_overflow(f, src[j], &prod) ||
                __builtin_sub_overflow(dst[j], prod, &res) || res >= limit || res <= -limit) {
                overflow = true;
                return;
            }
            dst[j] = res;
        }
    };

    int r = 0;
    for (int c = 0; c < w && r < n; ++c) {
        while (true) {
            int piv = -1;
            for (int i = r; i < n; ++i) {
                if (at(i, c) == 0) continue;
                if (piv < 0 || llabs(at(i, c)) < llabs(at(piv, c))) piv = i;
            }
            if (piv < 0) break;
            if (piv != r)
                for (int j = 0; j < width; ++j) std::swap(at(piv, j), at(r, j));
            if (at(r, c) < 0)
                for (int j = 0; j < width; ++j) at(r, j) = -at(r, j);
            bool cleared = true;
            for (int i = r + 1; i < n; ++i) {
                if (at(i, c) == 0) continue;
                submul_row(i, r, floordiv_ll(at(i, c), at(r, c)));
                if (overflow) return std::nullopt;
                if (at(i, c) != 0) cleared = false;
            }
            if (cleared) break;
        }
        if (at(r, c) == 0) continue;
        ++r;
    }

    for (int i = r; i < n; ++i)
        for (int j = 0; j < w; ++j)
            if (at(i, j) != 0) throw std::logic_error("nonzero row below the echelon rank");

    MatZ K(n - r, n);
    for (int i = r; i < n; ++i)
        for (int j = 0; j < n; ++j) K.at(i - r, j) = (long)at(i, w + j);
    return canonical_kernel_basis(std::move(K), r);
}

}  // namespace

IntKernelResult integer_kernel(const MatZ& M) {
    if (auto fast = integer_kernel_ll(M)) return *fast;

    const int n = M.rows, w = M.cols;
    // Integer-preserving row elimination (row HNF) on [M | I].  The working
    // matrix stays U * [M | I] = [U M | U] with U unimodular, so once the M
    // part is in echelon form the transform parts of its zero rows are a
    // basis of the full (saturated) left kernel lattice.
    MatZ A(n, w + n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < w; ++j) A.at(i, j) = M.at(i, j);
        A.at(i, w + i) = 1;
    }

    // row_i -= f * row_r over the whole working width, skipping zeros in the
    // source row (rows stay sparse for a long time on the matrices this
    // library builds)
    auto submul_row = [&](int i, int rsrc, const mpz_class& f) {
        if (f == 0) return;
        for (int j = 0; j < w + n; ++j) {
            const mpz_class& src = A.at(rsrc, j);
            if (mpz_sgn(src.get_mpz_t()) == 0) continue;
            mpz_submul(A.at(i, j).get_mpz_t(), f.get_mpz_t(), src.get_mpz_t());
        }
    };

    int r = 0;
    mpz_class f;
    for (int c = 0; c < w && r < n; ++c) {
        while (true) {
            int piv = -1;
            for (int i = r; i < n; ++i) {
                if (mpz_sgn(A.at(i, c).get_mpz_t()) == 0) continue;
                if (piv < 0 ||
                    mpz_cmpabs(A.at(i, c).get_mpz_t(), A.at(piv, c).get_mpz_t()) < 0)
                    piv = i;
            }
            if (piv < 0) break;
            if (piv != r)
                for (int j = 0; j < w + n; ++j) std::swap(A.at(piv, j), A.at(r, j));
            if (A.at(r, c) < 0)
                for (int j = 0; j < w + n; ++j) A.at(r, j) = -A.at(r, j);
            bool cleared = true;
            for (int i = r + 1; i < n; ++i) {
                if (A.at(i, c) == 0) continue;
                mpz_fdiv_q(f.get_mpz_t(), A.at(i, c).get_mpz_t(), A.at(r, c).get_mpz_t());
                submul_row(i, r, f);
                if (A.at(i, c) != 0) cleared = false;
            }
            if (cleared) break;
        }
        if (A.at(r, c) == 0) continue;
        // no reduction above the pivot: finished rows are never read again,
        // and only the zero rows' transform parts leave this function
        ++r;
    }

    // rows at and below the rank have zero M part
    for (int i = r; i < n; ++i)
        for (int j = 0; j < w; ++j)
            if (A.at(i, j) != 0) throw std::logic_error("nonzero row below the echelon rank");

    MatZ K(n - r, n);
    for (int i = r; i < n; ++i)
        for (int j = 0; j < n; ++j) K.at(i - r, j) = A.at(i, w + j);
    return canonical_kernel_basis(std::move(K), r);
}

int rank_mod_p(const MatZ& M, long prime) {
    int n = M.rows, w = M.cols;
    std::vector<long> A((size_t)n * w);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < w; ++j) {
            mpz_class r = M.at(i, j) % prime;
            if (r < 0) r += prime;
            A[(size_t)i * w + j] = r.get_si();
        }
    auto inv_mod = [&](long a) {
        long t = 0, nt = 1, r = prime, nr = a % prime;
        while (nr != 0) {
            long qt = r / nr;
            std::swap(t -= qt * nt, nt);
            std::swap(r -= qt * nr, nr);
        }
        return ((t % prime) + prime) % prime;
    };
    int rank = 0;
    for (int c = 0; c < w && rank < n; ++c) {
        int piv = -1;
        for (int i = rank; i < n; ++i)
            if (A[(size_t)i * w + c] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != rank)
            for (int j = 0; j < w; ++j) std::swap(A[(size_t)piv * w + j], A[(size_t)rank * w + j]);
        long iv = inv_mod(A[(size_t)rank * w + c]);
        for (int j = c; j < w; ++j)
            A[(size_t)rank * w + j] = (long)(((__int128)A[(size_t)rank * w + j] * iv) % prime);
        for (int i = 0; i < n; ++i) {
            if (i == rank) continue;
            long f = A[(size_t)i * w + c];
            if (f == 0) continue;
            for (int j = c; j < w; ++j) {
                __int128 v = (__int128)A[(size_t)i * w + j] - (__int128)f * A[(size_t)rank * w + j];
                long vv = (long)(v % prime);
                if (vv < 0) vv += prime;
                A[(size_t)i * w + j] = vv;
            }
        }
        ++rank;
    }
    return rank;
}

}  // namespace swcert
