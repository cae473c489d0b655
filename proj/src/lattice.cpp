#include "swcert/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace swcert {

Subspace Subspace::span(const FieldPtr& f, int ambient, const MatFq& rows) {
    if (rows.cols != ambient && rows.rows != 0)
        throw std::invalid_argument("basis width does not match ambient dimension");
    Subspace s;
    s.F = f;
    s.ambient = ambient;
    auto rr = rref(rows);
    MatFq b(f, rr.rank, ambient);
    for (int i = 0; i < rr.rank; ++i)
        for (int j = 0; j < ambient; ++j) b.at(i, j) = rr.R.at(i, j);
    s.basis = std::move(b);
    return s;
}

Subspace Subspace::zero(const FieldPtr& f, int ambient) {
    Subspace s;
    s.F = f;
    s.ambient = ambient;
    s.basis = MatFq(f, 0, ambient);
    return s;
}

Subspace Subspace::full(const FieldPtr& f, int ambient) {
    Subspace s;
    s.F = f;
    s.ambient = ambient;
    s.basis = MatFq::identity(f, ambient);
    return s;
}

bool Subspace::contains_point(const std::vector<Fel>& v) const {
    if ((int)v.size() != ambient) throw std::invalid_argument("point has wrong length");
    // RREF basis: the coefficient of row i is forced to v[pivot_i]
    const Field& f = *F;
    std::vector<Fel> r = v;
    for (int i = 0; i < basis.rows; ++i) {
        int p = 0;
        while (p < ambient && basis.at(i, p) == 0) ++p;
        Fel c = r[p];
        if (c == 0) continue;
        for (int j = p; j < ambient; ++j) r[j] = f.sub(r[j], f.mul(c, basis.at(i, j)));
    }
    for (Fel x : r)
        if (x != 0) return false;
    return true;
}

bool Subspace::operator<(const Subspace& o) const {
    if (ambient != o.ambient) return ambient < o.ambient;
    if (dim() != o.dim()) return dim() < o.dim();
    return basis.a < o.basis.a;
}

std::vector<Subspace> enumerate_subspaces(int m, int d, const FieldPtr& F, long long cap) {
    if (d < 0 || d > m) throw std::invalid_argument("need 0 <= d <= m");
    mpz_class count = gauss_binom(m, d, F->q());
    if (count > mpz_class(std::to_string(cap)))
        throw CapExceededError("subspace enumeration cap exceeded: " + count.get_str() +
                                 " > " + std::to_string(cap));

    std::vector<Subspace> out;
    out.reserve(count.get_ui());
    if (d == 0) {
        out.push_back(Subspace::zero(F, m));
        return out;
    }

    // Walk RREF shapes directly: a pivot column set, then odometer over the
    // free entries (entries right of each pivot in non-pivot columns).
    std::vector<int> piv(d);
    for (int i = 0; i < d; ++i) piv[i] = i;
    const int q = F->q();
    while (true) {
        std::vector<std::pair<int, int>> free_pos;  // (row, col)
        for (int i = 0; i < d; ++i)
            for (int c = piv[i] + 1; c < m; ++c) {
                bool is_piv = std::binary_search(piv.begin(), piv.end(), c);
                if (!is_piv) free_pos.emplace_back(i, c);
            }
        std::vector<Fel> vals(free_pos.size(), 0);
        while (true) {
            Subspace s;
            s.F = F;
            s.ambient = m;
            s.basis = MatFq(F, d, m);
            for (int i = 0; i < d; ++i) s.basis.at(i, piv[i]) = 1;
            for (size_t t = 0; t < free_pos.size(); ++t)
                s.basis.at(free_pos[t].first, free_pos[t].second) = vals[t];
            out.push_back(std::move(s));

            size_t i = 0;
            while (i < vals.size() && ++vals[i] == q) vals[i++] = 0;
            if (i == vals.size()) break;
        }
        // next pivot combination
        int i = d - 1;
        while (i >= 0 && piv[i] == m - d + i) --i;
        if (i < 0) break;
        ++piv[i];
        for (int j = i + 1; j < d; ++j) piv[j] = piv[j - 1] + 1;
    }
    std::sort(out.begin(), out.end());
    if (mpz_class((long)out.size()) != count)
        throw std::logic_error("subspace enumeration count mismatch");
    return out;
}

mpz_class gauss_binom(int a, int b, int q) {
    if (b < 0 || b > a) return 0;
    mpz_class num = 1, den = 1, qp = q;
    for (int i = 0; i < b; ++i) {
        mpz_class qa, qb;
        mpz_pow_ui(qa.get_mpz_t(), qp.get_mpz_t(), a - i);
        mpz_pow_ui(qb.get_mpz_t(), qp.get_mpz_t(), i + 1);
        num *= qa - 1;
        den *= qb - 1;
    }
    mpz_class r = num / den;
    if (r * den != num) throw std::logic_error("gauss_binom not integral");
    return r;
}

Subspace intersect(const Subspace& U, const Subspace& V) {
    if (U.ambient != V.ambient || !U.F->same(*V.F))
        throw std::invalid_argument("ambient mismatch in intersect");
    // Zassenhaus-style: kernel rows (a, b) of the stacked basis satisfy
    // a*BU = -b*BV, an element of the intersection.
    int du = U.dim(), dv = V.dim();
    if (du == 0 || dv == 0) return Subspace::zero(U.F, U.ambient);
    MatFq stacked(U.F, du + dv, U.ambient);
    for (int i = 0; i < du; ++i)
        for (int j = 0; j < U.ambient; ++j) stacked.at(i, j) = U.basis.at(i, j);
    for (int i = 0; i < dv; ++i)
        for (int j = 0; j < U.ambient; ++j) stacked.at(du + i, j) = V.basis.at(i, j);
    MatFq K = kernel_fq(stacked);
    MatFq rows(U.F, K.rows, U.ambient);
    for (int i = 0; i < K.rows; ++i) {
        std::vector<Fel> a(K.a.begin() + (size_t)i * K.cols, K.a.begin() + (size_t)i * K.cols + du);
        auto v = apply_row(a, U.basis);
        for (int j = 0; j < U.ambient; ++j) rows.at(i, j) = v[j];
    }
    return Subspace::span(U.F, U.ambient, rows);
}

Subspace sum(const Subspace& U, const Subspace& V) {
    if (U.ambient != V.ambient || !U.F->same(*V.F))
        throw std::invalid_argument("ambient mismatch in sum");
    MatFq stacked(U.F, U.dim() + V.dim(), U.ambient);
    for (int i = 0; i < U.dim(); ++i)
        for (int j = 0; j < U.ambient; ++j) stacked.at(i, j) = U.basis.at(i, j);
    for (int i = 0; i < V.dim(); ++i)
        for (int j = 0; j < U.ambient; ++j) stacked.at(U.dim() + i, j) = V.basis.at(i, j);
    return Subspace::span(U.F, U.ambient, stacked);
}

bool contains(const Subspace& outer, const Subspace& inner) {
    if (outer.ambient != inner.ambient) throw std::invalid_argument("ambient mismatch in contains");
    for (int i = 0; i < inner.dim(); ++i)
        if (!outer.contains_point(inner.basis.row(i))) return false;
    return true;
}

Subspace orthogonal_complement(const Subspace& V) {
    // { w : w . v = 0 for all basis rows v } = left kernel of basis^T
    MatFq Bt = V.basis.transpose();
    if (V.dim() == 0) return Subspace::full(V.F, V.ambient);
    MatFq K = kernel_fq(Bt);
    return Subspace::span(V.F, V.ambient, K);
}

mpz_class mobius(const Subspace& U, const Subspace& V) {
    if (!contains(V, U)) return 0;
    int d = V.dim() - U.dim();
    mpz_class r;
    mpz_class qz = V.F->q();
    mpz_pow_ui(r.get_mpz_t(), qz.get_mpz_t(), (unsigned long)d * (d - 1) / 2);
    if (d % 2 == 1) r = -r;
    return r;
}

mpz_class count_complement_avoiding(int a, int b, int c, int q) {
    if (b < 0 || b > a || c < 0 || c > a) throw std::invalid_argument("need 0 <= b, c <= a");
    mpz_class r, qz = q;
    mpz_pow_ui(r.get_mpz_t(), qz.get_mpz_t(), (unsigned long)b * c);
    return r * gauss_binom(a - b, c, q);
}

int find_min_x(int t, int q) {
    if (t < 1 || q < 2) throw std::invalid_argument("need t >= 1 and q >= 2");
    // left side grows like q^{(t-1)x}, right side like q^{tx}: the scan stops
    for (int x = t + 1;; ++x) {
        mpz_class lhs = 0;
        for (int i = 0; i < t; ++i) lhs += gauss_binom(x, i, q);
        mpz_class rhs, qz = q;
        mpz_pow_ui(rhs.get_mpz_t(), qz.get_mpz_t(), (unsigned long)t * (x - t));
        if (lhs < rhs) return x;
    }
}

std::vector<Fel> point_from_index(long long idx, int len, int q) {
    std::vector<Fel> v(len);
    for (int i = len - 1; i >= 0; --i) {
        v[i] = (Fel)(idx % q);
        idx /= q;
    }
    return v;
}

long long index_of_point(const std::vector<Fel>& v, int q) {
    long long idx = 0;
    for (Fel x : v) idx = idx * q + x;
    return idx;
}

bool rows_contained(const std::vector<Fel>& flat, int k, const Subspace& V) {
    int m = V.ambient;
    if ((int)flat.size() != k * m) throw std::invalid_argument("matrix point has wrong size");
    for (int r = 0; r < k; ++r) {
        std::vector<Fel> row(flat.begin() + (size_t)r * m, flat.begin() + (size_t)(r + 1) * m);
        if (!V.contains_point(row)) return false;
    }
    return true;
}

}  // namespace swcert
