#include "swcert/multiplicity.hpp"

#include <stdexcept>

namespace swcert {

mpz_class eval_E(const MultiplicityFn& eta, const std::vector<Fel>& point, int k) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    if ((int)point.size() != k * eta.ambient)
        throw std::invalid_argument("point size does not match k x ambient");
    mpz_class s = 0;
    for (const auto& [U, val] : eta.support)
        if (rows_contained(point, k, U)) s += val;
    return s;
}

MultiplicityFn eta_row(const Subspace& V, long long cap) {
    MultiplicityFn eta;
    eta.F = V.F;
    eta.ambient = V.ambient;
    // the interval [0, V] is the lattice of V itself: enumerate subspaces of
    // F_q^{dim V} and lift through the basis
    for (int d = 0; d <= V.dim(); ++d) {
        for (const auto& C : enumerate_subspaces(V.dim(), d, V.F, cap)) {
            MatFq rows(V.F, d, V.ambient);
            for (int i = 0; i < d; ++i) {
                auto v = apply_row(C.basis.row(i), V.basis);
                for (int j = 0; j < V.ambient; ++j) rows.at(i, j) = v[j];
            }
            Subspace U = Subspace::span(V.F, V.ambient, rows);
            eta.set(U, mobius(U, V));
        }
    }
    return eta;
}

SectorSets build_sectors_for(const Subspace& X, int ell, long long cap) {
    const int m = X.ambient;
    if (ell < 1 || m < ell) throw std::invalid_argument("need m >= ell >= 1");
    if (X.dim() != m - ell) throw std::invalid_argument("X must have dimension m - ell");
    SectorSets S;
    S.X = X;
    for (const auto& V : enumerate_subspaces(m, ell, X.F, cap))
        if (intersect(V, S.X).dim() == 0) S.s_eq.push_back(V);
    for (int d = 0; d < ell; ++d)
        for (const auto& V : enumerate_subspaces(m, d, X.F, cap))
            if (intersect(V, S.X).dim() == 0) S.s_lt.push_back(V);
    for (const auto& V : S.s_eq) S.s_perp.push_back(orthogonal_complement(V));
    std::sort(S.s_perp.begin(), S.s_perp.end());

    mpz_class expect, qz = X.F->q();
    mpz_pow_ui(expect.get_mpz_t(), qz.get_mpz_t(), (unsigned long)ell * (m - ell));
    if (mpz_class((long)S.s_eq.size()) != expect)
        throw std::logic_error("|S_eq| != q^{ell(m-ell)}");
    return S;
}

SectorSets build_sectors(int m, int ell, const FieldPtr& F, long long cap) {
    if (ell < 1 || m < ell) throw std::invalid_argument("need m >= ell >= 1");
    // X pinned to the span of the last m - ell standard basis vectors
    MatFq xb(F, m - ell, m);
    for (int i = 0; i < m - ell; ++i) xb.at(i, ell + i) = 1;
    return build_sectors_for(Subspace::span(F, m, xb), ell, cap);
}

MatZ build_Eprime(const SectorSets& sectors) {
    const auto& eq = sectors.s_eq;
    const auto& lt = sectors.s_lt;
    MatZ M((int)eq.size(), (int)lt.size());
    for (size_t i = 0; i < eq.size(); ++i)
        for (size_t j = 0; j < lt.size(); ++j) M.at((int)i, (int)j) = mobius(lt[j], eq[i]);
    return M;
}

std::optional<MultiplicityFn> kernel_xi(int m, int ell, int k, const FieldPtr& F,
                                        long long cap, KernelXiInfo* info) {
    if (!(m >= ell && ell > k && k >= 1))
        throw std::invalid_argument("need m >= ell > k >= 1");
    SectorSets S = build_sectors(m, ell, F, cap);
    MatZ M = build_Eprime(S);

    KernelXiInfo local;
    local.rows = M.rows;
    local.cols = M.cols;

    // A full modular row rank already proves the exact kernel is trivial;
    // the expensive fraction-free elimination only runs when it might not be.
    if (M.rows <= M.cols && rank_mod_p(M, 1000003) == M.rows) {
        local.rank = M.rows;
        local.kernel_dim = 0;
        local.fast_path_full_rank = true;
        if (info) *info = local;
        return std::nullopt;
    }

    IntKernelResult K = integer_kernel(M);
    local.rank = K.rank;
    local.kernel_dim = K.basis.rows;
    if (info) *info = local;
    if (K.basis.rows == 0) return std::nullopt;

    int best = 0;
    mpz_class best_pos = -1;
    for (int i = 0; i < K.basis.rows; ++i) {
        mpz_class pos = 0;
        for (int j = 0; j < K.basis.cols; ++j)
            if (K.basis.at(i, j) > 0) pos += K.basis.at(i, j);
        if (best_pos < 0 || pos < best_pos) {
            best_pos = pos;
            best = i;
        }
    }

    MultiplicityFn xi;
    xi.F = F;
    xi.ambient = m;
    for (size_t j = 0; j < S.s_eq.size(); ++j) xi.set(S.s_eq[j], K.basis.at(best, (int)j));
    return xi;
}

MultiplicityFn eta_from_xi(const MultiplicityFn& xi, const SectorSets& sectors) {
    for (const auto& [V, val] : xi.support) {
        bool in_eq = std::binary_search(sectors.s_eq.begin(), sectors.s_eq.end(), V);
        if (!in_eq) throw std::invalid_argument("xi support is not contained in S_eq");
    }
    return xi;
}

MultiplicityFn eta_perp(const MultiplicityFn& eta) {
    MultiplicityFn out;
    out.F = eta.F;
    out.ambient = eta.ambient;
    for (const auto& [V, val] : eta.support) out.set(orthogonal_complement(V), val);
    return out;
}

EZeroResult check_E_zero(const MultiplicityFn& eta, int k, long long cap) {
    EZeroResult res;
    int len = k * eta.ambient;
    mpz_class total, qz = eta.F->q();
    mpz_pow_ui(total.get_mpz_t(), qz.get_mpz_t(), (unsigned long)len);
    if (total > mpz_class(std::to_string(cap)))
        throw CapExceededError("point enumeration cap exceeded: " + total.get_str());
    long long n = total.get_si();
    for (long long idx = 0; idx < n; ++idx) {
        auto pt = point_from_index(idx, len, eta.F->q());
        mpz_class v = eval_E(eta, pt, k);
        if (v != 0) {
            res.ok = false;
            res.failing_point = pt;
            res.failing_value = v;
            return res;
        }
    }
    return res;
}

}  // namespace swcert
