#include "swcert/fourier.hpp"

#include <stdexcept>

namespace swcert {

Cyc Cyc::integer(int p, long long n) {
    Cyc r(p);
    r.c[0] = n;
    return r;
}

Cyc Cyc::zeta_pow(int p, long long k) {
    Cyc r(p);
    k %= p;
    if (k < 0) k += p;
    if (k < p - 1) {
        r.c[k] = 1;
    } else {
        for (auto& x : r.c) x = -1;  // zeta^{p-1} = -(1 + zeta + ... + zeta^{p-2})
    }
    return r;
}

bool Cyc::is_zero() const {
    for (long long x : c)
        if (x != 0) return false;
    return true;
}

bool Cyc::operator==(const Cyc& o) const { return p == o.p && c == o.c; }

static void check_p(const Cyc& a, const Cyc& b) {
    if (a.p != b.p) throw std::invalid_argument("cyclotomic p mismatch");
}

Cyc cyc_add(const Cyc& a, const Cyc& b) {
    check_p(a, b);
    Cyc r(a.p);
    for (int i = 0; i < a.p - 1; ++i) r.c[i] = a.c[i] + b.c[i];
    return r;
}

Cyc cyc_sub(const Cyc& a, const Cyc& b) {
    check_p(a, b);
    Cyc r(a.p);
    for (int i = 0; i < a.p - 1; ++i) r.c[i] = a.c[i] - b.c[i];
    return r;
}

Cyc cyc_mul(const Cyc& a, const Cyc& b) {
    check_p(a, b);
    int p = a.p;
    // convolve, fold exponents mod p, then rewrite the zeta^{p-1} mass
    std::vector<long long> pow(p, 0);
    for (int i = 0; i < p - 1; ++i) {
        if (a.c[i] == 0) continue;
        for (int j = 0; j < p - 1; ++j) pow[(i + j) % p] += a.c[i] * b.c[j];
    }
    Cyc r(p);
    for (int i = 0; i < p - 1; ++i) r.c[i] = pow[i] - pow[p - 1];
    return r;
}

Cyc cyc_scale(long long s, const Cyc& a) {
    Cyc r(a.p);
    for (int i = 0; i < a.p - 1; ++i) r.c[i] = s * a.c[i];
    return r;
}

Cyc char_eval(const FieldPtr& F, const std::vector<Fel>& y, const std::vector<Fel>& x) {
    if (y.size() != x.size()) throw std::invalid_argument("ambient mismatch in char_eval");
    Fel dot = 0;
    for (size_t i = 0; i < x.size(); ++i) dot = F->add(dot, F->mul(x[i], y[i]));
    return Cyc::zeta_pow(F->p(), F->trace(dot));
}

bool trace_pairing_nondegenerate(const FieldPtr& F) {
    for (Fel a = 1; a < F->q(); ++a) {
        bool hit = false;
        for (Fel b = 1; b < F->q() && !hit; ++b) hit = F->trace(F->mul(a, b)) != 0;
        if (!hit) return false;
    }
    return true;
}

std::vector<Cyc> fourier(const FieldPtr& F, int m, const std::vector<long long>& f, long long cap) {
    const int q = F->q();
    long long total = 1;
    for (int i = 0; i < m; ++i) {
        total *= q;
        if (total > cap) throw CapExceededError("point enumeration cap exceeded in fourier");
    }
    if ((long long)f.size() != total) throw std::invalid_argument("f has wrong length");

    std::vector<Cyc> out((size_t)total, Cyc(F->p()));
    for (long long yi = 0; yi < total; ++yi) {
        auto y = point_from_index(yi, m, q);
        Cyc acc(F->p());
        for (long long wi = 0; wi < total; ++wi) {
            if (f[wi] == 0) continue;
            auto w = point_from_index(wi, m, q);
            acc = cyc_add(acc, cyc_scale(f[wi], char_eval(F, y, w)));
        }
        out[yi] = acc;
    }
    return out;
}

std::vector<long long> inverse_fourier(const FieldPtr& F, int m, const std::vector<Cyc>& fhat) {
    const int q = F->q();
    long long total = 1;
    for (int i = 0; i < m; ++i) total *= q;
    if ((long long)fhat.size() != total) throw std::invalid_argument("fhat has wrong length");

    std::vector<long long> f((size_t)total, 0);
    for (long long xi = 0; xi < total; ++xi) {
        auto x = point_from_index(xi, m, q);
        std::vector<Fel> neg_x(x.size());
        for (size_t i = 0; i < x.size(); ++i) neg_x[i] = F->neg(x[i]);
        Cyc acc(F->p());
        for (long long yi = 0; yi < total; ++yi) {
            if (fhat[yi].is_zero()) continue;
            auto y = point_from_index(yi, m, q);
            acc = cyc_add(acc, cyc_mul(fhat[yi], char_eval(F, y, neg_x)));
        }
        for (int i = 1; i < F->p() - 1; ++i)
            if (acc.c[i] != 0) throw std::runtime_error("inverse transform is not an integer");
        if (acc.c[0] % total != 0) throw std::runtime_error("inverse transform not divisible by |W|");
        f[xi] = acc.c[0] / total;
    }
    return f;
}

bool check_indicator_transform(const Subspace& V, long long cap) {
    const FieldPtr& F = V.F;
    const int q = F->q();
    const int m = V.ambient;
    long long total = 1;
    for (int i = 0; i < m; ++i) {
        total *= q;
        if (total > cap) throw CapExceededError("cap exceeded in check_indicator_transform");
    }
    std::vector<long long> ind((size_t)total, 0);
    for (long long i = 0; i < total; ++i)
        if (V.contains_point(point_from_index(i, m, q))) ind[i] = 1;

    auto hat = fourier(F, m, ind, cap);
    Subspace Vp = orthogonal_complement(V);
    long long card = 1;
    for (int i = 0; i < V.dim(); ++i) card *= q;

    for (long long yi = 0; yi < total; ++yi) {
        auto y = point_from_index(yi, m, q);
        Cyc expect = Cyc::integer(F->p(), Vp.contains_point(y) ? card : 0);
        if (hat[yi] != expect) return false;
    }
    return true;
}

}  // namespace swcert
