#include "swcert/gf.hpp"

#include <map>
#include <stdexcept>

namespace swcert {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; (long long)d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::pair<int, int> prime_power_split(int q) {
    if (q < 2) throw std::invalid_argument("q must be at least 2");
    int p = 2;
    while (q % p != 0) {
        ++p;
        if (p > q) throw std::invalid_argument("q is not a prime power");
    }
    int e = 0;
    int rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++e;
    }
    if (rest != 1) throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
    return {p, e};
}

namespace {

// Built-in monic irreducible moduli, keyed by q.  For prime q the modulus is
// x itself; for the prime powers up to 16 we fix the polynomial with the
// smallest integer encoding sum c_i p^i among the monic irreducibles.
const std::map<int, std::vector<int>>& modulus_table() {
    static const std::map<int, std::vector<int>> t = {
        {2, {0, 1}},
        {3, {0, 1}},
        {4, {1, 1, 1}},        // x^2 + x + 1
        {5, {0, 1}},
        {7, {0, 1}},
        {8, {1, 1, 0, 1}},     // x^3 + x + 1
        {9, {1, 0, 1}},        // x^2 + 1
        {11, {0, 1}},
        {13, {0, 1}},
        {16, {1, 1, 0, 0, 1}}, // x^4 + x + 1
    };
    return t;
}

using Poly = std::vector<int>;  // coefficients c_0..c_deg over F_p, c_deg != 0 unless zero poly

int degree(const Poly& f) {
    for (int i = (int)f.size() - 1; i >= 0; --i)
        if (f[i] != 0) return i;
    return -1;
}

// f mod g over F_p, g monic of positive degree.
Poly poly_mod(Poly f, const Poly& g, int p) {
    int dg = degree(g);
    for (int i = degree(f); i >= dg; --i) {
        int c = f[i] % p;
        if (c == 0) continue;
        for (int j = 0; j <= dg; ++j) {
            int idx = i - dg + j;
            f[idx] = ((f[idx] - c * g[j]) % p + p) % p;
        }
    }
    f.resize(dg);
    for (auto& c : f) c = ((c % p) + p) % p;
    return f;
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return r;
}

bool is_zero(const Poly& f) { return degree(f) < 0; }

// Exhaustive trial division by all monic polynomials of degree 1..deg(f)/2.
bool poly_irreducible(const Poly& f, int p) {
    int d = degree(f);
    if (d <= 0) return false;
    if (d == 1) return true;
    for (int dd = 1; dd <= d / 2; ++dd) {
        // odometer over the dd low coefficients of a monic divisor
        std::vector<int> g(dd + 1, 0);
        g[dd] = 1;
        while (true) {
            if (is_zero(poly_mod(f, g, p))) return false;
            int i = 0;
            while (i < dd && ++g[i] == p) g[i++] = 0;
            if (i == dd) break;
        }
    }
    return true;
}

}  // namespace

FieldPtr Field::make(int p, int e, std::optional<std::vector<int>> modulus, int cap) {
    if (!is_prime(p)) throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
    if (e < 1) throw std::invalid_argument("e must be positive");
    long long q = 1;
    for (int i = 0; i < e; ++i) {
        q *= p;
        if (q > cap)
            throw std::invalid_argument("q = p^e exceeds the field size cap " + std::to_string(cap));
    }

    std::vector<int> mod;
    if (modulus) {
        mod = *modulus;
    } else if (e == 1) {
        mod = {0, 1};
    } else {
        auto it = modulus_table().find((int)q);
        if (it == modulus_table().end())
            throw std::invalid_argument("no built-in modulus for q = " + std::to_string(q) +
                                        "; pass one explicitly");
        mod = it->second;
    }

    if ((int)mod.size() != e + 1 || mod[e] != 1)
        throw std::invalid_argument("modulus must be monic of degree e");
    for (int c : mod)
        if (c < 0 || c >= p) throw std::invalid_argument("modulus coefficients must lie in [0, p)");
    if (!poly_irreducible(mod, p))
        throw std::invalid_argument("modulus is reducible over F_p");

    auto f = FieldPtr(new Field());
    auto* fm = const_cast<Field*>(f.get());
    fm->p_ = p;
    fm->e_ = e;
    fm->q_ = (int)q;
    fm->modulus_ = mod;
    fm->build_tables();
    return f;
}

FieldPtr Field::make_q(int q, int cap) {
    auto [p, e] = prime_power_split(q);
    return make(p, e, std::nullopt, cap);
}

std::vector<int> Field::coeffs(Fel a) const {
    std::vector<int> c(e_);
    for (int i = 0; i < e_; ++i) {
        c[i] = a % p_;
        a /= p_;
    }
    return c;
}

Fel Field::from_coeffs(const std::vector<int>& c) const {
    Fel v = 0;
    for (int i = (int)c.size() - 1; i >= 0; --i) v = v * p_ + (((c[i] % p_) + p_) % p_);
    return v;
}

void Field::build_tables() {
    add_t_.assign(q_ * q_, 0);
    mul_t_.assign(q_ * q_, 0);
    neg_t_.assign(q_, 0);
    inv_t_.assign(q_, -1);
    trace_t_.assign(q_, 0);

    for (Fel a = 0; a < q_; ++a) {
        auto ca = coeffs(a);
        std::vector<int> cn(e_);
        for (int i = 0; i < e_; ++i) cn[i] = (p_ - ca[i]) % p_;
        neg_t_[a] = from_coeffs(cn);
        for (Fel b = 0; b < q_; ++b) {
            auto cb = coeffs(b);
            std::vector<int> cs(e_);
            for (int i = 0; i < e_; ++i) cs[i] = (ca[i] + cb[i]) % p_;
            add_t_[a * q_ + b] = from_coeffs(cs);

            Poly prod = poly_mul(ca, cb, p_);
            if (!prod.empty()) prod = poly_mod(prod, modulus_, p_);
            prod.resize(e_, 0);
            mul_t_[a * q_ + b] = from_coeffs(prod);
        }
    }
    // inverses by search; the modulus was verified irreducible, so every
    // nonzero element has one
    for (Fel a = 1; a < q_; ++a)
        for (Fel b = 1; b < q_; ++b)
            if (mul_t_[a * q_ + b] == 1) {
                inv_t_[a] = b;
                break;
            }
    for (Fel a = 0; a < q_; ++a) {
        Fel t = 0;
        Fel x = a;
        for (int i = 0; i < e_; ++i) {
            t = add(t, x);
            x = pow(x, p_);
        }
        // the trace lands in the prime subfield, whose elements encode as values < p
        trace_t_[a] = t;
    }
}

Fel Field::inv(Fel a) const {
    if (a == 0) throw std::invalid_argument("inverse of zero");
    return inv_t_[a];
}

Fel Field::pow(Fel a, long long n) const {
    Fel r = 1;
    Fel base = a;
    while (n > 0) {
        if (n & 1) r = mul(r, base);
        base = mul(base, base);
        n >>= 1;
    }
    return r;
}

}  // namespace swcert
