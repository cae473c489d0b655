#ifndef SWCERT_GF_HPP
#define SWCERT_GF_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace swcert {

// Elements of F_q are plain ints in [0, q): the value is the radix-p encoding
// of the polynomial coefficients, value = sum c_i * p^i.  All arithmetic goes
// through a Field object, which owns full lookup tables (q is small).
using Fel = int;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Finite field F_q, q = p^e, as F_p[x]/(modulus).
///
/// Immutable after construction; all operations are table lookups and safe
/// for concurrent use.  Construction verifies that the modulus is monic and
/// irreducible over F_p (exhaustive trial division, fine for the small q
/// this library is scoped to).
class Field {
public:
    static constexpr int kDefaultCap = 16;

    // modulus = coefficient list c_0..c_e, monic.  When omitted, a built-in
    // table supplies one for q in {2,3,4,5,7,8,9,11,13,16}; the table is
    // fixed so element encodings are identical across runs and machines.
    static FieldPtr make(int p, int e,
                         std::optional<std::vector<int>> modulus = std::nullopt,
                         int cap = kDefaultCap);

    // Convenience: factor q = p^e and call make().
    static FieldPtr make_q(int q, int cap = kDefaultCap);

    int p() const { return p_; }
    int e() const { return e_; }
    int q() const { return q_; }
    const std::vector<int>& modulus() const { return modulus_; }

    Fel add(Fel a, Fel b) const { return add_t_[a * q_ + b]; }
    Fel mul(Fel a, Fel b) const { return mul_t_[a * q_ + b]; }
    Fel neg(Fel a) const { return neg_t_[a]; }
    Fel sub(Fel a, Fel b) const { return add(a, neg(b)); }
    Fel inv(Fel a) const;              // throws on a == 0
    Fel pow(Fel a, long long n) const;

    /// Tr(a) = a + a^p + ... + a^{p^{e-1}}; lands in the prime subfield,
    /// returned as its value in [0, p).
    int trace(Fel a) const { return trace_t_[a]; }

    bool is_element(Fel a) const { return a >= 0 && a < q_; }

    // Coefficient vector c_0..c_{e-1} of an element, and back.
    std::vector<int> coeffs(Fel a) const;
    Fel from_coeffs(const std::vector<int>& c) const;

    bool same(const Field& other) const {
        return p_ == other.p_ && e_ == other.e_ && modulus_ == other.modulus_;
    }

private:
    Field() = default;
    void build_tables();

    int p_ = 0, e_ = 0, q_ = 0;
    std::vector<int> modulus_;
    std::vector<Fel> add_t_, mul_t_, neg_t_, inv_t_;
    std::vector<int> trace_t_;
};

bool is_prime(int n);

/// Factor a prime power q = p^e; throws if q is not a prime power.
std::pair<int, int> prime_power_split(int q);

}  // namespace swcert

#endif
