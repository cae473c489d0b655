#ifndef SWCERT_CONSTRUCTION_HPP
#define SWCERT_CONSTRUCTION_HPP

#include <nlohmann/json.hpp>
#include <optional>
#include <string>

#include "swcert/isometry.hpp"
#include "swcert/multiplicity.hpp"

namespace swcert {

/// Thrown when a search completes without finding what it looked for (a
/// status, not a usage error); the CLI maps it to its own exit code.
struct NotFoundError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The alphabet A: the module of k x ell matrices over F_q.  The whole
/// construction requires ell > k (equivalently, a noncyclic socle).
struct AlphabetSpec {
    FieldPtr F;
    int k = 1, ell = 0;
};

/// Self-contained description of a constructed counterexample: the kernel
/// element xi it grew from, the two parallel maps lambda and mu, their
/// kernels, and the transcript of every verification the builder ran.
struct Certificate {
    AlphabetSpec alphabet;
    int m = 0, n = 0;
    Subspace X;
    MultiplicityFn xi;
    CodeMap lambda, mu;
    std::vector<Subspace> kernels_lambda, kernels_mu;
    nlohmann::json transcript;
};

/// For each support subspace V of xi, the projection W = Vperp (+) Xperp -> A
/// along Vperp composed with the coordinate identification psi of Xperp with
/// F_q^ell.  Positive values contribute copies to lambda, negative to mu.
std::pair<CodeMap, CodeMap> build_lambda_mu(const MultiplicityFn& xi, const SectorSets& sectors,
                                            const AlphabetSpec& alphabet);

struct MinMScan {
    int m = 0, rows = 0, cols = 0;
    int rank = -1;  // -1 when settled by the modular fast path
    int kernel_dim = 0;
    bool fast_path = false;
};

struct MinMResult {
    std::optional<int> min_m;  // least m in [ell, max_m] with Ker E' nonzero
    int lemma_bound_m = 0;     // least m with q^{ell(m-ell)} > sum_{i<ell} binom(m,i)_q
    std::vector<MinMScan> scans;
};

MinMResult min_m_search(const AlphabetSpec& alphabet, int max_m, long long cap = kDefaultEnumCap);

/// Runs the whole pipeline: find m (unless given), extract xi, build the
/// maps, and verify every clause into the transcript.  Throws NotFoundError
/// when no nonzero kernel exists up to max_m.
Certificate construct_counterexample(const AlphabetSpec& alphabet,
                                     std::optional<int> m = std::nullopt, int max_m = 8,
                                     long long cap = kDefaultEnumCap);

struct VerifyOptions {
    // "trivial", "full", or explicit generators
    std::string group = "trivial";
    std::optional<std::vector<MatFq>> group_gens;
    bool brute_force = false;
    mpz_class budget = 10000000;
    long long cap = kDefaultEnumCap;
};

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    bool overall = true;
    bool budget_exceeded = false;

    nlohmann::json to_json() const;
};

/// Recomputes every certificate claim from scratch: xi in Ker E', the
/// coordinate-wise preimage identity for the trivial group by full
/// enumeration of W, kernel facts, the zero-column argument, the length
/// lower bound, swc preservation for the requested group, and (optionally)
/// the brute-force monomial sweep.
VerifyReport verify_certificate(const Certificate& cert, const VerifyOptions& opt = {});

struct WeightCheckReport {
    Certificate cert;
    bool omega_preserving = false;
    int u_omega_order = 0;
    bool extension_found = false;  // must stay false
    VerifyReport verification;
};

/// The arbitrary-weight corollary at desk scale: builds the counterexample,
/// confirms the isometry preserves the weight, and confirms no
/// U(omega)-monomial extension exists.
WeightCheckReport unextendable_for_weight(const WeightFn& omega, const AlphabetSpec& alphabet,
                                          std::optional<int> m = std::nullopt, int max_m = 8,
                                          long long cap = kDefaultEnumCap);

// --- JSON serialization ---------------------------------------------------

nlohmann::json field_to_json(const Field& F);
FieldPtr field_from_json(const nlohmann::json& j, int cap = 256);
nlohmann::json subspace_to_json(const Subspace& S);
Subspace subspace_from_json(const nlohmann::json& j, const FieldPtr& F);
nlohmann::json matfq_to_json(const MatFq& M);
MatFq matfq_from_json(const nlohmann::json& j, const FieldPtr& F);

nlohmann::json certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const nlohmann::json& j);
void save_certificate(const Certificate& c, const std::string& path);
Certificate load_certificate(const std::string& path);

/// Weight file format: {"point_index": "rational", ...} with big-endian
/// point indices as decimal-string keys and values like "3" or "-1/2".
WeightFn weight_from_json(const nlohmann::json& j, const FieldPtr& F, int k, int ell);

}  // namespace swcert

#endif
