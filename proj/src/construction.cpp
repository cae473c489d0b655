#include "swcert/construction.hpp"

#include <algorithm>
#include <fstream>
#include <map>

namespace swcert {

using nlohmann::json;

std::pair<CodeMap, CodeMap> build_lambda_mu(const MultiplicityFn& xi, const SectorSets& sectors,
                                            const AlphabetSpec& alphabet) {
    const FieldPtr& F = alphabet.F;
    const int ell = alphabet.ell;
    const int m = xi.ambient;
    if (xi.is_zero()) throw std::invalid_argument("xi must be nonzero");

    Subspace Xperp = orthogonal_complement(sectors.X);
    if (Xperp.dim() != ell) throw std::logic_error("dim Xperp != ell");

    // psi: Xperp = span(e_1..e_ell) -> F_q^ell is the coordinate projection;
    // relative to the stacked basis [Vperp; Xperp] the composite map is
    // B^{-1} * (selector of the last ell coordinates)
    MatFq selector(F, m, ell);
    for (int j = 0; j < ell; ++j) selector.at(m - ell + j, j) = 1;

    CodeMap lambda, mu;
    lambda.F = mu.F = F;
    lambda.m = mu.m = m;
    lambda.ell = mu.ell = ell;

    for (const auto& [V, val] : xi.support) {
        if (V.dim() != ell || intersect(V, sectors.X).dim() != 0)
            throw std::invalid_argument("xi support subspace outside S_eq");
        Subspace K = orthogonal_complement(V);
        if (intersect(K, Xperp).dim() != 0 || K.dim() + Xperp.dim() != m)
            throw std::logic_error("Vperp (+) Xperp is not a decomposition of W");

        MatFq B(F, m, m);
        for (int i = 0; i < K.dim(); ++i)
            for (int j = 0; j < m; ++j) B.at(i, j) = K.basis.at(i, j);
        for (int i = 0; i < ell; ++i)
            for (int j = 0; j < m; ++j) B.at(m - ell + i, j) = Xperp.basis.at(i, j);
        auto Binv = inverse(B);
        if (!Binv) throw std::logic_error("stacked basis is singular");
        MatFq Lam = mat_mul(*Binv, selector);

        long copies = mpz_class(abs(val)).get_si();
        for (long c = 0; c < copies; ++c)
            (val > 0 ? lambda : mu).maps.push_back(Lam);
    }

    if (lambda.n() != mu.n())
        throw std::logic_error("positive and negative parts of xi have different mass");
    if (lambda.n() == 0) throw std::invalid_argument("xi has no positive part");
    return {lambda, mu};
}

MinMResult min_m_search(const AlphabetSpec& alphabet, int max_m, long long cap) {
    const int ell = alphabet.ell;
    if (!(ell > alphabet.k && alphabet.k >= 1))
        throw std::invalid_argument("construction inapplicable: need ell > k >= 1");
    MinMResult res;
    res.lemma_bound_m = find_min_x(ell, alphabet.F->q());
    for (int m = ell; m <= max_m; ++m) {
        KernelXiInfo info;
        auto xi = kernel_xi(m, ell, alphabet.k, alphabet.F, cap, &info);
        res.scans.push_back({m, info.rows, info.cols,
                             info.fast_path_full_rank ? -1 : info.rank, info.kernel_dim,
                             info.fast_path_full_rank});
        if (xi) {
            res.min_m = m;
            break;
        }
    }
    return res;
}

namespace {

mpz_class length_lower_bound(int k, int q) {
    mpz_class b = 1, qz = q;
    mpz_class qp = 1;
    for (int i = 1; i <= k; ++i) {
        qp *= qz;
        b *= 1 + qp;
    }
    return b;
}

// multiset of letter indices per point of W, sorted: equal for lambda and mu
// at every w is exactly the trivial-group preimage identity
bool eq1_trivial_group(const CodeMap& lambda, const CodeMap& mu, int k, long long cap,
                       std::string* detail) {
    const int q = lambda.F->q();
    long long total = 1;
    for (int i = 0; i < k * lambda.m; ++i) {
        total *= q;
        if (total > cap) throw CapExceededError("point enumeration cap exceeded in eq1 check");
    }
    for (long long wi = 0; wi < total; ++wi) {
        auto w = point_from_index(wi, k * lambda.m, q);
        std::vector<long long> ll(lambda.n()), mm(mu.n());
        for (int i = 0; i < lambda.n(); ++i)
            ll[i] = index_of_point(apply_map_rows(w, k, lambda.maps[i]), q);
        for (int i = 0; i < mu.n(); ++i)
            mm[i] = index_of_point(apply_map_rows(w, k, mu.maps[i]), q);
        std::sort(ll.begin(), ll.end());
        std::sort(mm.begin(), mm.end());
        if (ll != mm) {
            if (detail) *detail = "failed at point index " + std::to_string(wi);
            return false;
        }
    }
    return true;
}

Subspace intersect_all(const std::vector<Subspace>& list, const FieldPtr& F, int m) {
    Subspace acc = Subspace::full(F, m);
    for (const auto& S : list) acc = intersect(acc, S);
    return acc;
}

}  // namespace

Certificate construct_counterexample(const AlphabetSpec& alphabet, std::optional<int> m_opt,
                                     int max_m, long long cap) {
    const FieldPtr& F = alphabet.F;
    const int k = alphabet.k, ell = alphabet.ell;
    if (!(ell > k && k >= 1))
        throw std::invalid_argument("construction inapplicable: need ell > k >= 1");

    int m;
    std::optional<MultiplicityFn> xi;
    if (m_opt) {
        m = *m_opt;
        if (m < ell) throw std::invalid_argument("need m >= ell");
        xi = kernel_xi(m, ell, k, F, cap);
        if (!xi)
            throw NotFoundError("Ker E' is trivial at m = " + std::to_string(m));
    } else {
        m = ell;
        for (; m <= max_m; ++m) {
            xi = kernel_xi(m, ell, k, F, cap);
            if (xi) break;
        }
        if (!xi)
            throw NotFoundError("no nonzero Ker E' for m up to " + std::to_string(max_m));
    }

    Certificate cert;
    cert.alphabet = alphabet;
    cert.m = m;
    SectorSets S = build_sectors(m, ell, F, cap);
    cert.X = S.X;
    cert.xi = eta_from_xi(*xi, S);
    auto [lambda, mu] = build_lambda_mu(cert.xi, S, alphabet);
    cert.lambda = lambda;
    cert.mu = mu;
    cert.n = lambda.n();
    for (const auto& M : lambda.maps)
        cert.kernels_lambda.push_back(Subspace::span(F, m, kernel_fq(M)));
    for (const auto& M : mu.maps)
        cert.kernels_mu.push_back(Subspace::span(F, m, kernel_fq(M)));

    // transcript: every clause of the construction, checked on the spot
    json tr;

    bool xi_ok = !cert.xi.is_zero();
    for (const auto& U : S.s_lt) {
        mpz_class s = 0;
        for (const auto& [V, val] : cert.xi.support) s += val * mobius(U, V);
        if (s != 0) xi_ok = false;
    }
    tr["xi_in_kernel"] = xi_ok ? "pass" : "fail";

    std::string detail;
    tr["eq1"] = eq1_trivial_group(lambda, mu, k, cap, &detail) ? "pass" : "fail";

    bool distinct = true;
    for (const auto& kl : cert.kernels_lambda)
        for (const auto& km : cert.kernels_mu)
            if (kl == km) distinct = false;
    tr["kernels_distinct"] = distinct ? "pass" : "fail";

    Subspace N_l = intersect_all(cert.kernels_lambda, F, m);
    Subspace N_m = intersect_all(cert.kernels_mu, F, m);
    tr["ker_lambda_eq_ker_mu"] = (N_l == N_m) ? "pass" : "fail";

    bool no_zero_col = true;
    for (const auto& km : cert.kernels_mu)
        if (contains(km, cert.kernels_lambda[0])) no_zero_col = false;
    tr["zero_column"] = no_zero_col ? "pass" : "fail";

    mpz_class bound = length_lower_bound(k, F->q());
    tr["lower_bound_n"] = {{"bound", bound.get_str()},
                           {"achieved", cert.n},
                           {"status", mpz_class(cert.n) >= bound ? "pass" : "fail"}};
    tr["brute_force"] = "skipped";
    cert.transcript = tr;
    return cert;
}

VerifyReport verify_certificate(const Certificate& cert, const VerifyOptions& opt) {
    VerifyReport rep;
    auto add = [&](const std::string& name, bool pass, const std::string& detail = "") {
        rep.checks.push_back({name, pass, detail});
        rep.overall = rep.overall && pass;
    };

    const FieldPtr& F = cert.alphabet.F;
    const int k = cert.alphabet.k, ell = cert.alphabet.ell, m = cert.m;

    // shape and parameter sanity
    bool shapes = ell > k && k >= 1 && m >= ell && cert.X.ambient == m &&
                  cert.X.dim() == m - ell && cert.n >= 1 &&
                  cert.lambda.n() == cert.n && cert.mu.n() == cert.n &&
                  (int)cert.kernels_lambda.size() == cert.n &&
                  (int)cert.kernels_mu.size() == cert.n;
    for (const auto& M : cert.lambda.maps) shapes = shapes && M.rows == m && M.cols == ell;
    for (const auto& M : cert.mu.maps) shapes = shapes && M.rows == m && M.cols == ell;
    add("well_formed", shapes);
    if (!shapes) return rep;

    // xi: nonzero, supported in S_eq relative to the stated X, and in Ker E'
    bool xi_ok = !cert.xi.is_zero();
    for (const auto& [V, val] : cert.xi.support)
        xi_ok = xi_ok && V.dim() == ell && intersect(V, cert.X).dim() == 0;
    if (xi_ok) {
        SectorSets S = build_sectors_for(cert.X, ell, opt.cap);
        for (const auto& U : S.s_lt) {
            mpz_class s = 0;
            for (const auto& [V, val] : cert.xi.support) s += val * mobius(U, V);
            if (s != 0) {
                xi_ok = false;
                break;
            }
        }
    }
    add("xi_in_kernel", xi_ok);

    // the maps' kernels, recomputed, must realize the support of eta_perp
    // with the stated multiplicities
    std::vector<Subspace> ker_l, ker_m;
    for (const auto& M : cert.lambda.maps) ker_l.push_back(Subspace::span(F, m, kernel_fq(M)));
    for (const auto& M : cert.mu.maps) ker_m.push_back(Subspace::span(F, m, kernel_fq(M)));
    add("kernels_match_stated",
        ker_l == cert.kernels_lambda && ker_m == cert.kernels_mu);

    std::map<Subspace, long> expect_l, expect_m, got_l, got_m;
    for (const auto& [V, val] : cert.xi.support) {
        Subspace K = orthogonal_complement(V);
        if (val > 0)
            expect_l[K] += mpz_class(val).get_si();
        else
            expect_m[K] += mpz_class(-val).get_si();
    }
    for (const auto& K : ker_l) ++got_l[K];
    for (const auto& K : ker_m) ++got_m[K];
    add("kernels_realize_xi", expect_l == got_l && expect_m == got_m);

    std::string detail;
    bool eq1 = eq1_trivial_group(cert.lambda, cert.mu, k, opt.cap, &detail);
    add("eq1_trivial_group", eq1, detail);

    bool distinct = true, dims_ok = true;
    for (const auto& kl : ker_l) dims_ok = dims_ok && kl.dim() == m - ell;
    for (const auto& km : ker_m) dims_ok = dims_ok && km.dim() == m - ell;
    for (const auto& kl : ker_l)
        for (const auto& km : ker_m)
            if (kl == km) distinct = false;
    add("kernel_dims", dims_ok);
    add("kernels_distinct", distinct);
    // Eq. (2) at the orbit {0} needs some permutation matching kernels
    // pairwise; disjoint kernel sets rule out every permutation
    add("no_kernel_matching_permutation", distinct,
        distinct ? "Eq. (2) fails at the zero orbit for every permutation" : "");

    Subspace N_l = intersect_all(ker_l, F, m);
    Subspace N_m = intersect_all(ker_m, F, m);
    add("ker_lambda_eq_ker_mu", N_l == N_m, "f = mu o lambda^{-1} well defined on the code");

    bool no_zero_col = true;
    for (const auto& km : ker_m)
        if (contains(km, ker_l[0])) no_zero_col = false;
    add("zero_column", no_zero_col,
        "lambda(Ker lambda_1) has a zero first column; its image under f has none");

    mpz_class bound = length_lower_bound(k, F->q());
    add("lower_bound_n", mpz_class(cert.n) >= bound,
        "n = " + std::to_string(cert.n) + " >= " + bound.get_str());

    // swc preservation for the requested group
    AutGroup G;
    if (opt.group_gens)
        G = saturate(F, ell, *opt.group_gens, opt.cap);
    else if (opt.group == "full")
        G = gl_group(F, ell, opt.cap);
    else
        G = trivial_group(F, ell);
    OrbitPartition P = orbits(G, k, opt.cap);
    add("swc_preserved_group_" + (opt.group_gens ? std::string("custom") : opt.group),
        is_swc_isometry(cert.lambda, cert.mu, P, k, opt.cap));

    if (opt.brute_force) {
        AutGroup Gbar = closure(G, k, opt.cap);
        auto bf = brute_force_extend(cert.lambda, cert.mu, Gbar, k, opt.budget);
        if (!bf.ran) {
            rep.budget_exceeded = true;
            add("brute_force", false,
                "budget exceeded: " + bf.candidates.get_str() + " candidates");
        } else {
            add("brute_force", !bf.found,
                bf.found ? "an extension exists" : "no extension among " +
                                                      bf.candidates.get_str() + " candidates");
        }
    }

    return rep;
}

WeightCheckReport unextendable_for_weight(const WeightFn& omega, const AlphabetSpec& alphabet,
                                          std::optional<int> m, int max_m, long long cap) {
    const int k = alphabet.k, ell = alphabet.ell;
    if (!(ell > k))
        throw std::invalid_argument("cyclic socle: extension property holds, no counterexample");
    if (omega.k != k || omega.ell != ell || !omega.F->same(*alphabet.F))
        throw std::invalid_argument("weight function does not match the alphabet");

    WeightCheckReport rep;
    rep.cert = construct_counterexample(alphabet, m, max_m, cap);

    const int q = alphabet.F->q();
    long long total = 1;
    for (int i = 0; i < k * rep.cert.m; ++i) total *= q;
    bool preserving = true;
    for (long long wi = 0; wi < total && preserving; ++wi) {
        auto w = point_from_index(wi, k * rep.cert.m, q);
        mpq_class sl = 0, sm = 0;
        for (const auto& M : rep.cert.lambda.maps)
            sl += omega.values[index_of_point(apply_map_rows(w, k, M), q)];
        for (const auto& M : rep.cert.mu.maps)
            sm += omega.values[index_of_point(apply_map_rows(w, k, M), q)];
        preserving = sl == sm;
    }
    rep.omega_preserving = preserving;

    AutGroup U = weight_symmetry_group(omega, cap);
    rep.u_omega_order = U.order();
    rep.extension_found = extend_search(rep.cert.lambda, rep.cert.mu, U, k, cap).has_value();

    VerifyOptions vo;
    vo.cap = cap;
    rep.verification = verify_certificate(rep.cert, vo);
    return rep;
}

// --- JSON ------------------------------------------------------------------

json VerifyReport::to_json() const {
    json j;
    j["overall"] = overall ? "pass" : "fail";
    if (budget_exceeded) j["budget_exceeded"] = true;
    json arr = json::array();
    for (const auto& c : checks) {
        json e;
        e["name"] = c.name;
        e["status"] = c.pass ? "pass" : "fail";
        if (!c.detail.empty()) e["detail"] = c.detail;
        arr.push_back(e);
    }
    j["checks"] = arr;
    return j;
}

json field_to_json(const Field& F) {
    return {{"p", F.p()}, {"e", F.e()}, {"modulus", F.modulus()}};
}

FieldPtr field_from_json(const json& j, int cap) {
    return Field::make(j.at("p").get<int>(), j.at("e").get<int>(),
                       j.at("modulus").get<std::vector<int>>(), cap);
}

json subspace_to_json(const Subspace& S) {
    json rows = json::array();
    for (int i = 0; i < S.dim(); ++i) rows.push_back(S.basis.row(i));
    return {{"ambient", S.ambient}, {"dim", S.dim()}, {"basis", rows}};
}

Subspace subspace_from_json(const json& j, const FieldPtr& F) {
    int ambient = j.at("ambient").get<int>();
    auto rows = j.at("basis").get<std::vector<std::vector<Fel>>>();
    MatFq B(F, (int)rows.size(), ambient);
    for (size_t i = 0; i < rows.size(); ++i) {
        if ((int)rows[i].size() != ambient) throw std::invalid_argument("bad basis row length");
        for (int c = 0; c < ambient; ++c) B.at((int)i, c) = rows[i][c];
    }
    Subspace S = Subspace::span(F, ambient, B);
    if (S.dim() != j.at("dim").get<int>() || !(S.basis == B))
        throw std::invalid_argument("subspace basis is not canonical RREF");
    return S;
}

json matfq_to_json(const MatFq& M) {
    json rows = json::array();
    for (int i = 0; i < M.rows; ++i) rows.push_back(M.row(i));
    return rows;
}

MatFq matfq_from_json(const json& j, const FieldPtr& F) {
    auto rows = j.get<std::vector<std::vector<Fel>>>();
    MatFq M = MatFq::from_rows(F, rows);
    for (Fel x : M.a)
        if (!F->is_element(x)) throw std::invalid_argument("matrix entry out of field range");
    return M;
}

json certificate_to_json(const Certificate& c) {
    json j;
    j["version"] = 1;
    j["field"] = field_to_json(*c.alphabet.F);
    j["k"] = c.alphabet.k;
    j["ell"] = c.alphabet.ell;
    j["m"] = c.m;
    j["n"] = c.n;
    j["X"] = subspace_to_json(c.X);
    json xi = json::array();
    for (const auto& [V, val] : c.xi.support)
        xi.push_back({{"subspace", subspace_to_json(V)}, {"value", val.get_str()}});
    j["xi"] = xi;
    json lam = json::array(), mu = json::array();
    for (const auto& M : c.lambda.maps) lam.push_back(matfq_to_json(M));
    for (const auto& M : c.mu.maps) mu.push_back(matfq_to_json(M));
    j["lambda"] = lam;
    j["mu"] = mu;
    json kl = json::array(), km = json::array();
    for (const auto& S : c.kernels_lambda) kl.push_back(subspace_to_json(S));
    for (const auto& S : c.kernels_mu) km.push_back(subspace_to_json(S));
    j["kernels_lambda"] = kl;
    j["kernels_mu"] = km;
    j["transcript"] = c.transcript;
    return j;
}

Certificate certificate_from_json(const json& j) {
    Certificate c;
    if (j.at("version").get<int>() != 1) throw std::invalid_argument("unknown certificate version");
    FieldPtr F = field_from_json(j.at("field"));
    c.alphabet.F = F;
    c.alphabet.k = j.at("k").get<int>();
    c.alphabet.ell = j.at("ell").get<int>();
    c.m = j.at("m").get<int>();
    c.n = j.at("n").get<int>();
    c.X = subspace_from_json(j.at("X"), F);
    c.xi.F = F;
    c.xi.ambient = c.m;
    for (const auto& e : j.at("xi"))
        c.xi.set(subspace_from_json(e.at("subspace"), F),
                 mpz_class(e.at("value").get<std::string>()));
    c.lambda.F = c.mu.F = F;
    c.lambda.m = c.mu.m = c.m;
    c.lambda.ell = c.mu.ell = c.alphabet.ell;
    for (const auto& e : j.at("lambda")) c.lambda.maps.push_back(matfq_from_json(e, F));
    for (const auto& e : j.at("mu")) c.mu.maps.push_back(matfq_from_json(e, F));
    for (const auto& e : j.at("kernels_lambda")) c.kernels_lambda.push_back(subspace_from_json(e, F));
    for (const auto& e : j.at("kernels_mu")) c.kernels_mu.push_back(subspace_from_json(e, F));
    c.transcript = j.value("transcript", json::object());
    return c;
}

void save_certificate(const Certificate& c, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << certificate_to_json(c).dump(2) << "\n";
}

Certificate load_certificate(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j;
    in >> j;
    return certificate_from_json(j);
}

WeightFn weight_from_json(const json& j, const FieldPtr& F, int k, int ell) {
    WeightFn w;
    w.F = F;
    w.k = k;
    w.ell = ell;
    long long total = 1;
    for (int i = 0; i < k * ell; ++i) total *= F->q();
    w.values.assign(total, mpq_class(0));
    for (auto it = j.begin(); it != j.end(); ++it) {
        long long idx = std::stoll(it.key());
        if (idx < 0 || idx >= total) throw std::invalid_argument("weight point index out of range");
        mpq_class v;
        try {
            v = mpq_class(it.value().get<std::string>(), 10);
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("bad rational: " + it.value().get<std::string>());
        }
        if (v.get_den() == 0) throw std::invalid_argument("zero denominator in weight value");
        v.canonicalize();
        w.values[idx] = v;
    }
    return w;
}

}  // namespace swcert
