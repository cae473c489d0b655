#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>

#ifndef SWCERT_BIN
#define SWCERT_BIN "swcert"
#endif

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(SWCERT_BIN) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    while (size_t got = fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST_CASE("construct and verify round trip through the CLI") {
    std::string cert = "cli_cert_tmp.json";
    auto c = run("construct --q 2 --k 1 --ell 2 --out " + cert);
    CHECK(c.exit_code == 0);
    CHECK(c.out.find("m=4") != std::string::npos);
    CHECK(c.out.find("n=3") != std::string::npos);

    auto v = run("verify " + cert);
    CHECK(v.exit_code == 0);
    CHECK(v.out.find("\"overall\": \"pass\"") != std::string::npos);

    // determinism: an identical run writes identical bytes
    std::string cert2 = "cli_cert_tmp2.json";
    run("construct --q 2 --k 1 --ell 2 --out " + cert2);
    std::ifstream a(cert), b(cert2);
    std::string sa((std::istreambuf_iterator<char>(a)), std::istreambuf_iterator<char>());
    std::string sb((std::istreambuf_iterator<char>(b)), std::istreambuf_iterator<char>());
    CHECK(sa == sb);
    CHECK(!sa.empty());

    auto bf = run("verify " + cert + " --group full --brute-force --budget 10000000");
    CHECK(bf.exit_code == 0);
    CHECK(bf.out.find("no extension") != std::string::npos);

    auto small = run("verify " + cert + " --group full --brute-force --budget 2");
    CHECK(small.exit_code == 5);

    std::remove(cert.c_str());
    std::remove(cert2.c_str());
}

TEST_CASE("CLI error taxonomy") {
    CHECK(run("construct --q 2 --k 1 --ell 1").exit_code == 2);  // ell > k violated
    CHECK(run("construct --q 6 --k 1 --ell 2").exit_code == 2);  // not a prime power
    CHECK(run("construct --q 2 --k 1 --ell 2 --m 2").exit_code == 3);  // trivial kernel
    CHECK(run("construct --q 2 --k 1 --ell 2 --max-m 3").exit_code == 3);
    CHECK(run("verify no_such_file.json").exit_code == 2);
    CHECK(run("bogus-subcommand").exit_code == 2);

    // malformed certificate
    std::string bad = "cli_bad_tmp.json";
    {
        std::ofstream f(bad);
        f << "{\"version\": 1}\n";
    }
    CHECK(run("verify " + bad).exit_code == 2);
    std::remove(bad.c_str());
}

TEST_CASE("tampering flips verify to exit 4") {
    std::string cert = "cli_tamper_tmp.json";
    run("construct --q 2 --k 1 --ell 2 --out " + cert);
    std::ifstream in(cert);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    in.close();
    // parse-free tamper: flip one digit inside the mu block
    auto mpos = text.find("\"mu\"");
    REQUIRE(mpos != std::string::npos);
    size_t digit = text.find_first_of("01", text.find('[', mpos));
    REQUIRE(digit != std::string::npos);
    text[digit] = text[digit] == '0' ? '1' : '0';
    {
        std::ofstream out(cert);
        out << text;
    }
    auto v = run("verify " + cert);
    CHECK(v.exit_code == 4);
    std::remove(cert.c_str());
}

TEST_CASE("diagnostic subcommands") {
    auto mm = run("min-m --q 2 --k 1 --ell 2 --max-m 6");
    CHECK(mm.exit_code == 0);
    CHECK(mm.out.find("\"min_m\": 4") != std::string::npos);
    CHECK(mm.out.find("\"lemma_bound_m\": 5") != std::string::npos);

    auto dual = run("duality-check --q 2 --m 3");
    CHECK(dual.exit_code == 0);
    CHECK(dual.out.find("all 16 subspaces pass") != std::string::npos);

    auto cl = run("closure --q 2 --ell 2 --group trivial");
    CHECK(cl.exit_code == 0);
    CHECK(cl.out.find("\"closure_order\": 1") != std::string::npos);

    auto st = run("lattice-stats --q 2 --m 4 --ell 2");
    CHECK(st.exit_code == 0);
    CHECK(st.out.find("\"lattice_size\": \"67\"") != std::string::npos);
    CHECK(st.out.find("\"s_lt\": 13") != std::string::npos);

    auto pj = run("pseudo-injective --q 2 --ell 2 --group full");
    CHECK(pj.exit_code == 0);
    CHECK(pj.out.find("\"characterizations_agree\": true") != std::string::npos);

    auto wt = run("weight --q 2 --k 1 --ell 2 --hamming");
    CHECK(wt.exit_code == 0);
    CHECK(wt.out.find("\"u_omega_order\": 6") != std::string::npos);
    CHECK(wt.out.find("\"extension_found\": false") != std::string::npos);

    // weight from file
    std::string wf = "cli_weight_tmp.json";
    {
        std::ofstream f(wf);
        f << "{\"0\": \"0\", \"1\": \"1/2\", \"2\": \"1/2\", \"3\": \"-3\"}\n";
    }
    auto wt2 = run("weight --q 2 --k 1 --ell 2 --weight " + wf);
    CHECK(wt2.exit_code == 0);
    std::remove(wf.c_str());
}
