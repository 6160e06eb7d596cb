// End-to-end checks of the ramsey-lab binary: exit codes, certificate
// round-trips, determinism, and the documented worked examples.  The binary
// path arrives through the RAMSEY_LAB_BIN environment variable.

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>

#include <json.hpp>

#include "ramsey/io.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct cmd_result {
    int code = -1;
    std::string out;
};

const std::string& bin_path() {
    static const std::string path = [] {
        const char* p = std::getenv("RAMSEY_LAB_BIN");
        REQUIRE(p != nullptr);
        return std::string(p);
    }();
    return path;
}

cmd_result run(const std::string& args, const std::string& env_prefix = "") {
    const std::string cmd = env_prefix + bin_path() + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    cmd_result res;
    char buf[4096];
    while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe)) res.out.append(buf, got);
    const int status = pclose(pipe);
    res.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

const fs::path& work_dir() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "ramsey_cli_test";
        fs::remove_all(d);
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string at(const std::string& name) { return (work_dir() / name).string(); }

} // namespace

TEST_CASE("worked example: parity-log has no type (3,2,1) 4-clique") {
    auto gen = run("gen parity-log --n 16 -o " + at("c.json"));
    CAPTURE(gen.out);
    REQUIRE(gen.code == 0);
    REQUIRE(fs::exists(at("c.json")));
    REQUIRE(fs::exists(at("c.json.cert.json")));
    REQUIRE(fs::exists(at("c.json.manifest.json")));

    auto find = run("typeclique --pi 3,2,1 --k 4 --color 0 --require-proof " + at("c.json"));
    CAPTURE(find.out);
    REQUIRE(find.code == 0);
    REQUIRE(find.out.find("none exists, exhausted") != std::string::npos);
}

TEST_CASE("malformed coloring file names the first invalid entry and exits 2") {
    ramsey::write_file(at("bad.json"), R"({"kind":"edge","lo":1,"hi":4,"q":2,"colors":[0,1,0,7,1,0]})");
    auto res = run("maxclique " + at("bad.json") + " --color 0");
    REQUIRE(res.code == 2);
    REQUIRE(res.out.find("colors[3]") != std::string::npos);
    REQUIRE(res.out.find("7") != std::string::npos);

    ramsey::write_file(at("bad2.json"), "definitely not json");
    auto res2 = run("maxclique " + at("bad2.json") + " --color 0");
    REQUIRE(res2.code == 2);

    ramsey::write_file(at("bad3.json"), R"({"kind":"edge","lo":1,"hi":4,"q":2,"colors":[0,1,0]})");
    auto res3 = run("maxclique " + at("bad3.json") + " --color 0");
    REQUIRE(res3.code == 2);
    REQUIRE(res3.out.find("expected 6") != std::string::npos);
}

TEST_CASE("worked example: cascade table reports every identity as true") {
    auto res = run("--json cascade --k 3 --q 2 --n 1e9 --p 0.5");
    REQUIRE(res.code == 0);
    const json doc = json::parse(res.out);
    const json& cert = doc.at("certificate");
    for (const auto& [key, value] : cert.at("identities").items()) {
        CAPTURE(key);
        REQUIRE(value.get<bool>());
    }
    for (const char* chain : {"delta_chain_1", "delta_chain_2", "delta_ge_k2q", "gamma_chain_1",
                              "gamma_chain_2", "gamma_ge_k6q", "link_eps_pow2"}) {
        CAPTURE(chain);
        REQUIRE(cert.at("chains").at(chain).get<std::string>() == "yes");
    }
    REQUIRE(cert.at("rows").size() == 2);
    // the human table reaches the same conclusions
    auto human = run("cascade --k 3 --q 2 --n 1e9 --p 0.5");
    REQUIRE(human.code == 0);
    const auto identities_line = human.out.substr(human.out.find("identities:"));
    REQUIRE(identities_line.substr(0, identities_line.find('\n')).find("=false") == std::string::npos);
    REQUIRE(human.out.find("alpha=true") != std::string::npos);
    // scientific and caret notation agree
    auto caret = run("--json cascade --k 3 --q 2 --n 10^9 --p 1/2");
    REQUIRE(json::parse(caret.out).at("certificate").at("e_delta") == cert.at("e_delta"));
}

TEST_CASE("identical command and seed produce byte-identical certificates") {
    run("gen parity-log --n 16 -o " + at("c.json"));
    auto a = run("wclique " + at("c.json") + " --color 1 --spec w1 -o " + at("w1.cert"));
    auto b = run("wclique " + at("c.json") + " --color 1 --spec w1 -o " + at("w2.cert"));
    REQUIRE(a.code == 0);
    REQUIRE(b.code == 0);
    REQUIRE(ramsey::read_file(at("w1.cert")) == ramsey::read_file(at("w2.cert")));
    // manifests agree on the result digest even though wall time differs
    const json m1 = json::parse(ramsey::read_file(at("w1.cert.manifest.json")));
    const json m2 = json::parse(ramsey::read_file(at("w2.cert.manifest.json")));
    REQUIRE(m1.at("result_digest") == m2.at("result_digest"));
    REQUIRE(m1.at("tool_version") == m2.at("tool_version"));
    REQUIRE(m1.at("input_hashes") == m2.at("input_hashes"));

    auto s1 = run("gen random --n 10 --seed 4 -o " + at("r1.json"));
    auto s2 = run("gen random --n 10 --seed 4 -o " + at("r2.json"));
    auto s3 = run("gen random --n 10 --seed 5 -o " + at("r3.json"));
    REQUIRE(s1.code == 0);
    REQUIRE(s2.code == 0);
    REQUIRE(s3.code == 0);
    REQUIRE(ramsey::read_file(at("r1.json")) == ramsey::read_file(at("r2.json")));
    REQUIRE(ramsey::read_file(at("r1.json")) != ramsey::read_file(at("r3.json")));
}

TEST_CASE("certificates re-verify, and tampering or wrong inputs are rejected") {
    run("gen parity-log --n 16 -o " + at("c.json"));

    SECTION("gen certificate") {
        REQUIRE(run("verify --certificate " + at("c.json.cert.json")).code == 0);
    }
    SECTION("search certificate with its coloring") {
        run("maxclique " + at("c.json") + " --color 0 -o " + at("m.cert"));
        REQUIRE(run("verify --certificate " + at("m.cert") + " --coloring " + at("c.json")).code == 0);

        std::string tampered = ramsey::read_file(at("m.cert"));
        const auto pos = tampered.find("\"nodes\":");
        REQUIRE(pos != std::string::npos);
        tampered.replace(pos, 9, "\"nodes\":9");
        ramsey::write_file(at("tampered.cert"), tampered);
        auto bad = run("verify --certificate " + at("tampered.cert") + " --coloring " + at("c.json"));
        REQUIRE(bad.code == 2);

        run("gen parity-log --n 8 -o " + at("c8.json"));
        auto wrong = run("verify --certificate " + at("m.cert") + " --coloring " + at("c8.json"));
        REQUIRE(wrong.code == 2);
        REQUIRE(wrong.out.find("digest") != std::string::npos);
    }
    SECTION("self-contained certificates") {
        run("fexact --n 6 --q 2 -o " + at("f.cert"));
        REQUIRE(run("verify --certificate " + at("f.cert")).code == 0);
        run("cascade --k 3 --q 2 --n 65536 --p 1/2 -o " + at("k.cert"));
        REQUIRE(run("verify --certificate " + at("k.cert")).code == 0);
        run("sep --set 2,3,5,8,9,11,14,17 --interval 1,20 -o " + at("s.cert"));
        REQUIRE(run("verify --certificate " + at("s.cert")).code == 0);
        run("weight --spec w1 --set 2,4,16 -o " + at("wt.cert"));
        REQUIRE(run("verify --certificate " + at("wt.cert")).code == 0);
        run("rpi --k 3 --q 1 --pi 2,1 --nmax 6 -o " + at("r.cert"));
        REQUIRE(run("verify --certificate " + at("r.cert")).code == 0);
    }
    SECTION("triple coloring certificate") {
        run("gen monotone-diff --n 12 -o " + at("t.json"));
        run("monosets " + at("t.json") + " --max-size 4 -o " + at("ms.cert"));
        REQUIRE(run("verify --certificate " + at("ms.cert") + " --coloring " + at("t.json")).code == 0);
    }
}

TEST_CASE("exit codes: usage 64, budget 3, proof demanded 3") {
    REQUIRE(run("maxclique --wat").code == 64);
    REQUIRE(run("nonsense").code == 64);

    auto refused = run("fexact --n 8 --q 3 --budget 100");
    REQUIRE(refused.code == 3);
    REQUIRE(refused.out.find("budget") != std::string::npos);
    REQUIRE(run("fexact --n 8 --q 3", "RAMSEY_LAB_BUDGET=100 ").code == 3);
    REQUIRE(run("fexact --n 5 --q 2", "RAMSEY_LAB_BUDGET=100 ").code == 0);

    run("gen parity-log --n 64 -o " + at("c64.json"));
    REQUIRE(run("typeclique " + at("c64.json") + " --pi 1,2 --k 3 --color 0 --budget 3").code == 3);
    REQUIRE(run("maxclique " + at("c64.json") + " --color 0 --budget 3 --require-proof").code == 3);
    REQUIRE(run("maxclique " + at("c64.json") + " --color 0 --budget 3").code == 0);
}

TEST_CASE("binary coloring format round-trips through the tool") {
    auto gen = run("gen parity-log --n 16 --binary -o " + at("c.rlc"));
    REQUIRE(gen.code == 0);
    REQUIRE(ramsey::read_file(at("c.rlc")).substr(0, 4) == "RLC1");
    REQUIRE(run("maxclique " + at("c.rlc") + " --color 1").code == 0);
    // json and binary generations describe the same coloring
    run("gen parity-log --n 16 -o " + at("cj.json"));
    const json jc = json::parse(run("--json maxclique " + at("cj.json") + " --color 1").out);
    const json bc = json::parse(run("--json maxclique " + at("c.rlc") + " --color 1").out);
    REQUIRE(jc.at("certificate").at("best") == bc.at("certificate").at("best"));
}

TEST_CASE("json mode emits machine output with frozen values") {
    const json w = json::parse(run("--json weight --spec w1 --set 2,4,16").out);
    REQUIRE(w.at("certificate").at("exact").get<std::string>() == "7/4");
    REQUIRE(w.at("certificate").at("total").get<double>() == Catch::Approx(1.75));
    REQUIRE(w.at("manifest").contains("result_digest"));
    REQUIRE(w.at("manifest").contains("command_line"));

    const json f = json::parse(run("--json --threads 4 fexact --n 7 --q 2").out);
    const json f1 = json::parse(run("--json fexact --n 7 --q 2 --order 1").out);
    REQUIRE(f.at("certificate").at("value").get<double>() ==
            f1.at("certificate").at("value").get<double>());

    const json r0 = json::parse(run("--json rpi --k 3 --q 1 --pi 2,1 --nmax 8 --order 0").out);
    const json r1 = json::parse(run("--json rpi --k 3 --q 1 --pi 2,1 --nmax 8 --order 1").out);
    REQUIRE(r0.at("certificate").at("value").get<int>() == 4);
    REQUIRE(r1.at("certificate").at("value").get<int>() == 4);
}

TEST_CASE("verifier subcommands succeed on the shipped constructions") {
    auto md = run("--json verify monotone-diff --n 18 --max-size 5");
    REQUIRE(md.code == 0);
    REQUIRE(json::parse(md.out).at("certificate").at("violations").get<int>() == 0);
    auto sd = run("--json verify second-diff --n 24");
    REQUIRE(sd.code == 0);
    REQUIRE(json::parse(sd.out).at("certificate").at("matches").get<int>() == 0);
    auto bl = run("--json verify blocks --sizes 3,8 --max-size 4 --seeds 3");
    REQUIRE(bl.code == 0);
    REQUIRE(json::parse(bl.out).at("certificate").at("violations").get<int>() == 0);
}
