#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace {

std::string cli() {
    const char* p = std::getenv("QF_CLI_BIN");
    REQUIRE(p != nullptr);
    return p;
}

std::string fixtures() {
    const char* p = std::getenv("QF_FIXTURES_DIR");
    REQUIRE(p != nullptr);
    return p;
}

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& cmd) {
    std::string full = cmd + " 2>/dev/null";
    FILE* pipe = popen(full.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

} // namespace

TEST_CASE("check") {
    auto ok = run(cli() + " check " + fixtures() + "/takasaki5.qnd");
    CHECK(ok.exit_code == 0);
    CHECK(ok.out == "qnd ok size=5\n");
}

TEST_CASE("order: dihedral quandles are not right circularly orderable") {
    auto res = run(cli() + " order " + fixtures() + "/takasaki5.qnd --side right --kind circular");
    CHECK(res.exit_code == 1);
    CHECK(res.out.find("none exhaustive leaves=") != std::string::npos);
}

TEST_CASE("order: trivial quandle has a right circular witness") {
    auto res = run(cli() + " order " + fixtures() + "/trivial4.qnd --side right --kind circular");
    CHECK(res.exit_code == 0);
    CHECK(res.out == "order 1\ncyclic: 1 2 3 4\n");
}

TEST_CASE("order: size bound gives exit 3") {
    auto res = run(cli() + " order " + fixtures() + "/takasaki5.qnd --side right --kind circular --max 4");
    CHECK(res.exit_code == 3);
}

TEST_CASE("malformed input gives exit 2") {
    auto res = run("echo 'qnd 1' | " + cli() + " check -");
    CHECK(res.exit_code == 2);
}

TEST_CASE("torus prints the presentation") {
    auto res = run(cli() + " torus 2 3");
    CHECK(res.exit_code == 0);
    CHECK(res.out == "qpres 1\ngens 2\nrel a1 = ((a2*a1)*a2)*a1\nrel a2 = ((a1*a1)*a2)*a1\n");
}

TEST_CASE("pd2pres matches the stored presentation fixture") {
    auto res = run(cli() + " pd2pres " + fixtures() + "/fig8.pd");
    CHECK(res.exit_code == 0);
    auto stored = run("cat " + fixtures() + "/fig8.qpres");
    CHECK(res.out == stored.out);
}

TEST_CASE("nquandle emits a QND with a mapping block") {
    auto res = run(cli() + " nquandle " + fixtures() + "/fig8.qpres -n 2");
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("qnd 1\nsize 5\n") == 0);
    CHECK(res.out.find("gen a1 -> ") != std::string::npos);
}

TEST_CASE("nquandle overflow gives exit 3") {
    auto res = run(cli() + " nquandle " + fixtures() + "/fig8.qpres -n 2 --max 6");
    CHECK(res.exit_code == 3);
}

TEST_CASE("piped composition: torus 2 3 | nquandle -n 2 | order exits 1") {
    auto res = run(cli() + " torus 2 3 | " + cli() + " nquandle - -n 2 | " + cli() +
                   " order - --side right --kind circular");
    CHECK(res.exit_code == 1);
    CHECK(res.out.find("none exhaustive") != std::string::npos);
}

TEST_CASE("iso: enumerated figure-eight 2-quandle vs takasaki(Z5)") {
    auto res = run(cli() + " nquandle " + fixtures() + "/fig8.qpres -n 2 | " + cli() + " iso - " +
                   fixtures() + "/takasaki5.qnd");
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("map: ") != std::string::npos);
}

TEST_CASE("iso: size mismatch exits 1") {
    auto res = run(cli() + " iso " + fixtures() + "/takasaki5.qnd " + fixtures() + "/trivial4.qnd");
    CHECK(res.exit_code == 1);
}

TEST_CASE("env and abel") {
    auto res = run(cli() + " env " + fixtures() + "/trivial4.qnd | " + cli() + " abel -");
    CHECK(res.exit_code == 0);
    CHECK(res.out == "Z^4\n");
    auto res2 = run(cli() + " torus 2 3 | " + cli() + " env - | " + cli() + " abel -");
    CHECK(res2.out == "Z\n");
    auto res3 = run(cli() + " env " + fixtures() + "/trivial4.qnd -n 3");
    CHECK(res3.out.find("kernel E0_3 has index 3") != std::string::npos);
}

TEST_CASE("extend: finite builds, order and circular reports, gates") {
    auto finite = run(cli() + " extend " + fixtures() + "/ext_z5_takasaki3.cocycle");
    CHECK(finite.exit_code == 0);
    CHECK(finite.out.find("qnd 1\nsize 15\n") == 0);

    auto alpha = run(cli() + " extend " + fixtures() + "/const_alpha.cocycle");
    CHECK(alpha.exit_code == 0);
    CHECK(alpha.out.find("size 4") != std::string::npos);

    auto ord = run(cli() + " extend " + fixtures() + "/ext_t2_trivial2.cocycle --order --samples 5000");
    CHECK(ord.exit_code == 0);
    CHECK(ord.out.find("seed 0") != std::string::npos);
    CHECK(ord.out.find("lex order: right invariance ok") != std::string::npos);

    auto circ = run(cli() + " extend " + fixtures() + "/ext_circle.cocycle --circular --samples 5000");
    CHECK(circ.exit_code == 0);
    CHECK(circ.out.find("validity ok") != std::string::npos);

    // refusal via a negative t on the right side
    auto refuse = run("printf 'cocycle 1\\nbase trivial 2\\nfiber rational\\naffine t=-1 kappa=0\\n' | " +
                      cli() + " extend - --order --samples 1000");
    CHECK(refuse.exit_code == 2);
    auto forced = run("printf 'cocycle 1\\nbase trivial 2\\nfiber rational\\naffine t=-1 kappa=0\\n' | " +
                      cli() + " extend - --order --samples 1000 --no-gate");
    CHECK(forced.exit_code == 1);
    CHECK(forced.out.find("violation:") != std::string::npos);
}

TEST_CASE("emitted files re-parse: round trips through check/abel") {
    auto t = run(cli() + " nquandle " + fixtures() + "/fig8.qpres -n 2 | " + cli() + " check -");
    CHECK(t.exit_code == 0);
    CHECK(t.out == "qnd ok size=5\n");
}

TEST_CASE("deterministic byte-identical output on repeated runs") {
    std::vector<std::string> cmds{
        cli() + " order " + fixtures() + "/takasaki5.qnd --side right --kind circular",
        cli() + " classify " + fixtures() + "/takasaki5.qnd",
        cli() + " torus 3 4",
        cli() + " nquandle " + fixtures() + "/fig8.qpres -n 2",
        cli() + " env " + fixtures() + "/trivial4.qnd -n 2",
        cli() + " extend " + fixtures() + "/ext_circle.cocycle --circular --samples 2000",
    };
    for (const auto& c : cmds) {
        auto a = run(c);
        auto b = run(c);
        CHECK(a.exit_code == b.exit_code);
        CHECK(a.out == b.out);
    }
}
