#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(PISTAR_CLI) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    while (const std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path scratch(const std::string& name) {
    const auto p = fs::temp_directory_path() / ("pistar_cli_" + name);
    fs::remove(p);
    return p;
}

}  // namespace

TEST_CASE("compute") {
    const auto r = run("compute --a 3 --b 5");
    CHECK(r.code == 0);
    CHECK(r.out == "method=fast a=3 b=5 s=7 pi_star=2 pi_s=4 ratio=0.5\n");

    CHECK(run("compute --a 4 --b 6").code == 2);
    CHECK(run("compute --a 3").code == 2);
    CHECK(run("compute --a 3 --b 5 --method nope").code == 2);
    CHECK(run("compute --a 1000 --b 100001 --method brute --brute-cap 1000").code == 3);

    const auto all = run("compute --a 5 --b 7 --method all --format csv");
    CHECK(all.code == 0);
    CHECK(all.out ==
          "method,a,b,s,pi_star,pi_s,ratio\n"
          "fast,5,7,23,5,9,0.555556\n"
          "residue,5,7,23,5,9,0.555556\n"
          "brute,5,7,23,5,9,0.555556\n");

    const auto js = run("compute --a 1 --b 4 --format jsonl");
    CHECK(js.out == "{\"a\":1,\"b\":4,\"method\":\"fast\",\"pi_s\":0,\"pi_star\":0,\"ratio\":null,\"s\":-1}\n");
}

TEST_CASE("gaps") {
    CHECK(run("gaps --a 3 --b 5").out == "1\t-\n2\tprime\n4\t-\n7\tprime\n");
    CHECK(run("gaps --a 2 --b 7 --format csv").out == "n,prime\n1,0\n3,1\n5,1\n");
    const auto unit = run("gaps --a 1 --b 5");
    CHECK(unit.code == 0);
    CHECK(unit.out.empty());
    CHECK(run("gaps --a 6 --b 9").code == 2);
}

TEST_CASE("verify subcommands") {
    CHECK(run("verify thm3 --a 9").code == 0);
    const auto coj2 = run("verify coj2 --a-max 10");
    CHECK(coj2.code == 0);
    CHECK(coj2.out.find("expected,coj2_exception,3,4\n") != std::string::npos);
    CHECK(coj2.out.find("expected,coj2_exception,3,5\n") != std::string::npos);
    CHECK(coj2.out.find("expected,coj2_exception,3,7\n") != std::string::npos);
    CHECK(coj2.out.find("unexpected") == std::string::npos);
    CHECK(run("verify bounds --check rs --x-max 1e6").code == 0);
    CHECK(run("verify bounds --check case4").code == 0);
    CHECK(run("verify coj1 --a-range 2:5 --b-max 200").code == 0);
    CHECK(run("verify thm2 --a-range 3:4 --b-max 1000").code == 0);
    CHECK(run("verify thm1 --case 4").code == 0);
    CHECK(run("verify coj2 --a-range 2:4").code == 2);
    CHECK(run("verify coj2 --a-range x").code == 2);
}

TEST_CASE("sweep output formats and determinism") {
    const auto c1 = scratch("t1.csv");
    const auto c3 = scratch("t3.csv");
    REQUIRE(run("verify coj2 --a-max 6 --threads 1 --out " + c1.string()).code == 0);
    REQUIRE(run("verify coj2 --a-max 6 --threads 3 --out " + c3.string()).code == 0);
    const auto text = slurp(c1);
    CHECK(text == slurp(c3));
    CHECK(text.rfind("a,b,s,pi_star,pi_s,thm2_rhs,thm2,thm1,coj1,coj2,ms\n3,4,5,2,3,", 0) == 0);

    const auto stdout_csv = run("verify coj2 --a-max 6 --format csv");
    CHECK(stdout_csv.out == text);

    const auto jl = run("verify coj2 --a-max 4 --format jsonl");
    CHECK(jl.out.rfind("{\"a\":3,\"b\":4,", 0) == 0);
    fs::remove(c1);
    fs::remove(c3);
}

TEST_CASE("checkpoint handling") {
    const auto log = scratch("ck.jsonl");
    const auto out = scratch("ck.csv");
    REQUIRE(run("verify coj2 --a-max 5 --resume " + log.string()).code == 0);
    const auto first = slurp(log);
    CHECK(!first.empty());
    REQUIRE(run("verify coj2 --a-max 5 --resume " + log.string() + " --out " + out.string()).code == 0);
    CHECK(slurp(log) == first);

    {
        std::ofstream o(log, std::ios::app);
        o << "{\"schema\":1,\"a\":3}\n";
    }
    CHECK(run("verify coj2 --a-max 5 --resume " + log.string()).code == 4);
    fs::remove(log);
    fs::remove(out);
}
