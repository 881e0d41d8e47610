// End-to-end tests driving the installed binary. The binary path is the
// first non-flag argument, wired in from the build system.
#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

namespace {

std::string g_bin;

struct RunResult {
    int code;
    std::string out;
};

RunResult run(const std::string& args, const std::string& env = "") {
    std::string cmd = env.empty() ? "" : env + " ";
    cmd += g_bin + " " + args + " 2>/dev/null";
    FILE* p = ::popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = std::fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
    int st = ::pclose(p);
    return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

std::string scratch_dir(const char* tag) {
    return "/tmp/grkappa_cli_" + std::string(tag) + "_" +
           std::to_string(::getpid());
}

}  // namespace

TEST_CASE("block listing") {
    RunResult r = run("blocks --e 2 --kappa 0 --d 3");
    CHECK(r.code == 0);
    CHECK(r.out ==
          "blocks e=2 kappa=0 d=3\n"
          "block 0:1,1:2 defect=0\n"
          "  all: [2,1]\n"
          "  restricted: [2,1]\n"
          "block 0:2,1:1 defect=1\n"
          "  all: [3] [1,1,1]\n"
          "  restricted: [1,1,1]\n");
}

TEST_CASE("decomposition with all methods reports agreement") {
    RunResult r = run("decomp --e 2 --kappa 0 --d 2 --method all");
    CHECK(r.code == 0);
    CHECK(r.out ==
          "decomp e=2 kappa=0 method=all\n"
          "block 0:1,1:1\n"
          "  rows: [2] [1,1]\n"
          "  cols: [1,1]\n"
          "  d[2][1,1] = q\n"
          "  d[1,1][1,1] = 1\n"
          "  at q=1:\n"
          "    [2] | 1\n"
          "    [1,1] | 1\n"
          "methods agree: yes\n");
}

TEST_CASE("fock verification on a clean truncation") {
    RunResult r = run("fock-verify --e 2 --kappa 0 --dmax 3");
    CHECK(r.code == 0);
    CHECK(r.out == "no violations\n");
}

TEST_CASE("domain errors exit with status one") {
    CHECK(run("blocks --e 1 --kappa 0 --d 2").code == 1);
    CHECK(run("decomp --e 2 --kappa 0 --alpha bogus").code == 1);
    CHECK(run("blocks --e 2 --kappa '' --d 2").code == 1);
    CHECK(run("decomp --e 3 --kappa 0,1 --d 2 --method llt").code == 1);
    CHECK(run("decomp --e 2 --kappa 0 --d 2 --method qr").code == 1);
    CHECK(run("blocks --e 2 --kappa 0 --d 2 --format yaml").code == 1);
    CHECK(run("mullineux --e 3 --kappa 0,1 --d 2").code == 1);
    CHECK(run("seminormal-check --e 2 --kappa 0 --d 2").code == 1);
    CHECK(run("").code == 1);
}

TEST_CASE("output is deterministic across runs and thread counts") {
    RunResult a = run("decomp --e 3 --kappa 0 --d 4 --method all");
    RunResult b = run("decomp --e 3 --kappa 0 --d 4 --method all");
    RunResult c = run("decomp --e 3 --kappa 0 --d 4 --method all --jobs 1");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);

    RunResult g1 = run("crystal --e 2 --kappa 0 --d 3");
    RunResult g2 = run("crystal --e 2 --kappa 0 --d 3 --jobs 1");
    CHECK(g1.code == 0);
    CHECK(g1.out == g2.out);
}

TEST_CASE("matrix cache round trips and stays byte-identical") {
    std::string dir = scratch_dir("cache");
    std::filesystem::remove_all(dir);
    std::string args = "decomp --e 2 --kappa 0 --d 3 --method bar --cache-dir " + dir;
    RunResult cold = run(args);
    CHECK(cold.code == 0);
    CHECK(std::filesystem::exists(dir + "/2/0/r0c2_r1c1.json"));
    CHECK(std::filesystem::exists(dir + "/2/0/r0c1_r1c2.json"));
    RunResult warm = run(args);
    CHECK(warm.code == 0);
    CHECK(cold.out == warm.out);
    std::filesystem::remove_all(dir);
}

TEST_CASE("cache environment variable overrides the flag") {
    std::string flagged = scratch_dir("flag");
    std::string envdir = scratch_dir("env");
    std::filesystem::remove_all(flagged);
    std::filesystem::remove_all(envdir);
    RunResult r = run(
        "decomp --e 2 --kappa 0 --d 2 --method bar --cache-dir " + flagged,
        "GRKAPPA_CACHE=" + envdir);
    CHECK(r.code == 0);
    CHECK(std::filesystem::exists(envdir + "/2/0/r0c1_r1c1.json"));
    CHECK(!std::filesystem::exists(flagged));
    std::filesystem::remove_all(envdir);
}

TEST_CASE("csv export") {
    RunResult r = run("decomp --e 2 --kappa 0 --d 2 --method all --format csv");
    CHECK(r.code == 0);
    CHECK(r.out ==
          "# block 0:1,1:1\n"
          "shape,\"1,1\"\n"
          "\"2\",\"q\"\n"
          "\"1,1\",\"1\"\n"
          "# block 0:1,1:1 at q=1\n"
          "shape,\"1,1\"\n"
          "\"2\",1\n"
          "\"1,1\",1\n");
}

TEST_CASE("json export carries the agreement verdict") {
    RunResult r = run("decomp --e 2 --kappa 0 --d 2 --method all --format json");
    CHECK(r.code == 0);
    CHECK(r.out.find("\"methods_agree\": true") != std::string::npos);
    CHECK(r.out.find("\"blocks\"") != std::string::npos);

    RunResult g = run("crystal --e 2 --kappa 0 --d 2 --format json");
    CHECK(g.code == 0);
    CHECK(g.out.find("\"vertices\"") != std::string::npos);
    CHECK(g.out.find("\"residue\": 1") != std::string::npos);
}

TEST_CASE("crystal graph in dot form") {
    RunResult r = run("crystal --e 2 --kappa 0 --d 2");
    CHECK(r.code == 0);
    CHECK(r.out ==
          "digraph crystal {\n"
          "  rankdir=TB;\n"
          "  \"0\";\n"
          "  \"1\";\n"
          "  \"1,1\";\n"
          "  \"0\" -> \"1\" [label=\"i=0\"];\n"
          "  \"1\" -> \"1,1\" [label=\"i=1\"];\n"
          "}\n");
}

TEST_CASE("restricted enumeration and mullineux") {
    RunResult r = run("restricted --e 3 --kappa 0 --d 3");
    CHECK(r.code == 0);
    CHECK(r.out == "0\n1\n2\n1,1\n2,1\n1,1,1\n");

    RunResult m = run("mullineux --e 3 --kappa 0 --d 3");
    CHECK(m.code == 0);
    CHECK(m.out ==
          "0 -> 0\n"
          "1 -> 1\n"
          "2 -> 1,1\n"
          "1,1 -> 2\n"
          "2,1 -> 1,1,1\n"
          "1,1,1 -> 2,1\n");
}

TEST_CASE("graded dimensions and characters by block") {
    RunResult g = run("graded-dim --e 2 --kappa 0 --alpha 0:1,1:1");
    CHECK(g.code == 0);
    CHECK(g.out ==
          "block 0:1,1:1 defect=1\n"
          "  [0,1 ; 0,1] = 1 + q^2\n");

    RunResult s = run("specht-char --e 2 --kappa 0 --d 2");
    CHECK(s.code == 0);
    CHECK(s.out ==
          "S(2)\n"
          "  (0,1): q\n"
          "S(1,1)\n"
          "  (0,1): 1\n");

    RunResult i = run("irr-char --e 2 --kappa 0 --d 2");
    CHECK(i.code == 0);
    CHECK(i.out ==
          "D(1,1)\n"
          "  (0,1): 1\n");
}

TEST_CASE("seminormal check at generic parameter") {
    RunResult r = run("seminormal-check --e 0 --kappa 0 --d 3");
    CHECK(r.code == 0);
    CHECK(r.out ==
          "seminormal e=0 kappa=0 d=3\n"
          "[3] dim=1 ok\n"
          "[2,1] dim=2 ok\n"
          "[1,1,1] dim=1 ok\n"
          "no violations\n");
}

int main(int argc, char** argv) {
    std::vector<char*> args{argv[0]};
    for (int i = 1; i < argc; ++i) {
        if (g_bin.empty() && argv[i][0] != '-')
            g_bin = argv[i];
        else
            args.push_back(argv[i]);
    }
    if (g_bin.empty()) {
        std::fprintf(stderr, "usage: %s <grkappa-binary> [doctest args]\n",
                     argv[0]);
        return 1;
    }
    doctest::Context ctx((int)args.size(), args.data());
    return ctx.run();
}
