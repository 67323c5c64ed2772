/*
   Copyright 2026 The rzcert authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#define DOCTEST_CONFIG_IMPLEMENT
#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <string>

#include "doctest.h"

namespace {

std::string g_cli;  // path to the binary under test

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string cmd = g_cli + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST_CASE("gen prints canonical serializations") {
    CHECK(run("gen --family bell --n 0").out == "1/1\n");
    CHECK(run("gen --family alt-runs --n 2").out == "0/1,2/1\n");
    CHECK(run("gen --family eulerian --n 3").out == "0/1,1/1,4/1,1/1\n");
    // BiPoly: JSON array of per-x-degree strings
    CHECK(run("gen --family q-eulerian --n 3").out ==
          "[\"0/1,0/1,0/1,1/1\",\"0/1,1/1,3/1\",\"0/1,1/1\"]\n");
    CHECK(run("gen --family q-eulerian-at --n 3 --q 1").out == "1/1,4/1,1/1\n");
    CHECK(run("gen --family composition --multiset 2,1").out == "0/1,1/1,4/1,3/1\n");
    CHECK(run("gen --family kfact-stirling --n 3").out == "0/1,1/1,6/1,6/1\n");
}

TEST_CASE("gen exit codes on bad input") {
    CHECK(run("gen --family nope --n 3").exit_code == 2);
    CHECK(run("gen --family bell").exit_code == 2);
    CHECK(run("gen --family q-eulerian-at --n 3 --q x").exit_code == 2);
    CHECK(run("gen").exit_code == 2);
}

TEST_CASE("check exit codes reflect the verdict") {
    CHECK(run("check eprop --n 4 --q -1/1").exit_code == 0);
    CHECK(run("check bona-wilf --n 7").exit_code == 0);
    CHECK(run("check knuth --n 2 --w 1/2").exit_code == 0);
    // the n = 1 anomaly fails the identity claim
    CHECK(run("check knuth --n 1 --w 1/2").exit_code == 1);
    // invalid parameters
    CHECK(run("check knuth --n 2 --w 2").exit_code == 2);
    CHECK(run("check nosuch --n 2").exit_code == 2);
    CHECK(run("check simion --multiset 0,1").exit_code == 2);
}

TEST_CASE("check claims with the --t alias") {
    CHECK(run("check eprop --n 5 --t 3").exit_code == 0);
}

TEST_CASE("generated-instance claims work and honor --count") {
    CHECK(run("check mthm --seed 7").exit_code == 0);
    CHECK(run("check mthm --seed 7 --count 20").exit_code == 0);
    CHECK(run("check mthm-ab --seed 9 --count 5").exit_code == 0);
    CHECK(run("check corollary --seed 11 --count 5").exit_code == 0);
    CHECK(run("check t-prop --seed 13 --count 5").exit_code == 0);
    CHECK(run("check e-prop-op --seed 15 --count 5").exit_code == 0);
    // explicit inadmissible parameter: NotApplicable maps to usage error
    CHECK(run("check e-prop-op --seed 15 --alpha 2").exit_code == 2);
}

TEST_CASE("json output is byte-stable for fixed seeds") {
    const std::string a = run("check mthm --seed 42 --count 3 --format json").out;
    const std::string b = run("check mthm --seed 42 --count 3 --format json").out;
    CHECK(!a.empty());
    CHECK(a == b);
    const std::string c = run("gen --family q-eulerian --n 5 --format json").out;
    CHECK(c == run("gen --family q-eulerian --n 5 --format json").out);
}

TEST_CASE("simion and fn-relation claims") {
    CHECK(run("check simion --multiset 3,2").exit_code == 0);
    CHECK(run("check fn-relation --n 6").exit_code == 0);
    CHECK(run("check q-frobenius --n 9").exit_code == 0);
}

TEST_CASE("gen tsv prints the coefficient triangle") {
    CHECK(run("gen --family bell --n 3 --format tsv").out ==
          "1/1\n0/1\t1/1\n0/1\t1/1\t1/1\n0/1\t1/1\t3/1\t1/1\n");
    CHECK(run("gen --family alt-runs --n 4 --format tsv").out ==
          "1/1\n0/1\t2/1\n0/1\t2/1\t4/1\n0/1\t2/1\t12/1\t10/1\n");
    CHECK(run("gen --family composition --multiset 1,1 --format tsv").out == "0/1\t1/1\t2/1\n");
}

TEST_CASE("gen e-poly and --out") {
    CHECK(run("gen --family e-poly --n 2 --q 1").out == "1/1,3/1,2/1\n");
    const std::string path = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                             "/rzcert_gen_out.txt";
    const RunResult r = run("gen --family bell --n 4 --out " + path);
    CHECK(r.exit_code == 0);
    std::string file_content;
    if (FILE* f = std::fopen(path.c_str(), "rb")) {
        char buf[256];
        size_t n;
        while ((n = fread(buf, 1, sizeof buf, f)) > 0) file_content.append(buf, n);
        std::fclose(f);
    }
    CHECK(file_content == r.out);
    CHECK(file_content == "0/1,1/1,7/1,6/1,1/1\n");
    std::remove(path.c_str());
}

TEST_CASE("suite identities passes") {
    CHECK(run("suite identities").exit_code == 0);
}

TEST_CASE("suite runner") {
    const RunResult fam = run("suite families");
    CHECK(fam.exit_code == 0);
    CHECK(fam.out.find("[ ok ]") != std::string::npos);
    CHECK(fam.out.find("FAIL") == std::string::npos);
    const RunResult mr = run("suite mthm-random --seed 42 --count 60");
    CHECK(mr.exit_code == 0);
    CHECK(run("suite nosuch").exit_code == 2);
}

TEST_CASE("suite baselines round-trip") {
    const std::string base = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                             "/rzcert_baseline.tsv";
    CHECK(run("suite mthm-random --seed 4 --count 25 --write-baseline " + base).exit_code == 0);
    CHECK(run("suite mthm-random --seed 4 --count 25 --check-baseline " + base).exit_code == 0);
    // different seed changes the digests
    CHECK(run("suite mthm-random --seed 5 --count 25 --check-baseline " + base).exit_code == 1);
    std::remove(base.c_str());
}

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: cli_tests <path-to-rzcert>\n");
        return 1;
    }
    g_cli = argv[1];
    doctest::Context ctx;
    ctx.applyCommandLine(1, argv);
    return ctx.run();
}
