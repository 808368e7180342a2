// Copyright 2026 The tdcolor authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string out_file = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                           "/tdcolor_cli_out.txt";
    std::string cmd = std::string(TDCOLOR_BIN) + " " + args + " > " + out_file + " 2>/dev/null";
    int status = std::system(cmd.c_str());
    std::ifstream in(out_file);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return {WEXITSTATUS(status), text};
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("stats aggregates the structural metrics") {
    auto r = run("stats --gen \"cycle 5\"");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "n=5 m=5 delta=2 girth=5 mad=2 eq1=-10"));
    CHECK(contains(r.out, "RESULT: OK"));

    auto forest = run("gen \"cycle 5\" --out /tmp/tdc_c5.edges");
    CHECK(forest.exit_code == 0);
}

TEST_CASE("square emits the canonical edge list") {
    auto r = run("square --gen \"cycle 5\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out.substr(0, 5) == "5 10\n");
}

TEST_CASE("exact coloring reports chi2 with verified witnesses") {
    auto r = run("color2 --exact --gen petersen");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "chi2=10"));
    CHECK(contains(r.out, "RESULT: CHI2=10"));

    auto unsat = run("color2 --exact --budget 9 --gen petersen");
    CHECK(unsat.exit_code == 1);
    CHECK(contains(unsat.out, "RESULT: UNSAT"));
}

TEST_CASE("constructive coloring prints the reduction trace") {
    auto gen = run("gen random-sparse 60 10 1 --out /tmp/tdc_rs.edges");
    REQUIRE(gen.exit_code == 0);
    auto r = run("color2 /tmp/tdc_rs.edges");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "reduce L"));
    CHECK(contains(r.out, "RESULT: COLORED"));

    // girth flag: petersen violates every hypothesis -> usage error
    auto bad = run("color2 --gen petersen");
    CHECK(bad.exit_code == 2);
}

TEST_CASE("choosable verdicts use the exit discipline") {
    auto good = run("choosable --gen \"cycle 5\" --uniform 3 --mode exhaustive");
    CHECK(good.exit_code == 0);
    CHECK(contains(good.out, "RESULT: CHOOSABLE"));

    auto bad = run("choosable --gen \"cycle 5\" --uniform 2 --mode exhaustive");
    CHECK(bad.exit_code == 1);
    CHECK(contains(bad.out, "counterexample"));
    CHECK(contains(bad.out, "RESULT: NOT-CHOOSABLE"));
}

TEST_CASE("gadget subcommands") {
    auto show = run("gadget show a");
    CHECK(show.exit_code == 0);
    CHECK(contains(show.out, "4 3\n"));
    CHECK(contains(show.out, "u3 3"));

    auto verify = run("gadget verify a");
    CHECK(verify.exit_code == 0);
    CHECK(contains(verify.out, "mode=exhaustive"));
    CHECK(contains(verify.out, "RESULT: CHOOSABLE"));

    auto fuzz = run("gadget fuzz c --trials 200 --seed 5");
    CHECK(fuzz.exit_code == 0);
    CHECK(contains(fuzz.out, "RESULT: OK"));

    auto nonsense = run("gadget show z");
    CHECK(nonsense.exit_code == 2);
}

TEST_CASE("detect reports the first configuration or NONE") {
    auto none = run("detect --gen \"cycle 5\"");
    CHECK(none.exit_code == 1);
    CHECK(contains(none.out, "RESULT: MATCH=NONE"));

    run("gen random-sparse 60 10 1 --out /tmp/tdc_rs.edges");
    auto hit = run("detect /tmp/tdc_rs.edges");
    CHECK(hit.exit_code == 0);
    CHECK(contains(hit.out, "RESULT: MATCH=L"));
    CHECK(contains(hit.out, "removal:"));
}

TEST_CASE("discharge prints ledger, table and the RESULT trailer") {
    run("gen random-sparse 60 10 1 --out /tmp/tdc_rs.edges");
    auto r = run("discharge /tmp/tdc_rs.edges");
    CHECK(contains(r.out, " -> "));
    CHECK(contains(r.out, " : R0"));
    CHECK(contains(r.out, "RESULT: CONSERVED=true"));
}

TEST_CASE("corpus aggregates detect, conserve and color counts") {
    auto r = run("corpus --count 3 --n 40 --seed 5");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "detect=3/3 conserved=3/3 colored=3/3"));
    CHECK(contains(r.out, "RESULT: OK"));
}

TEST_CASE("reports are byte-identical for identical config and seed") {
    auto a = run("corpus --count 2 --n 40 --seed 9");
    auto b = run("corpus --count 2 --n 40 --seed 9");
    CHECK(a.out == b.out);
    auto f1 = run("gadget fuzz b --trials 100 --seed 11");
    auto f2 = run("gadget fuzz b --trials 100 --seed 11");
    CHECK(f1.out == f2.out);
}

TEST_CASE("parse errors exit with status 2 and name the line") {
    std::ofstream bad("/tmp/tdc_bad.edges");
    bad << "3 2\n0 1\n0 1\n";
    bad.close();
    auto r = run("stats /tmp/tdc_bad.edges");
    CHECK(r.exit_code == 2);
    auto usage = run("frobnicate");
    CHECK(usage.exit_code != 0);
}
