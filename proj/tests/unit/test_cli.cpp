#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

#include "fixtures.hpp"
#include "proc.hpp"

namespace {

std::string bin() { return BQINV_BIN; }

std::string cmd(const std::string& args) { return bin() + " " + args; }

std::string biq(const std::string& name) { return fx::path(name); }

} // namespace

TEST_CASE("check-biquandle accepts fixtures and reports size") {
    auto r = proc::run(cmd("check-biquandle " + biq("z2.biq")));
    CHECK(r.exit_code == 0);
    CHECK(r.out == "OK n=2\n");

    auto r5 = proc::run(cmd("check-biquandle " + biq("alexander5.biq")));
    CHECK(r5.exit_code == 0);
    CHECK(r5.out == "OK n=5\n");
}

TEST_CASE("check-biquandle rejects the bad fixture with an axiom witness") {
    auto r = proc::run(cmd("check-biquandle " + biq("bad.biq")));
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("axiom ii") != std::string::npos);
    CHECK(r.out.find("not injective") != std::string::npos);
}

TEST_CASE("file problems map to the documented exit codes") {
    // Missing file: validation-style failure.
    CHECK(proc::run(cmd("check-biquandle " + biq("missing.biq"))).exit_code == 1);
    // Unparseable content: format error.
    CHECK(proc::run(cmd("check-biquandle " + biq("hopf.dgm"))).exit_code == 2);
    // Usage errors.
    CHECK(proc::run(cmd("no-such-command")).exit_code == 2);
    CHECK(proc::run(cmd("count --diagram " + biq("hopf.dgm"))).exit_code == 2);
}

TEST_CASE("count prints the bare invariant") {
    auto r = proc::run(cmd("count --biquandle " + biq("z2.biq") + " --diagram " +
                           biq("hopf.dgm")));
    CHECK(r.exit_code == 0);
    CHECK(r.out == "4\n");

    auto j = proc::run(cmd("count --json --biquandle " + biq("z2.biq") +
                           " --diagram " + biq("hopf.dgm")));
    CHECK(j.exit_code == 0);
    CHECK(nlohmann::json::parse(j.out) == nlohmann::json{{"count", 4}});
}

TEST_CASE("count rejects invalid biquandles with exit 1") {
    auto r = proc::run(cmd("count --biquandle " + biq("bad.biq") + " --diagram " +
                           biq("hopf.dgm")));
    CHECK(r.exit_code == 1);
}

TEST_CASE("homset lists sorted colorings") {
    auto r = proc::run(cmd("homset --biquandle " + biq("z2.biq") + " --diagram " +
                           biq("hopf.dgm")));
    CHECK(r.exit_code == 0);
    CHECK(r.out == "0 0 1 1\n0 1 1 0\n1 0 0 1\n1 1 0 0\n");
}

TEST_CASE("check-bracket prints the constants") {
    auto r = proc::run(cmd("check-bracket --biquandle " + biq("z2.biq") +
                           " --bracket " + biq("paper_z5.brk")));
    CHECK(r.exit_code == 0);
    CHECK(r.out == "OK delta=2 w=1\n");
}

TEST_CASE("check-bracket reports violations with exit 1") {
    // bad.biq happens to parse as mod-2 tables full of non-units.
    auto r = proc::run(cmd("check-bracket --biquandle " + biq("z2.biq") +
                           " --bracket " + biq("bad.biq")));
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("unit violation") != std::string::npos);
}

TEST_CASE("bracket prints one value per coloring") {
    auto r = proc::run(cmd("bracket --biquandle " + biq("z2.biq") + " --bracket " +
                           biq("paper_z5.brk") + " --diagram " + biq("hopf.dgm")));
    CHECK(r.exit_code == 0);
    CHECK(r.out == "0 0 1 1 : 3\n0 1 1 0 : 4\n1 0 0 1 : 4\n1 1 0 0 : 3\n");
}

TEST_CASE("bracket-multiset prints the canonical form") {
    auto r = proc::run(cmd("bracket-multiset --biquandle " + biq("z2.biq") +
                           " --bracket " + biq("paper_z5.brk") + " --diagram " +
                           biq("hopf.dgm")));
    CHECK(r.exit_code == 0);
    CHECK(r.out == "{3,3,4,4}\n");

    auto j = proc::run(cmd("bracket-multiset --json --biquandle " + biq("z2.biq") +
                           " --bracket " + biq("paper_z5.brk") + " --diagram " +
                           biq("hopf.dgm")));
    CHECK(nlohmann::json::parse(j.out) ==
          nlohmann::json::parse(R"({"multiset":[3,3,4,4]})"));
}

TEST_CASE("quiver DOT output matches the golden file") {
    auto r = proc::run(cmd("quiver --biquandle " + biq("trivial1.biq") +
                           " --diagram " + biq("unknot_0.dgm") +
                           " --quiver identity --format dot"));
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "digraph quiver {\n"
          "  v0 [label=\"0\"];\n"
          "  v0 -> v0 [label=\"0\"];\n"
          "}\n");
}

TEST_CASE("bracket-quiver emits weighted vertices in both formats") {
    auto dot = proc::run(cmd("bracket-quiver --biquandle " + biq("z2.biq") +
                             " --bracket " + biq("paper_z5.brk") + " --diagram " +
                             biq("hopf.dgm") + " --format dot"));
    CHECK(dot.exit_code == 0);
    CHECK(dot.out.find("|β=3\"") != std::string::npos);

    auto j = proc::run(cmd("bracket-quiver --biquandle " + biq("z2.biq") +
                           " --bracket " + biq("paper_z5.brk") + " --diagram " +
                           biq("hopf.dgm") + " --format json"));
    CHECK(j.exit_code == 0);
    auto parsed = nlohmann::json::parse(j.out);
    CHECK(parsed["vertices"].size() == 4);
    CHECK(parsed["arrows"].size() == 8);
}

TEST_CASE("polynomial subcommands print canonical strings") {
    const std::string common = " --biquandle " + biq("z2.biq") + " --bracket " +
                               biq("paper_z5.brk") + " --diagram " + biq("hopf.dgm");
    CHECK(proc::run(cmd("arrow-poly" + common)).out == "4s^3t^3 + 4s^4t^4\n");
    CHECK(proc::run(cmd("vertex-poly" + common)).out == "2u^3w^2 + 2u^4w^2\n");
    CHECK(proc::run(cmd("indeg-poly --biquandle " + biq("z2.biq") + " --diagram " +
                        biq("hopf.dgm")))
              .out == "4u^2\n");
    CHECK(proc::run(cmd("indeg-poly --quiver identity --biquandle " + biq("z2.biq") +
                        " --diagram " + biq("hopf.dgm")))
              .out == "4u\n");
}

TEST_CASE("explicit quiver subsets load from @file") {
    const std::string path = "cli_endos_tmp.txt";
    {
        std::ofstream out(path);
        out << "# both endomorphisms\n0 1\n1 0\n";
    }
    auto r = proc::run(cmd("indeg-poly --quiver @" + path + " --biquandle " +
                           biq("z2.biq") + " --diagram " + biq("hopf.dgm")));
    CHECK(r.exit_code == 0);
    CHECK(r.out == "4u^2\n");

    {
        std::ofstream out(path);
        out << "0 0\n";
    }
    auto bad = proc::run(cmd("indeg-poly --quiver @" + path + " --biquandle " +
                             biq("z2.biq") + " --diagram " + biq("hopf.dgm")));
    CHECK(bad.exit_code == 1);
    std::remove(path.c_str());

    auto missing = proc::run(cmd("indeg-poly --quiver @no_such_file --biquandle " +
                                 biq("z2.biq") + " --diagram " + biq("hopf.dgm")));
    CHECK(missing.exit_code == 1);

    auto unknown = proc::run(cmd("indeg-poly --quiver sideways --biquandle " +
                                 biq("z2.biq") + " --diagram " + biq("hopf.dgm")));
    CHECK(unknown.exit_code == 2);
}

TEST_CASE("search-brackets streams results and a final count") {
    auto r = proc::run(cmd("search-brackets --biquandle " + biq("trivial1.biq") +
                           " --modulus 5"));
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("---\n") != std::string::npos);
    CHECK(r.out.rfind("found 16\n") == r.out.size() - 9);

    auto limited = proc::run(cmd("search-brackets --limit 1 --biquandle " +
                                 biq("z2.biq") + " --modulus 5"));
    CHECK(limited.exit_code == 0);
    CHECK(limited.out.rfind("found 1\n") == limited.out.size() - 8);
}

TEST_CASE("repeated invocations are byte-identical") {
    const std::string invocations[] = {
        "count --biquandle " + biq("z2.biq") + " --diagram " + biq("trefoil.dgm"),
        "bracket-multiset --biquandle " + biq("z2.biq") + " --bracket " +
            biq("paper_z5.brk") + " --diagram " + biq("figure8.dgm"),
        "search-brackets --biquandle " + biq("z2.biq") + " --modulus 5",
    };
    for (const auto& args : invocations) {
        CAPTURE(args);
        auto first = proc::run(cmd(args));
        auto second = proc::run(cmd(args));
        CHECK(first.exit_code == 0);
        CHECK(first.exit_code == second.exit_code);
        CHECK(first.out == second.out);
    }
}

TEST_CASE("worker parallelism does not change output") {
    const std::string args = "bracket-multiset --biquandle " + biq("z2.biq") +
                             " --bracket " + biq("paper_z5.brk") + " --diagram " +
                             biq("figure8.dgm");
    auto plain = proc::run(cmd(args));
    auto threaded = proc::run("BQINV_THREADS=4 " + cmd(args));
    CHECK(plain.exit_code == 0);
    CHECK(threaded.exit_code == 0);
    CHECK(plain.out == threaded.out);
}

TEST_CASE("--seed is accepted and ignored") {
    auto base = proc::run(cmd("count --biquandle " + biq("z2.biq") + " --diagram " +
                              biq("hopf.dgm")));
    auto seeded = proc::run(cmd("--seed 42 count --biquandle " + biq("z2.biq") +
                                " --diagram " + biq("hopf.dgm")));
    CHECK(seeded.exit_code == 0);
    CHECK(seeded.out == base.out);
}

TEST_CASE("every fixture parses through the CLI") {
    for (const char* name :
         {"z2.biq", "trivial1.biq", "trivial2.biq", "trivial3.biq",
          "dihedral3.biq", "alexander5.biq"}) {
        CAPTURE(name);
        CHECK(proc::run(cmd("check-biquandle " + biq(name))).exit_code == 0);
    }
    for (const char* name :
         {"unknot_0.dgm", "kink_pos.dgm", "kink_neg.dgm", "unknot_r2.dgm",
          "hopf.dgm", "hopf_neg.dgm", "hopf_kinked.dgm", "hopf_unknot_split.dgm",
          "unlink2.dgm", "unlink2_r2.dgm", "trefoil.dgm", "figure8.dgm",
          "r3_a.dgm", "r3_b.dgm"}) {
        CAPTURE(name);
        CHECK(proc::run(cmd("count --biquandle " + biq("z2.biq") + " --diagram " +
                            biq(name)))
                  .exit_code == 0);
    }
}
