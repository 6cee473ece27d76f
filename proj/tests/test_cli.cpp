// End-to-end tests of the command-line interface, driving the built binary.
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <sys/wait.h>
#include <fstream>
#include <string>

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

std::string write_temp(const std::string& contents, const std::string& tag) {
    std::string path = "/tmp/fpindex_cli_test_" + tag + ".json";
    std::ofstream f(path);
    f << contents;
    return path;
}

RunResult run(const std::string& args, const std::string& input_json = "",
              const std::string& tag = "in") {
    std::string cmd = std::string(FPINDEX_CLI) + " " + args;
    if (!input_json.empty())
        cmd += " --input " + write_temp(input_json, tag);
    cmd += " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    while (size_t got = fread(buf, 1, sizeof buf, pipe))
        r.out.append(buf, got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST_SUITE("cli check") {
    TEST_CASE("admissible constant sequence") {
        RunResult r = run("check", R"({"period":1,"values":[1]})");
        CHECK(r.exit_code == 0);
        json payload = json::parse(r.out);
        CHECK(payload["dold"] == true);
        CHECK(payload["coefficients"] == json{{"1", "1"}});
    }

    TEST_CASE("alternating sequence") {
        RunResult r = run("check", R"({"period":2,"values":[1,-1]})");
        CHECK(r.exit_code == 0);
        json payload = json::parse(r.out);
        CHECK(payload["coefficients"] == json{{"1", "1"}, {"2", "-1"}});
    }

    TEST_CASE("violation exits 1 with the witness a_2 = 1/2") {
        RunResult r = run("check", R"({"period":2,"values":[0,1]})");
        CHECK(r.exit_code == 1);
        json payload = json::parse(r.out);
        CHECK(payload["dold"] == false);
        CHECK(payload["witness"]["k"] == 2);
        CHECK(payload["witness"]["value"] == "1/2");
    }

    TEST_CASE("malformed JSON exits 2") {
        RunResult r = run("check", "{not json");
        CHECK(r.exit_code == 2);
    }

    TEST_CASE("payloads are byte-identical across runs") {
        RunResult a = run("check", R"({"period":2,"values":[1,-1]})", "det_a");
        RunResult b = run("check", R"({"period":2,"values":[1,-1]})", "det_b");
        CHECK(a.out == b.out);
    }
}

TEST_SUITE("cli decompose") {
    TEST_CASE("reports fractional coefficients without failing") {
        RunResult r = run("decompose", R"({"period":2,"values":[0,1]})");
        CHECK(r.exit_code == 0);
        json payload = json::parse(r.out);
        CHECK(payload["is_integral"] == false);
        CHECK(payload["coefficients"]["2"] == "1/2");
    }

    TEST_CASE("emits the symbolic root form when admissible") {
        RunResult r = run("decompose", R"({"period":2,"values":[1,-1]})");
        json payload = json::parse(r.out);
        REQUIRE(payload.contains("roots_of_unity"));
        CHECK(payload["roots_of_unity"]["mu"].size() == 1);
        CHECK(payload["roots_of_unity"]["lambda"].size() == 2);
    }
}

TEST_SUITE("cli realize") {
    TEST_CASE("constant 1 gives the empty plan and an all-ones table") {
        RunResult r = run("realize", R"({"period":1,"values":[1]})");
        CHECK(r.exit_code == 0);
        json payload = json::parse(r.out);
        CHECK(payload["plan"]["disk_families"].empty());
        CHECK(payload["plan"]["annulus_families"].empty());
        for (const auto& row : payload["verification"]["table"])
            CHECK(row[2] == 1);
    }

    TEST_CASE("alternating sequence gives one period-2 disk family") {
        RunResult r = run("realize", R"({"period":2,"values":[1,-1]})");
        CHECK(r.exit_code == 0);
        json payload = json::parse(r.out);
        CHECK(payload["plan"]["disk_families"] == json::array({json{{"count", 1}, {"k", 2}}}));
        auto& table = payload["verification"]["table"];
        CHECK(table[0][2] == 1);
        CHECK(table[1][2] == -1);
    }

    TEST_CASE("decomposition input: families and table match evaluation") {
        RunResult r = run("realize", R"({"coefficients":{"2":-1,"3":2}})");
        CHECK(r.exit_code == 0);
        json payload = json::parse(r.out);
        // the sigma^1 shift forces an extra period-1 disk family
        CHECK(payload["plan"]["disk_families"] ==
              json::array({json{{"count", 1}, {"k", 1}}, json{{"count", 1}, {"k", 2}}}));
        CHECK(payload["plan"]["annulus_families"] ==
              json::array({json{{"count", 2}, {"k", 3}}}));
        CHECK(payload["verification"]["ok"] == true);
        for (const auto& row : payload["verification"]["table"]) {
            long long n = row[0].get<long long>();
            long long expected = (n % 2 == 0 ? -2 : 0) + (n % 3 == 0 ? 6 : 0);
            CHECK(row[2].get<long long>() == expected);
        }
    }

    TEST_CASE("non-admissible input exits 1 with a witness") {
        RunResult r = run("realize", R"({"period":2,"values":[0,1]})");
        CHECK(r.exit_code == 1);
        json payload = json::parse(r.out);
        CHECK(payload["witness"]["value"] == "1/2");
    }
}

TEST_SUITE("cli index-numeric") {
    TEST_CASE("catalog map l at n = 2") {
        RunResult r = run("index-numeric --map l --n 2");
        CHECK(r.exit_code == 0);
        json payload = json::parse(r.out);
        CHECK(payload["index"] == -1);
        CHECK(payload["epsilon_check"] == true);
    }

    TEST_CASE("contraction at n = 1") {
        RunResult r = run("index-numeric --map contraction --n 1");
        CHECK(json::parse(r.out)["index"] == 1);
    }

    TEST_CASE("anosov catalog entry is symbolic") {
        RunResult r = run("index-numeric --map anosov-suspension --n 3");
        CHECK(r.exit_code == 0);
        json payload = json::parse(r.out);
        CHECK(payload["index"] == 17);
        CHECK(payload["note"] == "symbolic only");
    }

    TEST_CASE("plan input reports symbolic and numeric agreement") {
        RunResult realize = run("realize", R"({"period":2,"values":[1,-1]})", "plan_src");
        json plan = json::parse(realize.out)["plan"];
        RunResult r = run("index-numeric --n 2 --level 5", plan.dump(), "plan");
        CHECK(r.exit_code == 0);
        json payload = json::parse(r.out);
        CHECK(payload["index"] == -1);
        CHECK(payload["symbolic"] == -1);
        CHECK(payload["agrees"] == true);
    }

    TEST_CASE("unknown map id exits 2") {
        CHECK(run("index-numeric --map nope --n 1").exit_code == 2);
    }
}

TEST_SUITE("cli homology") {
    TEST_CASE("tetrahedron boundary") {
        RunResult r = run("homology",
                          R"({"simplices":[[0,1,2],[0,1,3],[0,2,3],[1,2,3]]})");
        CHECK(r.exit_code == 0);
        json h = json::parse(r.out)["homology"];
        CHECK(h[0]["betti"] == 1);
        CHECK(h[1]["betti"] == 0);
        CHECK(h[2]["betti"] == 1);
    }

    TEST_CASE("torus trace table via explicit homology matrices") {
        RunResult r = run("homology --n-max 3", R"({
            "total": {"simplices": [[0]]},
            "map": {"0": [[1]], "1": [[2,1],[1,1]], "2": [[1]]}
        })");
        CHECK(r.exit_code == 0);
        json payload = json::parse(r.out);
        CHECK(payload["lefschetz"] == json::array({"-1", "-5", "-16"}));
    }

    TEST_CASE("identity matrices reproduce the Euler characteristic") {
        RunResult r = run("homology --n-max 2", R"({
            "total": {"simplices": [[0,1,2],[0,1,3],[0,2,3],[1,2,3]]},
            "map": {"0": [[1]], "2": [[1]]}
        })");
        json payload = json::parse(r.out);
        CHECK(payload["lefschetz"] == json::array({"2", "2"}));
        CHECK(payload["index_from_traces"] == json::array({"1", "1"}));
    }

    TEST_CASE("vertex maps induce the chain-level table") {
        RunResult r = run("homology --n-max 3", R"({
            "total": {"simplices": [[0,1],[1,2],[0,2]]},
            "vertex_map": [1, 2, 0]
        })");
        CHECK(r.exit_code == 0);
        CHECK(json::parse(r.out)["lefschetz"] == json::array({"0", "0", "0"}));
    }

    TEST_CASE("malformed complexes exit 2") {
        CHECK(run("homology", R"({"simplices": "nope"})").exit_code == 2);
    }
}

TEST_SUITE("cli lefschetz and growth") {
    TEST_CASE("explicit matrices table") {
        RunResult r = run("lefschetz --n-max 4",
                          R"({"matrices": {"0": [[1]], "1": [[0,1],[1,0]]}})");
        CHECK(r.exit_code == 0);
        CHECK(json::parse(r.out)["lefschetz"] == json::array({"1", "-1", "1", "-1"}));
    }

    TEST_CASE("growth of a geometric sample list") {
        RunResult r = run("growth",
                          R"({"samples":[2,4,8,16,32,64,128,256,512,1024,2048,4096]})");
        CHECK(r.exit_code == 0);
        double g = json::parse(r.out)["growth_exponent"].get<double>();
        CHECK(g == doctest::Approx(0.6931).epsilon(0.01));
    }
}
