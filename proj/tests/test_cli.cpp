#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>
#include <sys/wait.h>

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args) {
    std::string cmd = std::string(CRYSTAL_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p);
    std::string out;
    std::array<char, 4096> buf;
    size_t k;
    while ((k = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), k);
    int st = pclose(p);
    return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

std::string fx(const std::string& name) { return std::string(CRYSTAL_FIXTURES) + "/" + name; }

}  // namespace

TEST_CASE("insert prints columns") {
    auto r = run("insert --word \"4,2,6,5,2,1\" --n 6");
    CHECK(r.code == 0);
    CHECK(r.out == "6421|52\n");
    auto d = run("insert --word 4,3,6,5,3,1 --n 6");
    CHECK(d.out == "6431|53\n");
    auto j = nlohmann::json::parse(run("--format json insert --word 4,2,6,5,2,1").out);
    CHECK(j["columns"] == nlohmann::json::parse("[[1,2,4,6],[2,5]]"));
}

TEST_CASE("trace of the bijection example") {
    auto r = run("rc to --lr " + fx("ex_bij.json") + " --trace --steps 6,7,9,10,11,13");
    CHECK(r.code == 0);
    CHECK(r.out ==
          "6\t1|1|1 ; 0|1|0 ; \n"
          "7\t1|2|1 ; 0|1|0 ; \n"
          "9\t1|2|1 ; 0|1|0 ; \n"
          "10\t2|2|1 ; 0|1|0,0|1|0 ; 0|1|0\n"
          "11\t3|2|1 ; 0|2|0,0|1|0 ; 0|1|0\n"
          "13\t1|2|1 ; 0|2|0,0|1|0 ; 0|1|0\n");
    auto j = nlohmann::json::parse(run("--format json rc trace --lr " + fx("ex_bij.json")).out);
    CHECK(j["trace"].size() == 13);
    CHECK(j["trace"][9]["rc"][1].size() == 2);
    // the path route lands on the same configuration
    auto p = run("rc to --path " + fx("highest_path.json"));
    CHECK(p.out == "1|2|1 ; 0|2|0,0|1|0 ; 0|1|0\n");
}

TEST_CASE("rc from inverts rc to") {
    auto j = nlohmann::json::parse(run("--format json rc to --lr " + fx("ex_bij.json")).out);
    nlohmann::json in{{"rc", j["rc"]}, {"R", j["R"]}, {"lambda", {4, 3, 2, 2, 1, 1}}};
    auto back = nlohmann::json::parse(run("--format json rc from --rc '" + in.dump() + "'").out);
    CHECK(back["lr"] == nlohmann::json::parse("[[1,4,5,5],[2,6,6],[3,7],[4,8],[7],[8]]"));
}

TEST_CASE("rmatrix golden cases") {
    auto r = run("rmatrix --left 7,5,3,2 --right 6,5,1 --n 7");
    CHECK(r.code == 0);
    CHECK(r.out.rfind("7532 (x) 651  ->  753 (x) 6521", 0) == 0);
    auto j = nlohmann::json::parse(run("--format json rmatrix --path " + fx("rmatrix_two_factors.json")).out);
    auto want = nlohmann::json::parse(std::ifstream(fx("rmatrix_two_factors.json")))["expected"];
    CHECK(j["output"]["factors"][0]["rows"] == want[0]["rows"]);
    CHECK(j["output"]["factors"][1]["rows"] == want[1]["rows"]);
}

TEST_CASE("duality and charge commands verify themselves") {
    auto d = run("--format json rc dual --lr " + fx("wedge_rectangles.json") + " --n 5");
    CHECK(d.code == 0);
    auto want = nlohmann::json::parse(std::ifstream(fx("wedge_rectangles.json")));
    CHECK(nlohmann::json::parse(d.out)["lr"] == want["dual_tableau"]);
    CHECK(run("charge --lr " + fx("ex_bij.json")).out == "charge = 3\n");
    CHECK(run("energy --path " + fx("highest_path.json")).out == "E = -3\nD = -3\n");
}

TEST_CASE("fermionic verification exits 0") {
    CHECK(run("fermionic verify-xm --type C1 --n 2 --R 1,1").code == 0);
    CHECK(run("fermionic verify-xm --type D2 --n 2 --R 2,1 --jobs 3").code == 0);
    auto j = nlohmann::json::parse(run("--format json fermionic verify-xm --type A2D --n 1 --R 1,1").out);
    CHECK(j["verdict"] == "experimental-pass");
    CHECK(!j.contains("runtime_ms"));
    CHECK(run("fermionic m --type D2 --n 2 --R 2x1,1 --Lambda 0,1").out == "q + q^2\n");
}

TEST_CASE("virtual subcommands") {
    CHECK(run("virtual decompose --type C1 --n 3 --r 2").code == 0);
    CHECK(run("virtual member --type A2 --n 2 --r 1 --samples 25 --seed 7").code == 0);
    std::string out = "virtual_generate_test.json";
    auto r = run("virtual generate --type D2 --n 2 --r 1 --s 2 --out " + out);
    CHECK(r.out == "D2 n=2 V^{1,2}: 20 elements, 30 edges\n");
    auto g = nlohmann::json::parse(std::ifstream(out));
    CHECK(g["nodes"].size() == 20);
    CHECK(g["edges"].size() == 30);
    std::remove(out.c_str());
}

TEST_CASE("usage errors exit 2") {
    CHECK(run("").code == 2);
    CHECK(run("bogus").code == 2);
    CHECK(run("insert").code == 2);
    CHECK(run("insert --word 1,x").code == 2);
    CHECK(run("rc to --lr /does/not/exist.json").code == 2);
    CHECK(run("rc to --lr '{\"R\": [[1,1]], \"tableau\": [[2]]}'").code == 2);
    CHECK(run("fermionic m --type B7 --n 2 --R 1 --Lambda 1,0").code == 2);
    CHECK(run("--format yaml insert --word 1").code == 2);
}

TEST_CASE("output is byte identical across runs") {
    for (const std::string& args : std::vector<std::string>{"--format json fermionic verify-xm --type A2 --n 2 --R 2,2 --jobs 4",
                             "--format json virtual generate --type C1 --n 2 --r 1", "--format json graph --n 3 --R 2x1,1",
                             "--format json rc trace --lr " + fx("ex_bij.json")}) {
        auto a = run(args), b = run(args);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
        CHECK(!a.out.empty());
    }
}
