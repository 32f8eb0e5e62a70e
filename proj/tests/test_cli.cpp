#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

using json = nlohmann::json;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

int run_counter = 0;

RunResult run_cli(const std::string& args) {
    const char* bin = std::getenv("TRIPART_BIN");
    REQUIRE(bin != nullptr);
    std::string errfile = "/tmp/tripart_cli_err_" + std::to_string(++run_counter) + ".txt";
    std::string cmd = std::string(bin) + " " + args + " 2>" + errfile;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf{};
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream ef(errfile);
    r.err.assign(std::istreambuf_iterator<char>(ef), std::istreambuf_iterator<char>());
    std::remove(errfile.c_str());
    return r;
}

json run_json(const std::string& args) {
    RunResult r = run_cli(args);
    REQUIRE(r.code == 0);
    return json::parse(r.out);
}

} // namespace

TEST_CASE("check reports the triangular examples") {
    json j = run_json("check 8,6,5,3,1");
    CHECK(j["triangular"] == true);
    CHECK(j["wide"] == true);
    CHECK(j["tall"] == false);
    CHECK(j["removable"] == json::parse("[[5,3]]"));

    j = run_json("check 8,6,3,3,1");
    CHECK(j["triangular"] == false);
    CHECK(j["removable"].empty());
    CHECK(j["addable"].empty());

    j = run_json("check \"\"");
    CHECK(j["triangular"] == true);
    CHECK(j["removable"] == json::array());
    CHECK(j["addable"] == json::parse("[[1,1]]"));
}

TEST_CASE("check carries the caption goldens") {
    json j = run_json("check 7,5,4,2,1");
    CHECK(j["removable"] == json::parse("[[1,5],[7,1]]"));
    CHECK(j["addable"] == json::parse("[[3,4],[6,2]]"));

    j = run_json("check 6,5,4,2,1");
    CHECK(j["removable"] == json::parse("[[4,3]]"));

    j = run_json("check 6,5,3,2,1");
    CHECK(j["removable"] == json::parse("[[1,5],[5,2]]"));

    j = run_json("check 5^576,4^1037,3^1037,2^1036,1^1037");
    CHECK(j["triangular"] == true);
    CHECK(j["removable"] == json::parse("[[3,2650]]"));
}

TEST_CASE("check exposes the slope interval as fractions") {
    json j = run_json("check 2");
    CHECK(j["t_minus"] == "0/1");
    CHECK(j["t_plus"] == "1/2");
    CHECK(j.contains("witness"));
}

TEST_CASE("malformed input exits 2 with a one-line diagnostic") {
    RunResult r = run_cli("check 3,5");
    CHECK(r.code == 2);
    CHECK(r.out.empty());
    CHECK(!r.err.empty());
    CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);

    r = run_cli("check 0");
    CHECK(r.code == 2);

    r = run_cli("totally-unknown-subcommand");
    CHECK(r.code == 2);
}

TEST_CASE("domain errors exit 1") {
    RunResult r = run_cli("lattice covers 2,2");  // not triangular
    CHECK(r.code == 1);
    CHECK(!r.err.empty());

    r = run_cli("count --max-n 0");
    CHECK(r.code == 1);

    r = run_cli("count --max-n 50 --method brute");  // brute guard is 40
    CHECK(r.code == 1);

    r = run_cli("lattice mobius 3 2,1");  // not contained
    CHECK(r.code == 1);
}

TEST_CASE("count emits the published values as csv") {
    RunResult r = run_cli("count --max-n 10");
    CHECK(r.code == 0);
    CHECK(r.out == "n,count\n0,1\n1,1\n2,2\n3,3\n4,4\n5,6\n6,7\n7,8\n8,10\n9,12\n10,13\n");
    RunResult brute = run_cli("count --max-n 10 --method brute");
    CHECK(brute.out == r.out);
    RunResult gf = run_cli("count --max-n 10 --method gf");
    CHECK(gf.out == r.out);
}

TEST_CASE("count json format") {
    json j = run_json("count --max-n 6 --format json");
    CHECK(j["label"] == "delta");
    CHECK(j["values"] == json::parse("[1,1,2,3,4,6,7]"));
}

TEST_CASE("thread count does not change the output") {
    RunResult t1 = run_cli("count --max-n 300 --threads 1");
    RunResult t8 = run_cli("count --max-n 300 --threads 8");
    CHECK(t1.code == 0);
    CHECK(t1.out == t8.out);
}

TEST_CASE("classes emits the five columns") {
    RunResult r = run_cli("classes --max-n 10");
    CHECK(r.code == 0);
    CHECK(r.out.rfind("n,d1,d2,up1,up2,d2up2\n", 0) == 0);
    CHECK(r.out.find("\n10,2,11,") != std::string::npos);
    CHECK(r.out.find("\n3,2,1,") != std::string::npos);
}

TEST_CASE("lattice subcommands") {
    json j = run_json("lattice join 8,6,5,3,1 4,3,3,3,2,2,1,1,1");
    CHECK(j["join"] == json::parse("[8,7,6,5,4,3,2,1,1]"));

    j = run_json("lattice meet 2 1,1");
    CHECK(j["meet"] == json::parse("[1]"));

    j = run_json("lattice mobius 1 2,1");
    CHECK(j["mobius"] == 1);
    j = run_json("lattice mobius \"\" 2,1");
    CHECK(j["mobius"] == 0);

    j = run_json("lattice covers 1");
    CHECK(j["down"] == json::parse("[[]]"));
    CHECK(j["up"].size() == 2);

    j = run_json("lattice subcount 6,5,4,3,2,1");
    CHECK(j["count"] == 83);
}

TEST_CASE("tableaux subcommand") {
    json j = run_json("tableaux --two-row 5 2");
    CHECK(j["count"] == 12);
    CHECK(j["method"] == "formula");
    j = run_json("tableaux --two-row 5 2 --brute");
    CHECK(j["count"] == 12);
    CHECK(j["method"] == "brute");
}

TEST_CASE("balanced subcommands") {
    json j = run_json("balanced check 10110101");
    CHECK(j["balanced"] == true);
    j = run_json("balanced check 0011");
    CHECK(j["balanced"] == false);

    RunResult r = run_cli("balanced count --max-len 4");
    CHECK(r.out == "len,count\n1,2\n2,4\n3,8\n4,14\n");
    RunResult brute = run_cli("balanced count --max-len 4 --brute");
    CHECK(brute.out == r.out);
    RunResult with_empty = run_cli("balanced count --max-len 2 --include-empty");
    CHECK(with_empty.out == "len,count\n0,1\n1,2\n2,4\n");
}

TEST_CASE("encode and decode round the worked examples") {
    json j = run_json("encode chi 12,9,7,4,1");
    CHECK(j == json::parse(R"({"d":2,"m":1,"w":"1011"})"));

    j = run_json("encode omega 8,6,5,3,1");
    CHECK(j["word"] == "10110101");

    j = run_json("decode omega 10110101");
    CHECK(j["partition"] == json::parse("[8,6,5,3,1]"));

    j = run_json("decode chi 1 2 1011");
    CHECK(j["partition"] == json::parse("[12,9,7,4,1]"));

    RunResult r = run_cli("decode omega 0110");
    CHECK(r.code == 1);
}

TEST_CASE("square and rect subcommands") {
    RunResult r = run_cli("square --max-l 6 --cross-check");
    CHECK(r.code == 0);
    CHECK(r.out == "l,count\n0,1\n1,2\n2,5\n3,12\n4,25\n5,48\n6,83\n");

    json j = run_json("rect --l 2");
    CHECK(j["box_l_minus_1"] == 3);
    CHECK(j["box_l_minus_2"].is_null());
    CHECK(j["narrow_tall"] == 1);
}

TEST_CASE("bench emits plot-ready csv") {
    RunResult r = run_cli("bench --max-n 50");
    CHECK(r.code == 0);
    CHECK(r.out.rfind("n,delta,pp_upper,pp_lower,ratio_nlogn\n", 0) == 0);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 51);
}
