#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "sextic/cli.hpp"

using namespace sextic;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "sextic");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

nlohmann::ordered_json parse(const Run& r) { return nlohmann::ordered_json::parse(r.out); }

}  // namespace

TEST_CASE("verify-theorem2") {
    Run r = run({"verify-theorem2"});
    CHECK(r.code == 0);
    auto j = parse(r);
    CHECK(j["verdict"] == "PASS");
    CHECK(j["result"]["rows"].size() == 24);
    for (const auto& row : j["result"]["rows"]) CHECK(row["verdict"] == "PASS");
}

TEST_CASE("abs-index") {
    Run r = run({"abs-index", "--a", "0", "--d", "1", "--coords", "0,0,0,1,1,0"});
    CHECK(r.code == 0);
    CHECK(parse(r)["result"]["index"]["index"] == "1");
    Run rnd = run({"abs-index", "--a", "2", "--d", "7", "--random", "5", "--seed", "3"});
    CHECK(rnd.code == 0);
    CHECK(parse(rnd)["result"]["rows"].size() == 5);
    CHECK(run({"abs-index", "--a", "2", "--d", "7", "--random", "5", "--seed", "3"}).out == rnd.out);
}

TEST_CASE("rel-index") {
    Run r = run({"rel-index", "--a", "0", "--d", "1", "--coords", "0,2,-1,0,0,0"});
    CHECK(r.code == 0);
    CHECK(parse(r)["result"]["rel_index"] == "9");
}

TEST_CASE("gen-search") {
    Run r = run({"gen-search", "--a", "0", "--d", "2", "--bound", "3"});
    CHECK(r.code == 0);
    CHECK(parse(r)["result"]["generators"].empty());
    Run p = run({"gen-search", "--a", "-1", "--d", "1", "--method", "pipeline", "--y0-bound", "3", "--format", "csv"});
    CHECK(p.code == 0);
    CHECK(p.out.rfind("a,d,x0,x1,x2,y0,y1,y2,index\n", 0) == 0);
}

TEST_CASE("thue-search and export-catalog") {
    Run t = run({"thue-search", "--a", "0", "--d", "5", "--bound", "3"});
    CHECK(t.code == 0);
    CHECK(parse(t)["result"]["evaluated"] == "2401");
    Run c = run({"export-catalog", "--format", "csv"});
    CHECK(c.code == 0);
    CHECK(c.out.rfind("catalog,", 0) == 0);
}

TEST_CASE("flagged reports exit with 1") {
    Run a = run({"audit-lemma1"});
    CHECK(a.code == 1);
    CHECK(parse(a)["verdict"] == "FLAGGED");
    Run c = run({"case-analysis", "--scope", "III", "--y0-bound", "5"});
    CHECK(c.code == 0);
    CHECK(parse(c)["verdict"] == "PASS");
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"no-such-command"}).code == 2);
    CHECK(run({"abs-index", "--a", "0", "--d", "1", "--bogus", "1"}).code == 2);
    CHECK(run({"abs-index", "--a", "0", "--d", "1"}).code == 2);
    CHECK(run({"abs-index", "--a", "0", "--d", "4", "--coords", "0,0,0,1,1,0"}).code == 2);
    CHECK(run({"abs-index", "--a", "x", "--d", "1", "--coords", "0,0,0,1,1,0"}).code == 2);
    CHECK(run({"gen-search", "--format", "xml"}).code == 2);
    CHECK(run({"case-analysis", "--scope", "VII"}).code == 2);
    Run e = run({"thue-search", "--bound", "0"});
    CHECK(e.code == 2);
    CHECK_FALSE(e.err.empty());
}

TEST_CASE("help and output file") {
    Run h = run({"--help"});
    CHECK(h.code == 0);
    CHECK(h.out.find("verify-theorem2") != std::string::npos);
    std::string path = "cli_test_out.json";
    Run r = run({"abs-index", "--a", "0", "--d", "1", "--coords", "0,0,0,1,1,0", "--out", path});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream f(path);
    std::stringstream ss;
    ss << f.rdbuf();
    CHECK(nlohmann::ordered_json::parse(ss.str())["command"] == "abs-index");
    std::remove(path.c_str());
}

TEST_CASE("installed binary") {
    std::string cmd = std::string(SEXTIC_CLI_PATH) + " verify-theorem2 > /dev/null";
    int status = std::system(cmd.c_str());
    CHECK(status == 0);
    std::string bad = std::string(SEXTIC_CLI_PATH) + " gen-search --bogus 2> /dev/null";
    status = std::system(bad.c_str());
    CHECK(WEXITSTATUS(status) == 2);
}
