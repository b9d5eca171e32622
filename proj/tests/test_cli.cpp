#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

using Json = nlohmann::ordered_json;

namespace {

struct Run {
    int code;
    std::string out;
};

// Runs the CLI through the shell with stderr discarded.
Run run(const std::string& args, const std::string& stdin_file = "") {
    std::string cmd = std::string("'") + ECFAC_CLI + "' " + args + " 2>/dev/null";
    if (!stdin_file.empty()) cmd += " < '" + stdin_file + "'";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string temp_file(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / ("ecfac_cli_test_" + name);
    std::ofstream(path) << content;
    return path.string();
}

} // namespace

TEST_CASE("construct prints the minimal r") {
    const Run r = run("construct 3 5");
    REQUIRE(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["construction"]["r"] == "13");
    CHECK(j["curve"]["N"] == "195");

    const Run text = run("--output text construct 3 5");
    CHECK(text.code == 0);
    CHECK(text.out.find("r = 13") != std::string::npos);
}

TEST_CASE("invalid input exits with 3") {
    CHECK(run("construct 4 5").code == 3);
    CHECK(run("construct 3 3").code == 3);
    CHECK(run("construct 3").code == 3);
    CHECK(run("frobnicate").code == 3);
    CHECK(run("--tolerance 1 construct 3 5").code == 3);
    CHECK(run("--output xml construct 3 5").code == 3);
    CHECK(run("selmer 3 5 14").code == 3);
    CHECK(run("verify-certificate /nonexistent/file.json").code == 3);
}

TEST_CASE("selmer, root and search") {
    const Run s = run("selmer 3 7 13");
    REQUIRE(s.code == 0);
    CHECK(Json::parse(s.out)["dims"] == Json::array({1, 2}));
    const Run w = run("root 3 7 13");
    REQUIRE(w.code == 0);
    CHECK(Json::parse(w.out)["root_number"]["W"] == -1);
    const Run p = run("--output text search 3 5 13");
    REQUIRE(p.code == 0);
    CHECK(p.out.find("valuation tables hold") != std::string::npos);
}

TEST_CASE("factor, verify and tamper") {
    const Run f = run("factor 5 7");
    REQUIRE(f.code == 0);
    Json cert = Json::parse(f.out);
    CHECK(cert["extraction"]["p_out"] == "5");
    CHECK(cert["extraction"]["q_out"] == "7");
    CHECK(run("factor 5 7").out == f.out);

    const std::string good = temp_file("good.json", f.out);
    const Run v = run("verify-certificate " + good);
    CHECK(v.code == 0);
    CHECK(Json::parse(v.out)["ok"] == true);
    CHECK(run("verify-certificate -", good).code == 0);

    cert["rank"]["root_number"]["W"] = 1;
    const std::string bad = temp_file("bad.json", cert.dump());
    const Run t = run("--output text verify-certificate " + bad);
    CHECK(t.code == 1);
    CHECK(t.out.find("REJECTED") != std::string::npos);
    std::filesystem::remove(good);
    std::filesystem::remove(bad);
}

TEST_CASE("exhausted search exits with 2") {
    CHECK(run("--homspace-cap 1 --naive-cap 1 factor 3 5").code == 2);
    CHECK(run("--search-bound-r 3 construct 3 5").code == 2);
    CHECK(run("extract 15 7/4").code == 2);
}

TEST_CASE("extract") {
    const Run e = run("extract 15 27/4");
    REQUIRE(e.code == 0);
    CHECK(Json::parse(e.out)["g"] == "3");
}

TEST_CASE("stats from a file and from stdin") {
    const std::string corpus = temp_file("corpus.txt", "# pairs\n3 5\n3 7\n5 7\n");
    const Run a = run("stats " + corpus);
    const Run b = run("stats -", corpus);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.rfind("p,q,D,case,r_min,log4D,ratio,status\n", 0) == 0);
    CHECK(a.out.find("5,7,35,") != std::string::npos);
    CHECK(a.out.find("summary,,,max_ratio") != std::string::npos);
    std::filesystem::remove(corpus);
}
