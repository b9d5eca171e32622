#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <string>

#include "ecfac/ecfac.h"

using Json = nlohmann::ordered_json;

namespace {

struct Context {
    ecfac_context* ctx = nullptr;
    explicit Context(const ecfac_config* config = nullptr) { REQUIRE(ecfac_context_create(config, &ctx) == ECFAC_OK); }
    ~Context() { ecfac_context_destroy(ctx); }
};

struct Output {
    char* text = nullptr;
    ~Output() { ecfac_string_free(text); }
    Json json() const { return Json::parse(text); }
};

} // namespace

TEST_CASE("version and status names") {
    CHECK(std::string(ecfac_version()) == "0.1.0");
    CHECK(std::string(ecfac_status_name(ECFAC_OK)) == "ok");
    CHECK(std::string(ecfac_status_name(ECFAC_EXHAUSTED)) == "exhausted");
    CHECK(std::string(ecfac_status_name(static_cast<ecfac_status>(42))) == "unknown status");
}

TEST_CASE("configuration") {
    ecfac_config c;
    ecfac_config_default(&c);
    CHECK(c.search_bound_r == 1000000);
    CHECK(c.homspace_cap == 100000);
    CHECK(c.naive_cap == 1000000);
    CHECK(c.k_range == 5);
    CHECK(c.height_tolerance == doctest::Approx(1e-6));
    ecfac_config_default(nullptr);

    ecfac_context* ctx = nullptr;
    c.height_tolerance = 2;
    CHECK(ecfac_context_create(&c, &ctx) == ECFAC_INVALID_ARGUMENT);
    CHECK(ctx == nullptr);
    CHECK(ecfac_context_create(nullptr, nullptr) == ECFAC_INVALID_ARGUMENT);
    ecfac_context_destroy(nullptr);
    ecfac_string_free(nullptr);
}

TEST_CASE("null arguments") {
    Context c;
    Output out;
    CHECK(ecfac_construct(nullptr, "3", "5", &out.text) == ECFAC_INVALID_ARGUMENT);
    CHECK(ecfac_construct(c.ctx, "3", "5", nullptr) == ECFAC_INVALID_ARGUMENT);
    CHECK(ecfac_construct(c.ctx, nullptr, "5", &out.text) == ECFAC_INVALID_ARGUMENT);
    CHECK(out.text == nullptr);
    CHECK(std::string(ecfac_last_error(nullptr)).empty());
}

TEST_CASE("construct") {
    Context c;
    Output out;
    REQUIRE(ecfac_construct(c.ctx, "3", "5", &out.text) == ECFAC_OK);
    const Json j = out.json();
    CHECK(j["construction"]["r"] == "13");
    CHECK(j["construction"]["case"] == "C1");
    CHECK(std::string(ecfac_last_error(c.ctx)).empty());

    Output bad;
    CHECK(ecfac_construct(c.ctx, "4", "5", &bad.text) == ECFAC_INVALID_ARGUMENT);
    CHECK(bad.text == nullptr);
    CHECK(std::string(ecfac_last_error(c.ctx)).find("not an odd prime") != std::string::npos);
    CHECK(std::string(ecfac_last_stage(c.ctx)) == "construct");
    CHECK(ecfac_construct(c.ctx, "3", "3", &bad.text) == ECFAC_INVALID_ARGUMENT);
    CHECK(ecfac_construct(c.ctx, "three", "5", &bad.text) == ECFAC_INVALID_ARGUMENT);
    CHECK(ecfac_construct(c.ctx, "", "5", &bad.text) == ECFAC_INVALID_ARGUMENT);
}

TEST_CASE("selmer, root and search") {
    Context c;
    Output s, r, p;
    REQUIRE(ecfac_selmer(c.ctx, "3", "5", "13", &s.text) == ECFAC_OK);
    CHECK(s.json()["dims"] == Json::array({1, 2}));
    REQUIRE(ecfac_root(c.ctx, "3", "5", "13", &r.text) == ECFAC_OK);
    CHECK(r.json()["root_number"]["W"] == -1);
    CHECK(r.json()["rank"]["conditional_on"] == Json::array({"parity conjecture"}));
    REQUIRE(ecfac_search(c.ctx, "3", "5", "13", &p.text) == ECFAC_OK);
    CHECK(p.json()["pattern"]["passed"] == true);
    Output bad;
    CHECK(ecfac_selmer(c.ctx, "3", "5", "15", &bad.text) == ECFAC_INVALID_ARGUMENT);
}

TEST_CASE("factor and verify") {
    Context c;
    Output cert;
    REQUIRE(ecfac_factor(c.ctx, "3", "5", &cert.text) == ECFAC_OK);
    const Json j = cert.json();
    CHECK(j["extraction"]["p_out"] == "3");
    CHECK(j["extraction"]["q_out"] == "5");

    Output report;
    REQUIRE(ecfac_verify_certificate(c.ctx, cert.text, &report.text) == ECFAC_OK);
    CHECK(report.json()["ok"] == true);

    Json tampered = j;
    tampered["extraction"]["g"] = "1";
    const std::string t = tampered.dump();
    Output bad;
    CHECK(ecfac_verify_certificate(c.ctx, t.c_str(), &bad.text) == ECFAC_VIOLATION);
    REQUIRE(bad.text != nullptr);
    CHECK(bad.json()["ok"] == false);

    Output garbage;
    CHECK(ecfac_verify_certificate(c.ctx, "{not json", &garbage.text) == ECFAC_INVALID_ARGUMENT);
}

TEST_CASE("failures name their stage") {
    ecfac_config cfg;
    ecfac_config_default(&cfg);
    cfg.homspace_cap = 1;
    cfg.naive_cap = 1;
    Context c(&cfg);
    Output out;
    CHECK(ecfac_factor(c.ctx, "3", "5", &out.text) == ECFAC_EXHAUSTED);
    CHECK(std::string(ecfac_last_stage(c.ctx)) == "generator");
    CHECK(std::string(ecfac_last_error(c.ctx)).find("no point found within caps") != std::string::npos);
}

TEST_CASE("extract") {
    Context c;
    Output a, b, bad;
    REQUIRE(ecfac_extract(c.ctx, "15", "27/4", &a.text) == ECFAC_OK);
    CHECK(a.json()["g"] == "3");
    CHECK(a.json()["inputs_used"] == Json::array({"D", "x"}));
    REQUIRE(ecfac_extract(c.ctx, "15", "121/36", &b.text) == ECFAC_OK);
    CHECK(b.json()["gcd_source"] == "denominator");
    CHECK(ecfac_extract(c.ctx, "15", "7/4", &bad.text) == ECFAC_EXHAUSTED);
    CHECK(ecfac_extract(c.ctx, "15", "7/0", &bad.text) == ECFAC_INVALID_ARGUMENT);
}

TEST_CASE("stats") {
    Context c;
    Output out;
    REQUIRE(ecfac_stats(c.ctx, "3 5\n# comment\n3 7\n", &out.text) == ECFAC_OK);
    const std::string csv = out.text;
    CHECK(csv.rfind("p,q,D,case,r_min,log4D,ratio,status\n", 0) == 0);
    CHECK(csv.find("3,7,21,C2,13,") != std::string::npos);
    Output bad;
    CHECK(ecfac_stats(c.ctx, "3 five\n", &bad.text) == ECFAC_INVALID_ARGUMENT);
}
