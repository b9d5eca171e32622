#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ecfac/ecfac.h"

namespace {

using Json = nlohmann::ordered_json;

// Exit codes: the library status, so 0 ok, 1 violation, 2 exhausted,
// 3 invalid input, 4 internal error.
int exit_code(ecfac_status s) { return static_cast<int>(s); }

std::string read_all(const std::string& path) {
    std::ostringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    buf << in.rdbuf();
    return buf.str();
}

void print_text(const Json& doc) {
    const std::string schema = doc.value("schema", "");
    auto curve_line = [&](const Json& c) {
        std::cout << "D = " << c["D"].get<std::string>() << ", r = " << c["r"].get<std::string>() << ", curve "
                  << c["equation"].get<std::string>() << "\n";
    };
    if (schema == "ecfac.construct") {
        const Json& c = doc["construction"];
        std::cout << "case " << c["case"].get<std::string>() << " with p = " << c["roles"]["p"].get<std::string>()
                  << ", q = " << c["roles"]["q"].get<std::string>() << "\n";
        curve_line(doc["curve"]);
        for (const auto& chk : c["checks"]) std::cout << "  " << chk["text"].get<std::string>() << "\n";
    } else if (schema == "ecfac.selmer") {
        curve_line(doc["curve"]);
        for (const char* side : {"phi", "phihat"}) {
            std::cout << side << " Selmer group, dimension " << doc[side]["dim2"] << ":";
            for (const auto& e : doc[side]["elements"]) std::cout << " " << e.get<std::string>();
            std::cout << "\n";
        }
        std::cout << "rank <= " << doc["rank_upper_bound"] << "\n";
    } else if (schema == "ecfac.root") {
        curve_line(doc["curve"]);
        std::cout << "root number W = " << doc["root_number"]["W"] << "\n";
        const Json& rank = doc["rank"];
        if (rank["conjectural_rank"].is_null())
            std::cout << "rank undetermined: " << rank["reason"].get<std::string>() << "\n";
        else
            std::cout << "rank 1, assuming the parity conjecture\n";
    } else if (schema == "ecfac.search") {
        curve_line(doc["curve"]);
        const Json& g = doc["generator"];
        std::cout << "point (" << g["x"].get<std::string>() << ", " << g["y"].get<std::string>() << ") from "
                  << g["source"].get<std::string>() << ", halved " << g["halvings_applied"] << " times\n";
        std::cout << "canonical height " << doc["heights"]["local_sum"]["canonical"] << " (limit method "
                  << doc["heights"]["limit"]["canonical"] << ")\n";
        std::cout << "valuation tables " << (doc["pattern"]["passed"].get<bool>() ? "hold" : "FAIL")
                  << ", asymmetry " << (doc["asymmetry"].get<bool>() ? "holds" : "FAILS") << "\n";
    } else if (schema == "ecfac.certificate") {
        const Json& ex = doc["extraction"];
        curve_line(doc["curve"]);
        std::cout << "point (" << doc["generator"]["x"].get<std::string>() << ", "
                  << doc["generator"]["y"].get<std::string>() << ")\n";
        std::cout << ex["D"].get<std::string>() << " = " << ex["p_out"].get<std::string>() << " * "
                  << ex["q_out"].get<std::string>() << " from x = " << ex["x_used"].get<std::string>() << " ("
                  << ex["gcd_source"].get<std::string>() << ")\n";
    } else if (schema == "ecfac.verification") {
        std::cout << (doc["ok"].get<bool>() ? "certificate verified" : "certificate REJECTED") << "\n";
        for (const auto& f : doc["failed"]) std::cout << "  failed: " << f.get<std::string>() << "\n";
    } else {
        std::cout << doc.dump(2) << "\n";
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Factor D = pq through a rank-one curve y^2 = x^3 - 2rDx"};
    app.require_subcommand(1);

    ecfac_config config;
    ecfac_config_default(&config);
    std::string output = "json";
    app.add_option("--search-bound-r", config.search_bound_r, "Largest r tried by the construction")->capture_default_str();
    app.add_option("--homspace-cap", config.homspace_cap, "Height cap for the homogeneous-space search")->capture_default_str();
    app.add_option("--naive-cap", config.naive_cap, "Height cap for the direct point search")->capture_default_str();
    app.add_option("--k-range", config.k_range, "Multipliers -k..k for the valuation checks")->capture_default_str();
    app.add_option("--tolerance", config.height_tolerance, "Allowed gap between the two height methods")->capture_default_str();
    app.add_option("--output", output, "Output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();

    std::string p, q, r, D, x, path;
    auto* construct = app.add_subcommand("construct", "Smallest admissible r and the curve");
    construct->add_option("p", p)->required();
    construct->add_option("q", q)->required();

    auto with_r = [&](const char* name, const char* help) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("p", p)->required();
        sub->add_option("q", q)->required();
        sub->add_option("r", r)->required();
        return sub;
    };
    auto* selmer = with_r("selmer", "Selmer groups of both isogenies");
    auto* root = with_r("root", "Root number and conjectural rank");
    auto* search = with_r("search", "Generator search with height and valuation checks");

    auto* factor = app.add_subcommand("factor", "Run every stage and print a certificate");
    factor->add_option("p", p)->required();
    factor->add_option("q", q)->required();

    auto* extract = app.add_subcommand("extract", "Split D from an x-coordinate");
    extract->add_option("D", D)->required();
    extract->add_option("x", x, "Rational as a/b")->required();

    auto* stats = app.add_subcommand("stats", "Minimal r over a corpus, as CSV");
    stats->add_option("corpus", path, "File with one \"p q\" per line, or - for stdin")->required();

    auto* verify = app.add_subcommand("verify-certificate", "Replay a certificate");
    verify->add_option("file", path, "Certificate JSON, or - for stdin")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_code(ECFAC_INVALID_ARGUMENT);
    }

    ecfac_context* ctx = nullptr;
    if (ecfac_context_create(&config, &ctx) != ECFAC_OK) {
        std::cerr << "error: invalid configuration\n";
        return exit_code(ECFAC_INVALID_ARGUMENT);
    }

    char* result = nullptr;
    ecfac_status status = ECFAC_INTERNAL;
    try {
        if (*construct) status = ecfac_construct(ctx, p.c_str(), q.c_str(), &result);
        else if (*selmer) status = ecfac_selmer(ctx, p.c_str(), q.c_str(), r.c_str(), &result);
        else if (*root) status = ecfac_root(ctx, p.c_str(), q.c_str(), r.c_str(), &result);
        else if (*search) status = ecfac_search(ctx, p.c_str(), q.c_str(), r.c_str(), &result);
        else if (*factor) status = ecfac_factor(ctx, p.c_str(), q.c_str(), &result);
        else if (*extract) status = ecfac_extract(ctx, D.c_str(), x.c_str(), &result);
        else if (*stats) status = ecfac_stats(ctx, read_all(path).c_str(), &result);
        else if (*verify) status = ecfac_verify_certificate(ctx, read_all(path).c_str(), &result);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        ecfac_context_destroy(ctx);
        return exit_code(ECFAC_INVALID_ARGUMENT);
    }

    if (result) {
        if (*stats || output == "json") std::cout << result << (*stats ? "" : "\n");
        else print_text(Json::parse(result));
    }
    if (status != ECFAC_OK) {
        std::cerr << "error (" << ecfac_status_name(status) << ")";
        if (*ecfac_last_stage(ctx)) std::cerr << " in " << ecfac_last_stage(ctx);
        std::cerr << ": " << ecfac_last_error(ctx) << "\n";
    }
    ecfac_string_free(result);
    ecfac_context_destroy(ctx);
    return exit_code(status);
}
