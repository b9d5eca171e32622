#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "pipeline.hpp"

namespace ecfac {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json to_json(const RCertificate& cert);
Json to_json(const CurveParams& params);
Json to_json(const SelmerGroup& group);
Json to_json(const RootNumberReport& root);
Json to_json(const RankConclusion& rank);
Json to_json(const HeightReport& report);
Json to_json(const HeightBounds& bounds);
Json to_json(const CurvePoint& P);
Json to_json(const PatternReport& report);
Json to_json(const Extraction& ex);
Json to_json(const RunConfig& config);

/// Reports behind the individual CLI commands.
Json construct_report(const Int& p, const Int& q, const RunConfig& config);
Json selmer_report(const CurveParams& params);
Json root_report(const CurveParams& params);
Json search_report(const CurveParams& params, const RunConfig& config);

/// "p q" per line; '#' starts a comment. Throws InvalidArgument with the line
/// number for anything else.
std::vector<std::pair<Int, Int>> parse_corpus(const std::string& text);

/// CSV of minimal r per pair plus summary rows. Failing rows are marked, not fatal.
std::string stats_csv(const std::vector<std::pair<Int, Int>>& pairs, std::uint64_t search_bound);

/// The full replayable record of an end-to-end run.
Json certificate_json(const FactorCertificate& cert, const RunConfig& config);

struct VerifyOutcome {
    std::vector<std::string> passed;
    std::vector<std::string> failed;

    bool ok() const { return failed.empty() && !passed.empty(); }
};

/// Re-executes every check recorded in a certificate produced by
/// certificate_json. Malformed documents are reported as failures.
VerifyOutcome verify_certificate(const Json& doc);

} // namespace ecfac
