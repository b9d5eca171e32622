#include "ecfac/ecfac.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "report.hpp"

using namespace ecfac;

struct ecfac_context {
    RunConfig config;
    std::string error;
    std::string stage;
};

namespace {

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

Int parse_arg(const char* text, const char* what) {
    if (!text) throw InvalidArgument(std::string(what) + " is null");
    Int out;
    if (*text == '\0' || out.set_str(text, 10) != 0) throw InvalidArgument(std::string(what) + " is not an integer: " + text);
    return out;
}

ecfac_status fail(ecfac_context* ctx, ecfac_status status, const std::string& stage, const char* what) {
    ctx->stage = stage;
    ctx->error = what;
    return status;
}

// Runs body and maps the library's exceptions onto status codes.
template <class F>
ecfac_status guarded(ecfac_context* ctx, const char* stage, char** out, F&& body) {
    if (!ctx) return ECFAC_INVALID_ARGUMENT;
    ctx->error.clear();
    ctx->stage.clear();
    if (!out) return fail(ctx, ECFAC_INVALID_ARGUMENT, stage, "output pointer is null");
    *out = nullptr;
    try {
        *out = dup_string(body());
        return ECFAC_OK;
    } catch (const StageError& e) {
        const ecfac_status s = e.kind() == StageError::Kind::invalid     ? ECFAC_INVALID_ARGUMENT
                               : e.kind() == StageError::Kind::exhausted ? ECFAC_EXHAUSTED
                               : e.kind() == StageError::Kind::violation ? ECFAC_VIOLATION
                                                                         : ECFAC_INTERNAL;
        return fail(ctx, s, e.stage(), e.what());
    } catch (const InvalidArgument& e) {
        return fail(ctx, ECFAC_INVALID_ARGUMENT, stage, e.what());
    } catch (const Exhausted& e) {
        return fail(ctx, ECFAC_EXHAUSTED, stage, e.what());
    } catch (const InvariantViolation& e) {
        return fail(ctx, ECFAC_VIOLATION, stage, e.what());
    } catch (const Inconclusive& e) {
        return fail(ctx, ECFAC_VIOLATION, stage, e.what());
    } catch (const IncompleteFactorization& e) {
        return fail(ctx, ECFAC_INVALID_ARGUMENT, stage, e.what());
    } catch (const Json::exception& e) {
        return fail(ctx, ECFAC_INVALID_ARGUMENT, stage, e.what());
    } catch (const std::exception& e) {
        return fail(ctx, ECFAC_INTERNAL, stage, e.what());
    } catch (...) {
        return fail(ctx, ECFAC_INTERNAL, stage, "unknown error");
    }
}

CurveParams params_from(const char* p, const char* q, const char* r) {
    return CurveParams(parse_arg(p, "p"), parse_arg(q, "q"), parse_arg(r, "r"));
}

} // namespace

extern "C" {

const char* ecfac_version(void) { return "0.1.0"; }

const char* ecfac_status_name(ecfac_status status) {
    switch (status) {
    case ECFAC_OK: return "ok";
    case ECFAC_VIOLATION: return "violation";
    case ECFAC_EXHAUSTED: return "exhausted";
    case ECFAC_INVALID_ARGUMENT: return "invalid argument";
    case ECFAC_INTERNAL: return "internal error";
    }
    return "unknown status";
}

void ecfac_config_default(ecfac_config* config) {
    if (!config) return;
    const RunConfig d;
    config->search_bound_r = d.search_bound_r;
    config->homspace_cap = d.homspace_cap;
    config->naive_cap = d.naive_cap;
    config->k_range = d.k_range;
    config->height_tolerance = d.height_tolerance;
}

ecfac_status ecfac_context_create(const ecfac_config* config, ecfac_context** out) {
    if (!out) return ECFAC_INVALID_ARGUMENT;
    *out = nullptr;
    RunConfig rc;
    if (config) {
        rc.search_bound_r = config->search_bound_r;
        rc.homspace_cap = config->homspace_cap;
        rc.naive_cap = config->naive_cap;
        rc.k_range = static_cast<long>(config->k_range);
        rc.height_tolerance = config->height_tolerance;
    }
    try {
        rc.validate();
        *out = new ecfac_context{rc, {}, {}};
    } catch (const InvalidArgument&) {
        return ECFAC_INVALID_ARGUMENT;
    } catch (...) {
        return ECFAC_INTERNAL;
    }
    return ECFAC_OK;
}

void ecfac_context_destroy(ecfac_context* ctx) { delete ctx; }

const char* ecfac_last_error(const ecfac_context* ctx) { return ctx ? ctx->error.c_str() : ""; }
const char* ecfac_last_stage(const ecfac_context* ctx) { return ctx ? ctx->stage.c_str() : ""; }

void ecfac_string_free(char* s) { std::free(s); }

ecfac_status ecfac_construct(ecfac_context* ctx, const char* p, const char* q, char** json_out) {
    return guarded(ctx, "construct", json_out, [&] {
        return construct_report(parse_arg(p, "p"), parse_arg(q, "q"), ctx->config).dump(2);
    });
}

ecfac_status ecfac_selmer(ecfac_context* ctx, const char* p, const char* q, const char* r, char** json_out) {
    return guarded(ctx, "selmer", json_out, [&] { return selmer_report(params_from(p, q, r)).dump(2); });
}

ecfac_status ecfac_root(ecfac_context* ctx, const char* p, const char* q, const char* r, char** json_out) {
    return guarded(ctx, "rootnumber", json_out, [&] { return root_report(params_from(p, q, r)).dump(2); });
}

ecfac_status ecfac_search(ecfac_context* ctx, const char* p, const char* q, const char* r, char** json_out) {
    return guarded(ctx, "generator", json_out,
                   [&] { return search_report(params_from(p, q, r), ctx->config).dump(2); });
}

ecfac_status ecfac_factor(ecfac_context* ctx, const char* p, const char* q, char** json_out) {
    return guarded(ctx, "factor", json_out, [&] {
        const auto cert = end_to_end(parse_arg(p, "p"), parse_arg(q, "q"), ctx->config);
        return certificate_json(cert, ctx->config).dump(2);
    });
}

ecfac_status ecfac_extract(ecfac_context* ctx, const char* D, const char* x, char** json_out) {
    return guarded(ctx, "extract", json_out, [&]() -> std::string {
        const Int d = parse_arg(D, "D");
        if (!x) throw InvalidArgument("x is null");
        auto got = extract(d, Rat::parse(x));
        if (!got) throw Exhausted("neither gcd splits D");
        return to_json(*got).dump(2);
    });
}

ecfac_status ecfac_verify_certificate(ecfac_context* ctx, const char* certificate_json, char** json_out) {
    bool ok = false;
    const ecfac_status s = guarded(ctx, "verify", json_out, [&] {
        if (!certificate_json) throw InvalidArgument("certificate is null");
        const VerifyOutcome v = verify_certificate(Json::parse(certificate_json));
        ok = v.ok();
        return Json{{"schema", "ecfac.verification"}, {"schema_version", kSchemaVersion}, {"ok", ok},
                    {"passed", v.passed}, {"failed", v.failed}}
            .dump(2);
    });
    if (s != ECFAC_OK) return s;
    if (!ok) return fail(ctx, ECFAC_VIOLATION, "verify", "certificate replay failed");
    return ECFAC_OK;
}

ecfac_status ecfac_stats(ecfac_context* ctx, const char* corpus_text, char** csv_out) {
    return guarded(ctx, "stats", csv_out, [&] {
        if (!corpus_text) throw InvalidArgument("corpus is null");
        return stats_csv(parse_corpus(corpus_text), ctx->config.search_bound_r);
    });
}

} // extern "C"
