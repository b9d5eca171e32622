#include "report.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>

namespace ecfac {

namespace {

const char* kind_name(Check::Kind k) {
    switch (k) {
    case Check::Kind::is_prime: return "is_prime";
    case Check::Kind::coprime: return "coprime";
    case Check::Kind::residue: return "residue";
    case Check::Kind::symbol: return "symbol";
    }
    return "?";
}

Check::Kind parse_kind(const std::string& s) {
    for (auto k : {Check::Kind::is_prime, Check::Kind::coprime, Check::Kind::residue, Check::Kind::symbol})
        if (s == kind_name(k)) return k;
    throw InvalidArgument("unknown check kind " + s);
}

Verdict parse_verdict(const std::string& s) {
    for (auto v : {Verdict::solvable, Verdict::unsolvable, Verdict::not_applicable})
        if (s == to_string(v)) return v;
    throw InvalidArgument("unknown verdict " + s);
}

Int parse_int(const Json& j) {
    const std::string s = j.get<std::string>();
    Int out;
    if (s.empty() || out.set_str(s, 10) != 0) throw InvalidArgument("not an integer: " + s);
    return out;
}

Rat parse_rat(const Json& j) { return Rat::parse(j.get<std::string>()); }

Place parse_place(const Json& j) {
    const std::string s = j.get<std::string>();
    return s == "inf" ? Place(0) : parse_int(j);
}

Json strings(const std::vector<Int>& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(x.get_str());
    return out;
}

double num(long double x) { return static_cast<double>(x); }

} // namespace

Json to_json(const RCertificate& cert) {
    Json checks = Json::array();
    for (const auto& c : cert.checks)
        checks.push_back({{"kind", kind_name(c.kind)}, {"a", c.a.get_str()}, {"n", c.n.get_str()},
                          {"expected", c.expected}, {"text", c.text}});
    return {{"case", to_string(cert.ad_case.tag)},
            {"roles", {{"p", cert.ad_case.p.get_str()}, {"q", cert.ad_case.q.get_str()}}},
            {"swapped", cert.ad_case.swapped},
            {"r", cert.r.get_str()},
            {"primes", strings(cert.primes)},
            {"checks", checks}};
}

Json to_json(const CurveParams& params) {
    return {{"p", params.p().get_str()},
            {"q", params.q().get_str()},
            {"D", params.D().get_str()},
            {"r", params.r().get_str()},
            {"N", params.N().get_str()},
            {"equation", "y^2 = x^3 - " + params.two_n().get_str() + "x"},
            {"isogenous", "y^2 = x^3 + " + Int(4 * params.two_n()).get_str() + "x"},
            {"places", strings(params.finite_places())}};
}

Json to_json(const SelmerGroup& group) {
    Json elements = Json::array();
    for (const auto& e : group.elements) elements.push_back(e.str());
    Json local = Json::array();
    for (const auto& rec : group.records)
        local.push_back({{"d", rec.d.get_str()}, {"place", place_name(rec.place)},
                         {"generic", to_string(rec.generic)}, {"closed_form", to_string(rec.closed_form)}});
    return {{"side", to_string(group.side)}, {"dim2", group.dim2}, {"elements", elements}, {"local", local}};
}

Json to_json(const RootNumberReport& root) {
    return {{"d", root.d.get_str()},
            {"sign_term", root.sign_term},
            {"epsilon_term", root.epsilon_term},
            {"ramified_product", root.ramified_product},
            {"W", root.W}};
}

Json to_json(const RankConclusion& rank) {
    Json out{{"root_number", rank.root_number}, {"rank_upper_bound", rank.rank_upper_bound}};
    if (rank.rank_one) {
        out["conjectural_rank"] = 1;
        out["conditional_on"] = Json::array({"parity conjecture"});
    } else {
        out["conjectural_rank"] = nullptr;
        out["reason"] = rank.reason;
    }
    return out;
}

Json to_json(const HeightReport& report) {
    Json out{{"method", to_string(report.method)}, {"naive", num(report.naive)}, {"canonical", num(report.canonical)}};
    if (report.method == HeightMethod::limit) {
        out["doublings"] = report.doublings;
    } else {
        out["archimedean_local"] = num(report.archimedean_local);
        Json finite = Json::array();
        for (const auto& [t, v] : report.finite_locals)
            finite.push_back({{"t", t == 0 ? std::string("good") : t.get_str()}, {"value", num(v)}});
        out["finite_locals"] = finite;
    }
    return out;
}

Json to_json(const HeightBounds& b) {
    return {{"canonical", num(b.canonical)},
            {"lower", {{"bound", num(b.lower)}, {"holds", b.lower_ok}}},
            {"sandwich", {{"low", num(b.sandwich_low)}, {"high", num(b.sandwich_high)}, {"holds", b.sandwich_ok}}},
            {"difference",
             {{"value", num(b.difference)}, {"low", num(b.difference_low)}, {"high", num(b.difference_high)},
              {"holds", b.difference_ok}}}};
}

Json to_json(const CurvePoint& P) {
    if (P.is_infinity()) return {{"infinity", true}};
    return {{"x", P.x().str()}, {"y", P.y().str()}};
}

Json to_json(const PatternReport& report) {
    Json entries = Json::array();
    for (const auto& e : report.entries)
        entries.push_back({{"t", e.t.get_str()}, {"m", e.multiplier}, {"plus_T", e.plus_T},
                           {"v", e.value == kInfiniteValuation ? Json(nullptr) : Json(e.value)},
                           {"rule", e.rule}, {"ok", e.ok}});
    return {{"passed", report.passed()},
            {"identity_checks", report.identity_checks},
            {"violations", report.violations},
            {"notes", report.notes},
            {"entries", entries}};
}

Json to_json(const Extraction& ex) {
    return {{"D", ex.D.get_str()},
            {"x_used", ex.x.str()},
            {"gcd_source", to_string(ex.source)},
            {"g", ex.g.get_str()},
            {"p_out", ex.p_out.get_str()},
            {"q_out", ex.q_out.get_str()},
            {"inputs_used", Json::array({"D", "x"})}};
}

Json to_json(const RunConfig& c) {
    return {{"search_bound_r", c.search_bound_r},
            {"homspace_cap", c.homspace_cap},
            {"naive_cap", c.naive_cap},
            {"k_range", c.k_range},
            {"height_tolerance", c.height_tolerance}};
}

Json construct_report(const Int& p, const Int& q, const RunConfig& config) {
    const RCertificate cert = find_min_r(p, q, config.search_bound_r);
    const CurveParams params(p, q, cert.r);
    return {{"schema", "ecfac.construct"},
            {"schema_version", kSchemaVersion},
            {"search_bound_r", config.search_bound_r},
            {"construction", to_json(cert)},
            {"curve", to_json(params)}};
}

Json selmer_report(const CurveParams& params) {
    const SelmerGroup s_phi = selmer_group(params, Side::phi);
    const SelmerGroup s_phihat = selmer_group(params, Side::phihat);
    const RankBound bound = rank_upper_bound(s_phi, s_phihat);
    return {{"schema", "ecfac.selmer"},
            {"schema_version", kSchemaVersion},
            {"curve", to_json(params)},
            {"dims", {s_phi.dim2, s_phihat.dim2}},
            {"rank_upper_bound", bound.value},
            {"clamped", bound.clamped},
            {"phi", to_json(s_phi)},
            {"phihat", to_json(s_phihat)}};
}

Json root_report(const CurveParams& params) {
    const SelmerGroup s_phi = selmer_group(params, Side::phi);
    const SelmerGroup s_phihat = selmer_group(params, Side::phihat);
    return {{"schema", "ecfac.root"},
            {"schema_version", kSchemaVersion},
            {"curve", to_json(params)},
            {"root_number", to_json(root_number(params.two_n()))},
            {"rank", to_json(conjectural_rank(params, s_phi, s_phihat))}};
}

Json search_report(const CurveParams& params, const RunConfig& config) {
    config.validate();
    const SelmerGroup s_phihat = selmer_group(params, Side::phihat);
    const GeneratorCandidate gen = find_generator(params, s_phihat, config.caps());
    const CurvePoint& Q = gen.point;
    const Curve E = Curve::E(params.N());
    const HeightReport lim = canonical_height(params.N(), Q, HeightMethod::limit);
    const HeightReport loc = canonical_height(params.N(), Q, HeightMethod::local_sum);

    Json quadratic = Json::array();
    for (long n : {2L, 3L}) {
        const long double hn = canonical_height(params.N(), E.mul(n, Q), HeightMethod::local_sum).canonical;
        quadratic.push_back({{"n", n}, {"defect", num(std::fabs(hn - n * n * loc.canonical))}});
    }
    std::vector<long> odd_ks;
    for (long k = -config.k_range; k <= config.k_range; ++k)
        if (k % 2 != 0) odd_ks.push_back(k);

    Json generator = to_json(Q);
    generator["source"] = gen.source;
    generator["halvings_applied"] = gen.halvings_applied;
    generator["saturation_note"] = gen.saturation_note;
    return {{"schema", "ecfac.search"},
            {"schema_version", kSchemaVersion},
            {"curve", to_json(params)},
            {"caps", {{"homspace_cap", config.homspace_cap}, {"naive_cap", config.naive_cap}}},
            {"generator", generator},
            {"heights",
             {{"limit", to_json(lim)},
              {"local_sum", to_json(loc)},
              {"agree", std::fabs(num(lim.canonical - loc.canonical)) <= config.height_tolerance},
              {"bounds", to_json(height_bounds(params.N(), Q, loc.canonical))},
              {"quadraticity", quadratic}}},
            {"asymmetry", asymmetry_check(params, Q, odd_ks)},
            {"pattern", to_json(pattern_check(params, Q, config.k_range))}};
}

std::vector<std::pair<Int, Int>> parse_corpus(const std::string& text) {
    std::vector<std::pair<Int, Int>> out;
    std::istringstream in(text);
    std::string line;
    for (int lineno = 1; std::getline(in, line); ++lineno) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::string a, b, extra;
        if (!(fields >> a)) continue;
        Int p, q;
        if (!(fields >> b) || (fields >> extra) || p.set_str(a, 10) != 0 || q.set_str(b, 10) != 0)
            throw InvalidArgument("corpus line " + std::to_string(lineno) + ": expected two integers");
        out.emplace_back(p, q);
    }
    return out;
}

std::string stats_csv(const std::vector<std::pair<Int, Int>>& pairs, std::uint64_t search_bound) {
    std::ostringstream out;
    out << "p,q,D,case,r_min,log4D,ratio,status\n";
    std::vector<MinRRow> ok_rows;
    char buf[64];
    for (const auto& [p, q] : pairs) {
        out << p << ',' << q << ',' << Int(p * q) << ',';
        try {
            const auto stats = min_r_statistics({{p, q}}, search_bound);
            const MinRRow& row = stats.rows.front();
            out << to_string(row.tag) << ',' << row.r_min << ',';
            std::snprintf(buf, sizeof buf, "%.6f,%.6g", row.log4_d, row.ratio);
            out << buf << ",ok\n";
            ok_rows.push_back(row);
        } catch (const Exhausted&) {
            out << ",,,,exhausted\n";
        } catch (const InvalidArgument&) {
            out << ",,,,invalid input\n";
        }
    }
    if (!ok_rows.empty()) {
        double max_ratio = 0, sum = 0;
        for (const auto& r : ok_rows) {
            max_ratio = std::max(max_ratio, r.ratio);
            sum += r.ratio;
        }
        std::snprintf(buf, sizeof buf, "%.6g", max_ratio);
        out << "summary,,,max_ratio,,," << buf << ',' << ok_rows.size() << '/' << pairs.size() << " ok\n";
        std::snprintf(buf, sizeof buf, "%.6g", sum / static_cast<double>(ok_rows.size()));
        out << "summary,,,mean_ratio,,," << buf << ',' << ok_rows.size() << '/' << pairs.size() << " ok\n";
    }
    return out.str();
}

Json certificate_json(const FactorCertificate& cert, const RunConfig& config) {
    const CurveParams params(cert.p, cert.q, cert.r_cert.r);
    Json attempts = Json::array();
    for (const auto& a : cert.attempts)
        attempts.push_back({{"k", a.k}, {"plus_T", a.plus_T}, {"x", a.x.str()}, {"succeeded", a.succeeded}});
    Json valuations = Json::array();
    for (const auto& [t, v] : cert.generator_valuations) valuations.push_back({{"t", t.get_str()}, {"v", v}});
    Json generator = to_json(cert.generator.point);
    generator["source"] = cert.generator.source;
    generator["halvings_applied"] = cert.generator.halvings_applied;
    generator["saturation_note"] = cert.generator.saturation_note;

    Json extraction = to_json(cert.extraction);
    extraction["attempts"] = attempts;

    return {{"schema", "ecfac.certificate"},
            {"schema_version", kSchemaVersion},
            {"input", {{"p", cert.p.get_str()}, {"q", cert.q.get_str()}}},
            {"config", to_json(config)},
            {"construction", to_json(cert.r_cert)},
            {"curve", to_json(params)},
            {"selmer", {{"phi", to_json(cert.s_phi)}, {"phihat", to_json(cert.s_phihat)}}},
            {"rank",
             {{"upper_bound", cert.rank_bound.value},
              {"clamped", cert.rank_bound.clamped},
              {"root_number", to_json(cert.root)},
              {"conclusion", to_json(cert.rank)}}},
            {"generator", generator},
            {"heights",
             {{"limit", to_json(cert.height_limit)},
              {"local_sum", to_json(cert.height_local)},
              {"bounds", to_json(cert.height_bounds)}}},
            {"valuations", valuations},
            {"extraction", extraction}};
}

namespace {

class Verifier {
public:
    explicit Verifier(VerifyOutcome& out) : out_(out) {}

    void check(const std::string& name, const std::function<bool()>& body) {
        bool ok = false;
        std::string why;
        try {
            ok = body();
        } catch (const std::exception& e) {
            why = e.what();
        }
        if (ok) {
            out_.passed.push_back(name);
        } else {
            out_.failed.push_back(why.empty() ? name : name + ": " + why);
        }
    }

private:
    VerifyOutcome& out_;
};

bool replay_selmer(const Json& group, const CurveParams& params, SpaceKind kind) {
    std::vector<Int> everywhere;
    Int current;
    bool current_ok = true, have = false;
    auto flush = [&] {
        if (have && current_ok) everywhere.push_back(current);
    };
    for (const auto& rec : group.at("local")) {
        const Int d = parse_int(rec.at("d"));
        const Place v = parse_place(rec.at("place"));
        const HomogeneousSpace space{kind, d, params.N()};
        const Verdict g = generic_local(space, v);
        const Verdict c = closed_form_local(space, v);
        if (g != parse_verdict(rec.at("generic")) || c != parse_verdict(rec.at("closed_form"))) return false;
        if (c != Verdict::not_applicable && c != g) return false;
        if (!have || d != current) {
            flush();
            current = d;
            current_ok = true;
            have = true;
        }
        current_ok = current_ok && g == Verdict::solvable;
    }
    flush();
    std::vector<Int> recorded;
    for (const auto& e : group.at("elements")) recorded.push_back(parse_int(e));
    // Every class of Q(S,2) must appear with every place.
    const std::size_t classes = std::size_t{2} << params.finite_places().size();
    if (group.at("local").size() != classes * (params.finite_places().size() + 1)) return false;
    const int dim2 = group.at("dim2").get<int>();
    return recorded == everywhere && recorded.size() == (std::size_t{1} << dim2);
}

} // namespace

VerifyOutcome verify_certificate(const Json& doc) {
    VerifyOutcome out;
    Verifier v(out);
    try {
        if (doc.at("schema") != "ecfac.certificate" || doc.at("schema_version") != kSchemaVersion) {
            out.failed.push_back("schema: unsupported document");
            return out;
        }
        const Int p = parse_int(doc.at("input").at("p"));
        const Int q = parse_int(doc.at("input").at("q"));
        const Json& cons = doc.at("construction");
        const Int r = parse_int(cons.at("r"));
        const CurveParams params(p, q, r);
        const Int D = params.D();
        const Curve E = Curve::E(params.N());

        v.check("construction.checks", [&] {
            if (cons.at("checks").empty()) return false;
            for (const auto& c : cons.at("checks")) {
                Check chk{parse_kind(c.at("kind").get<std::string>()), parse_int(c.at("a")), parse_int(c.at("n")),
                          c.at("expected").get<long>(), c.at("text").get<std::string>()};
                if (!chk.holds()) return false;
            }
            return true;
        });
        v.check("construction.membership", [&] {
            auto m = is_in_AD(p, q, r);
            return m && to_string(m.certificate->ad_case.tag) == cons.at("case").get<std::string>();
        });
        v.check("construction.minimal", [&] {
            const auto bound = doc.at("config").at("search_bound_r").get<std::uint64_t>();
            return find_min_r(p, q, bound).r == r;
        });
        v.check("selmer.phi", [&] { return replay_selmer(doc.at("selmer").at("phi"), params, SpaceKind::C); });
        v.check("selmer.phihat",
                [&] { return replay_selmer(doc.at("selmer").at("phihat"), params, SpaceKind::C_prime); });

        const Json& rank = doc.at("rank");
        v.check("rank.upper_bound", [&] {
            const int raw = doc.at("selmer").at("phi").at("dim2").get<int>() +
                            doc.at("selmer").at("phihat").at("dim2").get<int>() - 2;
            return rank.at("upper_bound").get<int>() == std::max(raw, 0) && rank.at("clamped").get<bool>() == (raw < 0);
        });
        v.check("rank.root_number", [&] { return to_json(root_number(params.two_n())) == rank.at("root_number"); });
        v.check("rank.conclusion", [&] {
            const Json& c = rank.at("conclusion");
            return c.at("conjectural_rank") == 1 && rank.at("upper_bound") == 1 &&
                   rank.at("root_number").at("W") == -1 &&
                   c.at("conditional_on") == Json::array({"parity conjecture"});
        });

        const CurvePoint Q(parse_rat(doc.at("generator").at("x")), parse_rat(doc.at("generator").at("y")));
        v.check("generator.on_curve", [&] { return E.contains(Q) && !E.is_torsion(Q); });
        v.check("generator.not_halvable", [&] { return !halve(params.N(), Q).has_value(); });

        const Json& heights = doc.at("heights");
        v.check("heights", [&] {
            const auto tol = doc.at("config").at("height_tolerance").get<double>();
            const auto lim = canonical_height(params.N(), Q, HeightMethod::limit);
            const auto loc = canonical_height(params.N(), Q, HeightMethod::local_sum);
            const double rl = heights.at("limit").at("canonical").get<double>();
            const double rs = heights.at("local_sum").at("canonical").get<double>();
            if (std::fabs(num(lim.canonical) - rl) > 1e-9 || std::fabs(num(loc.canonical) - rs) > 1e-9) return false;
            if (std::fabs(rl - rs) > tol) return false;
            return height_bounds(params.N(), Q, loc.canonical).all_ok();
        });
        v.check("valuations", [&] {
            const Json& vals = doc.at("valuations");
            if (vals.size() != params.finite_places().size()) return false;
            for (std::size_t i = 0; i < vals.size(); ++i)
                if (parse_int(vals[i].at("t")) != params.finite_places()[i] ||
                    vals[i].at("v").get<long>() != val(Q.x(), params.finite_places()[i]))
                    return false;
            return true;
        });

        const Json& ex = doc.at("extraction");
        v.check("extraction.attempts", [&] {
            if (ex.at("attempts").empty()) return false;
            for (const auto& a : ex.at("attempts")) {
                CurvePoint R = E.mul(a.at("k").get<long>(), Q);
                if (a.at("plus_T").get<bool>()) R = E.translate_T(R);
                if (R.x() != parse_rat(a.at("x"))) return false;
                if (extract(D, R.x()).has_value() != a.at("succeeded").get<bool>()) return false;
            }
            return ex.at("attempts").back().at("succeeded").get<bool>();
        });
        v.check("extraction.factors", [&] {
            if (parse_int(ex.at("D")) != D || ex.at("inputs_used") != Json::array({"D", "x"})) return false;
            auto got = extract(parse_int(ex.at("D")), parse_rat(ex.at("x_used")));
            if (!got) return false;
            const Int po = parse_int(ex.at("p_out")), qo = parse_int(ex.at("q_out"));
            return got->g == parse_int(ex.at("g")) && got->p_out == po && got->q_out == qo &&
                   to_string(got->source) == ex.at("gcd_source").get<std::string>() && po * qo == D &&
                   is_prime(po) && is_prime(qo);
        });
    } catch (const std::exception& e) {
        out.failed.push_back(std::string("document: ") + e.what());
    }
    return out;
}

} // namespace ecfac
