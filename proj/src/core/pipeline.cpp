#include "pipeline.hpp"

#include <cmath>

namespace ecfac {

void RunConfig::validate() const {
    if (search_bound_r < 3) throw InvalidArgument("search bound for r must be at least 3");
    if (homspace_cap < 1 || naive_cap < 1) throw InvalidArgument("search caps must be positive");
    if (k_range < 1) throw InvalidArgument("k range must be positive");
    if (!(height_tolerance > 0 && height_tolerance <= 1e-3)) throw InvalidArgument("height tolerance must lie in (0, 1e-3]");
}

namespace {

template <class F>
auto stage(const char* name, F&& body) -> decltype(body()) {
    try {
        return body();
    } catch (const StageError&) {
        throw;
    } catch (const InvalidArgument& e) {
        throw StageError(name, StageError::Kind::invalid, e.what());
    } catch (const Exhausted& e) {
        throw StageError(name, StageError::Kind::exhausted, e.what());
    } catch (const InvariantViolation& e) {
        throw StageError(name, StageError::Kind::violation, e.what());
    } catch (const Inconclusive& e) {
        throw StageError(name, StageError::Kind::violation, e.what());
    } catch (const std::exception& e) {
        throw StageError(name, StageError::Kind::internal, e.what());
    }
}

} // namespace

FactorCertificate end_to_end(const Int& p, const Int& q, const RunConfig& config) {
    stage("config", [&] { config.validate(); return 0; });
    FactorCertificate out;
    out.p = p;
    out.q = q;
    out.r_cert = stage("construct", [&] { return find_min_r(p, q, config.search_bound_r); });
    const CurveParams params(p, q, out.r_cert.r);
    const Curve E = Curve::E(params.N());

    stage("selmer", [&] {
        out.s_phi = selmer_group(params, Side::phi);
        out.s_phihat = selmer_group(params, Side::phihat);
        out.rank_bound = rank_upper_bound(out.s_phi, out.s_phihat);
        return 0;
    });
    stage("rootnumber", [&] {
        out.root = root_number(params.two_n());
        out.rank = conjectural_rank(params, out.s_phi, out.s_phihat);
        if (!out.rank.rank_one) throw InvariantViolation("conjectural rank undetermined: " + out.rank.reason);
        return 0;
    });
    out.generator = stage("generator", [&] { return find_generator(params, out.s_phihat, config.caps()); });
    const CurvePoint& Q = out.generator.point;

    stage("heights", [&] {
        out.height_limit = canonical_height(params.N(), Q, HeightMethod::limit);
        out.height_local = canonical_height(params.N(), Q, HeightMethod::local_sum);
        if (std::fabs(static_cast<double>(out.height_limit.canonical - out.height_local.canonical)) > config.height_tolerance)
            throw InvariantViolation("canonical height methods disagree");
        out.height_bounds = height_bounds(params.N(), Q, out.height_local.canonical);
        if (!out.height_bounds.all_ok()) throw InvariantViolation("a height bound fails for the generator");
        return 0;
    });
    for (const auto& t : params.finite_places()) out.generator_valuations.emplace_back(t, val(Q.x(), t));

    stage("factor", [&] {
        // Translating by T swaps the roles of numerator and denominator; odd
        // multiples keep the asymmetry between p and q.
        const CurvePoint Q3 = E.mul(3, Q);
        const std::vector<std::pair<long, CurvePoint>> ladder{
            {1, Q}, {1, E.translate_T(Q)}, {3, Q3}, {3, E.translate_T(Q3)}};
        for (std::size_t i = 0; i < ladder.size(); ++i) {
            const Rat& x = ladder[i].second.x();
            ExtractionAttempt attempt{ladder[i].first, i % 2 == 1, x, false};
            auto got = extract(params.D(), x);
            attempt.succeeded = got.has_value();
            out.attempts.push_back(attempt);
            if (got) {
                out.extraction = *got;
                const Int lo = p < q ? p : q, hi = p < q ? q : p;
                if (got->p_out != lo || got->q_out != hi)
                    throw InvariantViolation("extracted factors differ from the construction primes");
                return 0;
            }
        }
        throw Exhausted("no x-coordinate on the retry ladder splits D");
    });
    return out;
}

} // namespace ecfac
